import xml.etree.ElementTree as ET

import pytest

from tailgauge.errors import SpecError
from tailgauge.experiments import ExperimentResult, fig4_exact_curve, histogram_result, run_fig1, run_fig2_fig3
from tailgauge.plotting import render_svg

NS = "{http://www.w3.org/2000/svg}"


def _elements(svg, tag, cls):
    root = ET.fromstring(svg.encode())
    return [e for e in root.iter(NS + tag) if e.get("class") == cls]


def test_scatter_has_two_rules():
    r = run_fig1(0)
    svg = render_svg(r, "scatter")
    assert len(_elements(svg, "line", "rule")) == 2
    assert len(_elements(svg, "circle", "point")) == 500


def test_rules_are_symmetric_about_the_mean():
    svg = render_svg(run_fig1(0), "scatter")
    a, b = (float(e.get("x1")) for e in _elements(svg, "line", "rule"))
    assert (a + b) / 2 == pytest.approx(320, abs=0.02)


def test_histogram_bars():
    svg = render_svg(histogram_result(run_fig2_fig3(0)), "histogram")
    assert len(_elements(svg, "rect", "bar")) == 60


def test_line_chart():
    svg = render_svg(fig4_exact_curve(), "line")
    assert len(_elements(svg, "polyline", "curve")) == 1
    assert len(_elements(svg, "circle", "marker")) == 5


def test_empty_result_rejected():
    r = run_fig1(0)
    r.rows.clear()
    with pytest.raises(SpecError):
        render_svg(r, "scatter")


def test_unknown_kind_rejected():
    with pytest.raises(SpecError):
        render_svg(run_fig1(0, n=10), "pie")


def test_histogram_kind_needs_bins():
    with pytest.raises(SpecError):
        render_svg(run_fig1(0, n=10), "histogram")
