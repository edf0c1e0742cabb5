from fractions import Fraction

import pytest

from tailgauge import distributions as d
from tailgauge.bounds import example1_spec, example2_spec
from tailgauge.experiments import FIG1_SPEC, FIG2_SPEC


def symmetric_corpus():
    """Twenty symmetric finite-variance laws, fixed before any truncation results were seen."""
    M = d.Mixture
    return {
        "normal": d.Normal(0, 1),
        "normal_sd3": d.Normal(0, 3),
        "uniform": d.Uniform(-1, 1),
        "fig1_uniform_mixture": FIG1_SPEC,
        "fig2_normal_mixture": FIG2_SPEC,
        "three_point_p0.04": example1_spec(0.04),
        "three_point_p0.2": example1_spec(0.2),
        "spike_uniform_p0.12": example2_spec(0.12),
        "spike_uniform_p4/75": example2_spec(Fraction(4, 75)),
        "normal_scale_mix_half": M(((0.5, d.Normal(0, 1)), (0.5, d.Normal(0, 3)))),
        "normal_scale_mix_10pct": M(((0.9, d.Normal(0, 1)), (0.1, d.Normal(0, 5)))),
        "normal_scale_mix_1pct": M(((0.99, d.Normal(0, 1)), (0.01, d.Normal(0, 10)))),
        "bimodal_normal": M(((0.5, d.Normal(-2, 1)), (0.5, d.Normal(2, 1)))),
        "spike_normal": M(((0.5, d.Atom(0)), (0.5, d.Normal(0, 1)))),
        "uniform_pike_normal": M(((0.9, d.Uniform(-0.1, 0.1)), (0.1, d.Normal(0, 1)))),
        "truncated_cauchy_10": d.Truncated(d.Stable(1.0), 10.0),
        "truncated_cauchy_100": d.Truncated(d.Stable(1.0), 100.0),
        "uniform_scale_mix": M(((0.5, d.Uniform(-1, 1)), (0.5, d.Uniform(-3, 3)))),
        "truncated_normal": d.Truncated(d.Normal(0, 1), 2.5),
        "three_normal": M(((0.8, d.Normal(0, 0.5)), (0.1, d.Normal(-3, 0.5)), (0.1, d.Normal(3, 0.5)))),
    }


@pytest.fixture(scope="session")
def corpus():
    return symmetric_corpus()


@pytest.fixture
def fig1():
    return FIG1_SPEC


@pytest.fixture
def fig2():
    return FIG2_SPEC


ACCEPTANCE_LINES = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    def record(number, title, ok, detail):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title} -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
