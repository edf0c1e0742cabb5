"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 spec or validation error,
3 numerical failure. Output files are written only after the computation
succeeds.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from pathlib import Path

from . import bounds, experiments, outlier_stats
from .distributions import load_spec
from .errors import DegenerateSampleError, NumericalError, SpecError
from .experiments import ExperimentResult, fmt
from .plotting import render_svg
from .quadrature import quotient_cdf

EXIT_USAGE, EXIT_SPEC, EXIT_NUMERIC = 1, 2, 3
SEED_ENV = "TAILGAUGE_SEED"
FIGURES = ("fig1", "fig2", "fig3", "fig4")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tailgauge", description="Outlier probabilities at level kappa.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, *, seed=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", type=Path, help="output file (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if seed:
            p.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 0")
        return p

    p = add("bounds", "Chebyshev/Selberg and Gauss bounds with their extremal parameters")
    p.add_argument("--kappa", type=float, required=True)

    p = add("exact", "exact outlier probability of a JSON spec")
    p.add_argument("--spec", type=Path, required=True)
    p.add_argument("--kappa", type=float, required=True)

    p = add("estimate", "Monte Carlo outlier probability of a JSON spec", seed=True)
    p.add_argument("--spec", type=Path, required=True)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--n", type=_positive_int, required=True)

    p = add("flag", "flag outliers in a single-column CSV")
    p.add_argument("--data", type=Path, required=True)
    p.add_argument("--kappa", type=float, required=True)

    p = add("truncate-demo", "outlier probability before and after truncation", seed=True)
    p.add_argument("--spec", type=Path, required=True)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--threshold", type=float, default=None, help="default: 2 * kappa * sd")
    p.add_argument("--n", type=int, default=1_000_000, help="Monte Carlo draws (0 disables)")
    p.add_argument("--truncate-compact", action="store_true",
                   help="truncate even when the law already has compact support")

    p = add("stable-convergence", "median outlier fraction of stable samples versus n", seed=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--kappa", type=float, default=experiments.DEFAULT_KAPPA)
    p.add_argument("--sizes", type=_positive_int, nargs="+", default=[100, 1000, 10_000, 100_000])
    p.add_argument("--reps", type=int, default=200)

    p = add("reproduce", "rerun a figure experiment and write its table and SVG", seed=True)
    p.add_argument("figure", choices=FIGURES)
    p.add_argument("--svg", type=Path, default=None, help="default: next to --out, else <figure>.svg")
    p.add_argument("--n", type=_positive_int, default=None, help="sample size override")
    p.add_argument("--reps", type=_positive_int, default=50, help="fig4 replications")
    p.add_argument("--alphas", type=float, nargs="+", default=[2.5, 4.0, 6.0, 8.0, 10.0])
    p.add_argument("--shifted", action="store_true", help="fig4: divide by A + 1 instead of A")
    p.add_argument("--exact", action="store_true", help="fig4: exact quadrature curve (implies --shifted)")

    p = add("quotient-cdf", "cdf of a standard normal divided by the Pareto-type scale")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--shifted", action="store_true")
    return parser


# --------------------------------------------------------------------------
# output helpers


def _table(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["inapplicable" if v is None else v if isinstance(v, str) else fmt(v) for v in row])
    return buf.getvalue()


def _records(header, rows) -> str:
    return json.dumps([dict(zip(header, row)) for row in rows], indent=2)


def _render(fmt_name: str, header, rows) -> str:
    return _table(header, rows) if fmt_name == "csv" else _records(header, rows) + "\n"


def _write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent if str(path.parent) else ".", prefix=".tailgauge-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, text: str, stdout) -> None:
    if args.out is None:
        stdout.write(text)
    else:
        _write_atomic(args.out, text)


def read_column(path: Path) -> list[float]:
    """Values of a single-column CSV; a non-numeric first row is a header."""
    values = []
    with open(path, newline="", encoding="utf-8") as fh:
        for i, row in enumerate(csv.reader(fh)):
            if not row or not row[0].strip():
                continue
            try:
                values.append(float(row[0]))
            except ValueError:
                if i == 0 and not values:
                    continue
                raise SpecError(f"{path}: line {i + 1}: not a number: {row[0]!r}") from None
    return values


# --------------------------------------------------------------------------
# subcommands


def _cmd_bounds(args, stdout):
    report = bounds.bound_report(args.kappa)
    header = ("kappa", "chebyshev_selberg", "gauss", "extremal_three_point_p", "extremal_spike_uniform_p")
    _emit(args, _render(args.format, header, [report.as_row()]), stdout)


_ESTIMATE_HEADER = ("kappa", "n", "estimate", "std_error", "flagged", "mode")


def _estimate_row(est):
    return (est.kappa, est.n, est.estimate, est.std_error, est.flagged, est.mode)


def _cmd_exact(args, stdout):
    est = outlier_stats.exact_outlier_prob(load_spec(args.spec), args.kappa)
    _emit(args, _render(args.format, _ESTIMATE_HEADER, [_estimate_row(est)]), stdout)


def _cmd_estimate(args, stdout):
    est = outlier_stats.mc_outlier_prob(load_spec(args.spec), args.kappa, args.n, args.seed)
    _emit(args, _render(args.format, _ESTIMATE_HEADER, [_estimate_row(est)]), stdout)


def _cmd_flag(args, stdout):
    data = read_column(args.data)
    idx = outlier_stats.flag_outliers(data, args.kappa)
    z = outlier_stats.standardized_distances(data)
    rows = [(i, data[i], z[i]) for i in idx]
    _emit(args, _render(args.format, ("index", "value", "distance"), rows), stdout)


def _result_text(result: ExperimentResult, fmt_name: str) -> str:
    return result.to_csv() if fmt_name == "csv" else result.to_json() + "\n"


def _cmd_truncate_demo(args, stdout):
    result = experiments.run_theorem2_demo(load_spec(args.spec), args.kappa, args.threshold,
                                           args.seed, args.n, args.truncate_compact)
    _emit(args, _result_text(result, args.format), stdout)


def _cmd_stable(args, stdout):
    result = experiments.run_theorem1(args.alpha, args.kappa, args.sizes, args.reps, args.seed)
    _emit(args, _result_text(result, args.format), stdout)


def _cmd_reproduce(args, stdout):
    fig = args.figure
    if fig == "fig1":
        result = experiments.run_fig1(args.seed, **({"n": args.n} if args.n else {}))
        kind = "scatter"
    elif fig in ("fig2", "fig3"):
        result = experiments.run_fig2_fig3(args.seed, **({"n": args.n} if args.n else {}))
        kind = "scatter"
        if fig == "fig3":
            result, kind = experiments.histogram_result(result), "histogram"
    elif args.exact:
        result, kind = experiments.fig4_exact_curve(args.alphas), "line"
    else:
        result = experiments.run_fig4(args.alphas, n=args.n or 100_000, reps=args.reps,
                                      seed=args.seed, shifted=args.shifted)
        kind = "line"
    svg = render_svg(result, kind)
    svg_path = args.svg or (args.out.with_suffix(".svg") if args.out else Path(f"{fig}.svg"))
    _emit(args, _result_text(result, args.format), stdout)
    _write_atomic(svg_path, svg)


def _cmd_quotient(args, stdout):
    value = quotient_cdf(args.alpha, args.x, shifted=args.shifted)
    _emit(args, _render(args.format, ("alpha", "x", "cdf"), [(args.alpha, args.x, value)]), stdout)


_COMMANDS = {
    "bounds": _cmd_bounds,
    "exact": _cmd_exact,
    "estimate": _cmd_estimate,
    "flag": _cmd_flag,
    "truncate-demo": _cmd_truncate_demo,
    "stable-convergence": _cmd_stable,
    "reproduce": _cmd_reproduce,
    "quotient-cdf": _cmd_quotient,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        _COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=stderr)
        return EXIT_NUMERIC
    except (SpecError, DegenerateSampleError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_SPEC
    return 0


if __name__ == "__main__":
    sys.exit(main())
