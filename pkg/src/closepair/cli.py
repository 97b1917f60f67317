"""Command-line entry point: generate, solve, verify and bench subcommands.

Exit codes: 0 success, 1 usage error, 2 data error, 3 verification
failure. Results go to standard output, diagnostics and progress to
standard error. "-" selects standard input/output for file flags.
"""

from __future__ import annotations

import argparse
import sys
from typing import NoReturn, Optional, Sequence

from .bench import (
    BenchPlan,
    format_ratio_csv,
    format_ratio_gnuplot,
    format_ratio_text,
    format_records_csv,
    ratio_table,
    run_plan,
)
from .figures import render_ratio_figure
from .geometry import Metric, parse_metric
from .instances import (
    GenSpec,
    PointFileError,
    generate,
    parse_distribution,
    read_points,
    write_points,
)
from .solver import Algo, solve
from .verify import run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    """argparse with the usage-error exit code remapped from 2 to 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _size(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError(f"need at least 2 points, got {n}")
    return n


def _seed(text: str) -> int:
    s = int(text)
    if not (0 <= s < 2**64):
        raise argparse.ArgumentTypeError(f"seed must be unsigned 64-bit, got {s}")
    return s


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _cutoff(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"cutoff must be >= 2, got {v}")
    return v


def _metric(text: str) -> Metric:
    try:
        return parse_metric(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _metric_list(text: str) -> list[Metric]:
    return [_metric(part) for part in text.split(",") if part.strip()]


def _algo(text: str) -> Algo:
    try:
        return Algo(text.strip().lower())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown algorithm {text!r} (choose from basic2, basic7, brute)"
        ) from None


def _algo_list(text: str) -> list[Algo]:
    return [_algo(part) for part in text.split(",") if part.strip()]


def _size_list(text: str) -> list[int]:
    return [_size(part) for part in text.split(",") if part.strip()]


def _distribution(text: str):
    try:
        return parse_distribution(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write_text(path: str, content: str) -> None:
    if path == "-":
        sys.stdout.write(content)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)


def build_parser() -> _Parser:
    parser = _Parser(prog="closepair", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a random point file")
    p_gen.add_argument("--n", type=_size, required=True, help="number of points (>= 2)")
    p_gen.add_argument("--seed", type=_seed, default=0, help="64-bit seed (default 0)")
    p_gen.add_argument(
        "--dist",
        type=_distribution,
        default="unit",
        help="unit | box:XMIN,XMAX,YMIN,YMAX | clustered:K,SIGMA (default unit)",
    )
    p_gen.add_argument("--out", default="-", help="output path, - for stdout")
    p_gen.set_defaults(func=cmd_gen)

    p_solve = sub.add_parser("solve", help="find the closest pair in a point file")
    p_solve.add_argument("--in", dest="infile", default="-", help="input path, - for stdin")
    p_solve.add_argument(
        "--algo", type=_algo, default=Algo.BASIC2, help="basic2 | basic7 | brute"
    )
    p_solve.add_argument("--metric", type=_metric, default=Metric(2.0), help="p >= 1 or inf")
    p_solve.add_argument("--cutoff", type=_cutoff, default=10, help="recursion base size")
    p_solve.add_argument(
        "--stats", action="store_true", help="also print instrumentation counters"
    )
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser(
        "verify", help="cross-check solvers against brute force on random instances"
    )
    p_verify.add_argument("--n-max", type=_size, default=500, help="max instance size")
    p_verify.add_argument("--trials", type=_positive, default=100, help="instances per metric")
    p_verify.add_argument("--seed", type=_seed, default=0, help="base instance seed")
    p_verify.add_argument(
        "--metrics", type=_metric_list, default="1,2,3.1415,inf",
        help="comma list of metrics (default 1,2,3.1415,inf)",
    )
    p_verify.add_argument("--cutoff", type=_cutoff, default=10, help="recursion base size")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="run the timing benchmark")
    p_bench.add_argument(
        "--sizes", type=_size_list, default=None,
        help="comma list of input sizes (default 2^15..2^21 doubling)",
    )
    p_bench.add_argument("--reps", type=_positive, default=10, help="repetitions per size")
    p_bench.add_argument(
        "--metrics", type=_metric_list, default="1,2,3.1415,inf",
        help="comma list of metrics (default 1,2,3.1415,inf)",
    )
    p_bench.add_argument(
        "--algos", type=_algo_list, default="basic2,basic7",
        help="comma list of algorithms (default basic2,basic7)",
    )
    p_bench.add_argument("--seed", type=_seed, default=0, help="base seed")
    p_bench.add_argument("--cutoff", type=_cutoff, default=10, help="recursion base size")
    p_bench.add_argument("--csv", default="-", help="records CSV path, - for stdout")
    p_bench.add_argument("--ratios", default=None, help="ratio-table CSV path, - for stdout")
    p_bench.add_argument("--gnuplot", default=None, help="gnuplot ratio-matrix path")
    p_bench.add_argument("--plot", default=None, help="ratio figure path (png/pdf/svg)")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def cmd_gen(args: argparse.Namespace) -> int:
    # argparse runs type converters on string defaults too, so args.dist
    # is already a distribution object here
    ps = generate(GenSpec(n=args.n, seed=args.seed, distribution=args.dist))
    write_points(ps, args.out)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    ps = read_points(args.infile)
    result = solve(ps, args.metric, args.algo, args.cutoff)
    print(f"{result.index_a} {result.index_b} {result.dist!r}")
    if args.stats:
        for key, value in result.counters.as_dict().items():
            print(f"{key}={value}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(
        trials=args.trials,
        n_max=args.n_max,
        seed=args.seed,
        metrics=args.metrics,
        cutoff=args.cutoff,
    )
    sys.stdout.write(report.text)
    if not report.ok:
        for failure in report.failures:
            print(f"verify: {failure}", file=sys.stderr)
        if report.repro is not None:
            print(f"reproduce with: {report.repro}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        plan = BenchPlan(
            sizes=args.sizes if args.sizes is not None else BenchPlan.sizes,
            reps=args.reps,
            metrics=args.metrics,
            algos=args.algos,
            base_seed=args.seed,
            cutoff=args.cutoff,
        )
    except ValueError as exc:
        print(f"closepair bench: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    def progress(line: str) -> None:
        print(f"bench: {line}", file=sys.stderr, flush=True)

    records = run_plan(plan, progress=progress)
    _write_text(args.csv, format_records_csv(records))
    rows = ratio_table(records)
    if args.ratios is not None:
        _write_text(args.ratios, format_ratio_csv(rows))
    if args.gnuplot is not None:
        _write_text(args.gnuplot, format_ratio_gnuplot(rows))
    if args.plot is not None:
        render_ratio_figure(rows, args.plot)
    # Keep stdout machine-parseable: when CSV already went there, the
    # human-facing table moves to stderr.
    stdout_has_csv = args.csv == "-" or args.ratios == "-"
    out = sys.stderr if stdout_has_csv else sys.stdout
    out.write(format_ratio_text(rows))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_DATA
    except (PointFileError, OSError, ValueError, RuntimeError) as exc:
        print(f"closepair: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
