"""Command-line interface: impute, benchmark, distance, validate, fixtures.

Exit codes: 0 success, 1 data error (unreadable or invalid input,
unimputable cells), 2 usage error. All randomness is controlled by --seed;
given identical arguments and inputs, output files are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .core import DataMatrix, Missing, validate
from .distances import cell_distance, row_distance
from .evaluation import BenchmarkReport, benchmark
from .fixtures import FIXTURE_NAMES, fixture
from .imputer import impute
from .typed_csv import ParseError, parse, serialize


class _DataError(Exception):
    """Input problem reported on stderr with exit code 1."""


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _read_matrix(path: str) -> DataMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _DataError(f"cannot read {path}: {exc}") from None
    try:
        return parse(text)
    except ParseError as exc:
        raise _DataError(f"{path}: {exc}") from None


def cmd_impute(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.input)
    result = impute(matrix, args.k)
    Path(args.output).write_text(serialize(result.matrix), encoding="utf-8")
    if args.trace:
        lines = ["row,col,donor_row,distance,weight"]
        for ref in sorted(result.trace):
            for donor in result.trace[ref].donors:
                lines.append(
                    f"{ref.row},{ref.col},{donor.row},"
                    f"{donor.distance!r},{donor.weight!r}"
                )
        Path(args.trace).write_text("\n".join(lines) + "\n", encoding="utf-8")
    if result.unimputable:
        for ref in result.unimputable:
            print(
                f"unimputable: cell ({ref.row},{ref.col}) has no usable donors",
                file=sys.stderr,
            )
        return 1
    return 0


def _raw_table(report: BenchmarkReport) -> str:
    lines = ["k,missing_count,trial,error,imputable"]
    for rec in report.trials:
        error = "" if rec.error is None else repr(rec.error)
        flag = 0 if rec.error is None else 1
        lines.append(f"{rec.k},{rec.missing_count},{rec.trial},{error},{flag}")
    return "\n".join(lines) + "\n"


def _summary_table(report: BenchmarkReport) -> str:
    lines = ["k,min,q1,median,q3,max,mean"]
    for k, s in report.k_summaries.items():
        lines.append(
            f"{k},{s.min!r},{s.q1!r},{s.median!r},{s.q3!r},{s.max!r},{s.mean!r}"
        )
    return "\n".join(lines) + "\n"


def cmd_benchmark(args: argparse.Namespace) -> int:
    if args.k_min > args.k_max:
        return _usage_error("--k-min must not exceed --k-max")
    if args.nan_min > args.nan_max:
        return _usage_error("--nan-min must not exceed --nan-max")
    if args.fixture:
        matrix = fixture(args.fixture)
        name = args.fixture
    else:
        matrix = _read_matrix(args.input)
        name = Path(args.input).stem
    if args.nan_max > matrix.n_rows:
        return _usage_error(
            f"--nan-max {args.nan_max} exceeds the {matrix.n_rows} rows "
            f"of the input (at most one masked cell per row)"
        )
    report = benchmark(
        matrix,
        k_values=range(args.k_min, args.k_max + 1),
        missing_counts=range(args.nan_min, args.nan_max + 1),
        trials=args.trials,
        seed=args.seed,
        dataset_name=name,
    )
    out = Path(args.output)
    out.write_text(_raw_table(report), encoding="utf-8")
    summary = _summary_table(report)
    summary_path = out.with_name(out.stem + ".summary" + out.suffix)
    summary_path.write_text(summary, encoding="utf-8")
    print(summary, end="")
    return 0


def cmd_distance(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.input)
    try:
        left, right = (int(part) for part in args.rows.split(","))
    except ValueError:
        return _usage_error("--rows expects two comma-separated indices, e.g. 2,0")
    if left == right:
        return _usage_error("--rows needs two distinct rows")
    if not (0 <= left < matrix.n_rows and 0 <= right < matrix.n_rows):
        return _usage_error(
            f"row indices must be in 0..{matrix.n_rows - 1} (zero-based)"
        )
    rd = row_distance(matrix, left, right)
    if rd is None:
        print("incomparable")
        return 0
    for l, kind in enumerate(matrix.schema):
        a = matrix.cells[left][l]
        b = matrix.cells[right][l]
        if isinstance(a, Missing) or isinstance(b, Missing):
            continue
        print(f"column {l} ({matrix.column_names[l]}): {cell_distance(a, b, kind)!r}")
    print(f"shared features: {rd.shared_features}")
    print(f"row distance: {rd.value!r}")
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.input)
    violations = validate(matrix)
    for violation in violations:
        print(violation)
    return 0 if not violations else 1


def cmd_fixtures(args: argparse.Namespace) -> int:
    names = [args.name] if args.name else list(FIXTURE_NAMES)
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    for name in names:
        path = dest / f"{name}.csv"
        path.write_text(serialize(fixture(name)), encoding="utf-8")
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hetimpute",
        description=(
            "k-nearest-neighbor imputation and benchmarking for typed-CSV "
            "tables of crisp, interval, and triangular-fuzzy values"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("impute", help="fill every missing cell of a typed-CSV file")
    p.add_argument("--input", required=True, help="typed-CSV file to complete")
    p.add_argument("--output", required=True, help="where to write the completed file")
    p.add_argument("--k", type=_positive_int, required=True, help="number of neighbors")
    p.add_argument(
        "--trace",
        help="optional CSV listing donor rows, distances, and weights per imputed cell",
    )
    p.set_defaults(func=cmd_impute)

    p = sub.add_parser(
        "benchmark",
        help="mask random cells, impute, and report error statistics",
    )
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="typed-CSV file to benchmark")
    source.add_argument(
        "--fixture", choices=FIXTURE_NAMES, help="built-in matrix to benchmark"
    )
    p.add_argument("--k-min", type=_positive_int, required=True)
    p.add_argument("--k-max", type=_positive_int, required=True)
    p.add_argument("--nan-min", type=_nonnegative_int, required=True)
    p.add_argument("--nan-max", type=_nonnegative_int, required=True)
    p.add_argument("--trials", type=_positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--output",
        required=True,
        help="raw per-trial table; the per-k summary lands next to it as *.summary*",
    )
    p.set_defaults(func=cmd_benchmark)

    p = sub.add_parser(
        "distance", help="show the distance between two rows and its per-column parts"
    )
    p.add_argument("--input", required=True)
    p.add_argument("--rows", required=True, help="two zero-based row indices, e.g. 2,0")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("validate", help="check a typed-CSV file and list violations")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser(
        "fixtures", help="export the built-in example matrices as typed-CSV files"
    )
    p.add_argument("--dest", default=".", help="directory to write into")
    p.add_argument("--name", choices=FIXTURE_NAMES, help="export just one fixture")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
