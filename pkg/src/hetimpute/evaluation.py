"""Masking benchmark: remove known values at random, impute, measure error.

The protocol masks up to one cell per row (so every row keeps enough
context to be a donor elsewhere), imputes with a given k, and scores the
result as the root of the summed squared per-cell distances between the
original and the completed matrix, divided by the n*m cell count; unmasked
cells contribute 0. Sweeping k and the number of masked cells over many
seeded trials yields the error samples and box-plot statistics used for
reporting.

Every random choice flows from explicit integer seeds; per-trial seeds are
derived by hashing (seed, k, count, trial), so any single trial can be
reproduced in isolation and the full report is a pure function of its
arguments.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import CellRef, CellValue, ColumnKind, DataMatrix, MISSING
from .distances import cell_distance
from .imputer import impute

#: Allowed masking modes: at most one masked cell per row (the default), or
#: every masked cell in one shared column.
MASK_MODES = ("one-per-row", "single-column")


@dataclass(frozen=True)
class MaskPattern:
    """The cells removed by one masking draw, with the seed that drew them."""

    refs: tuple[CellRef, ...]
    seed: int


@dataclass(frozen=True)
class Summary:
    """Box-plot statistics of one error sample set."""

    min: float
    q1: float
    median: float
    q3: float
    max: float
    mean: float


@dataclass(frozen=True)
class TrialRecord:
    """One benchmark trial; error is None when any cell was unimputable."""

    k: int
    missing_count: int
    trial: int
    error: Optional[float]


@dataclass(frozen=True)
class BenchmarkReport:
    dataset_name: str
    samples: dict[tuple[int, int], tuple[float, ...]]
    summaries: dict[tuple[int, int], Summary]
    k_summaries: dict[int, Summary]
    trials: tuple[TrialRecord, ...]
    unimputable_counts: dict[tuple[int, int], int]


def mask_random(
    matrix: DataMatrix, count: int, seed: int, mode: str = "one-per-row"
) -> tuple[DataMatrix, MaskPattern]:
    """Replace ``count`` cells of a complete matrix by Missing, seeded.

    The default mode picks ``count`` distinct rows uniformly and one column
    uniformly within each, so no row loses more than one value. The
    "single-column" mode instead draws one shared column and ``count``
    distinct rows. Same arguments, same pattern.
    """
    if mode not in MASK_MODES:
        raise ValueError(f"unknown mask mode {mode!r}; use one of {MASK_MODES}")
    if count > matrix.n_rows:
        raise ValueError(
            f"cannot mask {count} cells with at most one per row "
            f"in a {matrix.n_rows}-row matrix"
        )
    if count < 0:
        raise ValueError("count must be nonnegative")
    if not matrix.is_complete():
        raise ValueError("masking expects a complete matrix")
    rng = random.Random(seed)
    rows = rng.sample(range(matrix.n_rows), count)
    if mode == "one-per-row":
        refs = sorted(CellRef(r, rng.randrange(matrix.n_cols)) for r in rows)
    else:
        col = rng.randrange(matrix.n_cols)
        refs = sorted(CellRef(r, col) for r in rows)
    grid = [list(row) for row in matrix.cells]
    for ref in refs:
        grid[ref.row][ref.col] = MISSING
    masked = DataMatrix(
        matrix.schema, tuple(tuple(row) for row in grid), matrix.column_names
    )
    return masked, MaskPattern(tuple(refs), seed)


def cell_error(
    original: CellValue, imputed: CellValue, kind: ColumnKind
) -> float:
    """Error of one imputed cell: its type-dispatched distance to the truth."""
    return cell_distance(original, imputed, kind)


def matrix_error(original: DataMatrix, imputed: DataMatrix) -> float:
    """Imputation error between two complete matrices of the same shape:
    the Euclidean norm of the per-cell distances, divided by n*m.

    Cells that were never touched are at distance 0 and contribute nothing,
    so with a single imputed cell this is exactly that cell's distance to
    the truth over the cell count.
    """
    if (
        original.n_rows != imputed.n_rows
        or original.schema != imputed.schema
    ):
        raise ValueError("matrices must share shape and schema")
    total = 0.0
    for i in range(original.n_rows):
        for l, kind in enumerate(original.schema):
            d = cell_error(original.cells[i][l], imputed.cells[i][l], kind)
            total += d * d
    return math.sqrt(total) / (original.n_rows * original.n_cols)


def _quantile(ordered: Sequence[float], p: float) -> float:
    # Linear interpolation between order statistics ("type 7").
    pos = (len(ordered) - 1) * p
    lo = math.floor(pos)
    hi = math.ceil(pos)
    return ordered[lo] + (pos - lo) * (ordered[hi] - ordered[lo])


def summarize(values: Sequence[float]) -> Summary:
    """Box-plot summary of a nonempty sample set."""
    if len(values) == 0:
        raise ValueError("cannot summarize an empty sample set")
    ordered = sorted(values)
    return Summary(
        min=ordered[0],
        q1=_quantile(ordered, 0.25),
        median=_quantile(ordered, 0.5),
        q3=_quantile(ordered, 0.75),
        max=ordered[-1],
        mean=sum(ordered) / len(ordered),
    )


def derive_trial_seed(seed: int, k: int, count: int, trial: int) -> int:
    """Stable per-trial seed, independent of Python's hash randomization."""
    key = f"{seed}|{k}|{count}|{trial}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def benchmark(
    matrix: DataMatrix,
    k_values: Sequence[int],
    missing_counts: Sequence[int],
    trials: int,
    seed: int,
    dataset_name: str = "",
    mask_mode: str = "one-per-row",
) -> BenchmarkReport:
    """Mask/impute/score ``trials`` times for every (k, missing_count) pair.

    Trials where some cell could not be imputed are kept in the per-trial
    records with error None and counted per key, but excluded from the
    sample sets and summaries. Per-k summaries aggregate the samples of all
    missing counts for that k.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    for count in missing_counts:
        if count > matrix.n_rows:
            raise ValueError(
                f"missing count {count} exceeds row count {matrix.n_rows}"
            )
    if not matrix.is_complete():
        raise ValueError("benchmark expects a complete matrix")
    samples: dict[tuple[int, int], tuple[float, ...]] = {}
    summaries: dict[tuple[int, int], Summary] = {}
    k_summaries: dict[int, Summary] = {}
    unimputable_counts: dict[tuple[int, int], int] = {}
    records: list[TrialRecord] = []
    for k in k_values:
        per_k: list[float] = []
        for count in missing_counts:
            errors: list[float] = []
            failed = 0
            for trial in range(trials):
                trial_seed = derive_trial_seed(seed, k, count, trial)
                masked, _ = mask_random(matrix, count, trial_seed, mask_mode)
                result = impute(masked, k)
                if result.unimputable:
                    failed += 1
                    records.append(TrialRecord(k, count, trial, None))
                    continue
                error = matrix_error(matrix, result.matrix)
                errors.append(error)
                records.append(TrialRecord(k, count, trial, error))
            samples[(k, count)] = tuple(errors)
            unimputable_counts[(k, count)] = failed
            if errors:
                summaries[(k, count)] = summarize(errors)
            per_k.extend(errors)
        if per_k:
            k_summaries[k] = summarize(per_k)
    return BenchmarkReport(
        dataset_name=dataset_name,
        samples=samples,
        summaries=summaries,
        k_summaries=k_summaries,
        trials=tuple(records),
        unimputable_counts=unimputable_counts,
    )
