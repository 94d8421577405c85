"""Weighted k-nearest-neighbor imputation over heterogeneous matrices.

For every missing cell: rank the rows that observe that column by row
distance, keep the k closest, weight them by inverse distance, and fill the
cell with the component-wise convex combination of their values. The donor
pool is the matrix as passed in, frozen for the whole pass, so cells never
see each other's freshly imputed values and the result is independent of
evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    CellRef,
    CellValue,
    ColumnKind,
    Crisp,
    DataMatrix,
    FuzzyTFN,
    Interval,
    Missing,
    matches_kind,
    missing_cells,
)
from .distances import row_distance

#: Distances below this are treated as exact matches when weighting.
ZERO_DISTANCE_EPS = 1e-12


@dataclass(frozen=True)
class Donor:
    row: int
    distance: float
    weight: float


@dataclass(frozen=True)
class NeighborSet:
    """The donors selected for one missing cell, nearest first.

    May be empty when no row both observes the target column and shares at
    least one observed column with the target row.
    """

    target: CellRef
    donors: tuple[Donor, ...]


@dataclass(frozen=True)
class ImputationResult:
    """A completed matrix plus, per filled cell, the donors that built it."""

    matrix: DataMatrix
    trace: dict[CellRef, NeighborSet]
    unimputable: tuple[CellRef, ...]


def neighbor_weights(distances: Sequence[float]) -> list[float]:
    """Inverse-distance weights, normalized to sum to 1.

    Inverse distance is singular at zero, and a donor at (numerically) zero
    distance is an exact answer: if any distance falls below
    ZERO_DISTANCE_EPS, those donors share the weight uniformly and every
    other donor gets 0.
    """
    if len(distances) == 0:
        raise ValueError("at least one distance is required")
    exact = [d < ZERO_DISTANCE_EPS for d in distances]
    if any(exact):
        share = 1.0 / sum(exact)
        return [share if hit else 0.0 for hit in exact]
    inverses = [1.0 / d for d in distances]
    total = sum(inverses)
    return [inv / total for inv in inverses]


def find_neighbors(matrix: DataMatrix, target: CellRef, k: int) -> NeighborSet:
    """Select up to k donor rows for the missing cell at ``target``.

    Candidates are the rows observed at target.col with a defined distance
    to the target row. Ties at the k-th distance break toward the lower row
    index. Fewer than k candidates degrade gracefully to all of them.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not isinstance(matrix.cells[target.row][target.col], Missing):
        raise ValueError(f"cell ({target.row},{target.col}) is not missing")
    ranked: list[tuple[float, int]] = []
    for j in range(matrix.n_rows):
        if j == target.row:
            continue
        if isinstance(matrix.cells[j][target.col], Missing):
            continue
        rd = row_distance(matrix, target.row, j)
        if rd is None:
            continue
        ranked.append((rd.value, j))
    ranked.sort()
    chosen = ranked[:k]
    if not chosen:
        return NeighborSet(target, ())
    weights = neighbor_weights([d for d, _ in chosen])
    donors = tuple(
        Donor(row=j, distance=d, weight=w)
        for (d, j), w in zip(chosen, weights)
    )
    return NeighborSet(target, donors)


def combine_cells(
    donors: Sequence[tuple[CellValue, float]], kind: ColumnKind
) -> CellValue:
    """Component-wise weighted combination of donor cells.

    Weights are expected to be nonnegative and sum to 1, which keeps every
    component inside its donors' range and preserves interval/fuzzy
    ordering. A combination of identical values returns that value verbatim
    (the mathematical identity would otherwise be lost to summation
    rounding).
    """
    if len(donors) == 0:
        raise ValueError("at least one donor is required")
    for cell, _ in donors:
        if not matches_kind(cell, kind):
            raise ValueError(
                f"donor {type(cell).__name__} does not match "
                f"column kind {kind.value}"
            )
    first = donors[0][0]
    if all(cell == first for cell, _ in donors):
        return first
    if kind is ColumnKind.CRISP:
        return Crisp(sum(c.value * w for c, w in donors))
    if kind is ColumnKind.INTERVAL:
        return Interval(
            sum(c.lower * w for c, w in donors),
            sum(c.upper * w for c, w in donors),
        )
    return FuzzyTFN(
        sum(c.a1 * w for c, w in donors),
        sum(c.a2 * w for c, w in donors),
        sum(c.a3 * w for c, w in donors),
    )


def impute(matrix: DataMatrix, k: int) -> ImputationResult:
    """Fill every missing cell of ``matrix`` from its k nearest donors.

    Cells are processed in row-major order against the original matrix; a
    cell with no usable donors is reported in ``unimputable`` and left
    Missing. The input matrix is not touched.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    grid = [list(row) for row in matrix.cells]
    trace: dict[CellRef, NeighborSet] = {}
    unimputable: list[CellRef] = []
    for ref in missing_cells(matrix):
        neighbors = find_neighbors(matrix, ref, k)
        if not neighbors.donors:
            unimputable.append(ref)
            continue
        donor_cells = [
            (matrix.cells[d.row][ref.col], d.weight) for d in neighbors.donors
        ]
        grid[ref.row][ref.col] = combine_cells(donor_cells, matrix.schema[ref.col])
        trace[ref] = neighbors
    completed = DataMatrix(
        matrix.schema, tuple(tuple(row) for row in grid), matrix.column_names
    )
    return ImputationResult(completed, trace, tuple(unimputable))
