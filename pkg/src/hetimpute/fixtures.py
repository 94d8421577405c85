"""Built-in example matrices: three small decision-making matrices.

Kept here so the worked examples and benchmarks run without any external
files: case1 is a 3x3 normalized decision matrix (crisp, interval, fuzzy),
case2 a 4x4 multi-criteria matrix (crisp, fuzzy, fuzzy, interval), case3 a
5x3 multi-attribute matrix (crisp, interval, fuzzy).
"""

from __future__ import annotations

from .core import ColumnKind, Crisp, DataMatrix, FuzzyTFN, Interval

_CASE1 = DataMatrix(
    schema=(ColumnKind.CRISP, ColumnKind.INTERVAL, ColumnKind.FUZZY),
    cells=(
        (Crisp(0.5891), Interval(0.31623, 0.94868), FuzzyTFN(0.455842, 0.569803, 0.683763)),
        (Crisp(0.5624), Interval(0.55470, 0.83205), FuzzyTFN(0.371391, 0.557086, 0.742781)),
        (Crisp(0.5802), Interval(0.55470, 0.83205), FuzzyTFN(0.491539, 0.573462, 0.655386)),
    ),
)

_CASE2 = DataMatrix(
    schema=(ColumnKind.CRISP, ColumnKind.FUZZY, ColumnKind.FUZZY, ColumnKind.INTERVAL),
    cells=(
        (Crisp(0.47), FuzzyTFN(0.32, 0.48, 0.71), FuzzyTFN(0.52, 0.67, 0.87), Interval(0.40, 0.55)),
        (Crisp(0.58), FuzzyTFN(0.16, 0.29, 0.47), FuzzyTFN(0.26, 0.37, 0.52), Interval(0.41, 0.58)),
        (Crisp(0.42), FuzzyTFN(0.49, 0.67, 0.94), FuzzyTFN(0.39, 0.52, 0.70), Interval(0.37, 0.54)),
        (Crisp(0.51), FuzzyTFN(0.32, 0.48, 0.71), FuzzyTFN(0.26, 0.37, 0.52), Interval(0.50, 0.69)),
    ),
)

_CASE3 = DataMatrix(
    schema=(ColumnKind.CRISP, ColumnKind.INTERVAL, ColumnKind.FUZZY),
    cells=(
        (Crisp(0.45), Interval(0.60, 0.80), FuzzyTFN(0.42, 0.57, 0.71)),
        (Crisp(0.41), Interval(0.37, 0.93), FuzzyTFN(0.27, 0.53, 0.80)),
        (Crisp(0.48), Interval(0.32, 0.95), FuzzyTFN(0.46, 0.57, 0.68)),
        (Crisp(0.43), Interval(0.55, 0.83), FuzzyTFN(0.37, 0.56, 0.74)),
        (Crisp(0.46), Interval(0.20, 0.98), FuzzyTFN(0.49, 0.57, 0.66)),
    ),
)

_FIXTURES = {"case1": _CASE1, "case2": _CASE2, "case3": _CASE3}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str) -> DataMatrix:
    """Return the named built-in matrix."""
    try:
        return _FIXTURES[name]
    except KeyError:
        raise ValueError(
            f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}"
        ) from None
