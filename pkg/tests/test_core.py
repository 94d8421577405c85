import math

import pytest
from hypothesis import given

from hetimpute.core import (
    MISSING,
    CellRef,
    ColumnKind,
    Crisp,
    DataMatrix,
    FuzzyTFN,
    Interval,
    Missing,
    components,
    matches_kind,
    missing_cells,
    validate,
)

from strategies import matrices


def test_validate_accepts_fixture(case1):
    assert validate(case1) == []


def test_validate_reports_interval_order_violation():
    m = DataMatrix(
        schema=(ColumnKind.CRISP, ColumnKind.INTERVAL),
        cells=((Crisp(0.1), Interval(0.9, 0.3)),),
    )
    report = validate(m)
    assert len(report) == 1
    assert report[0].ref == CellRef(0, 1)
    assert str(report[0]) == "lower > upper at (0,1)"


def test_validate_reports_kind_mismatch():
    m = DataMatrix(
        schema=(ColumnKind.FUZZY,),
        cells=((Crisp(0.5),),),
    )
    report = validate(m)
    assert len(report) == 1
    assert "kind mismatch" in report[0].message


def test_validate_reports_fuzzy_order_violation():
    m = DataMatrix(
        schema=(ColumnKind.FUZZY,),
        cells=((FuzzyTFN(0.5, 0.2, 0.8),),),
    )
    assert [v.message for v in validate(m)] == ["fuzzy components out of order"]


def test_validate_reports_nonfinite_components():
    m = DataMatrix(
        schema=(ColumnKind.CRISP, ColumnKind.INTERVAL),
        cells=((Crisp(math.nan), Interval(0.0, math.inf)),),
    )
    messages = [v.message for v in validate(m)]
    assert messages == ["non-finite component", "non-finite component"]


def test_validate_is_idempotent_on_invalid_input():
    m = DataMatrix(
        schema=(ColumnKind.INTERVAL,),
        cells=((Interval(2.0, 1.0),), (Interval(0.0, 1.0),)),
    )
    assert validate(m) == validate(m)


def test_validate_skips_missing_cells():
    m = DataMatrix(schema=(ColumnKind.FUZZY,), cells=((MISSING,),))
    assert validate(m) == []


def test_missing_cells_finds_masked_fixture_cell(case1_masked):
    assert missing_cells(case1_masked) == [CellRef(2, 2)]


def test_missing_cells_empty_for_complete_matrix(case1):
    assert missing_cells(case1) == []


def test_missing_cells_row_major_order():
    m = DataMatrix(
        schema=(ColumnKind.CRISP, ColumnKind.CRISP),
        cells=((MISSING, Crisp(1.0)), (Crisp(2.0), MISSING)),
    )
    assert missing_cells(m) == [CellRef(0, 0), CellRef(1, 1)]


@given(matrices())
def test_missing_plus_observed_covers_grid(m):
    observed = sum(
        1 for row in m.cells for c in row if not isinstance(c, Missing)
    )
    assert len(missing_cells(m)) + observed == m.n_rows * m.n_cols


@given(matrices())
def test_validate_pure(m):
    before = m.cells
    first = validate(m)
    second = validate(m)
    assert first == second
    assert m.cells == before


def test_matrix_rejects_empty_and_ragged():
    with pytest.raises(ValueError):
        DataMatrix(schema=(), cells=((),))
    with pytest.raises(ValueError):
        DataMatrix(schema=(ColumnKind.CRISP,), cells=())
    with pytest.raises(ValueError):
        DataMatrix(
            schema=(ColumnKind.CRISP, ColumnKind.CRISP),
            cells=((Crisp(1.0),),),
        )
    with pytest.raises(ValueError):
        DataMatrix(
            schema=(ColumnKind.CRISP,),
            cells=((Crisp(1.0),),),
            column_names=("a", "b"),
        )


def test_matrix_accepts_lists_and_freezes_them():
    m = DataMatrix(
        schema=[ColumnKind.CRISP],
        cells=[[Crisp(1.0)], [MISSING]],
        column_names=["x"],
    )
    assert isinstance(m.cells, tuple)
    assert isinstance(m.cells[0], tuple)
    assert m.schema == (ColumnKind.CRISP,)


def test_matrix_default_column_names():
    m = DataMatrix(
        schema=(ColumnKind.CRISP, ColumnKind.FUZZY),
        cells=((Crisp(0.0), MISSING),),
    )
    assert m.column_names == ("c1", "c2")


def test_with_cell_returns_modified_copy(case1):
    changed = case1.with_cell(0, 0, Crisp(0.9))
    assert changed.cell(0, 0) == Crisp(0.9)
    assert case1.cell(0, 0) == Crisp(0.5891)
    with pytest.raises(IndexError):
        case1.with_cell(5, 0, MISSING)


def test_is_complete(case1, case1_masked):
    assert case1.is_complete()
    assert not case1_masked.is_complete()


def test_matches_kind_and_components():
    assert matches_kind(Crisp(1.0), ColumnKind.CRISP)
    assert not matches_kind(MISSING, ColumnKind.CRISP)
    assert not matches_kind(Interval(0.0, 1.0), ColumnKind.FUZZY)
    assert components(FuzzyTFN(1.0, 2.0, 3.0)) == (1.0, 2.0, 3.0)
    assert components(Interval(0.0, 1.0)) == (0.0, 1.0)
    with pytest.raises(ValueError):
        components(MISSING)


def test_cellref_orders_row_major():
    refs = [CellRef(1, 0), CellRef(0, 2), CellRef(0, 1)]
    assert sorted(refs) == [CellRef(0, 1), CellRef(0, 2), CellRef(1, 0)]
