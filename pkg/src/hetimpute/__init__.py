"""k-nearest-neighbor imputation for heterogeneous tabular data.

Matrices mix crisp reals, closed intervals, and triangular fuzzy numbers,
one kind per column. Missing cells are filled from the k most similar rows
under a missingness-aware distance, weighted by inverse distance. A masking
benchmark measures imputation error, and a typed-CSV codec moves matrices
on and off disk.
"""

from .core import (
    MISSING,
    CellRef,
    CellValue,
    ColumnKind,
    Crisp,
    DataMatrix,
    FuzzyTFN,
    Interval,
    Missing,
    Violation,
    components,
    matches_kind,
    missing_cells,
    validate,
)
from .distances import (
    RowDistance,
    cell_distance,
    crisp_distance,
    interval_distance,
    row_distance,
    tfn_distance,
    tfn_membership,
)
from .evaluation import (
    BenchmarkReport,
    MaskPattern,
    Summary,
    TrialRecord,
    benchmark,
    cell_error,
    mask_random,
    matrix_error,
    summarize,
)
from .fixtures import FIXTURE_NAMES, fixture
from .imputer import (
    ZERO_DISTANCE_EPS,
    Donor,
    ImputationResult,
    NeighborSet,
    combine_cells,
    find_neighbors,
    impute,
    neighbor_weights,
)
from .typed_csv import ParseError, parse, serialize

__version__ = "0.1.0"
