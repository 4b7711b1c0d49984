"""Exact Jordan structure, miniversal deformations, and the
partition-indexed stratification of square rational matrices under
conjugation and scaled conjugation.

All arithmetic is exact (``fractions.Fraction`` throughout); every
parameter count is computed twice, once by the block-size formula and
once by the kernel of the commutator operator, and the test suite holds
the two routes to exact agreement.
"""

from .deformations import (
    DeformationFamily,
    StarPattern,
    ad_matrix,
    centralizer_dim,
    combined_orbit_codim,
    is_transversal,
    miniversal_greedy,
    miniversal_param_count,
    miniversal_structured,
    orbit_tangent_span,
    projective_count,
    structured_star_pattern,
)
from .errors import (
    DimensionMismatch,
    DocumentError,
    IrrationalSpectrum,
    MatStrataError,
    NotSquare,
    PatternNotTransversal,
    ShapeMismatch,
    SizeMismatch,
    SymbolicEigenvalue,
    UnassignedParameter,
    WeightMismatch,
)
from .jordan import (
    JordanType,
    Symbol,
    enumerate_jordan_types,
    jordan_block,
    jordan_matrix,
    jordan_type,
)
from .linalg import (
    QMatrix,
    QPoly,
    SpanBuilder,
    char_poly,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    rational_roots,
    subspace_dim,
)
from .partitions import Partition, conjugate_partition, dominates, partitions_of
from .strata import (
    Stratum,
    SymbolicMatrix,
    SymmetrySpec,
    classify,
    classify_report,
    enumerate_strata,
    jump_exists,
    realized_jordan_types,
    reference_table,
    stratum_adjacency,
    stratum_param_count,
    stratum_table,
    symmetry,
    template,
    template_jordan_type,
    transitive_closure,
)

__version__ = "0.1.0"

__all__ = [
    "DeformationFamily",
    "DimensionMismatch",
    "DocumentError",
    "IrrationalSpectrum",
    "JordanType",
    "MatStrataError",
    "NotSquare",
    "Partition",
    "PatternNotTransversal",
    "QMatrix",
    "QPoly",
    "ShapeMismatch",
    "SizeMismatch",
    "SpanBuilder",
    "StarPattern",
    "Stratum",
    "Symbol",
    "SymbolicEigenvalue",
    "SymbolicMatrix",
    "SymmetrySpec",
    "UnassignedParameter",
    "WeightMismatch",
    "ad_matrix",
    "centralizer_dim",
    "char_poly",
    "classify",
    "classify_report",
    "combined_orbit_codim",
    "conjugate_partition",
    "dominates",
    "enumerate_jordan_types",
    "enumerate_strata",
    "format_rational",
    "is_transversal",
    "jordan_block",
    "jordan_matrix",
    "jordan_type",
    "jump_exists",
    "kernel_basis",
    "miniversal_greedy",
    "miniversal_param_count",
    "miniversal_structured",
    "orbit_tangent_span",
    "parse_rational",
    "partitions_of",
    "projective_count",
    "rank",
    "rational_roots",
    "realized_jordan_types",
    "reference_table",
    "stratum_adjacency",
    "stratum_param_count",
    "stratum_table",
    "structured_star_pattern",
    "subspace_dim",
    "symmetry",
    "template",
    "template_jordan_type",
    "transitive_closure",
]
