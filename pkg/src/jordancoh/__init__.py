"""Exact second cohomology of finite-dimensional Jordan superalgebras."""

from .bimodule import (
    SuperBimodule,
    check_bimodule,
    load_bimodule,
    opposite_bimodule,
    regular_bimodule,
    split_null_extension,
)
from .cohomology import (
    CoboundaryVariant,
    Cocycle,
    CohomologyReport,
    IdentityVariant,
    coboundary_matrix,
    coboundary_space,
    cocycle_space,
    cohomology,
    cohomology_group,
    enumerate_unknowns,
    extension_by_cocycle,
    jordan_cocycle_rows,
    paper_identity_check,
    supersymmetry_rows,
    verify_representative_span,
)
from .field import Polynomial, Scalar, parse_scalar, poly_gcd, specialize
from .superalgebra import (
    Element,
    GradedBasis,
    SuperAlgebra,
    builtin_Dt,
    builtin_M11plus,
    check_isomorphism,
    check_jordan,
    check_supercommutative,
    load_algebra,
    product,
)

__version__ = "0.1.0"
