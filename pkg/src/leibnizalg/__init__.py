"""Exact computations with finite-dimensional left Leibniz algebras.

Algebras are given by rational structure constants; everything downstream
(identity checkers, ideals and normalizers, series, Killing form, Engel
and Cartan subalgebras, low-dimensional classification) is computed
exactly over Q.
"""

from .algebra import (
    Algebra,
    RepresentationPair,
    Violation,
    adjoint_pair,
    bracket,
    centers,
    change_basis,
    check_left_leibniz,
    check_representation,
    check_right_leibniz,
    closures,
    derivation_check,
    leib_ideal,
    left_mult,
    normalizers,
    product_subspaces,
    quotient,
    restrict,
    right_mult,
    subspace_status,
)
from .analysis import (
    RadicalReport,
    SeriesReport,
    derived_series,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    lower_central_series,
    nilpotency_class,
    radical,
)
from .catalog import cyclic_algebra, from_associative, generate, sl2_module_algebra
from .classify import (
    CanonicalForm2,
    CatalogId,
    Fingerprint,
    classify,
    congruence_class_2x2,
    fingerprint,
)
from .engel import (
    CartanResult,
    CartanSearchError,
    EngelResult,
    LeibnizDerivation,
    engel_subalgebra,
    find_cartan,
    nilpotent_derivation,
)
from .expressions import (
    BracketExpr,
    Leaf,
    LinearCombination,
    Node,
    ParseError,
    eval_combination,
    eval_tree,
    left_norm,
    parse_expr,
)
from .fileio import AlgebraFileError, analysis_report, parse_algebra_file, serialize_algebra
from .forms import KillingData, cartan_solvable, killing
from .linalg import Matrix, Subspace, fitting_null, kernel, rref, subspace_ops

__all__ = [name for name in dir() if not name.startswith("_")]
