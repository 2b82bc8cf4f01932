"""ncubes: exact decision procedures for sums of cubes, with the
derandomization toolkit they rest on (hitting sets, essential-variable
minimization, Lie-algebra factorization into linear forms).

Everything is exact rational arithmetic; no floats anywhere.
"""

from .blackbox import BlackBoxPoly, derivative_blackbox, gradient_blackboxes
from .equivalence import (
    Field,
    RejectReason,
    Verdict,
    deterministic_equivalence,
    randomized_equivalence,
    simdiag_decision,
)
from .errors import (
    NotCubicError,
    NotHomogeneousError,
    ParseError,
    SingularMatrixError,
    SymmetryError,
)
from .hitting import (
    PitResult,
    PointSet,
    TransversalFamily,
    equivalence_hitting_set,
    moment_points,
    pit_hitting_points,
    pit_sum_of_powers,
    transversal_family,
)
from .lie import (
    FactorizationFailed,
    FailureReason,
    LieBasis,
    LinearFactorization,
    QEquivalence,
    derand_lie_factor,
    lambda_points,
    lie_algebra_dense,
    lie_algebra_product_forms,
    lie_equivalence_Q,
    rational_roots,
)
from .linalg import (
    MatrixSubspace,
    SturmChain,
    centralizer_basis,
    char_poly,
    commute,
    count_real_roots,
    det,
    inverse,
    is_commuting_quotient,
    is_diagonalizable,
    is_diagonalizable_real,
    kernel_basis,
    rank,
    solve,
    squarefree_part,
)
from .poly import (
    SparsePoly,
    UniPoly,
    eval_poly,
    gradient,
    parse_poly,
    partial_derivative,
    poly_from_json,
    poly_to_json,
    poly_to_str,
)
from .polydep import (
    DependencySpace,
    EvalMatrix,
    essential_variable_count,
    eval_matrix,
    minimize_variables,
    polydep_basis,
)
from .qmatrix import QMatrix
from .rational import Q, format_rational, parse_rational, q
from .slices import (
    CubicSlices,
    form_from_slices,
    hessian_as_slice_pencil,
    slices_of,
    substitute,
    transformed_slices,
)

__version__ = "0.1.0"

__all__ = [
    "BlackBoxPoly",
    "CubicSlices",
    "DependencySpace",
    "EvalMatrix",
    "FactorizationFailed",
    "FailureReason",
    "Field",
    "LieBasis",
    "LinearFactorization",
    "MatrixSubspace",
    "NotCubicError",
    "NotHomogeneousError",
    "ParseError",
    "PitResult",
    "PointSet",
    "Q",
    "QEquivalence",
    "QMatrix",
    "RejectReason",
    "SingularMatrixError",
    "SparsePoly",
    "SturmChain",
    "SymmetryError",
    "TransversalFamily",
    "UniPoly",
    "Verdict",
    "centralizer_basis",
    "char_poly",
    "commute",
    "count_real_roots",
    "derand_lie_factor",
    "derivative_blackbox",
    "det",
    "deterministic_equivalence",
    "equivalence_hitting_set",
    "essential_variable_count",
    "eval_matrix",
    "eval_poly",
    "form_from_slices",
    "format_rational",
    "gradient",
    "gradient_blackboxes",
    "hessian_as_slice_pencil",
    "inverse",
    "is_commuting_quotient",
    "is_diagonalizable",
    "is_diagonalizable_real",
    "kernel_basis",
    "lambda_points",
    "lie_algebra_dense",
    "lie_algebra_product_forms",
    "lie_equivalence_Q",
    "minimize_variables",
    "moment_points",
    "parse_poly",
    "parse_rational",
    "partial_derivative",
    "pit_hitting_points",
    "pit_sum_of_powers",
    "poly_from_json",
    "poly_to_json",
    "poly_to_str",
    "polydep_basis",
    "q",
    "randomized_equivalence",
    "rank",
    "rational_roots",
    "simdiag_decision",
    "slices_of",
    "solve",
    "squarefree_part",
    "substitute",
    "transformed_slices",
    "transversal_family",
]
