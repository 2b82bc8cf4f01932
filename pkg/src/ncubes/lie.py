"""Lie algebras of polynomials, derandomized factorization into linear
forms, and deterministic equivalence over Q.

The Lie algebra of P is {C : sum_ij c_ij x_j dP/dx_i = 0}.  For a product
of linear forms it can be computed from black-box access alone: the defining
expression is a simple rational function times P, and the point set
Lambda(d, n) is a hitting set for such functions, so the linear system over
the c_ij only needs the Lambda points.

derand_lie_factor recovers lambda, l_1^a_1 ... l_s^a_s for products of
independent rational forms: left eigenvectors of a generic Lie element for
its rational eigenvalues are candidate forms, candidates are confirmed by
exact division, and the result is verified by re-expansion, so a returned
factorization is always correct.  Binary forms (n = 2) go through the
dehomogenized univariate factorization instead, which handles dependent
forms as well.  Inputs spanning a proper subspace (s distinct forms in
n > s variables) are first cut down to their essential variables: in the
reduced coordinates the Lie algebra has no free block, which is what makes
the generic-element schedule provably collision-free.

lie_equivalence_Q is the three-step scheme on top: factor the Hessian
determinant of f, solve for the coefficients a_i in f = sum a_i l_i^d, and
take rational d-th roots.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import linalg
from .blackbox import BlackBoxPoly, gradient_blackboxes
from .errors import NotHomogeneousError
from .hitting import PointSet, moment_points
from .linalg import MatrixSubspace
from .poly import SparsePoly, UniPoly, divide_by_linear_form, poly_matrix_det
from .polydep import coefficient_dependencies, minimize_variables
from .qmatrix import QMatrix
from .rational import Q, QONE, QZERO, q, rational_nth_root
from .slices import hessian_as_slice_pencil, slices_of, substitute

LieBasis = MatrixSubspace


# ---------------------------------------------------------------------------
# Lambda hitting set


def lambda_points(m: int, n: int) -> PointSet:
    """Lambda(m, n) = {u + lambda*v} over v in P(n,m), u in P(n,m^2)+{0},
    lambda in 1..2m+1, with P(n,k) the k(n-1)+1 moment points."""
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    vs = moment_points(n, m * (n - 1) + 1)
    us = list(moment_points(n, m * m * (n - 1) + 1)) + [tuple([0] * n)]
    pts = []
    for u in us:
        for v in vs:
            for lam in range(1, 2 * m + 2):
                pts.append(tuple(ui + lam * vi for ui, vi in zip(u, v)))
    return PointSet(n, pts, sort=True)


# ---------------------------------------------------------------------------
# Lie algebra computation


def _vectors_to_matrices(vecs, n):
    return [
        QMatrix([[v[i * n + j] for j in range(n)] for i in range(n)]) for v in vecs
    ]


def _as_subspace(mats, n) -> MatrixSubspace:
    if not mats:
        return MatrixSubspace.trivial(n)
    return MatrixSubspace(mats)


def lie_algebra_dense(P: SparsePoly) -> MatrixSubspace:
    """Kernel of the coefficient-matching system of sum c_ij x_j dP/dx_i = 0."""
    n = P.n
    from .poly import gradient

    polys = []
    grads = gradient(P)
    for i in range(n):
        for j in range(n):
            polys.append(grads[i] * SparsePoly.variable(n, j))
    dep = coefficient_dependencies(polys)
    return _as_subspace(_vectors_to_matrices(dep.basis, n), n)


def lie_algebra_product_forms(P: BlackBoxPoly, n: int, d: int) -> MatrixSubspace:
    """Lie algebra of a product of d linear forms, from evaluations only:
    C is in the algebra iff sum_ij c_ij x_j (dP/dx_i)(x) = 0 for every x in
    Lambda(d, n)."""
    pts = lambda_points(d, n)
    grads = gradient_blackboxes(P)
    grad_vals = [g.eval_many(list(pts)) for g in grads]
    rows = []
    for pi, x in enumerate(pts):
        row = []
        for i in range(n):
            gi = grad_vals[i][pi]
            for j in range(n):
                row.append(gi * x[j])
        rows.append(row)
    vecs = linalg.kernel_basis(QMatrix(rows))
    return _as_subspace(_vectors_to_matrices(vecs, n), n)


# ---------------------------------------------------------------------------
# rational root isolation (monic reduction + Sturm bisection)


def _signs_at_half_integer(chain_scaled, k: int):
    """Signs of the chain at k + 1/2, given each chain polynomial p scaled
    as p~(y) = 2^deg(p) * p(y/2) so that p(k + 1/2) has the sign of
    p~(2k + 1)."""
    y = 2 * k + 1
    signs = []
    for p in chain_scaled:
        acc = 0
        for c in reversed(p):
            acc = acc * y + c
        if acc:
            signs.append(1 if acc > 0 else -1)
    return signs


def _variations(signs) -> int:
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _integer_roots_monic(ints) -> list[int]:
    """All integer roots of a squarefree monic integer polynomial, by Sturm
    bisection on half-integer endpoints (which are never roots of a monic
    integer polynomial, so the counts are unambiguous)."""
    from . import kernels

    deg = len(ints) - 1
    if deg <= 0:
        return []
    chain = kernels.sturm_chain(list(ints))
    chain_scaled = [
        [c << (len(p) - 1 - i) for i, c in enumerate(p)] for p in chain
    ]
    bound = 1 + max(abs(c) for c in ints)

    def var_at(k: int) -> int:
        return _variations(_signs_at_half_integer(chain_scaled, k))

    roots = []
    stack = [(-bound, bound - 1)]
    while stack:
        a, b = stack.pop()
        count = var_at(a - 1) - var_at(b)
        if count <= 0:
            continue
        if a == b:
            acc = 0
            for c in reversed(ints):
                acc = acc * a + c
            if acc == 0:
                roots.append(a)
            continue
        mid = (a + b) // 2
        stack.append((a, mid))
        stack.append((mid + 1, b))
    roots.sort()
    return roots


def rational_roots(p: UniPoly) -> list[tuple]:
    """Distinct rational roots of p with multiplicities, as (root, mult).

    Strongly polynomial: the squarefree part is made monic by the standard
    substitution (roots of p are integer roots of lc^{deg-1} p(y/lc) divided
    by lc), and integer roots come from Sturm bisection, not divisor
    enumeration.
    """
    from . import kernels

    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    ints, _ = p.to_int_coeffs()
    val = 0
    while ints[val] == 0:
        val += 1
    roots: list[tuple] = []
    if val:
        roots.append((QZERO, val))
        ints = ints[val:]
    if len(ints) > 1:
        g = kernels.poly_gcd(ints, kernels.poly_deriv(ints))
        if len(g) > 1:
            quo, rem = UniPoly.from_int_coeffs(ints).divmod(UniPoly.from_int_coeffs(g))
            assert rem.is_zero()
            sf, _ = quo.to_int_coeffs()
        else:
            sf = kernels.poly_primitive(ints)
        lc = sf[-1]
        deg = len(sf) - 1
        monic = [sf[k] * lc ** (deg - 1 - k) for k in range(deg)] + [1]
        for w in _integer_roots_monic(monic):
            root = q(w, lc)
            mult = 0
            cur = UniPoly(list(p))
            div = UniPoly([-root, QONE])
            while True:
                quo, rem = cur.divmod(div)
                if not rem.is_zero():
                    break
                mult += 1
                cur = quo
            if mult:
                roots.append((root, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots


# ---------------------------------------------------------------------------
# factorization into linear forms


class FailureReason(enum.Enum):
    NotProductOfIndependentForms = "NotProductOfIndependentForms"
    RequiresFieldExtension = "RequiresFieldExtension"


class FactorizationFailed(Exception):
    def __init__(self, reason: FailureReason, message: str = ""):
        super().__init__(message or reason.value)
        self.reason = reason


@dataclass(frozen=True)
class LinearFactorization:
    """P = lam * prod_i <forms[i], x> ^ exponents[i]; forms normalized to
    leading coefficient 1 and sorted, so the representation is canonical."""

    n: int
    lam: object
    forms: tuple
    exponents: tuple

    def __post_init__(self):
        if len(self.forms) != len(self.exponents):
            raise ValueError("forms and exponents disagree")
        if any(a < 1 for a in self.exponents):
            raise ValueError("exponents must be positive")
        for w in self.forms:
            lead = next((c for c in w if c != 0), None)
            if lead is None or lead != 1:
                raise ValueError("forms must be normalized to leading 1")
        if len(set(self.forms)) != len(self.forms):
            raise ValueError("forms must be pairwise non-proportional")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def expand(self) -> SparsePoly:
        out = SparsePoly.constant(self.n, self.lam)
        for w, a in zip(self.forms, self.exponents):
            out = out * (SparsePoly.linear_form(w) ** a)
        return out


def _normalized(w) -> tuple:
    lead = next(c for c in w if c != 0)
    return tuple(Q(c) / lead for c in w)


def _build_factorization(P: SparsePoly, candidates) -> LinearFactorization | None:
    """Divide P by the candidate forms greedily; succeed iff the cofactor is
    a nonzero constant.  Returns a verified factorization or None."""
    rem = P
    found = []
    for w in candidates:
        w = _normalized(w)
        if any(w == u for u, _ in found):
            continue
        mult = 0
        while True:
            quo = divide_by_linear_form(rem, w)
            if quo is None:
                break
            rem = quo
            mult += 1
        if mult:
            found.append((w, mult))
    if rem.total_degree() != 0:
        return None
    lam = rem.coefficient(tuple([0] * P.n))
    found.sort(key=lambda fa: fa[0])
    fact = LinearFactorization(
        P.n, lam, tuple(w for w, _ in found), tuple(a for _, a in found)
    )
    if fact.expand() != P:
        return None
    return fact


def _factor_binary_form(P: SparsePoly) -> LinearFactorization:
    """n = 2: dehomogenize and use univariate rational factorization.  Every
    binary form splits over C, so the only failure mode is irrational
    factors."""
    d = P.total_degree()
    coeffs = [P.coefficient((k, d - k)) for k in range(d + 1)]
    uni = UniPoly(coeffs)  # P(u, 1)
    candidates = [(QZERO, QONE)] if uni.degree < d else []  # x_2 factor
    for root, _ in rational_roots(uni):
        candidates.append((QONE, -root))
    fact = _build_factorization(P, candidates)
    if fact is None:
        raise FactorizationFailed(FailureReason.RequiresFieldExtension)
    return fact


def derand_lie_factor(P: SparsePoly, n: int | None = None, d: int | None = None) -> LinearFactorization:
    """Factor P into powers of rational linear forms, deterministically.

    Succeeds whenever P is a product of powers of linearly independent
    rational forms (and for every binary form with rational factors); raises
    FactorizationFailed otherwise.  Every returned factorization has been
    verified by exact re-expansion.
    """
    if n is None:
        n = P.n
    if P.is_zero():
        raise NotHomogeneousError("cannot factor the zero polynomial")
    if d is None:
        d = P.total_degree()
    if not P.is_homogeneous(d):
        raise NotHomogeneousError(f"input is not homogeneous of degree {d}")
    if d == 0:
        return LinearFactorization(n, P.coefficient(tuple([0] * n)), (), ())
    if n == 1:
        c = P.coefficient(tuple([d]))
        return LinearFactorization(1, c, ((QONE,),), (d,))
    if d == 1:
        w = tuple(P.coefficient(tuple(1 if j == i else 0 for j in range(n))) for i in range(n))
        lead = next(c for c in w if c != 0)
        return LinearFactorization(n, lead, (_normalized(w),), (1,))
    if n == 2:
        return _factor_binary_form(P)

    # A product spanning only an s < n dimensional space has a Lie algebra
    # with an (n - s) x n free block, and the generic-element curve can stay
    # rank-deficient inside it for every t (a single squared form already
    # does).  Cut down to essential variables first; the reduced algebra is
    # conjugate-diagonal and the collision bound below actually applies.
    A, g = minimize_variables(P)
    used = g.variables_used()
    ess = max(used) + 1
    if ess < n:
        core = SparsePoly(ess, {e[:ess]: c for e, c in g.terms.items()})
        sub = derand_lie_factor(core)
        Ainv = linalg.inverse(A)
        candidates = [
            tuple(
                sum((w[i] * Ainv[i, j] for i in range(ess)), QZERO)
                for j in range(n)
            )
            for w in sub.forms
        ]
        fact = _build_factorization(P, candidates)
        if fact is None:
            raise FactorizationFailed(FailureReason.RequiresFieldExtension)
        return fact

    algebra = lie_algebra_product_forms(BlackBoxPoly.from_sparse(P), n, d)
    m = algebra.dim
    if m == 0:
        raise FactorizationFailed(
            FailureReason.NotProductOfIndependentForms,
            "trivial Lie algebra: not a product of independent forms",
        )
    bound = 1 + m * n * (n - 1) // 2
    eye = QMatrix.identity(n)
    for t in range(1, bound + 1):
        C = QMatrix.zeros(n, n)
        scale = 1
        for B in algebra.basis:
            C = C + B * scale
            scale *= t
        chi = linalg.char_poly(C)
        sf = linalg.squarefree_part(chi)
        candidates = []
        for root, _ in rational_roots(sf):
            left = linalg.kernel_basis(C.transpose() - eye * root)
            if len(left) == 1:
                candidates.append(left[0])
        if not candidates:
            continue
        fact = _build_factorization(P, candidates)
        if fact is not None:
            return fact
    raise FactorizationFailed(FailureReason.RequiresFieldExtension)


# ---------------------------------------------------------------------------
# deterministic equivalence over Q


@dataclass(frozen=True)
class QEquivalence:
    accepted: bool
    A: QMatrix | None = None
    forms: tuple = ()
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.accepted


def _hessian_det(f: SparsePoly, d: int) -> SparsePoly:
    from .poly import partial_derivative

    n = f.n
    if d == 3:
        return hessian_as_slice_pencil(slices_of(f)).det_poly()
    rows = []
    for i in range(n):
        row = []
        gi = partial_derivative(f, i)
        for j in range(n):
            row.append(partial_derivative(gi, j))
        rows.append(row)
    return poly_matrix_det(rows)


def lie_equivalence_Q(f: SparsePoly, d: int) -> QEquivalence:
    """Decide f(x) = P_d(Ax) for invertible rational A, and produce A.

    Three steps: the Hessian determinant of an equivalent form factors as
    c * prod l_i^{d-2} with independent rational forms; the a_i in
    f = sum a_i l_i^d come from a linear solve; their rational d-th roots
    scale the forms into the rows of A.  Acceptances are verified by
    re-expanding P_d(Ax).
    """
    if d not in (3, 4, 5):
        raise ValueError("supported degrees: 3, 4, 5")
    if f.is_zero() or not f.is_homogeneous(d):
        raise NotHomogeneousError(f"input is not homogeneous of degree {d}")
    n = f.n
    if n == 1:
        c = f.coefficient(tuple([d]))
        b = rational_nth_root(c, d)
        if b is None:
            return QEquivalence(False, reason="NoRationalRoot")
        A = QMatrix([[b]])
        return QEquivalence(True, A, (tuple([b]),))

    H = _hessian_det(f, d)
    if H.is_zero():
        return QEquivalence(False, reason="HessianIdenticallyZero")
    try:
        fact = derand_lie_factor(H)
    except FactorizationFailed as exc:
        return QEquivalence(False, reason=f"HessianFactorization:{exc.reason.value}")
    if len(fact.forms) != n or any(a != d - 2 for a in fact.exponents):
        return QEquivalence(False, reason="HessianShape")
    L = QMatrix(list(fact.forms))
    if linalg.rank(L) != n:
        return QEquivalence(False, reason="HessianFormsDependent")

    powers = [SparsePoly.linear_form(w) ** d for w in fact.forms]
    support = sorted({e for p in powers for e in p.terms} | set(f.terms))
    M = QMatrix([[p.coefficient(e) for p in powers] for e in support])
    b = [f.coefficient(e) for e in support]
    a = linalg.solve(M, b)
    if a is None:
        return QEquivalence(False, reason="NoRepresentation")
    rows = []
    forms = []
    for ai, w in zip(a, fact.forms):
        bi = rational_nth_root(ai, d) if ai != 0 else None
        if bi is None or bi == 0:
            return QEquivalence(False, reason="NoRationalRoot")
        row = tuple(bi * c for c in w)
        rows.append(list(row))
        forms.append(row)
    A = QMatrix(rows)
    pd = SparsePoly(n, {tuple(d if j == i else 0 for j in range(n)): QONE for i in range(n)})
    if substitute(pd, A) != f:
        return QEquivalence(False, reason="VerificationFailed")
    return QEquivalence(True, A, tuple(forms))
