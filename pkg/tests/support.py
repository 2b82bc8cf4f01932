"""Shared generators and oracles for the test suite.

Everything here is independent of the decision procedures under test:
instance generators are their own witnesses (built from an explicit change
of variables or an explicit sum of powers), and rejection oracles rest on
classical facts checked by direct computation (binary-cubic discriminant,
gradient-span rank, Hessian factor structure fixed by construction).
"""

from __future__ import annotations

import random

from ncubes import (
    QMatrix,
    SparsePoly,
    det,
    partial_derivative,
    rank,
    substitute,
)
from ncubes.poly import poly_matrix_det
from ncubes.rational import Q, QONE, QZERO

# === random matrices and forms ===


def random_matrix(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> QMatrix:
    return QMatrix.from_rows(
        [[Q(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
    )


def random_invertible(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> QMatrix:
    while True:
        M = random_matrix(rng, n, lo, hi)
        if det(M) != 0:
            return M


def power_sum(n: int, d: int) -> SparsePoly:
    """P_d = x_1^d + ... + x_n^d."""
    return SparsePoly(
        n, {tuple(d if j == i else 0 for j in range(n)): QONE for i in range(n)}
    )


def scaled_power_sum(rng: random.Random, n: int, d: int, cmax: int = 5) -> SparsePoly:
    """sum alpha_i x_i^d with every alpha_i nonzero."""
    terms = {}
    for i in range(n):
        c = 0
        while c == 0:
            c = rng.randint(-cmax, cmax)
        terms[tuple(d if j == i else 0 for j in range(n))] = Q(c)
    return SparsePoly(n, terms)


def random_cubic(rng: random.Random, n: int, cmax: int = 5) -> SparsePoly:
    """Random homogeneous cubic, coefficients uniform in [-cmax, cmax]."""

    def exps(k, total):
        if k == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for rest in exps(k - 1, total - head):
                yield (head,) + rest

    terms = {}
    for e in exps(n, 3):
        c = rng.randint(-cmax, cmax)
        if c:
            terms[e] = Q(c)
    return SparsePoly(n, terms)


def random_form(rng: random.Random, n: int, d: int, cmax: int = 3) -> SparsePoly:
    """Random homogeneous degree-d form (dense support, small coefficients)."""

    def exps(k, total):
        if k == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for rest in exps(k - 1, total - head):
                yield (head,) + rest

    terms = {}
    for e in exps(n, d):
        c = rng.randint(-cmax, cmax)
        if c:
            terms[e] = Q(c)
    return SparsePoly(n, terms)


def random_rank_rows(
    rng: random.Random, r: int, n: int, lo: int = -4, hi: int = 4
) -> list[list]:
    """r linearly independent rows of length n."""
    while True:
        rows = [[Q(rng.randint(lo, hi)) for _ in range(n)] for _ in range(r)]
        if rank(QMatrix.from_rows(rows)) == r:
            return rows


def sum_of_powers(rows, coeffs, d: int) -> SparsePoly:
    """sum_i coeffs[i] * <rows[i], x>^d, expanded."""
    n = len(rows[0])
    f = SparsePoly.zero(n)
    for c, row in zip(coeffs, rows):
        f = f + SparsePoly.linear_form([Q(x) for x in row]) ** d * SparsePoly.constant(
            n, Q(c)
        )
    return f


def nonzero_ints(rng: random.Random, k: int, cmax: int = 4) -> list[int]:
    out = []
    for _ in range(k):
        c = 0
        while c == 0:
            c = rng.randint(-cmax, cmax)
        out.append(c)
    return out


def equivalent_cubic(
    rng: random.Random, n: int, lo: int = -5, hi: int = 5, scaled: bool = False
) -> tuple[SparsePoly, QMatrix]:
    """f = P(Ax) for random invertible A; P has nonzero cube coefficients.

    Over both fields this is an honest positive instance: every rational
    scalar has a real (hence complex) cube root, so the scaling folds into
    the decomposition.
    """
    A = random_invertible(rng, n, lo, hi)
    base = scaled_power_sum(rng, n, 3) if scaled else power_sum(n, 3)
    return substitute(base, A), A


# === rejection oracles ===


def binary_cubic_discriminant(f: SparsePoly) -> Q:
    """Discriminant of a x^3 + b x^2 y + c x y^2 + d y^3.

    Decides decomposability of a binary cubic into two cubes of independent
    forms: nonzero discriminant iff decomposable over C (three distinct
    roots), negative iff decomposable over R (one real root, so the complex
    pair furnishes the two real cubes).
    """
    if f.n != 2:
        raise ValueError("binary form expected")
    a = f.coefficient((3, 0))
    b = f.coefficient((2, 1))
    c = f.coefficient((1, 2))
    d = f.coefficient((0, 3))
    return (
        Q(18) * a * b * c * d
        - Q(4) * b**3 * d
        + b**2 * c**2
        - Q(4) * a * c**3
        - Q(27) * a**2 * d**2
    )


def squared_factor_binary(rng: random.Random, cmax: int = 4) -> SparsePoly:
    """(a x1 + b x2)^2 (c x1 + d x2): a binary cubic with zero discriminant."""
    while True:
        a, b, c, d = (rng.randint(-cmax, cmax) for _ in range(4))
        if (a or b) and (c or d):
            ell1 = SparsePoly.linear_form([Q(a), Q(b)])
            ell2 = SparsePoly.linear_form([Q(c), Q(d)])
            return ell1 * ell1 * ell2


def gradient_span_dim(f: SparsePoly) -> int:
    """dim Span(partial derivatives), read off the coefficient matrix.

    Built here from scratch (rank of an explicit coefficient matrix) so the
    essential-variable oracle does not share code with the module under
    test.
    """
    grads = [partial_derivative(f, i) for i in range(f.n)]
    support = sorted({e for g in grads for e in g.terms})
    if not support:
        return 0
    return rank(QMatrix([[g.coefficient(e) for g in grads] for e in support]))


def deficient_cubic(rng: random.Random, n: int) -> SparsePoly:
    """Cubic in n variables whose gradient span has dimension r < n.

    Sum of r cubes of independent forms, hidden by nothing further: the
    generator certifies deficiency, the test re-checks it with
    gradient_span_dim before demanding rejection.
    """
    r = rng.randint(1, n - 1)
    rows = random_rank_rows(rng, r, n)
    return sum_of_powers(rows, nonzero_ints(rng, r), 3)


def hessian_det_direct(f: SparsePoly) -> SparsePoly:
    """det of the matrix of second partials, by symbolic cofactor expansion.

    Independent of the slice-pencil route used inside the library.
    """
    n = f.n
    H = [
        [partial_derivative(partial_derivative(f, i), j) for j in range(n)]
        for i in range(n)
    ]
    return poly_matrix_det(H)


def repeated_hessian_cubic(
    rng: random.Random, n: int
) -> tuple[SparsePoly, SparsePoly]:
    """(f, H_pred): cubic whose Hessian determinant has a squared linear factor.

    Start from f0 = x1^2 x2 + x3^3 + ... + xn^3, whose Hessian determinant
    is -4 x1^2 * prod_{i>=3} 6 x_i (block diagonal), and hide it by an
    invertible A.  Under x -> Ax the Hessian determinant transforms by
    det(A)^2 and composition, so the squared factor survives.  A form that
    IS a sum of n cubes of independent forms has Hessian determinant
    c * l_1 ... l_n with pairwise independent l_i; by unique factorization
    a squared factor is impossible, so these must be rejected.
    """
    terms = {(2, 1) + (0,) * (n - 2): QONE}
    for i in range(2, n):
        terms[tuple(3 if j == i else 0 for j in range(n))] = QONE
    f0 = SparsePoly(n, terms)
    h0 = SparsePoly.monomial(n, (2, 0) + (0,) * (n - 2), Q(-4))
    for i in range(2, n):
        h0 = h0 * SparsePoly.monomial(n, tuple(1 if j == i else 0 for j in range(n)), Q(6))
    A = random_invertible(rng, n, -3, 3)
    f = substitute(f0, A)
    h_pred = substitute(h0, A) * SparsePoly.constant(n, det(A) ** 2)
    return f, h_pred


# === simple rational functions (for the Lambda hitting-set tests) ===


class SimpleRationalFunction:
    """f(x) = sum_i <p_i, x> / <q_i, x>, with NaN where a denominator dies.

    eval returns None for NaN.  numerator() expands
    sum_i p_i * prod_{j != i} q_j, which vanishes identically exactly when
    f vanishes wherever it is defined.
    """

    def __init__(self, pairs):
        self.pairs = [([Q(a) for a in p], [Q(b) for b in q]) for p, q in pairs]
        self.n = len(self.pairs[0][0])

    def eval(self, x):
        total = QZERO
        for p, q in self.pairs:
            den = sum((b * t for b, t in zip(q, x)), QZERO)
            if den == 0:
                return None
            num = sum((a * t for a, t in zip(p, x)), QZERO)
            total = total + num / den
        return total

    def numerator(self) -> SparsePoly:
        n = self.n
        total = SparsePoly.zero(n)
        for i, (p, _) in enumerate(self.pairs):
            term = SparsePoly.linear_form(p)
            for j, (_, q) in enumerate(self.pairs):
                if j != i:
                    term = term * SparsePoly.linear_form(q)
            total = total + term
        return total


def random_srf(rng: random.Random, n: int, m: int, cmax: int = 3) -> SimpleRationalFunction:
    """Random SRF with m terms and nonzero denominators."""
    pairs = []
    for _ in range(m):
        p = [rng.randint(-cmax, cmax) for _ in range(n)]
        q = [0] * n
        while not any(q):
            q = [rng.randint(-cmax, cmax) for _ in range(n)]
        pairs.append((p, q))
    return SimpleRationalFunction(pairs)


def zero_srf(rng: random.Random, n: int, m: int, cmax: int = 3) -> SimpleRationalFunction:
    """Identically zero SRF: p_i = a_i q_i with sum a_i = 0."""
    while True:
        a = [Q(rng.randint(-cmax, cmax)) for _ in range(m - 1)]
        a.append(-sum(a, QZERO))
        if m == 1 and a[0] == 0:
            a = [QZERO]
        pairs = []
        for ai in a:
            q = [0] * n
            while not any(q):
                q = [rng.randint(-cmax, cmax) for _ in range(n)]
            pairs.append(([ai * Q(b) for b in q], q))
        return SimpleRationalFunction(pairs)


# === hyperplane enumeration (moment-curve lemma) ===


def canonical_normals(n: int, cmax: int) -> list[tuple]:
    """Nonzero integer normal vectors with entries in [-cmax, cmax], one per
    hyperplane: gcd-reduced, first nonzero entry positive."""

    def vecs(k):
        if k == 0:
            yield ()
            return
        for head in range(-cmax, cmax + 1):
            for rest in vecs(k - 1):
                yield (head,) + rest

    from math import gcd

    seen = set()
    for v in vecs(n):
        if not any(v):
            continue
        g = 0
        for a in v:
            g = gcd(g, abs(a))
        w = tuple(a // g for a in v)
        lead = next(a for a in w if a)
        if lead < 0:
            w = tuple(-a for a in w)
        seen.add(w)
    return sorted(seen)


def on_hyperplane(normal, point) -> bool:
    return sum((Q(a) * t for a, t in zip(normal, point)), QZERO) == 0
