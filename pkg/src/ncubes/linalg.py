"""Exact linear algebra over Q on top of the integer kernels.

Every operation scales its rational input to an integer matrix (one common
denominator), runs the fraction-free kernel, and undoes the scaling on the
way out:

    rank/kernel     scaling leaves both unchanged
    det             det(M) = det(D*M) / D^n
    char poly       chi_M(x) = sum_k c_k D^{k-n} x^k  for chi_{D*M} = sum c_k x^k
    inverse         M^{-1} = D * (D*M)^{-1}

Inverse and solve do a forward fraction-free elimination on the augmented
matrix and back-substitute over Q; this avoids the divisibility pitfalls of
fraction-free Gauss-Jordan under row swaps.
"""

from __future__ import annotations

from math import lcm

from . import bitmeter as _bm
from . import kernels
from .errors import SingularMatrixError
from .poly import UniPoly
from .qmatrix import QMatrix
from .rational import Q, QONE, QZERO, q


def _scaled_int_rows(M: QMatrix) -> tuple[list[list[int]], int]:
    den = 1
    for row in M.entries:
        for x in row:
            den = lcm(den, int(x.denominator))
    rows = [
        [int(x.numerator) * (den // int(x.denominator)) for x in row]
        for row in M.entries
    ]
    return rows, den


def rank(M: QMatrix) -> int:
    rows, _ = _scaled_int_rows(M)
    return kernels.mat_rank(rows)


def det(M: QMatrix):
    if not M.is_square:
        raise ValueError("determinant of a non-square matrix")
    rows, den = _scaled_int_rows(M)
    return q(kernels.mat_det(rows), den**M.rows)


def kernel_basis(M: QMatrix) -> list[tuple]:
    """Basis of the right null space, as tuples of rationals.

    The vectors come out of the integer kernel primitive (coprime integer
    entries, positive leading entry), which also makes them stable test
    fixtures.
    """
    rows, _ = _scaled_int_rows(M)
    return [tuple(Q(v) for v in vec) for vec in kernels.mat_kernel(rows)]


def _back_substitute(ech, pivots, rhs_cols, ncols_left):
    """Solve E x = b for each b in rhs_cols given an echelon E (full pivot
    data within the first ncols_left columns), free variables set to 0."""
    sols = []
    for b in rhs_cols:
        x = [QZERO] * ncols_left
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            acc = b[k]
            row = ech[k]
            for c in range(pc + 1, ncols_left):
                if row[c] and x[c] != 0:
                    acc = acc - row[c] * x[c]
            x[pc] = acc / Q(row[pc])
        sols.append(tuple(x))
    return sols


def inverse(M: QMatrix) -> QMatrix:
    if not M.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    rows, den = _scaled_int_rows(M)
    aug = [rows[i] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    ech, pivots, _ = kernels.mat_echelon(aug, pivot_limit=n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    rhs_cols = [[Q(ech[k][n + j]) for k in range(n)] for j in range(n)]
    cols = _back_substitute(ech, pivots, rhs_cols, n)
    inv = QMatrix([[cols[j][i] * den for j in range(n)] for i in range(n)])
    if _bm.ACTIVE is not None:
        for row in inv.entries:
            _bm.note_qs(row)
    return inv


def solve(M: QMatrix, b) -> tuple | None:
    """One solution of M x = b (free variables 0), or None if inconsistent."""
    bb = [Q(v) for v in b]
    if len(bb) != M.rows:
        raise ValueError("right-hand side length mismatch")
    den = 1
    for row in M.entries:
        for x in row:
            den = lcm(den, int(x.denominator))
    for x in bb:
        den = lcm(den, int(x.denominator))

    def scaled(x):
        return int(x.numerator) * (den // int(x.denominator))

    aug = [
        [scaled(x) for x in row] + [scaled(bb[i])]
        for i, row in enumerate(M.entries)
    ]
    ech, pivots, _ = kernels.mat_echelon(aug, pivot_limit=M.cols)
    for k in range(len(pivots), M.rows):
        if ech[k][M.cols] != 0:
            return None
    rhs = [[Q(ech[k][M.cols]) for k in range(len(pivots))]]
    # rows beyond the pivot count are consistent zeros; back-substitution
    # only touches the pivot rows
    (x,) = _back_substitute(ech, pivots, rhs, M.cols)
    return x


def char_poly(M: QMatrix) -> UniPoly:
    if not M.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.rows
    rows, den = _scaled_int_rows(M)
    c = kernels.charpoly(rows)
    coeffs = [q(c[k], den ** (n - k)) for k in range(n + 1)]
    if _bm.ACTIVE is not None:
        _bm.note_qs(coeffs)
    return UniPoly(coeffs)


def squarefree_part(p: UniPoly) -> UniPoly:
    """p / gcd(p, p'), monic.  Vanishes exactly on the distinct roots of p."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return UniPoly([QONE])
    ints, _ = p.to_int_coeffs()
    g = kernels.poly_gcd(ints, kernels.poly_deriv(ints))
    quo, rem = UniPoly.from_int_coeffs(ints).divmod(UniPoly.from_int_coeffs(g))
    assert rem.is_zero()
    return quo.monic()


class SturmChain:
    """Sturm chain of p: starts with p, p'; later elements are the negated
    remainders up to positive rational factors (subresultant-style
    pseudo-remainders with primitive-part reduction, computed over Z)."""

    def __init__(self, p: UniPoly):
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        ints, _ = p.to_int_coeffs()
        chain = kernels.sturm_chain(ints)
        polys = [p]
        if len(chain) > 1:
            polys.append(p.derivative())
            polys.extend(UniPoly.from_int_coeffs(c) for c in chain[2:])
        self.polys = tuple(polys)
        self._ints = chain

    def variations_at_infinity(self, positive: bool) -> int:
        return kernels.sign_variations_inf(self._ints, positive)

    def count_distinct_real_roots(self) -> int:
        return self.variations_at_infinity(False) - self.variations_at_infinity(True)


def count_real_roots(p: UniPoly) -> int:
    """Number of distinct real roots, by Sturm sign variations at -inf/+inf."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    if p.degree == 0:
        return 0
    return SturmChain(p).count_distinct_real_roots()


def poly_at_matrix(p: UniPoly, M: QMatrix) -> QMatrix:
    n = M.rows
    out = QMatrix.zeros(n, n)
    eye = QMatrix.identity(n)
    for k in range(p.degree, -1, -1):
        out = out @ M if k < p.degree else out
        c = p[k]
        if c != 0:
            out = out + eye * c
    return out


def is_diagonalizable(M: QMatrix) -> bool:
    """Diagonalizable over the algebraic closure: P_M(M) = 0 for the
    squarefree part P_M of the characteristic polynomial."""
    P = squarefree_part(char_poly(M))
    return poly_at_matrix(P, M).is_zero()


def is_diagonalizable_real(M: QMatrix) -> bool:
    """Diagonalizable with all eigenvalues real (not necessarily rational)."""
    P = squarefree_part(char_poly(M))
    if not poly_at_matrix(P, M).is_zero():
        return False
    return count_real_roots(P) == P.degree


def commute(A: QMatrix, B: QMatrix) -> bool:
    return A @ B == B @ A


class MatrixSubspace:
    """A subspace of M_n(Q) given by a linearly independent basis."""

    def __init__(self, basis):
        basis = list(basis)
        if not basis:
            raise ValueError("empty basis; use MatrixSubspace.trivial(n)")
        n = basis[0].rows
        if any(not B.is_square or B.rows != n for B in basis):
            raise ValueError("basis matrices must be square of equal size")
        stacked = QMatrix([list(B.flatten()) for B in basis])
        if kernels.mat_rank(_scaled_int_rows(stacked)[0]) != len(basis):
            raise ValueError("basis is linearly dependent")
        self.n = n
        self.basis = tuple(basis)

    @classmethod
    def trivial(cls, n: int) -> "MatrixSubspace":
        obj = cls.__new__(cls)
        obj.n = n
        obj.basis = ()
        return obj

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, X: QMatrix) -> bool:
        if X.rows != self.n or X.cols != self.n:
            return False
        if not self.basis:
            return X.is_zero()
        rows = [list(B.flatten()) for B in self.basis]
        base_rank = kernels.mat_rank(_scaled_int_rows(QMatrix(rows))[0])
        rows.append(list(X.flatten()))
        return kernels.mat_rank(_scaled_int_rows(QMatrix(rows))[0]) == base_rank

    def spans_same(self, other: "MatrixSubspace") -> bool:
        if self.n != other.n or self.dim != other.dim:
            return False
        return all(self.contains(B) for B in other.basis)


def centralizer_basis(M: QMatrix) -> MatrixSubspace:
    """Basis of Z(M) = {X : XM = MX}, via the kernel of the vectorized
    commutator map X -> MX - XM on n^2 coordinates (row-major)."""
    n = M.rows
    rows = []
    for i in range(n):
        for jj in range(n):
            row = [QZERO] * (n * n)
            for k in range(n):
                row[k * n + jj] = row[k * n + jj] + M[i, k]
            for l in range(n):
                row[i * n + l] = row[i * n + l] - M[l, jj]
            rows.append(row)
    vecs = kernel_basis(QMatrix(rows))
    mats = [
        QMatrix([[v[k * n + l] for l in range(n)] for k in range(n)]) for v in vecs
    ]
    if not mats:
        return MatrixSubspace.trivial(n)
    return MatrixSubspace(mats)


def is_commuting_quotient(V: MatrixSubspace, A: QMatrix) -> bool:
    """Whether {A^{-1}B : B basis of V} commutes pairwise."""
    Ainv = inverse(A)
    quo = [Ainv @ B for B in V.basis]
    for i in range(len(quo)):
        for j in range(i + 1, len(quo)):
            if not commute(quo[i], quo[j]):
                return False
    return True
