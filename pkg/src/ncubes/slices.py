"""Symmetric slices of cubic forms and their transformation law.

A cubic form f in n variables has a unique symmetric tensor T with
f = sum_{i,j,k} T_ijk x_i x_j x_k; the i-th slice is the symmetric matrix
(T_i)_{jk} = T_{ijk}, and 6*T_ijk is the third partial of f.  Under a
change of variables h(x) = f(Ax), the slices transform as

    T_k = A^T D_k A,   D_k = sum_i a_{ik} S_i

which the decision algorithms use instead of expanding f(Ax); substitute()
keeps the expansion path alive as an independent oracle.

The symbolic pencil 6*(x_1 T_1 + ... + x_n T_n) is the Hessian matrix of f.
"""

from __future__ import annotations

from math import factorial

from .errors import NotCubicError, SymmetryError
from .poly import SparsePoly, poly_matrix_det
from .qmatrix import QMatrix
from .rational import Q, QZERO, q


class CubicSlices:
    __slots__ = ("n", "slices")

    def __init__(self, slices):
        slices = tuple(slices)
        if not slices:
            raise ValueError("need at least one slice")
        n = len(slices)
        for S in slices:
            if not isinstance(S, QMatrix) or S.rows != n or S.cols != n:
                raise ValueError(f"expected {n} symmetric {n}x{n} matrices")
            if not S.is_symmetric():
                raise SymmetryError("slice is not symmetric")
        # with each slice symmetric, the transpositions (i j) generate the
        # full index symmetry, so i < j against every k suffices
        for i in range(n):
            for jj in range(i + 1, n):
                for k in range(n):
                    if slices[i][jj, k] != slices[jj][i, k]:
                        raise SymmetryError(
                            f"tensor symmetry broken at indices ({i},{jj},{k})"
                        )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "slices", slices)

    def __setattr__(self, *_):
        raise AttributeError("CubicSlices is immutable")

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.slices)

    def __getitem__(self, k: int) -> QMatrix:
        return self.slices[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, CubicSlices) and self.slices == other.slices

    def __repr__(self) -> str:
        return f"CubicSlices(n={self.n})"


def slices_of(f: SparsePoly) -> CubicSlices:
    """Slices of a homogeneous cubic (the zero polynomial gives zero slices)."""
    n = f.n
    if n < 1:
        raise NotCubicError("need at least one variable")
    if not f.is_zero() and not f.is_homogeneous(3):
        raise NotCubicError("polynomial is not a homogeneous cubic")
    T = [[[QZERO] * n for _ in range(n)] for _ in range(n)]
    for e, c in f.terms.items():
        idx = []
        for i, ei in enumerate(e):
            idx.extend([i] * ei)
        a, b, d = idx
        mult = 1
        for ei in e:
            mult *= factorial(ei)
        val = c * q(mult, 6)
        seen = set()
        for p, r, s in ((a, b, d), (a, d, b), (b, a, d), (b, d, a), (d, a, b), (d, b, a)):
            if (p, r, s) not in seen:
                T[p][r][s] = val
                seen.add((p, r, s))
    return CubicSlices([QMatrix(T[i]) for i in range(n)])


def form_from_slices(T: CubicSlices) -> SparsePoly:
    """The cubic with tensor T; inverse of slices_of."""
    n = T.n
    terms = {}
    for i in range(n):
        for jj in range(i, n):
            for k in range(jj, n):
                val = T.slices[i][jj, k]
                if val == 0:
                    continue
                e = [0] * n
                e[i] += 1
                e[jj] += 1
                e[k] += 1
                mult = 1
                for ei in e:
                    mult *= factorial(ei)
                terms[tuple(e)] = val * q(6, mult)
    return SparsePoly(n, terms)


def substitute(f: SparsePoly, A: QMatrix) -> SparsePoly:
    """Exact expansion of f(Ay): variable x_i becomes the linear form given
    by row i of A, in A.cols new variables.  Works for any degree."""
    if A.rows != f.n:
        raise ValueError(f"matrix has {A.rows} rows, polynomial has {f.n} variables")
    k = A.cols
    rows = [SparsePoly.linear_form(A.row(i)) for i in range(f.n)]
    pow_cache: dict[tuple[int, int], SparsePoly] = {}

    def row_power(i: int, e: int) -> SparsePoly:
        key = (i, e)
        if key not in pow_cache:
            pow_cache[key] = rows[i] ** e
        return pow_cache[key]

    out = SparsePoly.zero(k)
    for e, c in f.terms.items():
        term = SparsePoly.constant(k, c)
        for i, ei in enumerate(e):
            if ei:
                term = term * row_power(i, ei)
        out = out + term
    return out


def transformed_slices(S: CubicSlices, A: QMatrix) -> CubicSlices:
    """Slices of f(Ax) from the slices S of f: T_k = A^T D_k A with
    D_k = sum_i a_{ik} S_i."""
    n = S.n
    if A.rows != n or A.cols != n:
        raise ValueError("change of variables must be square of matching size")
    out = []
    for k in range(n):
        D = QMatrix.zeros(n, n)
        for i in range(n):
            a = A[i, k]
            if a != 0:
                D = D + S.slices[i] * a
        out.append(D.congruence(A))
    return CubicSlices(out)


class SlicePencil:
    """The symbolic matrix 6*(x_1 T_1 + ... + x_n T_n), i.e. the Hessian."""

    def __init__(self, S: CubicSlices):
        self.slices = S

    def at(self, point) -> QMatrix:
        n = self.slices.n
        vals = [Q(v) for v in point]
        if len(vals) != n:
            raise ValueError("point dimension mismatch")
        out = QMatrix.zeros(n, n)
        for k in range(n):
            if vals[k] != 0:
                out = out + self.slices.slices[k] * vals[k]
        return out * 6

    def det_poly(self) -> SparsePoly:
        """det of the pencil as a polynomial in x_1..x_n (degree n)."""
        n = self.slices.n
        rows = []
        for i in range(n):
            row = []
            for jj in range(n):
                coeffs = [6 * self.slices.slices[k][i, jj] for k in range(n)]
                row.append(SparsePoly.linear_form(coeffs))
            rows.append(row)
        return poly_matrix_det(rows)


def hessian_as_slice_pencil(S: CubicSlices) -> SlicePencil:
    return SlicePencil(S)
