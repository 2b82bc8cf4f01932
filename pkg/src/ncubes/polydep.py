"""Linear dependencies among polynomials; essential variables.

The dependency space of f_1..f_m is f^perp = {v : sum v_j f_j = 0}.  For
black boxes the kernel of the evaluation matrix M = (f_j(a_i)) always
contains f^perp; when the points a_i form a hitting set for Span(f) the two
spaces are equal.  For expanded polynomials the dependencies are read off
the coefficient matrix directly.

The number of essential variables of f is t = dim Span(grad f) =
n - dim (grad f)^perp, and an invertible A with kernel vectors of the
gradient dependencies as its last n - t columns turns f into a polynomial
of the first t variables only.
"""

from __future__ import annotations

from . import linalg
from .blackbox import BlackBoxPoly, gradient_blackboxes
from .hitting import PointSet, pit_hitting_points
from .poly import SparsePoly, gradient
from .qmatrix import QMatrix
from .rational import Q, QONE, QZERO
from .slices import substitute

# An evaluation matrix M_ij = f_j(a_i) is an ordinary QMatrix; the name
# records the role.
EvalMatrix = QMatrix


class DependencySpace:
    """Basis of the dependency vectors in Q^m (possibly empty)."""

    __slots__ = ("m", "basis")

    def __init__(self, m: int, basis):
        basis = tuple(tuple(Q(x) for x in v) for v in basis)
        if any(len(v) != m for v in basis):
            raise ValueError("dependency vector length mismatch")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, *_):
        raise AttributeError("DependencySpace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)


def eval_matrix(fs, points: PointSet) -> QMatrix:
    """M_ij = f_j(a_i) for the black boxes f_j and points a_i."""
    cols = [f.eval_many(list(points)) for f in fs]
    return QMatrix([[cols[j][i] for j in range(len(fs))] for i in range(len(points))])


def polydep_basis(fs, points: PointSet) -> DependencySpace:
    """Kernel of the evaluation matrix; equals f^perp when the points hit
    Span(fs) (the caller supplies an adequate set)."""
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one polynomial")
    if any(f.n != fs[0].n for f in fs):
        raise ValueError("polynomials disagree on the number of variables")
    if len(points) == 0:
        raise ValueError("need at least one evaluation point")
    return DependencySpace(len(fs), linalg.kernel_basis(eval_matrix(fs, points)))


def coefficient_dependencies(fs) -> DependencySpace:
    """Dependencies of expanded polynomials from their coefficient matrix."""
    fs = list(fs)
    if not fs:
        raise ValueError("need at least one polynomial")
    support = sorted({e for f in fs for e in f.terms})
    if not support:
        # all zero: every vector is a dependency
        m = len(fs)
        eye = [[QONE if i == j else QZERO for j in range(m)] for i in range(m)]
        return DependencySpace(m, eye)
    rows = [[f.coefficient(e) for f in fs] for e in support]
    return DependencySpace(len(fs), linalg.kernel_basis(QMatrix(rows)))


def essential_variable_count(f) -> int:
    """t = n - dim (grad f)^perp.

    SparsePoly: exact dense path.  BlackBoxPoly: derandomized path querying
    the degree-(d-1) PIT hitting set; correct for sums of powers of
    independent forms (every combination of the partials is again one)."""
    if isinstance(f, SparsePoly):
        if f.is_zero():
            return 0
        return f.n - coefficient_dependencies(gradient(f)).dim
    d = f.degree
    if d < 1:
        return 0
    points = pit_hitting_points(f.n, max(d - 1, 1))
    grads = gradient_blackboxes(f)
    return f.n - polydep_basis(grads, points).dim


def minimize_variables(f: SparsePoly) -> tuple[QMatrix, SparsePoly]:
    """Invertible A and g = f(Ax) such that g mentions only x_1..x_t, for
    t the essential variable count.  Last n - t columns of A span the
    gradient dependency space; the first t complete them with standard
    basis vectors (Steinitz, in index order)."""
    n = f.n
    if f.is_zero():
        return QMatrix.identity(n), f
    kernel_vecs = [list(v) for v in coefficient_dependencies(gradient(f)).basis]
    t = n - len(kernel_vecs)
    chosen: list[list] = []
    base_rank = len(kernel_vecs)
    for i in range(n):
        if len(chosen) == t:
            break
        cand = [QONE if j == i else QZERO for j in range(n)]
        stack = chosen + [cand] + kernel_vecs
        if linalg.rank(QMatrix(stack)) > base_rank + len(chosen):
            chosen.append(cand)
    cols = chosen + kernel_vecs
    A = QMatrix([[cols[j][i] for j in range(n)] for i in range(n)])
    g = substitute(f, A)
    spurious = g.variables_used() - set(range(t))
    assert not spurious, f"minimized form still uses variables {spurious}"
    return A, g
