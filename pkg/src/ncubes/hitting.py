"""Hitting sets and black-box PIT for sums of powers of independent forms.

Three constructions:

  - moment_points(n, count): gamma(t) = (1, t, ..., t^{n-1}), t = 1..count.
    Any p hyperplanes intersect the moment curve in at most (n-1)p points,
    so (n-1)p + 1 of these always avoid all p of them.

  - equivalence_hitting_set(n, d): the grid set G.  Every form equivalent
    to P_d = x_1^d + ... + x_n^d is nonzero somewhere on G: around each
    moment point p, G contains the translated grids p + S_{1,j} where
    S_{1,j} varies coordinates 1 and j over {0..d}.

  - transversal_family(n, r): matrices A with entries alpha^{i*j}
    (i = 1..n, j = 1..r).  For any rank-r L (r x n), det(L A(alpha)) is a
    nonzero polynomial in alpha of degree <= n*r(r+1)/2, so some alpha in a
    set of 1 + n*r(r+1)/2 values gives rank(L A) = r.  (The classical
    constructions achieve a smaller family; this one is self-contained, and
    pit results are certified by an explicit witness anyway.)

pit_sum_of_powers combines them: a sum of powers of r independent forms
composed with a rank-preserving A in k = r variables is again such a sum,
hence nonzero on G(r, d); scanning k = 1..n finds a witness iff f != 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .blackbox import BlackBoxPoly
from .qmatrix import QMatrix


class PointSet:
    """Ordered, duplicate-free list of integer points in Q^n."""

    __slots__ = ("n", "points")

    def __init__(self, n: int, points, sort: bool = False):
        seen = set()
        out = []
        for p in points:
            p = tuple(p)
            if len(p) != n:
                raise ValueError("point dimension mismatch")
            if p not in seen:
                seen.add(p)
                out.append(p)
        if sort:
            out.sort()
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "points", tuple(out))

    def __setattr__(self, *_):
        raise AttributeError("PointSet is immutable")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in set(self.points)

    def __repr__(self) -> str:
        return f"PointSet(n={self.n}, size={len(self.points)})"


def moment_points(n: int, count: int) -> PointSet:
    """gamma(t) for t = 1..count, in t order."""
    if n < 1 or count < 1:
        raise ValueError("need n >= 1 and count >= 1")
    pts = []
    for t in range(1, count + 1):
        p = [1]
        for _ in range(n - 1):
            p.append(p[-1] * t)
        pts.append(tuple(p))
    return PointSet(n, pts)


def equivalence_hitting_set(n: int, d: int) -> PointSet:
    """The grid hitting set G for forms equivalent to P_d, lex ordered.

    For d >= 3 the translates run over n(n-1)+1 moment points; for d <= 2 a
    single (arbitrary) one suffices, gamma(1).  n = 1 is the degenerate
    case where any single nonzero point works; d = 1 (hitting nonzero
    linear forms, used for spans of first partials of quadratics) likewise
    needs just the one translate: the grid differences span everything.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n == 1:
        return PointSet(1, [(1,)])
    if d <= 2:
        base = moment_points(n, 1)
    else:
        base = moment_points(n, n * (n - 1) + 1)
    coords = range(d + 1)
    pts = []
    for p in base:
        for j in range(1, n):
            for a in coords:
                for b in coords:
                    v = list(p)
                    v[0] += a
                    v[j] += b
                    pts.append(tuple(v))
    return PointSet(n, pts, sort=True)


class TransversalFamily:
    """Integer n x r matrices such that any rank-r L (r x n) keeps rank r
    against at least one member."""

    __slots__ = ("n", "r", "matrices")

    def __init__(self, n: int, r: int, matrices):
        matrices = tuple(matrices)
        for A in matrices:
            if A.rows != n or A.cols != r:
                raise ValueError("family matrices must be n x r")
            if linalg.rank(A) != r:
                raise ValueError("family matrix is rank deficient")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "matrices", matrices)

    def __setattr__(self, *_):
        raise AttributeError("TransversalFamily is immutable")

    def __len__(self) -> int:
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def __getitem__(self, k: int) -> QMatrix:
        return self.matrices[k]


def transversal_family(n: int, r: int) -> TransversalFamily:
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    if r == n:
        return TransversalFamily(n, r, [QMatrix.identity(n)])
    degree_bound = n * r * (r + 1) // 2
    mats = []
    for alpha in range(2, degree_bound + 3):
        rows = [[alpha ** (i * j) for j in range(1, r + 1)] for i in range(1, n + 1)]
        mats.append(QMatrix(rows))
    return TransversalFamily(n, r, mats)


@dataclass(frozen=True)
class PitResult:
    is_zero: bool
    witness: tuple | None
    evaluations: int

    def __bool__(self) -> bool:
        # truthy when a nonzero witness exists
        return not self.is_zero


def _apply_int(A: QMatrix, y) -> tuple:
    """A @ y for an integer matrix and integer point, staying in int."""
    return tuple(
        sum(int(A[i, j]) * y[j] for j in range(A.cols)) for i in range(A.rows)
    )


def pit_sum_of_powers(
    f: BlackBoxPoly, n: int, d: int, threads: int = 1, batch: int = 64
) -> PitResult:
    """Decide whether f (a sum of powers of linearly independent forms, by
    promise) is identically zero; a NonZero answer carries the first
    witnessing point in the fixed enumeration order."""
    evaluations = 0
    for k in range(1, n + 1):
        grid = equivalence_hitting_set(k, d)
        for A in transversal_family(n, k):
            pts = [_apply_int(A, y) for y in grid]
            for lo in range(0, len(pts), batch):
                chunk = pts[lo : lo + batch]
                vals = _eval_chunk(f, chunk, threads)
                evaluations += len(chunk)
                for p, v in zip(chunk, vals):
                    if v != 0:
                        return PitResult(False, p, evaluations)
    return PitResult(True, None, evaluations)


def _eval_chunk(f: BlackBoxPoly, chunk, threads: int):
    if threads > 1 and len(chunk) > 1:
        from concurrent.futures import ThreadPoolExecutor

        step = (len(chunk) + threads - 1) // threads
        parts = [chunk[i : i + step] for i in range(0, len(chunk), step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            out = []
            for part_vals in pool.map(f.eval_many, parts):
                out.extend(part_vals)
            return out
    return f.eval_many(chunk)


def pit_hitting_points(n: int, d: int) -> PointSet:
    """Every point pit_sum_of_powers would query, deduplicated and lex
    sorted: a hitting set for the whole promise class (and for spans of
    partial derivatives of its members, which is how polydep uses it)."""
    pts = []
    for k in range(1, n + 1):
        grid = equivalence_hitting_set(k, d)
        for A in transversal_family(n, k):
            pts.extend(_apply_int(A, y) for y in grid)
    return PointSet(n, pts, sort=True)
