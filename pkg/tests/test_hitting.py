"""Hitting-set generators and the black-box PIT for sums of powers."""

import random

import pytest

from ncubes import parse_poly, substitute
from ncubes.blackbox import (
    BlackBoxPoly,
    derivative_blackbox,
    gradient_blackboxes,
)
from ncubes.hitting import (
    PitResult,
    PointSet,
    TransversalFamily,
    equivalence_hitting_set,
    moment_points,
    pit_hitting_points,
    pit_sum_of_powers,
    transversal_family,
)
from ncubes.linalg import rank
from ncubes.poly import SparsePoly, eval_poly, partial_derivative
from ncubes.qmatrix import QMatrix
from ncubes.rational import Q

from support import (
    canonical_normals,
    on_hyperplane,
    power_sum,
    random_form,
    random_invertible,
    random_rank_rows,
    sum_of_powers,
)

# === PointSet ===


def test_pointset_dedups_and_orders():
    ps = PointSet(2, [(1, 2), (0, 0), (1, 2), (0, 0)])
    assert len(ps) == 2 and list(ps) == [(1, 2), (0, 0)]
    assert (1, 2) in ps and (3, 3) not in ps
    assert list(PointSet(2, [(1, 2), (0, 0)], sort=True)) == [(0, 0), (1, 2)]


def test_pointset_rejects_mixed_dimension():
    with pytest.raises(ValueError):
        PointSet(2, [(1, 2), (1, 2, 3)])


# === moment curve ===


def test_moment_points_small():
    assert list(moment_points(2, 3)) == [(1, 1), (1, 2), (1, 3)]
    assert list(moment_points(3, 2)) == [(1, 1, 1), (1, 2, 4)]
    assert list(moment_points(1, 5)) == [(1,)]  # collapses after dedup
    with pytest.raises(ValueError):
        moment_points(0, 3)


def test_moment_points_avoid_hyperplanes():
    # p hyperplanes meet the curve in <= (n-1)p points, so some of the
    # first (n-1)p + 1 survive
    rng = random.Random(70)
    for _ in range(100):
        n = rng.randint(2, 5)
        p = rng.randint(1, 6)
        normals = []
        while len(normals) < p:
            v = [rng.randint(-4, 4) for _ in range(n)]
            if any(v):
                normals.append(v)
        pts = moment_points(n, (n - 1) * p + 1)
        assert any(
            all(not on_hyperplane(h, pt) for h in normals) for pt in pts
        )


def test_moment_points_avoid_hyperplanes_exhaustive_tiny():
    for h in canonical_normals(2, 2):
        pts = moment_points(2, 2)
        assert any(not on_hyperplane(h, pt) for pt in pts)


# === grid hitting set G ===

# sizes of the construction, locked in once computed
GRID_SIZES = {
    (2, 1): 4,
    (2, 2): 9,
    (2, 3): 24,
    (2, 4): 35,
    (3, 1): 6,
    (3, 2): 15,
    (3, 3): 196,
    (3, 4): 315,
    (4, 3): 520,
    (4, 4): 845,
}


def test_grid_sizes_frozen():
    for (n, d), size in GRID_SIZES.items():
        assert len(equivalence_hitting_set(n, d)) == size, (n, d)


def test_grid_size_bounds():
    # at most (n(n-1)+1) (n-1) (d+1)^2 points before dedup
    for n in (2, 3, 4):
        for d in (3, 4):
            G = equivalence_hitting_set(n, d)
            assert len(G) <= (n * (n - 1) + 1) * (n - 1) * (d + 1) ** 2
    assert len(equivalence_hitting_set(3, 2)) <= 2 * 3**2


def test_grid_degenerate_cases():
    assert list(equivalence_hitting_set(1, 3)) == [(1,)]
    with pytest.raises(ValueError):
        equivalence_hitting_set(2, 0)


def test_grid_is_lex_sorted():
    G = equivalence_hitting_set(3, 3)
    assert list(G) == sorted(G)


def test_grid_hits_equivalent_forms():
    rng = random.Random(71)
    for _ in range(40):
        n = rng.randint(2, 3)
        d = rng.choice([3, 4])
        A = random_invertible(rng, n, -3, 3)
        f = substitute(power_sum(n, d), A)
        G = equivalence_hitting_set(n, d)
        assert any(eval_poly(f, pt) != 0 for pt in G)


def test_grid_hits_nonzero_linear_forms():
    # the d = 1 grid catches every nonzero linear form
    rng = random.Random(72)
    for _ in range(50):
        n = rng.randint(2, 4)
        coeffs = [Q(0)] * n
        while not any(coeffs):
            coeffs = [Q(rng.randint(-5, 5)) for _ in range(n)]
        ell = SparsePoly.linear_form(coeffs)
        assert any(eval_poly(ell, pt) != 0 for pt in equivalence_hitting_set(n, 1))


# === transversal family ===


def test_transversal_identity_when_full_rank():
    fam = transversal_family(3, 3)
    assert len(fam) == 1 and fam[0] == QMatrix.identity(3)


def test_transversal_sizes():
    # 1 + n r(r+1)/2 members when r < n
    assert len(transversal_family(3, 1)) == 4
    assert len(transversal_family(3, 2)) == 10
    assert len(transversal_family(4, 2)) == 13
    assert len(transversal_family(5, 3)) == 31
    for n, r in ((3, 1), (3, 2), (4, 2), (5, 3)):
        assert len(transversal_family(n, r)) == 1 + n * r * (r + 1) // 2


def test_transversal_columns_non_proportional():
    fam = transversal_family(2, 1)
    cols = [(A[0, 0], A[1, 0]) for A in fam]
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            a, b = cols[i], cols[j]
            assert a[0] * b[1] != a[1] * b[0]


def test_transversal_members_full_rank():
    for n, r in ((3, 2), (4, 2), (4, 3), (5, 1)):
        for A in transversal_family(n, r):
            assert A.rows == n and A.cols == r and rank(A) == r


def test_transversal_rejects_deficient_member():
    bad = QMatrix([[1, 2], [2, 4], [3, 6]])
    with pytest.raises(ValueError):
        TransversalFamily(3, 2, [bad])
    with pytest.raises(ValueError):
        transversal_family(3, 4)


def test_transversal_defining_property():
    rng = random.Random(73)
    for _ in range(200):
        n = rng.randint(2, 5)
        r = rng.randint(1, n)
        L = QMatrix(random_rank_rows(rng, r, n))
        assert any(rank(L @ A) == r for A in transversal_family(n, r))


# === black boxes ===


def test_blackbox_matches_sparse_eval():
    rng = random.Random(74)
    for _ in range(20):
        n = rng.randint(1, 3)
        f = random_form(rng, n, rng.randint(1, 4))
        bb = BlackBoxPoly.from_sparse(f)
        assert bb.n == f.n and bb.degree == f.total_degree()
        pts = [tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(5)]
        for p in pts:
            assert bb.eval(p) == eval_poly(f, p)
        assert bb.eval_many(pts) == [eval_poly(f, p) for p in pts]
        # rational points leave the integer fast path
        pr = tuple(Q(rng.randint(-6, 6), 7) for _ in range(n))
        assert bb.eval(pr) == eval_poly(f, pr)


def test_blackbox_from_function():
    bb = BlackBoxPoly.from_function(lambda p: p[0] * p[0] - p[1], 2, 2)
    assert bb((3, 4)) == 5


def test_derivative_blackbox_matches_exact_partials():
    rng = random.Random(75)
    for _ in range(15):
        n = rng.randint(1, 3)
        f = random_form(rng, n, rng.randint(1, 4))
        bb = BlackBoxPoly.from_sparse(f)
        grads = gradient_blackboxes(bb)
        assert len(grads) == n
        for i in range(n):
            df = partial_derivative(f, i)
            for _ in range(4):
                p = tuple(rng.randint(-5, 5) for _ in range(n))
                assert grads[i].eval(p) == eval_poly(df, p)


def test_derivative_blackbox_of_constant_is_zero():
    bb = BlackBoxPoly.from_sparse(SparsePoly.constant(2, Q(7)))
    assert derivative_blackbox(bb, 0).eval((3, 4)) == 0


# === black-box PIT ===


def test_pit_result_truthiness():
    assert bool(PitResult(False, (1, 1), 3))
    assert not bool(PitResult(True, None, 10))


def test_pit_zero_polynomial():
    res = pit_sum_of_powers(BlackBoxPoly.from_sparse(SparsePoly.zero(3)), 3, 3)
    assert res.is_zero and res.witness is None
    # the zero input is the worst case: the whole budget is spent
    assert res.evaluations == 440


def test_pit_single_cube():
    f = BlackBoxPoly.from_sparse(parse_poly("x1^3 + 3 x1^2 x2 + 3 x1 x2^2 + x2^3"))
    res = pit_sum_of_powers(f, 2, 3)
    assert not res.is_zero
    assert res.witness == (2, 4) and res.evaluations == 1
    assert f.eval(res.witness) != 0


def test_pit_power_sums():
    for n in (2, 3):
        for d in (3, 4):
            f = BlackBoxPoly.from_sparse(power_sum(n, d))
            res = pit_sum_of_powers(f, n, d)
            assert not res.is_zero and f.eval(res.witness) != 0


def test_pit_short_sums_of_powers():
    rng = random.Random(76)
    for _ in range(25):
        n = rng.randint(2, 4)
        r = rng.randint(1, n - 1)
        d = rng.choice([2, 3, 4])
        rows = random_rank_rows(rng, r, n)
        coeffs = [Q(rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(r)]
        f = sum_of_powers(rows, coeffs, d)
        res = pit_sum_of_powers(BlackBoxPoly.from_sparse(f), n, d)
        assert not res.is_zero
        assert eval_poly(f, res.witness) != 0
        assert res.witness in pit_hitting_points(n, d)


def test_pit_budget():
    # evaluations never exceed sum_k |family(n,k)| * |G(k,d)|
    for n in (2, 3):
        for d in (3, 4):
            budget = sum(
                len(transversal_family(n, k)) * len(equivalence_hitting_set(k, d))
                for k in range(1, n + 1)
            )
            res = pit_sum_of_powers(BlackBoxPoly.from_sparse(SparsePoly.zero(n)), n, d)
            assert res.evaluations == budget


def test_pit_threads_agree():
    f = BlackBoxPoly.from_sparse(power_sum(3, 3))
    a = pit_sum_of_powers(f, 3, 3, threads=1)
    b = pit_sum_of_powers(f, 3, 3, threads=2, batch=7)
    assert (a.is_zero, a.witness) == (b.is_zero, b.witness)


def test_pit_hitting_points_frozen():
    assert len(pit_hitting_points(2, 3)) == 26
    assert len(pit_hitting_points(3, 3)) == 440
    assert len(pit_hitting_points(3, 4)) == 669
    G = pit_hitting_points(3, 3)
    assert list(G) == sorted(G)
