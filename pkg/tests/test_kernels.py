"""Integer kernels: backend agreement and direct sanity checks.

The compiled extension and the pure-Python module must be observationally
identical; when the extension is present every function is compared against
the pure twin on the same random inputs.
"""

import random

import pytest

from ncubes import _kernels_py as pure
from ncubes import kernels


def rand_mat(rng, n, m=None, bits=8):
    m = m or n
    top = 1 << bits
    return [[rng.randint(-top, top) for _ in range(m)] for _ in range(n)]


def rand_poly(rng, deg, bits=8):
    top = 1 << bits
    p = [rng.randint(-top, top) for _ in range(deg)] + [rng.randint(1, top)]
    return p


# === direct checks against first principles ===


def test_mat_det_known():
    assert kernels.mat_det([[2]]) == 2
    assert kernels.mat_det([[1, 2], [3, 4]]) == -2
    assert kernels.mat_det([[1, 2], [2, 4]]) == 0


def test_mat_det_multiplicative():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(1, 4)
        A = rand_mat(rng, n, bits=4)
        B = rand_mat(rng, n, bits=4)
        AB = [
            [sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert kernels.mat_det(AB) == kernels.mat_det(A) * kernels.mat_det(B)


def test_mat_rank_and_kernel_dimensions():
    rng = random.Random(22)
    for _ in range(30):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        A = rand_mat(rng, n, m, bits=3)
        r = kernels.mat_rank(A)
        basis = kernels.mat_kernel(A)
        assert r + len(basis) == m
        for v in basis:
            assert all(
                sum(A[i][j] * v[j] for j in range(m)) == 0 for i in range(n)
            )
            g = 0
            for x in v:
                g = gcd_int(g, abs(x))
            assert g == 1  # primitive integer kernel vectors


def gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def test_charpoly_known():
    # companion facts: charpoly is monic, constant term = (-1)^n det
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(1, 5)
        A = rand_mat(rng, n, bits=5)
        p = kernels.charpoly(A)
        assert len(p) == n + 1 and p[-1] == 1
        assert p[0] == (-1) ** n * kernels.mat_det(A)
        assert p[n - 1] == -sum(A[i][i] for i in range(n))  # trace


def test_poly_gcd_constructed():
    rng = random.Random(24)
    for _ in range(30):
        g = rand_poly(rng, rng.randint(0, 3), bits=3)
        a = rand_poly(rng, rng.randint(0, 3), bits=3)
        b = rand_poly(rng, rng.randint(0, 3), bits=3)
        ga = poly_mul(g, a)
        gb = poly_mul(g, b)
        got = kernels.poly_gcd(ga, gb)
        # gcd must be divisible by the planted primitive factor
        prim = kernels.poly_primitive(list(g))
        assert poly_divides(prim, got)


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return kernels.poly_trim(out)


def poly_divides(d, p):
    # exact division test over Q implemented with integer pseudo-division
    from fractions import Fraction

    rem = [Fraction(c) for c in p]
    dd = [Fraction(c) for c in d]
    while len(rem) >= len(dd) and any(rem):
        q = rem[-1] / dd[-1]
        shift = len(rem) - len(dd)
        for i, c in enumerate(dd):
            rem[shift + i] -= q * c
        while rem and rem[-1] == 0:
            rem.pop()
    return not any(rem)


def test_sturm_chain_root_counts():
    # (x-1)(x-2)(x-3) has 3 real roots; x^2+1 none; x^3-x three
    def count(p):
        chain = kernels.sturm_chain(p)
        return kernels.sign_variations_inf(chain, False) - kernels.sign_variations_inf(
            chain, True
        )

    assert count([-6, 11, -6, 1]) == 3
    assert count([1, 0, 1]) == 0
    assert count([0, -1, 0, 1]) == 3
    assert count([-2, 0, 1]) == 2


def test_eval_terms_matches_direct():
    rng = random.Random(25)
    for _ in range(30):
        n = rng.randint(1, 4)
        terms = rng.randint(1, 6)
        coeffs = [rng.randint(-9, 9) for _ in range(terms)]
        exps = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(terms)]
        flat = [e for tup in exps for e in tup]
        pt = [rng.randint(-5, 5) for _ in range(n)]
        direct = sum(
            c * prod(pt[i] ** e[i] for i in range(n)) for c, e in zip(coeffs, exps)
        )
        assert kernels.eval_terms(coeffs, flat, n, pt) == direct
        many = kernels.eval_terms_many(coeffs, flat, n, pt * 3)
        assert many == [direct] * 3


def prod(it):
    out = 1
    for x in it:
        out *= x
    return out


# === backend agreement ===


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled extension not built")
def test_compiled_matches_pure():
    from ncubes import _kernels as comp

    rng = random.Random(26)
    for trial in range(150):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        bits = rng.choice([3, 8, 40])
        A = rand_mat(rng, n, m, bits=bits)
        assert comp.mat_echelon([r[:] for r in A]) == pure.mat_echelon(
            [r[:] for r in A]
        )
        assert comp.mat_rank(A) == pure.mat_rank(A)
        assert comp.mat_kernel(A) == pure.mat_kernel(A)
        if n == m:
            assert comp.mat_det(A) == pure.mat_det(A)
            assert comp.charpoly(A) == pure.charpoly(A)
        p = rand_poly(rng, rng.randint(0, 7), bits=bits)
        q = rand_poly(rng, rng.randint(0, 5), bits=bits)
        assert comp.poly_gcd(p, q) == pure.poly_gcd(p, q)
        assert comp.prem_abs(p, q) == pure.prem_abs(p, q)
        assert comp.sturm_chain(p) == pure.sturm_chain(p)
        for at_plus in (False, True):
            assert comp.sign_variations_inf(
                comp.sturm_chain(p), at_plus
            ) == pure.sign_variations_inf(pure.sturm_chain(p), at_plus)
        assert comp.poly_primitive(p) == pure.poly_primitive(p)
        assert comp.poly_deriv(p) == pure.poly_deriv(p)
