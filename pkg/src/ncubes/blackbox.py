"""Black-box access to polynomials: evaluation only.

BlackBoxPoly wraps either an expanded SparsePoly (with an integer fast
path: coefficients cleared to a common denominator once, evaluation done
over Z) or an arbitrary evaluation function.  Partial-derivative black
boxes come from exact Lagrange interpolation along axis lines: f restricted
to x + t*e_i is a univariate polynomial of degree <= deg f, so its
derivative at t = 0 is a fixed rational combination of the values at
t = 0..deg f.
"""

from __future__ import annotations

from math import lcm
from typing import Callable

from . import kernels
from .poly import SparsePoly, eval_poly
from .rational import Q, QZERO, q


class BlackBoxPoly:
    """Exact evaluation access to an n-variable polynomial of known degree."""

    def __init__(self, n: int, degree: int, fn: Callable, int_data=None):
        self.n = n
        self.degree = degree
        self._fn = fn
        self._int_data = int_data  # (coeffs, exps_flat, den) or None

    @classmethod
    def from_sparse(cls, f: SparsePoly) -> "BlackBoxPoly":
        den = 1
        for c in f.terms.values():
            den = lcm(den, int(c.denominator))
        coeffs = []
        exps: list[int] = []
        for e, c in f.sorted_terms():
            coeffs.append(int(c.numerator) * (den // int(c.denominator)))
            exps.extend(e)
        int_data = (coeffs, exps, den)

        def fn(point):
            return eval_poly(f, point)

        return cls(f.n, f.total_degree(), fn, int_data)

    @classmethod
    def from_function(cls, fn: Callable, n: int, degree: int) -> "BlackBoxPoly":
        return cls(n, degree, fn)

    def eval(self, point):
        if self._int_data is not None and all(isinstance(v, int) for v in point):
            coeffs, exps, den = self._int_data
            return q(kernels.eval_terms(coeffs, exps, self.n, list(point)), den)
        return self._fn(point)

    __call__ = eval

    def eval_many(self, points):
        """Evaluate at a list of points; batches the integer fast path."""
        if self._int_data is not None and all(
            isinstance(v, int) for p in points for v in p
        ):
            coeffs, exps, den = self._int_data
            flat: list[int] = []
            for p in points:
                flat.extend(p)
            vals = kernels.eval_terms_many(coeffs, exps, self.n, flat)
            return [q(v, den) for v in vals]
        return [self._fn(p) for p in points]


def _lagrange_derivative_weights(degree: int) -> list:
    """Weights w_t with g'(0) = sum_t w_t g(t) for any univariate g of
    degree <= degree, nodes t = 0..degree."""
    nodes = list(range(degree + 1))
    weights = []
    for t in nodes:
        others = [u for u in nodes if u != t]
        dent = 1
        for u in others:
            dent *= t - u
        dn = 0
        for v in others:
            prod = 1
            for u in others:
                if u != v:
                    prod *= -u
            dn += prod
        weights.append(q(dn, dent))
    return weights


def derivative_blackbox(f: BlackBoxPoly, i: int, degree: int | None = None) -> BlackBoxPoly:
    """Black box for df/dx_i, from degree+1 evaluations per query point."""
    d = f.degree if degree is None else degree
    if d < 1:
        return BlackBoxPoly.from_function(lambda point: QZERO, f.n, 0)
    weights = _lagrange_derivative_weights(d)

    def fn(point):
        total = QZERO
        for t, w in enumerate(weights):
            if w == 0:
                continue
            shifted = tuple(
                v + t if k == i else v for k, v in enumerate(point)
            )
            total = total + w * f.eval(shifted)
        return total

    return BlackBoxPoly.from_function(fn, f.n, max(d - 1, 0))


def gradient_blackboxes(f: BlackBoxPoly, degree: int | None = None) -> list[BlackBoxPoly]:
    return [derivative_blackbox(f, i, degree) for i in range(f.n)]
