"""Sparse multivariate and dense univariate polynomials over Q.

SparsePoly maps exponent tuples (one entry per variable) to nonzero rational
coefficients; the zero polynomial is the empty map.  Variables are written
x1..xn in every textual format.  Canonical term order is graded
lexicographic, highest first, so serialization is deterministic.

The accepted grammar (whitespace anywhere):

    poly   ::= term (("+" | "-") term)*        a leading sign is allowed
    term   ::= coeff? factor*                   at least one of the two
    coeff  ::= integer | integer "/" integer
    factor ::= "x" k ("^" e)?                   k >= 1, e >= 0

Example: "2 x1^3 - 6 x1 x2^2".  The JSON form is
{"n": n, "terms": [{"c": "p/q", "e": [e1, ..., en]}, ...]}.

UniPoly is a dense univariate polynomial, coefficients lowest-degree first
with trailing zeros stripped; it backs characteristic polynomials, Sturm
chains and interpolation.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

from .errors import ParseError
from .rational import Q, QONE, QZERO, format_rational, parse_rational, q

Exponent = tuple[int, ...]


def _grlex_key(e: Exponent):
    # Sort key for "highest term first": larger degree first, then
    # lexicographically larger exponent tuple first.
    return (-sum(e), tuple(-k for k in e))


class SparsePoly:
    """Immutable sparse polynomial in n variables over Q."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, object] | Iterable = ()):
        if n < 0:
            raise ValueError("variable count must be >= 0")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, object] = {}
        for e, c in items:
            e = tuple(int(k) for k in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            c = Q(c)
            if c == 0:
                continue
            if e in clean:
                raise ValueError(f"duplicate exponent {e}")
            clean[e] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, c) -> "SparsePoly":
        return cls(n, {(0,) * n: Q(c)})

    @classmethod
    def variable(cls, n: int, i: int) -> "SparsePoly":
        """The polynomial x_{i+1} (i is a 0-based index)."""
        if not 0 <= i < n:
            raise ValueError(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): QONE})

    @classmethod
    def monomial(cls, n: int, e: Exponent, c=1) -> "SparsePoly":
        return cls(n, {tuple(e): Q(c)})

    @classmethod
    def linear_form(cls, coeffs) -> "SparsePoly":
        """Sum of c_i * x_{i+1} for a coefficient vector."""
        coeffs = list(coeffs)
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = Q(c)
        return cls(n, terms)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: int) -> bool:
        """True when every term has degree exactly d (vacuously for 0)."""
        return all(sum(e) == d for e in self.terms)

    def coefficient(self, e: Exponent):
        return self.terms.get(tuple(e), QZERO)

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        """Terms in canonical (graded-lex, highest first) order."""
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]))

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i in range(self.n) if e[i] > 0}

    # -- arithmetic ----------------------------------------------------

    def _require_same_n(self, other: "SparsePoly"):
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._require_same_n(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, QZERO) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return SparsePoly(self.n, out)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.n, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            self._require_same_n(other)
            out: dict[Exponent, object] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    s = out.get(e, QZERO) + ca * cb
                    if s == 0:
                        out.pop(e, None)
                    else:
                        out[e] = s
            return SparsePoly(self.n, out)
        c = Q(other)
        return SparsePoly(self.n, {e: v * c for e, v in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        out = SparsePoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"SparsePoly({self.n}, {poly_to_str(self)!r})"

    def __str__(self) -> str:
        return poly_to_str(self)


def eval_poly(f: SparsePoly, point) -> object:
    """Exact value of f at a rational point (any length-n sequence)."""
    pt = list(point)
    if len(pt) != f.n:
        raise ValueError(f"point has {len(pt)} coordinates, expected {f.n}")
    total = QZERO
    for e, c in f.terms.items():
        v = c
        for x, k in zip(pt, e):
            if k:
                v = v * Q(x) ** k
        total = total + v
    return total


def partial_derivative(f: SparsePoly, i: int) -> SparsePoly:
    """d f / d x_{i+1} (i is a 0-based variable index)."""
    if not 0 <= i < f.n:
        raise ValueError(f"variable index {i} out of range for n={f.n}")
    out: dict[Exponent, object] = {}
    for e, c in f.terms.items():
        k = e[i]
        if k == 0:
            continue
        d = list(e)
        d[i] = k - 1
        out[tuple(d)] = c * k
    return SparsePoly(f.n, out)


def gradient(f: SparsePoly) -> list[SparsePoly]:
    return [partial_derivative(f, i) for i in range(f.n)]


# -- text format -------------------------------------------------------

_TOKEN = re.compile(r"(?P<int>\d+)|x(?P<idx>\d+)|(?P<op>[+\-/^])|(?P<bad>\S)")


def _lex(text: str):
    for m in _TOKEN.finditer(text):
        if m.lastgroup == "bad":
            raise ParseError(f"unexpected character {m.group()!r}")
        yield m.lastgroup, m.group(m.lastgroup)
    yield "end", ""


def parse_poly(text: str, n: int | None = None) -> SparsePoly:
    """Parse the textual grammar; n is inferred from the largest index seen
    unless given explicitly (then indices beyond n are an error)."""
    toks = list(_lex(text.replace("−", "-")))
    pos = 0

    def peek():
        return toks[pos]

    def advance():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    raw_terms: list[tuple[object, dict[int, int]]] = []
    max_idx = 0
    sign = 1
    kind, val = peek()
    if kind == "op" and val in "+-":
        advance()
        sign = -1 if val == "-" else 1
    while True:
        coeff = QONE
        exps: dict[int, int] = {}
        seen = False
        kind, val = peek()
        if kind == "int":
            advance()
            p = int(val)
            kind, _ = peek()
            if kind == "op" and toks[pos][1] == "/":
                advance()
                kind, val = advance()
                if kind != "int":
                    raise ParseError("expected an integer after '/'")
                if int(val) == 0:
                    raise ParseError("zero denominator")
                coeff = q(p, int(val))
            else:
                coeff = q(p)
            seen = True
        while peek()[0] == "idx":
            _, val = advance()
            idx = int(val)
            if idx < 1:
                raise ParseError("variables are x1, x2, ...; got x0")
            e = 1
            if peek() == ("op", "^"):
                advance()
                kind, val = advance()
                if kind != "int":
                    raise ParseError("expected an integer exponent after '^'")
                e = int(val)
            exps[idx - 1] = exps.get(idx - 1, 0) + e
            max_idx = max(max_idx, idx)
            seen = True
        if not seen:
            raise ParseError("empty term")
        raw_terms.append((coeff * sign, exps))
        kind, val = advance()
        if kind == "end":
            break
        if kind != "op" or val not in "+-":
            raise ParseError(f"expected '+' or '-', got {val!r}")
        sign = -1 if val == "-" else 1

    if n is None:
        n = max_idx
    elif max_idx > n:
        raise ParseError(f"polynomial uses x{max_idx} but n={n}")
    acc: dict[Exponent, object] = {}
    for c, exps in raw_terms:
        e = [0] * n
        for i, k in exps.items():
            e[i] = k
        e = tuple(e)
        s = acc.get(e, QZERO) + c
        if s == 0:
            acc.pop(e, None)
        else:
            acc[e] = s
    return SparsePoly(n, acc)


def _format_monomial(e: Exponent) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x{i + 1}")
        elif k > 1:
            parts.append(f"x{i + 1}^{k}")
    return " ".join(parts)


def poly_to_str(f: SparsePoly) -> str:
    """Canonical rendering; parse_poly(poly_to_str(f), f.n) == f."""
    if f.is_zero():
        return "0"
    chunks = []
    for idx, (e, c) in enumerate(f.sorted_terms()):
        mono = _format_monomial(e)
        mag = c if c > 0 else -c
        coeff = format_rational(mag)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{coeff} {mono}"
        else:
            body = coeff
        if idx == 0:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def poly_to_json(f: SparsePoly) -> dict:
    return {
        "n": f.n,
        "terms": [
            {"c": format_rational(c), "e": list(e)} for e, c in f.sorted_terms()
        ],
    }


def poly_from_json(obj: dict) -> SparsePoly:
    try:
        n = int(obj["n"])
        items = []
        for t in obj["terms"]:
            items.append((tuple(int(k) for k in t["e"]), parse_rational(t["c"])))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad polynomial object: {exc}") from exc
    try:
        return SparsePoly(n, items)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# -- dense univariate polynomials ---------------------------------------


class UniPoly:
    """Dense univariate polynomial over Q, coefficients lowest-degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with degree(0) = -1 by convention."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return QZERO
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else QZERO

    def __iter__(self) -> Iterator:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if self.is_zero() or other.is_zero():
                return UniPoly.zero()
            out = [QZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UniPoly(out)
        c = Q(other)
        return UniPoly(tuple(v * c for v in self.coeffs))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly((QONE,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UniPoly((QZERO,) * k + self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def __call__(self, x):
        acc = QZERO
        for c in reversed(self.coeffs):
            acc = acc * Q(x) + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return UniPoly(tuple(c / lead for c in self.coeffs))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Exact euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.lc()
        quo = [QZERO] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lead
            quo[k - d] = f
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] = rem[k - d + j] - f * b
        return UniPoly(quo), UniPoly(rem)

    def to_int_coeffs(self) -> tuple[list[int], int]:
        """(integer coefficient list, positive denominator D) with self = list/D."""
        if self.is_zero():
            return [], 1
        den = 1
        for c in self.coeffs:
            d = int(c.denominator)
            den = den * d // _gcd(den, d)
        return [int(c * den) for c in self.coeffs], den

    @classmethod
    def from_int_coeffs(cls, coeffs, den: int = 1) -> "UniPoly":
        return cls(tuple(q(c, den) for c in coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            term = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k > 0 and c == 1:
                parts.append(term)
            elif k == 0:
                parts.append(format_rational(c))
            else:
                parts.append(f"{format_rational(c)} {term}")
        return "UniPoly(" + " + ".join(parts) + ")"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def divide_by_linear_form(f: SparsePoly, w) -> SparsePoly | None:
    """Exact quotient f / <w, x>, or None when the form does not divide f.

    Long division with the first nonzero coordinate of w as the leading
    variable: each step cancels a term of maximal degree in that variable,
    producing only terms of strictly smaller such degree, so the loop
    terminates; a nonzero remainder free of the leading variable certifies
    non-divisibility.
    """
    coeffs = [Q(c) for c in w]
    if len(coeffs) != f.n:
        raise ValueError("form length must match variable count")
    lead = next((i for i, c in enumerate(coeffs) if c != 0), None)
    if lead is None:
        raise ValueError("zero form")
    if f.is_zero():
        return f
    wl = coeffs[lead]
    rem = dict(f.terms)
    quo: dict[Exponent, object] = {}
    while rem:
        # term with the highest exponent in the lead variable, grlex tie-break
        e = min(rem, key=lambda ex: (-ex[lead],) + tuple(_grlex_key(ex)))
        if e[lead] == 0:
            return None
        c = rem.pop(e)
        qe = list(e)
        qe[lead] -= 1
        qe = tuple(qe)
        qc = c / wl
        quo[qe] = quo.get(qe, QZERO) + qc
        for j, wj in enumerate(coeffs):
            if j == lead or wj == 0:
                continue
            te = list(qe)
            te[j] += 1
            te = tuple(te)
            nv = rem.get(te, QZERO) - qc * wj
            if nv == 0:
                rem.pop(te, None)
            else:
                rem[te] = nv
    return SparsePoly(f.n, quo)


def poly_matrix_det(rows: list[list[SparsePoly]]) -> SparsePoly:
    """Determinant of a small matrix of polynomials, by minor expansion.

    Division-free, so it works over the polynomial ring directly; intended
    for pencil/Hessian determinants at the handful-of-variables scale.
    """
    m = len(rows)
    if m == 0:
        raise ValueError("empty matrix")
    n_vars = rows[0][0].n
    if any(len(r) != m for r in rows):
        raise ValueError("matrix is not square")
    if m == 1:
        return rows[0][0]
    # Expand along the column with the most zero entries to curb blowup.
    zeros = [sum(1 for i in range(m) if rows[i][j].is_zero()) for j in range(m)]
    col = zeros.index(max(zeros))
    det = SparsePoly.zero(n_vars)
    for i in range(m):
        entry = rows[i][col]
        if entry.is_zero():
            continue
        minor = [
            [rows[r][c] for c in range(m) if c != col] for r in range(m) if r != i
        ]
        term = entry * poly_matrix_det(minor)
        det = det + term if (i + col) % 2 == 0 else det - term
    return det
