"""Exact rational scalars.

Everything in this package computes over Q.  The scalar type is gmpy2.mpq
when gmpy2 is importable and fractions.Fraction otherwise; both keep values
gcd-reduced with a positive denominator, which is the canonical form every
other module relies on (zero is 0/1).  Code elsewhere never imports gmpy2 or
Fraction directly: it builds scalars through q() and inspects them through
.numerator / .denominator, so the two backends are interchangeable.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as _mpq

    Q = _mpq
    GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Q

    GMPY2 = False

#: The scalar type used across the package ("p/q", reduced, q > 0).
Rational = Q


def q(num=0, den=1):
    """Build an exact rational num/den (den must be nonzero)."""
    return Q(num, den)


QZERO = q(0)
QONE = q(1)


def parse_rational(text: str):
    """Parse "p" or "p/q" (optional sign, decimal digits) into a rational."""
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        if slash:
            value = Q(int(num), int(den))
        else:
            value = Q(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
    return value


def format_rational(x) -> str:
    """Canonical "p/q" (or "p" when the denominator is 1)."""
    return str(Q(x))


def is_integral(x) -> bool:
    return x.denominator == 1


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def bit_size(x) -> int:
    """Bits of the numerator/denominator, whichever is larger.

    Used by the bit-growth diagnostics; integers are measured directly.
    """
    try:
        return max(int(x.numerator).bit_length(), int(x.denominator).bit_length())
    except AttributeError:
        return int(x).bit_length()


def integer_nth_root(m: int, d: int):
    """Exact d-th root of a nonnegative integer, or None if m is not a d-th power."""
    if m < 0 or d < 1:
        raise ValueError("need m >= 0 and d >= 1")
    if m in (0, 1) or d == 1:
        return m
    # Binary search; floats are only a seed and never trusted.
    hi = 1 << (m.bit_length() // d + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**d < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**d == m else None


def rational_nth_root(x, d: int):
    """Exact rational d-th root of x, or None.

    Odd d: the unique real root (sign carried by the numerator).
    Even d: requires x >= 0; the nonnegative root is returned.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return Q(x)
    num = int(x.numerator)
    den = int(x.denominator)
    neg = num < 0
    if neg and d % 2 == 0:
        return None
    rn = integer_nth_root(-num if neg else num, d)
    if rn is None:
        return None
    rd = integer_nth_root(den, d)
    if rd is None:
        return None
    return Q(-rn if neg else rn, rd)
