"""Exact rational scalars: canonical form, parsing, roots."""

import random

import pytest

from ncubes.rational import (
    Q,
    QONE,
    QZERO,
    bit_size,
    format_rational,
    integer_nth_root,
    is_integral,
    parse_rational,
    q,
    rational_nth_root,
    sign,
)


def test_canonical_reduced_positive_denominator():
    x = q(6, -4)
    assert x.numerator == -3 and x.denominator == 2
    assert q(0, 7) == QZERO
    assert q(5, 5) == QONE


def test_parse_format_round_trip():
    for s in ["0", "7", "-7", "3/4", "-3/4", "22/7"]:
        assert format_rational(parse_rational(s)) == s
    # non-canonical input formats back to canonical
    assert format_rational(parse_rational("  6/4 ")) == "3/2"
    assert format_rational(parse_rational("-6/-4")) == "3/2"


def test_parse_rejects_garbage():
    for s in ["", "x", "1/0", "1/2/3", "2.5"]:
        with pytest.raises(ValueError):
            parse_rational(s)


def test_sign_and_integrality():
    assert sign(q(-3, 7)) == -1 and sign(QZERO) == 0 and sign(q(2)) == 1
    assert is_integral(q(4, 2)) and not is_integral(q(1, 2))


def test_bit_size():
    assert bit_size(q(1, 1)) == 1
    assert bit_size(q(255, 256)) == 9
    assert bit_size(q(-1024)) == 11


def test_ring_axioms_random():
    rng = random.Random(1)
    for _ in range(200):
        a = q(rng.randint(-99, 99), rng.randint(1, 99))
        b = q(rng.randint(-99, 99), rng.randint(1, 99))
        c = q(rng.randint(-99, 99), rng.randint(1, 99))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if b != 0:
            assert (a / b) * b == a


def test_integer_nth_root():
    assert integer_nth_root(27, 3) == 3
    assert integer_nth_root(28, 3) is None
    assert integer_nth_root(1 << 60, 2) == 1 << 30
    assert integer_nth_root(0, 5) == 0
    with pytest.raises(ValueError):
        integer_nth_root(-8, 3)


def test_rational_nth_root():
    assert rational_nth_root(q(8), 3) == 2
    assert rational_nth_root(q(-8), 3) == -2
    assert rational_nth_root(q(27, 64), 3) == q(3, 4)
    assert rational_nth_root(q(9, 4), 2) == q(3, 2)
    assert rational_nth_root(q(-9, 4), 2) is None  # even root of a negative
    assert rational_nth_root(q(2), 2) is None
    assert rational_nth_root(q(10, 27), 3) is None
    assert rational_nth_root(q(-5, 7), 1) == q(-5, 7)


def test_rational_nth_root_random_round_trip():
    rng = random.Random(2)
    for _ in range(100):
        base = q(rng.randint(-30, 30), rng.randint(1, 30))
        for d in (2, 3, 4, 5):
            x = base**d
            r = rational_nth_root(x, d)
            if d % 2 == 0 and base < 0:
                assert r == -base
            else:
                assert r == base
