"""Peak-bit-size meter for the exact algorithms.

The deterministic equivalence test is strongly polynomial only if the
integers appearing in intermediate computations stay polynomially sized.
BitMeter records the largest bit length seen while it is active; the
elimination/charpoly/PRS kernels report their intermediates, and the
rational layer reports numerators and denominators at a few choke points.

One meter at a time (module global), intended for test scopes:

    with BitMeter() as meter:
        deterministic_equivalence(f, field)
    assert meter.peak_bits < bound
"""

from __future__ import annotations

ACTIVE = None


class BitMeter:
    def __init__(self):
        self.peak_bits = 0

    def note_int(self, v):
        b = (v if v >= 0 else -v).bit_length()
        if b > self.peak_bits:
            self.peak_bits = b

    def __enter__(self):
        global ACTIVE
        if ACTIVE is not None:
            raise RuntimeError("a BitMeter is already active")
        ACTIVE = self
        return self

    def __exit__(self, *exc):
        global ACTIVE
        ACTIVE = None
        return False


def note_ints(seq):
    m = ACTIVE
    if m is None:
        return
    for v in seq:
        m.note_int(v)


def note_rows(rows):
    m = ACTIVE
    if m is None:
        return
    for row in rows:
        for v in row:
            m.note_int(v)


def note_q(x):
    m = ACTIVE
    if m is None:
        return
    m.note_int(int(x.numerator))
    m.note_int(int(x.denominator))


def note_qs(seq):
    if ACTIVE is None:
        return
    for x in seq:
        note_q(x)
