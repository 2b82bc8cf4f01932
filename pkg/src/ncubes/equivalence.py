"""Deciding equivalence of a cubic form to a sum of n cubes.

A form f is equivalent to x_1^3 + ... + x_n^3 over K (= R or C) iff after a
change of variables making the first slice invertible, the matrices
T_1^{-1} T_k pairwise commute and are diagonalizable over K.  The two entry
points differ only in how they pick the change of variables:

  - randomized_equivalence: R lower triangular, unit diagonal except that
    the whole first column r_11..r_n1 is drawn from {0..2^sample_bits - 1};
    one-sided error <= (n+1)/|S| on equivalent inputs, never accepts an
    inequivalent one.
  - deterministic_equivalence: scans the moment curve points
    (1, t, ..., t^{n-1}), t = 1..n(n-1)+1.  The slice-pencil determinant of
    an equivalent form is a nonzero product of n linear forms, and that many
    moment points cannot all lie on n hyperplanes, so the scan finds an
    invertible D_1 whenever one exists.  Exact decision.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from . import linalg
from .errors import NotCubicError, SingularMatrixError
from .poly import SparsePoly
from .qmatrix import QMatrix
from .rational import QONE, QZERO
from .slices import CubicSlices, slices_of, transformed_slices


class Field(enum.Enum):
    Complex = "C"
    Real = "R"


class RejectReason(enum.Enum):
    SingularSlicePencil = "SingularSlicePencil"
    NonCommuting = "NonCommuting"
    NotDiagonalizable = "NotDiagonalizable"
    NotRealDiagonalizable = "NotRealDiagonalizable"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    trace: RejectReason | None = None

    def __post_init__(self):
        if self.accepted and self.trace is not None:
            raise ValueError("accepting verdicts carry no trace")
        if not self.accepted and self.trace is None:
            raise ValueError("rejecting verdicts must name the failed step")

    def __bool__(self) -> bool:
        return self.accepted


ACCEPT = Verdict(True)


def simdiag_decision(S: CubicSlices, field: Field) -> Verdict:
    """Accept iff the T_1^{-1} T_k commute and are diagonalizable over the
    field.  Requires invertible first slice (SingularMatrixError otherwise);
    the equivalence algorithms arrange that and map failure to a verdict."""
    T1inv = linalg.inverse(S.slices[0])
    ms = [T1inv @ S.slices[k] for k in range(1, S.n)]
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if not linalg.commute(ms[i], ms[j]):
                return Verdict(False, RejectReason.NonCommuting)
    for m in ms:
        if not linalg.is_diagonalizable(m):
            return Verdict(False, RejectReason.NotDiagonalizable)
        if field is Field.Real and not linalg.is_diagonalizable_real(m):
            return Verdict(False, RejectReason.NotRealDiagonalizable)
    return ACCEPT


def _check_cubic(f: SparsePoly):
    if not f.is_zero() and not f.is_homogeneous(3):
        raise NotCubicError("input must be a homogeneous cubic form")


def _first_column_transform(n: int, col) -> QMatrix:
    """Lower triangular, first column col, diagonal 1 from the second row on."""
    rows = [[QZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][0] = col[i]
        if i > 0:
            rows[i][i] = QONE
    return QMatrix(rows)


def _decide(S: CubicSlices, R: QMatrix, field: Field) -> Verdict:
    T = transformed_slices(S, R)
    try:
        return simdiag_decision(T, field)
    except SingularMatrixError:
        return Verdict(False, RejectReason.SingularSlicePencil)


def randomized_equivalence(
    f: SparsePoly, field: Field, seed: int, sample_bits: int | None = None
) -> Verdict:
    """One-sided Monte Carlo test: Accept is always correct; an equivalent
    input is accepted with probability >= 1 - (n+1)/2^sample_bits over the
    seeded first column.  Default sample_bits makes that >= 1 - 1/(2n)."""
    _check_cubic(f)
    n = f.n
    if n == 0 or f.is_zero():
        return Verdict(False, RejectReason.SingularSlicePencil)
    if sample_bits is None:
        sample_bits = (4 * n * n - 1).bit_length()
    rng = random.Random(seed)
    col = [rng.randrange(1 << sample_bits) for _ in range(n)]
    return _decide(slices_of(f), _first_column_transform(n, col), field)


def deterministic_equivalence(f: SparsePoly, field: Field) -> Verdict:
    """Exact decision of equivalence to a sum of n cubes over the field."""
    _check_cubic(f)
    n = f.n
    if n == 0 or f.is_zero():
        return Verdict(False, RejectReason.SingularSlicePencil)
    S = slices_of(f)
    for t in range(1, n * (n - 1) + 2):
        col = [QONE]
        for _ in range(n - 1):
            col.append(col[-1] * t)
        D1 = QMatrix.zeros(n, n)
        for i in range(n):
            if col[i] != 0:
                D1 = D1 + S.slices[i] * col[i]
        if linalg.det(D1) == 0:
            continue
        return _decide(S, _first_column_transform(n, col), field)
    return Verdict(False, RejectReason.SingularSlicePencil)
