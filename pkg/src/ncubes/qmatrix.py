"""Dense matrices over Q.

QMatrix is an immutable rows x cols array of exact rationals with the
arithmetic the algorithms need (product, transpose, congruence); the
elimination-based algorithms (rank, kernel, inverse, characteristic
polynomial) live in ncubes.linalg on top of the integer kernels.

JSON format: {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .rational import Q, QONE, QZERO, format_rational, parse_rational

Vector = tuple  # tuple of rationals


class QMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(tuple(Q(x) for x in row) for row in entries)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0:
            raise ValueError("matrix needs at least one column")
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, *_):
        raise AttributeError("QMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[QONE if i == j else QZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[QZERO] * cols for _ in range(rows)])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "QMatrix":
        return cls(rows)

    @classmethod
    def column(cls, values: Iterable) -> "QMatrix":
        return cls([[v] for v in values])

    @classmethod
    def diagonal(cls, values: Iterable) -> "QMatrix":
        vals = list(values)
        n = len(vals)
        return cls(
            [[Q(vals[i]) if i == j else QZERO for j in range(n)] for i in range(n)]
        )

    # -- access ----------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        e = self.entries
        return all(
            e[i][j] == e[j][i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def flatten(self) -> Vector:
        """Row-major vectorization (used for span/rank arguments on subspaces)."""
        return tuple(x for row in self.entries for x in row)

    # -- arithmetic --------------------------------------------------------

    def _same_shape(self, other: "QMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in row] for row in self.entries])

    def __mul__(self, scalar) -> "QMatrix":
        c = Q(scalar)
        return QMatrix([[a * c for a in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = list(zip(*other.entries))
        return QMatrix(
            [
                [_dot(row, colv) for colv in bt]
                for row in self.entries
            ]
        )

    def transpose(self) -> "QMatrix":
        return QMatrix(list(zip(*self.entries)))

    def congruence(self, a: "QMatrix") -> "QMatrix":
        """a^T @ self @ a."""
        return a.transpose() @ self @ a

    def apply(self, v) -> Vector:
        """Matrix-vector product."""
        vv = [Q(x) for x in v]
        if len(vv) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(row, vv) for row in self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                a == b
                for ra, rb in zip(self.entries, other.entries)
                for a, b in zip(ra, rb)
            )
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(format_rational(x) for x in row) for row in self.entries
        )
        return f"QMatrix[{body}]"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QMatrix":
        try:
            rows = int(obj["rows"])
            cols = int(obj["cols"])
            entries = [[parse_rational(x) for x in row] for row in obj["entries"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad matrix object: {exc}") from exc
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ParseError("matrix entries do not match declared shape")
        return cls(entries)


def _dot(a, b):
    acc = QZERO
    for x, y in zip(a, b):
        if x != 0 and y != 0:
            acc = acc + x * y
    return acc


def dot(a, b):
    """Exact inner product of two equal-length vectors."""
    a = list(a)
    b = list(b)
    if len(a) != len(b):
        raise ValueError("vector length mismatch")
    return _dot([Q(x) for x in a], [Q(y) for y in b])
