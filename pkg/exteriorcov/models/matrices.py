"""
Exact square matrices over the rationals.

Entries that are integral are stored as Python ints so that the common
case (random integer matrices) never touches Fraction arithmetic.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]


def _norm(x: Number) -> Number:
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return int(x)


class RationalMatrix:
    """Immutable n x n matrix with exact entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[Number]]):
        self.rows: Tuple[Tuple[Number, ...], ...] = tuple(tuple(_norm(x) for x in row) for row in rows)
        self.n = len(self.rows)
        if any(len(row) != self.n for row in self.rows):
            raise ValueError("RationalMatrix must be square")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "RationalMatrix":
        """E_ij, 0-based."""
        return cls([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Number]]) -> "RationalMatrix":
        n = len(columns)
        return cls([[columns[c][r] for c in range(n)] for r in range(n)])

    # -- access -----------------------------------------------------------

    def __getitem__(self, index: Tuple[int, int]) -> Number:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Tuple[Number, ...]:
        return tuple(row[j] for row in self.rows)

    def _check(self, other: "RationalMatrix") -> None:
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        return RationalMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        return RationalMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalMatrix([[a * other for a in row] for row in self.rows])
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._check(other)
        cols = list(zip(*other.rows))
        return RationalMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows])

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def apply(self, vector: Sequence[Number]) -> Tuple[Number, ...]:
        if len(vector) != self.n:
            raise ValueError(f"dimension mismatch: vector of length {len(vector)} for {self.n}x{self.n} matrix")
        return tuple(_norm(sum(a * b for a, b in zip(row, vector))) for row in self.rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows))

    def trace(self) -> Number:
        return _norm(sum(self.rows[i][i] for i in range(self.n)))

    def is_traceless(self) -> bool:
        return self.trace() == 0

    def commutator(self, other: "RationalMatrix") -> "RationalMatrix":
        return self * other - other * self

    def conjugate_by(self, g: "RationalMatrix", g_inverse: "RationalMatrix") -> "RationalMatrix":
        return g * self * g_inverse

    def det(self) -> Number:
        return determinant(self.rows)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RationalMatrix({[list(map(str, row)) for row in self.rows]})"


def determinant(rows: Sequence[Sequence[Number]]) -> Number:
    """Bareiss fraction-free elimination; rational input is cleared of denominators first."""
    n = len(rows)
    if n == 0:
        return 1
    scale = 1
    denominators = [x.denominator for row in rows for x in row if isinstance(x, Fraction)]
    if denominators:
        scale = lcm(*denominators)
        m = [[int(x * scale) for x in row] for row in rows]
    else:
        m = [list(row) for row in rows]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // previous
        previous = pivot
    value = sign * m[n - 1][n - 1]
    if scale != 1:
        return _norm(Fraction(value, scale ** n))
    return value


def random_traceless(n: int, rng: random.Random, low: int = -9, high: int = 9) -> RationalMatrix:
    """Uniform entries in [low, high]; the last diagonal entry is fixed to make the trace vanish."""
    rows: List[List[int]] = [[rng.randint(low, high) for _ in range(n)] for _ in range(n)]
    rows[n - 1][n - 1] = -sum(rows[i][i] for i in range(n - 1))
    return RationalMatrix(rows)


def elementary_unipotent(n: int, i: int, j: int, t: Number) -> Tuple[RationalMatrix, RationalMatrix]:
    """1 + t E_ij and its inverse 1 - t E_ij (i != j)."""
    if i == j:
        raise ValueError("unipotent needs i != j")
    unit = RationalMatrix.elementary(n, i, j)
    one = RationalMatrix.identity(n)
    return one + unit * t, one - unit * t
