"""
Closed-form graded multiplicities and the polynomial freeness test.

Covers the little adjoint formula and its product form, the degree n0 of the
Kostant generators, the hook formula for partitions of n in type A, the
Poincare polynomial of the invariants and the Newton-polynomial pairing.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import sympy

from exteriorcov.exceptions import ConsistencyError, InexactDivisionError, InvalidRootSystemError, InvalidWeightError
from exteriorcov.models.qpoly import QPoly
from exteriorcov.models.rootdata import RootSystem, Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p <= 0 for p in parts):
            raise InvalidWeightError(f"partition parts must be positive, got {self.parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidWeightError(f"partition parts must be weakly decreasing, got {self.parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError as e:
            raise InvalidWeightError(f"cannot read partition {text!r}: {e}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def boxes(self) -> Iterator[Tuple[int, int]]:
        """Boxes (i, j), 1-based, row by row."""
        for i, length in enumerate(self.parts, start=1):
            for j in range(1, length + 1):
                yield i, j

    def conjugate(self) -> "Partition":
        return Partition(tuple(conjugate(self.parts)))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class FreenessVerdict:
    divisible: bool
    quotient: Optional[QPoly]
    quotient_nonneg: bool
    generator_count: Optional[int]
    expected_count: int

    @property
    def count_ok(self) -> bool:
        return self.generator_count is not None and self.generator_count == self.expected_count

    @property
    def passes(self) -> bool:
        return self.divisible and self.quotient_nonneg and self.count_ok


# -- partitions ---------------------------------------------------------------

def conjugate(parts: Sequence[int]) -> List[int]:
    if not parts:
        return []
    return [sum(1 for p in parts if p >= j) for j in range(1, max(parts) + 1)]


def hook_lengths(p: Partition) -> Dict[Tuple[int, int], int]:
    cols = conjugate(p.parts)
    return {(i, j): (p.parts[i - 1] - j) + (cols[j - 1] - i) + 1 for i, j in p.boxes()}


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if largest is None:
        largest = n
    if n <= 0:
        return
    for first in range(min(n, largest), 0, -1):
        if first == n:
            yield Partition((n,))
            continue
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def partition_to_weight(p: Partition) -> Weight:
    """The A_{n-1} highest weight with a_i = number of columns of length i."""
    n = p.n
    if n < 2:
        raise InvalidWeightError(f"partition {p} does not define a weight of sl(n), n >= 2")
    padded = list(p.parts) + [0] * (n - len(p.parts))
    return tuple(padded[i] - padded[i + 1] for i in range(n - 1))


def dual_weight(weight: Sequence[int]) -> Weight:
    """Highest weight of the dual module in type A."""
    return tuple(reversed(tuple(weight)))


def stembridge_gm(p: Partition) -> QPoly:
    """
    Graded multiplicity of the module attached to p in the exterior algebra of sl(n).

    The q-factorial is read as prod_{i=1}^{n} (1 - q^{2i}).

    Raises:
        ConsistencyError: if the quotient is not a polynomial
    """
    n = p.n
    numerator = QPoly.product(QPoly.binomial(2 * i, -1) for i in range(1, n + 1))
    denominator = QPoly.binomial(1)
    hooks = hook_lengths(p)
    for (i, j), h in sorted(hooks.items()):
        numerator = numerator * (QPoly.monomial(2 * i - 1) + QPoly.monomial(2 * j - 2))
        denominator = denominator * QPoly.binomial(2 * h, -1)
    try:
        result = numerator.exact_div(denominator)
    except InexactDivisionError as e:
        raise ConsistencyError(f"hook formula for {p} is not a polynomial: {e}")
    if not result.is_polynomial():
        raise ConsistencyError(f"hook formula for {p} has negative exponents: {result}")
    return result


# -- invariants and the little adjoint ----------------------------------------

def invariant_poincare(rs: RootSystem) -> QPoly:
    return QPoly.product(QPoly.binomial(2 * m + 1) for m in rs.exponents)


def freeness_divisor(rs: RootSystem) -> QPoly:
    """prod_{i<r} (1 + q^{2m_i+1}): Poincare polynomial of all primitive invariants but the top one."""
    return QPoly.product(QPoly.binomial(2 * m + 1) for m in rs.exponents[:-1])


def _require_non_simply_laced(rs: RootSystem) -> None:
    if rs.simply_laced:
        raise InvalidRootSystemError(f"{rs.name} is simply laced: no highest short root")


def n0(rs: RootSystem) -> int:
    """Degree of the lowest little-adjoint covariant in the symmetric algebra."""
    _require_non_simply_laced(rs)
    m_r = rs.exponents[-1]
    if (m_r + 1) % 2:
        raise ConsistencyError(f"top exponent {m_r} of {rs.name} is even")
    half = (m_r + 1) // 2
    if rs.r_s == 1:
        return half
    value = half - (rs.r_s - 1) * rs.r_l
    if value != 2 * rs.r_l:
        raise ConsistencyError(f"n0 branches disagree for {rs.name}: {value} != {2 * rs.r_l}")
    return value


def kostant_generator_degrees(rs: RootSystem) -> List[int]:
    base = n0(rs)
    return [base * i for i in range(1, rs.r_s + 1)]


def generator_degrees_pair_to_top(rs: RootSystem) -> bool:
    """2*n0*i + 2*n0*(r_s - i + 1) - 1 = 2*m_r + 1 for every i."""
    base = n0(rs)
    top = 2 * rs.exponents[-1] + 1
    return all(2 * base * i + 2 * base * (rs.r_s - i + 1) - 1 == top for i in range(1, rs.r_s + 1))


def bazlov_gm(rs: RootSystem) -> QPoly:
    """
    Graded multiplicity of the little adjoint module.

    Raises:
        InvalidRootSystemError: for simply laced types
        ConsistencyError: if the value is not a nonnegative polynomial
    """
    _require_non_simply_laced(rs)
    r_s, r_l = rs.r_s, rs.r_l
    m_r = rs.exponents[-1]
    ratio = QPoly.binomial(4 * r_l * r_s, -1).exact_div(QPoly.binomial(4 * r_l, -1))
    result = (
        (QPoly.one() + QPoly.monomial(-1))
        * freeness_divisor(rs)
        * QPoly.monomial(m_r + 1 - 2 * (r_s - 1) * r_l)
        * ratio
    )
    if not result.is_polynomial() or not result.is_nonnegative():
        raise ConsistencyError(f"little adjoint formula for {rs.name} gives {result}")
    expected = 2 ** rs.rank * r_s
    if result.at_one() != expected:
        raise ConsistencyError(f"little adjoint formula for {rs.name} sums to {result.at_one()}, expected {expected}")
    return result


def bazlov_product_form(rs: RootSystem) -> QPoly:
    base = n0(rs)
    geometric = QPoly.zero()
    for j in range(rs.r_s):
        geometric = geometric + QPoly.monomial(2 * j * base)
    return (QPoly.one() + QPoly.monomial(-1)) * freeness_divisor(rs) * QPoly.monomial(2 * base) * geometric


# -- freeness -----------------------------------------------------------------

def freeness_divisibility(M: QPoly, rs: RootSystem, zero_dim: int) -> FreenessVerdict:
    expected = 2 * zero_dim
    try:
        quotient = M.exact_div(freeness_divisor(rs))
    except InexactDivisionError:
        return FreenessVerdict(divisible=False, quotient=None, quotient_nonneg=False,
                               generator_count=None, expected_count=expected)
    nonneg = quotient.is_polynomial() and quotient.is_nonnegative()
    return FreenessVerdict(
        divisible=True,
        quotient=quotient,
        quotient_nonneg=nonneg,
        generator_count=quotient.at_one() if nonneg else None,
        expected_count=expected,
    )


# -- Newton polynomials -------------------------------------------------------

def newton_pairing_identity_check(k: int, g: int, m: int) -> bool:
    """
    Check sum_i d(psi_k)/dx_i * d(psi_g)/dx_i = (k+g-2) psi_{k+g-2}
    in m variables, psi_j = (1/j) sum_i x_i^j.

    For k = g = 1 the right side is read as the power sum p_0 = m.
    """
    if k < 1 or g < 1 or m < 1:
        raise ValueError(f"need k, g, m >= 1, got {(k, g, m)}")
    xs = sympy.symbols(f"x1:{m + 1}")

    def psi(j: int):
        return sympy.Rational(1, j) * sum(x ** j for x in xs)

    lhs = sum(sympy.diff(psi(k), x) * sympy.diff(psi(g), x) for x in xs)
    top = k + g - 2
    rhs = top * psi(top) if top >= 1 else sympy.Integer(m)
    return sympy.expand(lhs - rhs) == 0
