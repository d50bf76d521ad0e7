"""
Laurent polynomials in one variable q with integer coefficients.

Graded multiplicities, Poincare polynomials and the intermediate values of the
closed formulas all live here. Negative exponents are allowed so that factors
such as (1 + q^-1) can be carried exactly until the final "is polynomial" check.
"""
from __future__ import annotations

from functools import reduce
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from exteriorcov.exceptions import InexactDivisionError

Scalar = Union[int, "QPoly"]


class QPoly:
    """Immutable Laurent polynomial stored as a sparse exponent -> coefficient map."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        self._coeffs: Dict[int, int] = {}
        if coeffs:
            for exp, coeff in coeffs.items():
                if coeff:
                    self._coeffs[int(exp)] = int(coeff)

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls({exp: coeff})

    @classmethod
    def one(cls) -> "QPoly":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], shift: int = 0) -> "QPoly":
        """Build from a coefficient list whose first entry is the q^shift coefficient."""
        return cls({shift + i: c for i, c in enumerate(coeffs) if c})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "QPoly":
        result: Dict[int, int] = {}
        for exp, coeff in pairs:
            result[exp] = result.get(exp, 0) + coeff
        return cls(result)

    @staticmethod
    def product(factors: Iterable["QPoly"]) -> "QPoly":
        return reduce(lambda acc, f: acc * f, factors, QPoly.one())

    @staticmethod
    def binomial(exp: int, sign: int = 1) -> "QPoly":
        """1 + sign*q^exp, the building block of every product formula here."""
        return QPoly({0: 1}) + QPoly({exp: sign})

    # -- inspection -------------------------------------------------------

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> List[Tuple[int, int]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_degree(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    def degree(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def is_polynomial(self) -> bool:
        return not self._coeffs or min(self._coeffs) >= 0

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def to_dense(self) -> List[int]:
        """Coefficients of q^0 .. q^deg; only defined for genuine polynomials."""
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative exponents")
        if not self._coeffs:
            return []
        dense = [0] * (max(self._coeffs) + 1)
        for exp, coeff in self._coeffs.items():
            dense[exp] = coeff
        return dense

    def to_pairs(self) -> List[List[int]]:
        return [[e, c] for e, c in self.items()]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Scalar) -> "QPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            result[exp] = result.get(exp, 0) + coeff
        return QPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Scalar) -> "QPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "QPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        result: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return QPoly(result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "QPoly":
        if power < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = QPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        return QPoly({e + k: c for e, c in self._coeffs.items()})

    def reflect(self, top: int) -> "QPoly":
        """Return q^top * p(1/q)."""
        return QPoly({top - e: c for e, c in self._coeffs.items()})

    def divmod(self, divisor: "QPoly") -> Tuple["QPoly", "QPoly"]:
        """
        Long division by a Laurent polynomial.

        Both operands are shifted to genuine polynomials first; the divisor then
        has a nonzero constant term, so an exact Laurent quotient, when it exists,
        is found by ordinary long division. Quotient coefficients must stay
        integral; otherwise InexactDivisionError is raised.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return QPoly(), QPoly()
        low_a, low_b = self.min_degree(), divisor.min_degree()
        num = self.shift(-low_a).to_dense()
        den = divisor.shift(-low_b).to_dense()
        lead = den[-1]
        quotient = [0] * max(len(num) - len(den) + 1, 0)
        for pos in range(len(num) - len(den), -1, -1):
            top = num[pos + len(den) - 1]
            if top == 0:
                continue
            if top % lead:
                raise InexactDivisionError(f"quotient of {self} by {divisor} is not integral")
            factor = top // lead
            quotient[pos] = factor
            for i, coeff in enumerate(den):
                num[pos + i] -= factor * coeff
        shift = low_a - low_b
        return QPoly.from_dense(quotient, shift), QPoly.from_dense(num, low_a)

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        """Exact quotient; raises InexactDivisionError instead of truncating."""
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise InexactDivisionError(f"{divisor} does not divide {self} (remainder {remainder})")
        return quotient

    def try_div(self, divisor: "QPoly") -> Optional["QPoly"]:
        try:
            return self.exact_div(divisor)
        except InexactDivisionError:
            return None

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def __str__(self) -> str:
        return self._render(lambda e: "" if e == 0 else ("q" if e == 1 else f"q^{e}"))

    def to_latex(self) -> str:
        return self._render(lambda e: "" if e == 0 else ("q" if e == 1 else f"q^{{{e}}}"))

    def _render(self, power) -> str:
        if not self._coeffs:
            return "0"
        parts: List[str] = []
        for exp, coeff in self.items():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = power(exp)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}{body}"
            parts.append(f"{sign} {term}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _coerce(value: Scalar) -> Optional[QPoly]:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly({0: value})
    return None


Q = QPoly.monomial(1)
