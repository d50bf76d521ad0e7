"""
Graded character of the exterior algebra of a simple Lie algebra.

The character is (1+q)^r * prod_{alpha in roots} (1 + q e^alpha). The root
product is stored per weight as a Kronecker-packed integer: the coefficient
of q^d lives in bits [d*slot, (d+1)*slot). All coefficients are nonnegative
and the slot is wide enough for a full alternating Weyl sum, so packed
values can be added and multiplied without carries between slots.
"""
from __future__ import annotations

import logging
from bisect import bisect_left
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from exteriorcov.exceptions import BudgetExceededError, InvalidWeightError
from exteriorcov.models.qpoly import QPoly
from exteriorcov.models.rootdata import RootSystem, Weight

logger = logging.getLogger(__name__)

FULL = "full"
TARGETED = "targeted"
MODES = (FULL, TARGETED)


def slot_bits(rs: RootSystem) -> int:
    n_roots = 2 * len(rs.positive_roots)
    return n_roots + 2 + rs.weyl_order_estimate.bit_length()


def _expand(start: Dict[Tuple[int, ...], int], steps: Sequence[Tuple[int, ...]], bits: int,
            max_terms: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    terms = dict(start)
    for step in steps:
        grown = dict(terms)
        for key, value in terms.items():
            target = tuple(a + b for a, b in zip(key, step))
            grown[target] = grown.get(target, 0) + (value << bits)
        terms = grown
        if max_terms is not None and len(terms) > max_terms:
            raise BudgetExceededError(
                f"full character expansion exceeded {max_terms} stored weights; use targeted mode"
            )
    return terms


class GradedCharacter:
    """
    Weight -> QPoly map for the exterior algebra.

    In full mode `terms` holds the whole root product keyed by fundamental
    coordinates. In targeted mode it holds only the positive half
    P(nu) = prod_{alpha > 0}(1 + q e^alpha), keyed by root-basis coordinates;
    the coefficient at mu is then sum_nu P(nu) * P(nu - mu).
    """

    def __init__(self, rs: RootSystem, mode: str, terms: Dict[Tuple[int, ...], int], bits: int):
        if mode not in MODES:
            raise ValueError(f"unknown character mode {mode!r}")
        self.rs = rs
        self.mode = mode
        self.bits = bits
        self.mask = (1 << bits) - 1
        self.terms = terms
        self._memo: Dict[Weight, int] = {}
        self._two_rho = tuple(sum(c[i] for c in rs.positive_root_coords) for i in range(rs.rank))
        self._by_first: List[Tuple[int, Tuple[int, ...], int]] = []
        self._first: List[int] = []
        if mode == TARGETED:
            self._by_first = sorted((k[0], k, v) for k, v in terms.items())
            self._first = [entry[0] for entry in self._by_first]

    @property
    def owner(self) -> RootSystem:
        return self.rs

    @property
    def top_degree(self) -> int:
        return 2 * len(self.rs.positive_roots)

    # -- packed access ----------------------------------------------------

    def packed(self, mu: Sequence[int]) -> int:
        """Packed root-product coefficient at mu (Cartan factor not applied)."""
        mu = tuple(mu)
        if self.mode == FULL:
            return self.terms.get(mu, 0)
        key = self.rs.dominant_representative(mu)
        cached = self._memo.get(key)
        if cached is None:
            cached = self._convolve(key)
            self._memo[key] = cached
        return cached

    def _convolve(self, mu: Weight) -> int:
        coords = self.rs.to_root_basis(mu)
        if any(c.denominator != 1 for c in coords):
            return 0
        target = tuple(int(c) for c in coords)
        if any(abs(t) > b for t, b in zip(target, self._two_rho)):
            return 0
        terms = self.terms
        total = 0
        start = bisect_left(self._first, max(target[0], 0))
        for _, nu, value in self._by_first[start:]:
            partner = terms.get(tuple(a - b for a, b in zip(nu, target)))
            if partner:
                total += value * partner
        return total

    def unpack(self, value: int) -> List[int]:
        coeffs = []
        for d in range(self.top_degree + 1):
            coeffs.append((value >> (self.bits * d)) & self.mask)
        return coeffs

    def cartan_factor(self) -> QPoly:
        return QPoly.binomial(1) ** self.rs.rank

    # -- public queries ---------------------------------------------------

    def coefficient(self, mu: Sequence[int]) -> QPoly:
        mu = self.rs.check_weight(mu)
        value = self.packed(mu)
        if not value:
            return QPoly.zero()
        return QPoly.from_dense(self.unpack(value)) * self.cartan_factor()

    def weights(self) -> Iterator[Weight]:
        if self.mode != FULL:
            raise InvalidWeightError("only a full character can enumerate its support")
        return iter(sorted(self.terms))

    def total_at_one(self) -> int:
        if self.mode == FULL:
            inner = sum(sum(self.unpack(v)) for v in self.terms.values())
        else:
            half = sum(sum(self.unpack(v)) for v in self.terms.values())
            inner = half * half
        return inner * 2 ** self.rs.rank

    def export_terms(self) -> Dict[Tuple[int, ...], List[int]]:
        """Unpacked coefficient lists, for the on-disk cache."""
        result = {}
        for key, value in sorted(self.terms.items()):
            coeffs = self.unpack(value)
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            result[key] = coeffs
        return result

    @classmethod
    def from_coefficients(cls, rs: RootSystem, mode: str, mapping: Mapping[Tuple[int, ...], Sequence[int]]) -> "GradedCharacter":
        bits = slot_bits(rs)
        terms = {}
        for key, coeffs in mapping.items():
            value = 0
            for d, c in enumerate(coeffs):
                value |= int(c) << (bits * d)
            terms[tuple(key)] = value
        return cls(rs, mode, terms, bits)


def positive_half(rs: RootSystem) -> Dict[Tuple[int, ...], int]:
    bits = slot_bits(rs)
    zero = (0,) * rs.rank
    return _expand({zero: 1}, rs.positive_root_coords, bits)


def lambda_g_character(rs: RootSystem, mode: str = FULL, max_terms: Optional[int] = None,
                       full_max_rank: Optional[int] = None) -> GradedCharacter:
    """
    Expand the graded character of the exterior algebra.

    Raises:
        BudgetExceededError: in full mode, when the rank or the number of stored
            weights exceeds the configured limit
    """
    if mode not in MODES:
        raise ValueError(f"unknown character mode {mode!r}")
    if max_terms is None or full_max_rank is None:
        from exteriorcov.config import get_settings

        settings = get_settings()
        max_terms = settings.full_max_terms if max_terms is None else max_terms
        full_max_rank = settings.full_max_rank if full_max_rank is None else full_max_rank

    bits = slot_bits(rs)
    zero = (0,) * rs.rank
    if mode == FULL:
        if rs.rank > full_max_rank:
            raise BudgetExceededError(
                f"full character mode is limited to rank <= {full_max_rank}; use targeted mode for {rs.name}"
            )
        terms = _expand({zero: 1}, rs.roots_fund, bits, max_terms)
    else:
        terms = positive_half(rs)
    logger.info(f"Expanded {mode} character of {rs.name}: {len(terms)} stored weights")
    return GradedCharacter(rs, mode, terms, bits)


def coefficient(char: GradedCharacter, mu: Sequence[int]) -> QPoly:
    return char.coefficient(mu)


def default_mode(rs: RootSystem, full_max_rank: Optional[int] = None) -> str:
    if full_max_rank is None:
        from exteriorcov.config import get_settings

        full_max_rank = get_settings().full_max_rank
    return FULL if rs.rank <= full_max_rank else TARGETED
