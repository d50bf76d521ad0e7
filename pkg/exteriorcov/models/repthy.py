"""
Irreducible highest-weight modules and graded multiplicities in the
exterior algebra.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Dict, List, Optional, Sequence, Set, Tuple

from exteriorcov.exceptions import ConsistencyError, InvalidWeightError
from exteriorcov.models.gradedchar import GradedCharacter
from exteriorcov.models.qpoly import QPoly
from exteriorcov.models.rootdata import RootSystem, Weight, dominance_geq, highest_roots
from exteriorcov.models.weyl import WeylGroup, orbit_by_reflections, weyl_group_for

logger = logging.getLogger(__name__)


@dataclass
class IrrepInfo:
    highest_weight: Weight
    dim: int
    weight_mults: Dict[Weight, int]
    zero_weight_dim: int
    dominant_mults: Dict[Weight, int] = field(default_factory=dict)


@dataclass(frozen=True)
class SmallnessVerdict:
    small: bool
    witness: Optional[str] = None
    witness_weight: Optional[Weight] = None

    def __bool__(self) -> bool:
        return self.small


def _require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise InvalidWeightError(f"{lam} is not dominant for {rs.name}")
    return lam


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = _require_dominant(rs, lam)
    shifted = tuple(x + 1 for x in lam)
    num = prod(rs.coroot_pairing(shifted, k) for k in range(len(rs.positive_roots)))
    den = prod(rs.coroot_pairing(rs.rho_weight, k) for k in range(len(rs.positive_roots)))
    return num // den


def dominant_weights(rs: RootSystem, lam: Sequence[int]) -> List[Weight]:
    """Dominant weights of L(lam), ordered by the height of lam - mu."""
    lam = tuple(lam)
    heights = {lam: 0}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for k, alpha in enumerate(rs.positive_roots_fund):
            nu = tuple(a - b for a, b in zip(mu, alpha))
            if nu in heights or any(x < 0 for x in nu):
                continue
            heights[nu] = heights[mu] + sum(rs.positive_root_coords[k])
            queue.append(nu)
    return sorted(heights, key=lambda w: (heights[w], w))


def _freudenthal(rs: RootSystem, lam: Weight) -> Dict[Weight, int]:
    order = dominant_weights(rs, lam)
    known = set(order)
    # (omega_i, alpha) for each positive root alpha
    pairings = [
        tuple(Fraction(c[i]) * rs.simple_norms[i] / 2 for i in range(rs.rank)) for c in rs.positive_root_coords
    ]
    rho = rs.rho_weight
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    top = rs.inner(lam_rho, lam_rho)
    mults: Dict[Weight, int] = {lam: 1}
    for mu in order[1:]:
        total = Fraction(0)
        for alpha, pair in zip(rs.positive_roots_fund, pairings):
            k = 1
            while True:
                shifted = tuple(a + k * b for a, b in zip(mu, alpha))
                dom = rs.dominant_representative(shifted)
                if dom not in known:
                    break
                m = mults.get(dom, 0)
                if m:
                    total += m * sum((x * p for x, p in zip(shifted, pair)), Fraction(0))
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        value = 2 * total / (top - rs.inner(mu_rho, mu_rho))
        if value.denominator != 1:
            raise ConsistencyError(f"non-integral Freudenthal multiplicity {value} at {mu} in L{lam}")
        mults[mu] = int(value)
    return mults


def irrep_info(rs: RootSystem, lam: Sequence[int]) -> IrrepInfo:
    """
    Weight multiplicities of L(lam) by Freudenthal's recursion.

    Raises:
        InvalidWeightError: if lam is not dominant
        ConsistencyError: if the recursion disagrees with the Weyl dimension formula
    """
    lam = _require_dominant(rs, lam)
    dominant = _freudenthal(rs, lam)
    weight_mults: Dict[Weight, int] = {}
    for mu, m in dominant.items():
        if not m:
            continue
        for nu in orbit_by_reflections(rs, mu):
            weight_mults[nu] = m
    dim = sum(weight_mults.values())
    expected = weyl_dimension(rs, lam)
    if dim != expected:
        raise ConsistencyError(f"Freudenthal total {dim} != Weyl dimension {expected} for L{lam} of {rs.name}")
    zero = (0,) * rs.rank
    return IrrepInfo(
        highest_weight=lam,
        dim=dim,
        weight_mults=weight_mults,
        zero_weight_dim=weight_mults.get(zero, 0),
        dominant_mults={mu: m for mu, m in dominant.items() if m},
    )


def is_small(rs: RootSystem, lam: Sequence[int], cross_check: bool = False) -> SmallnessVerdict:
    """
    Smallness by the dominance criterion: lam is small iff lam >= 2*eta fails for
    eta = theta and, in non-simply-laced types, eta = theta_s.

    With cross_check, the definitional test (no weight of L(lam) is twice a root)
    is evaluated too and a disagreement raises ConsistencyError.
    """
    lam = _require_dominant(rs, lam)
    theta, theta_s = highest_roots(rs)
    verdict = SmallnessVerdict(small=True)
    for name, eta in (("theta", theta), ("theta_s", theta_s)):
        if eta is None:
            continue
        doubled = tuple(2 * x for x in eta)
        if dominance_geq(rs, lam, doubled):
            verdict = SmallnessVerdict(small=False, witness=name, witness_weight=eta)
            break

    if cross_check:
        weights = set(dominant_weights(rs, lam))
        twice_root = any(rs.dominant_representative(tuple(2 * x for x in a)) in weights for a in rs.positive_roots_fund)
        if twice_root == verdict.small:
            raise ConsistencyError(f"smallness criterion and weight test disagree on {lam} for {rs.name}")
    return verdict


def little_adjoint_weights(rs: RootSystem) -> Set[Weight]:
    """Weights of L(theta_s): the short roots together with 0."""
    _, theta_s = highest_roots(rs)
    if theta_s is None:
        raise InvalidWeightError(f"{rs.name} is simply laced and has no highest short root")
    return set(irrep_info(rs, theta_s).weight_mults)


def graded_multiplicity(rs: RootSystem, lam: Sequence[int], char: GradedCharacter,
                        w_group: Optional[WeylGroup] = None) -> QPoly:
    """
    M_lam(q) = sum_w sign(w) * coefficient(char, w(lam + rho) - rho).

    Args:
        rs: Root system
        lam: Dominant highest weight in fundamental coordinates
        char: Graded character of the exterior algebra, full or targeted
        w_group: Weyl group; looked up from the cache of groups when omitted

    Returns:
        The graded multiplicity, zero outside the root lattice

    Raises:
        ConsistencyError: if the alternating sum has a negative coefficient
    """
    lam = _require_dominant(rs, lam)
    if not rs.in_root_lattice(lam):
        return QPoly.zero()
    if w_group is None:
        w_group = weyl_group_for(rs.type_tag, rs.rank)
    rho = rs.rho_weight
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    positive = negative = 0
    for w in w_group:
        image = w.apply(lam_rho)
        value = char.packed(tuple(a - b for a, b in zip(image, rho)))
        if not value:
            continue
        if w.sign > 0:
            positive += value
        else:
            negative += value
    inner = QPoly.from_dense(char.unpack(positive)) - QPoly.from_dense(char.unpack(negative))
    result = inner * char.cartan_factor()
    if not result.is_polynomial() or not result.is_nonnegative():
        raise ConsistencyError(f"graded multiplicity of L{lam} in the exterior algebra of {rs.name} is {result}")
    return result
