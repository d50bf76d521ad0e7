"""
Simple root systems of types A-G.

Every root system is built in a standard ambient realization with exact
rational coordinates, normalized so that long roots have squared length 2.
Weights are integer tuples in the fundamental-weight basis; the RootSystem
converts them to root-basis coordinates when dominance or lattice questions
are asked.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from exteriorcov.exceptions import InvalidRootSystemError, InvalidWeightError

logger = logging.getLogger(__name__)

# Integer coordinates on the fundamental weights omega_1..omega_r.
Weight = Tuple[int, ...]
# Exact coordinates in the ambient space or in the simple-root basis.
Vector = Tuple[Fraction, ...]

TYPE_TAGS = ("A", "B", "C", "D", "E", "F", "G")

_HALF = Fraction(1, 2)


def _valid(type_tag: str, rank: int) -> bool:
    if type_tag == "A":
        return rank >= 1
    if type_tag in ("B", "C"):
        return rank >= 2
    if type_tag == "D":
        return rank >= 4
    if type_tag == "E":
        return rank in (6, 7, 8)
    if type_tag == "F":
        return rank == 4
    if type_tag == "G":
        return rank == 2
    return False


def _unit(dim: int, entries: Dict[int, Fraction]) -> Vector:
    return tuple(Fraction(entries.get(k, 0)) for k in range(dim))


def _ambient_simple_roots(type_tag: str, rank: int) -> Tuple[int, List[Vector], Fraction]:
    """Return (ambient dimension, simple roots, scale of the dot product)."""
    if type_tag == "A":
        dim = rank + 1
        return dim, [_unit(dim, {i: 1, i + 1: -1}) for i in range(rank)], Fraction(1)
    if type_tag in ("B", "C", "D"):
        dim = rank
        roots = [_unit(dim, {i: 1, i + 1: -1}) for i in range(rank - 1)]
        if type_tag == "B":
            roots.append(_unit(dim, {rank - 1: 1}))
            return dim, roots, Fraction(1)
        if type_tag == "C":
            roots.append(_unit(dim, {rank - 1: 2}))
            return dim, roots, _HALF
        roots.append(_unit(dim, {rank - 2: 1, rank - 1: 1}))
        return dim, roots, Fraction(1)
    if type_tag == "G":
        return 3, [_unit(3, {0: 1, 1: -1}), _unit(3, {0: -2, 1: 1, 2: 1})], Fraction(1, 3)
    if type_tag == "F":
        return 4, [
            _unit(4, {1: 1, 2: -1}),
            _unit(4, {2: 1, 3: -1}),
            _unit(4, {3: 1}),
            _unit(4, {0: _HALF, 1: -_HALF, 2: -_HALF, 3: -_HALF}),
        ], Fraction(1)
    # E_6, E_7, E_8 as the first `rank` nodes of the E_8 diagram in R^8.
    e8 = [
        _unit(8, {0: _HALF, 7: _HALF, 1: -_HALF, 2: -_HALF, 3: -_HALF, 4: -_HALF, 5: -_HALF, 6: -_HALF}),
        _unit(8, {0: 1, 1: 1}),
        _unit(8, {1: 1, 0: -1}),
        _unit(8, {2: 1, 1: -1}),
        _unit(8, {3: 1, 2: -1}),
        _unit(8, {4: 1, 3: -1}),
        _unit(8, {5: 1, 4: -1}),
        _unit(8, {6: 1, 5: -1}),
    ]
    return 8, e8[:rank], Fraction(1)


def _positive_root_coordinates(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """
    Positive roots in the simple-root basis by the root-string algorithm.

    For a root beta and simple root alpha_i, the string beta - p*alpha_i .. beta + q*alpha_i
    satisfies p - q = <beta, alpha_i^vee>, so beta + alpha_i is a root iff q > 0.
    """
    r = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    known = set(simple)
    roots = list(simple)
    layer = simple
    while layer:
        next_layer = []
        for beta in layer:
            for i in range(r):
                pairing = sum(beta[j] * cartan[j][i] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        roots.append(up)
                        next_layer.append(up)
        layer = next_layer
    return sorted(roots, key=lambda c: (sum(c), c))


def _dual_partition(parts: Sequence[int]) -> List[int]:
    if not parts:
        return []
    return [sum(1 for p in parts if p >= j) for j in range(1, max(parts) + 1)]


@dataclass(frozen=True)
class RootSystem:
    type_tag: str
    rank: int
    ambient_dim: int
    simple_roots: Tuple[Vector, ...]
    form_scale: Fraction
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    inverse_cartan: Tuple[Tuple[Fraction, ...], ...]
    simple_norms: Tuple[Fraction, ...]
    positive_root_coords: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Vector, ...]
    positive_roots_fund: Tuple[Weight, ...]
    positive_root_norms: Tuple[Fraction, ...]
    coroot_coeffs: Tuple[Tuple[int, ...], ...]
    fundamental_weights: Tuple[Vector, ...]
    weight_gram: Tuple[Tuple[Fraction, ...], ...]
    rho: Vector
    exponents: Tuple[int, ...]
    theta: Vector
    theta_s: Optional[Vector]
    theta_index: int
    theta_s_index: Optional[int]
    r_s: int
    r_l: int

    # -- naming and sizes -------------------------------------------------

    @property
    def name(self) -> str:
        return f"{self.type_tag}{self.rank}"

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def simply_laced(self) -> bool:
        return self.r_s == 0

    @property
    def long_norm(self) -> Fraction:
        return max(self.simple_norms)

    @property
    def coxeter_number(self) -> int:
        return self.exponents[-1] + 1

    @property
    def weyl_order_estimate(self) -> int:
        return prod(m + 1 for m in self.exponents)

    @property
    def rho_weight(self) -> Weight:
        return (1,) * self.rank

    @property
    def roots_fund(self) -> Tuple[Weight, ...]:
        """All roots (positive first, then their negatives) in fundamental coordinates."""
        return self.positive_roots_fund + tuple(tuple(-x for x in a) for a in self.positive_roots_fund)

    def is_long(self, index: int) -> bool:
        return self.positive_root_norms[index] == self.long_norm

    def short_root_indices(self) -> List[int]:
        return [i for i in range(len(self.positive_roots)) if not self.is_long(i)]

    def long_root_indices(self) -> List[int]:
        return [i for i in range(len(self.positive_roots)) if self.is_long(i)]

    # -- weights ----------------------------------------------------------

    def check_weight(self, weight: Sequence[int]) -> Weight:
        if len(weight) != self.rank:
            raise InvalidWeightError(f"weight {tuple(weight)} has length {len(weight)}, expected {self.rank} for {self.name}")
        return tuple(int(x) for x in weight)

    def to_root_basis(self, weight: Sequence[int]) -> Vector:
        r = self.rank
        return tuple(
            sum((weight[j] * self.inverse_cartan[j][i] for j in range(r)), Fraction(0)) for i in range(r)
        )

    def from_root_basis(self, coords: Sequence[Fraction]) -> Weight:
        r = self.rank
        values = [sum((Fraction(coords[j]) * self.cartan_matrix[j][i] for j in range(r)), Fraction(0)) for i in range(r)]
        if any(v.denominator != 1 for v in values):
            raise InvalidWeightError(f"root-basis vector {tuple(coords)} is not an integral weight")
        return tuple(int(v) for v in values)

    def in_root_lattice(self, weight: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.to_root_basis(weight))

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        r = self.rank
        return sum(
            (lam[i] * mu[j] * self.weight_gram[i][j] for i in range(r) for j in range(r) if lam[i] and mu[j]),
            Fraction(0),
        )

    def coroot_pairing(self, weight: Sequence[int], root_index: int) -> int:
        """<weight, alpha^vee> for the positive root with the given index."""
        return sum(c * x for c, x in zip(self.coroot_coeffs[root_index], weight))

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(x >= 0 for x in weight)

    def reflect(self, weight: Sequence[int], i: int) -> Weight:
        """Simple reflection s_i in fundamental coordinates."""
        k = weight[i]
        if not k:
            return tuple(weight)
        row = self.cartan_matrix[i]
        return tuple(w - k * a for w, a in zip(weight, row))

    def reflect_root(self, weight: Sequence[int], root_index: int) -> Weight:
        k = self.coroot_pairing(weight, root_index)
        alpha = self.positive_roots_fund[root_index]
        return tuple(w - k * a for w, a in zip(weight, alpha))

    def dominant_representative(self, weight: Sequence[int]) -> Weight:
        current = tuple(weight)
        while True:
            for i, x in enumerate(current):
                if x < 0:
                    current = self.reflect(current, i)
                    break
            else:
                return current

    def add(self, lam: Sequence[int], mu: Sequence[int], scale: int = 1) -> Weight:
        return tuple(a + scale * b for a, b in zip(lam, mu))

    def weight_of_root(self, root_index: int) -> Weight:
        return self.positive_roots_fund[root_index]


def build_root_system(type_tag: str, rank: int) -> RootSystem:
    """
    Construct the root system of type (type_tag, rank).

    Raises:
        InvalidRootSystemError: if the pair names no simple Lie algebra
    """
    type_tag = str(type_tag).upper()
    if type_tag not in TYPE_TAGS or not isinstance(rank, int) or not _valid(type_tag, rank):
        raise InvalidRootSystemError(
            f"no simple root system of type {type_tag}{rank}: expected A r>=1, B/C r>=2, D r>=4, E r in 6..8, F4 or G2"
        )

    ambient_dim, simple, scale = _ambient_simple_roots(type_tag, rank)

    def inner(u: Vector, v: Vector) -> Fraction:
        return scale * sum((a * b for a, b in zip(u, v)), Fraction(0))

    norms = tuple(inner(a, a) for a in simple)
    cartan_frac = [[2 * inner(simple[i], simple[j]) / norms[j] for j in range(rank)] for i in range(rank)]
    if any(x.denominator != 1 for row in cartan_frac for x in row):
        raise InvalidRootSystemError(f"non-integral Cartan matrix for {type_tag}{rank}")
    cartan = tuple(tuple(int(x) for x in row) for row in cartan_frac)

    inverse = sympy.Matrix(cartan).inv()
    inverse_cartan = tuple(
        tuple(Fraction(int(sympy.fraction(inverse[i, j])[0]), int(sympy.fraction(inverse[i, j])[1])) for j in range(rank))
        for i in range(rank)
    )

    coords = _positive_root_coordinates(cartan)

    def ambient(c: Sequence[int]) -> Vector:
        return tuple(sum((c[k] * simple[k][d] for k in range(rank)), Fraction(0)) for d in range(ambient_dim))

    positive_roots = tuple(ambient(c) for c in coords)
    positive_fund = tuple(tuple(sum(c[j] * cartan[j][i] for j in range(rank)) for i in range(rank)) for c in coords)
    root_norms = tuple(inner(a, a) for a in positive_roots)
    coroot = []
    for c, norm in zip(coords, root_norms):
        values = [c[k] * norms[k] / norm for k in range(rank)]
        coroot.append(tuple(int(v) for v in values))

    fundamental = tuple(
        tuple(sum((inverse_cartan[i][k] * simple[k][d] for k in range(rank)), Fraction(0)) for d in range(ambient_dim))
        for i in range(rank)
    )
    gram = tuple(tuple(inverse_cartan[i][j] * norms[j] / 2 for j in range(rank)) for i in range(rank))
    rho = tuple(sum((a[d] for a in positive_roots), Fraction(0)) / 2 for d in range(ambient_dim))

    heights: Dict[int, int] = {}
    for c in coords:
        heights[sum(c)] = heights.get(sum(c), 0) + 1
    height_partition = [heights[h] for h in sorted(heights)]
    exponents = tuple(sorted(_dual_partition(height_partition)))

    long_norm = max(norms)
    theta_index = max(range(len(coords)), key=lambda i: (sum(coords[i]), coords[i]))
    short = [i for i in range(len(coords)) if root_norms[i] != long_norm]
    theta_s_index = max(short, key=lambda i: (sum(coords[i]), coords[i])) if short else None
    r_s = sum(1 for n in norms if n != long_norm)

    rs = RootSystem(
        type_tag=type_tag,
        rank=rank,
        ambient_dim=ambient_dim,
        simple_roots=tuple(simple),
        form_scale=scale,
        cartan_matrix=cartan,
        inverse_cartan=inverse_cartan,
        simple_norms=norms,
        positive_root_coords=tuple(coords),
        positive_roots=positive_roots,
        positive_roots_fund=positive_fund,
        positive_root_norms=root_norms,
        coroot_coeffs=tuple(coroot),
        fundamental_weights=fundamental,
        weight_gram=gram,
        rho=rho,
        exponents=exponents,
        theta=positive_roots[theta_index],
        theta_s=positive_roots[theta_s_index] if theta_s_index is not None else None,
        theta_index=theta_index,
        theta_s_index=theta_s_index,
        r_s=r_s,
        r_l=rank - r_s,
    )
    logger.debug(f"Built {rs.name}: |positive roots|={len(coords)}, exponents={exponents}")
    return rs


def highest_roots(rs: RootSystem) -> Tuple[Weight, Optional[Weight]]:
    """The highest root and, for non-simply-laced types, the highest short root."""
    theta = rs.positive_roots_fund[rs.theta_index]
    theta_s = rs.positive_roots_fund[rs.theta_s_index] if rs.theta_s_index is not None else None
    return theta, theta_s


def dominance_geq(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff lam - mu is a nonnegative integral combination of simple roots."""
    diff = rs.to_root_basis(tuple(a - b for a, b in zip(lam, mu)))
    return all(c.denominator == 1 and c >= 0 for c in diff)
