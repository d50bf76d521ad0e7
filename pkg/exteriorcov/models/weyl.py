"""
Weyl group enumeration and action on weights.

Elements are integer matrices acting on fundamental coordinates from the
right (row vectors): w(lam) = lam . M. Each element is identified by the
image of rho, which has trivial stabilizer.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from exteriorcov.exceptions import BudgetExceededError
from exteriorcov.models.rootdata import RootSystem, Weight, build_root_system

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


def _identity(r: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    r = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r)) for i in range(r))


def _apply(matrix: Matrix, weight: Sequence[int]) -> Weight:
    r = len(matrix)
    return tuple(sum(weight[k] * matrix[k][j] for k in range(r) if weight[k]) for j in range(r))


def simple_reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """s_i on row vectors: (lam . S)_j = lam_j - lam_i * A[i][j]."""
    r = rs.rank
    return tuple(
        tuple((1 if k == j else 0) - (rs.cartan_matrix[i][j] if k == i else 0) for j in range(r)) for k in range(r)
    )


def root_reflection_matrix(rs: RootSystem, root_index: int) -> Matrix:
    r = rs.rank
    basis = [tuple(1 if j == k else 0 for j in range(r)) for k in range(r)]
    return tuple(rs.reflect_root(e, root_index) for e in basis)


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: Tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, weight: Sequence[int]) -> Weight:
        return _apply(self.matrix, weight)


@dataclass(frozen=True)
class WeylGroup:
    root_system: RootSystem
    elements: Tuple[WeylElement, ...]
    index: Dict[Weight, int]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def lookup(self, matrix: Matrix) -> WeylElement:
        return self.elements[self.index[_apply(matrix, self.root_system.rho_weight)]]

    def compose(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """The element a o b (apply b first)."""
        return self.lookup(_matmul(b.matrix, a.matrix))

    def inverse(self, a: WeylElement) -> WeylElement:
        return self.element_of_word(tuple(reversed(a.word)))

    def element_of_word(self, word: Sequence[int]) -> WeylElement:
        """The product s_{word[0]} ... s_{word[-1]}."""
        rs = self.root_system
        matrix = _identity(rs.rank)
        for i in word:
            matrix = _matmul(simple_reflection_matrix(rs, i), matrix)
        return self.lookup(matrix)


def generate_weyl(rs: RootSystem, budget: Optional[int] = None) -> WeylGroup:
    """
    Enumerate W breadth-first over reduced words, identity first.

    Raises:
        BudgetExceededError: if prod(m_i + 1) exceeds the budget
    """
    if budget is None:
        from exteriorcov.config import get_settings

        budget = get_settings().weyl_budget
    estimate = rs.weyl_order_estimate
    if estimate > budget:
        raise BudgetExceededError(f"|W({rs.name})| = {estimate} exceeds the Weyl group budget {budget}")

    rho = rs.rho_weight
    reflections = [simple_reflection_matrix(rs, i) for i in range(rs.rank)]
    identity = WeylElement(matrix=_identity(rs.rank), word=(), sign=1)
    elements: List[WeylElement] = [identity]
    index: Dict[Weight, int] = {rho: 0}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for i, s in enumerate(reflections):
            # left multiplication: s_i o current
            matrix = _matmul(current.matrix, s)
            key = _apply(matrix, rho)
            if key in index:
                continue
            element = WeylElement(matrix=matrix, word=(i,) + current.word, sign=-current.sign)
            index[key] = len(elements)
            elements.append(element)
            queue.append(element)

    if len(elements) != estimate:
        logger.warning(f"W({rs.name}) has {len(elements)} elements, exponents predict {estimate}")
    logger.debug(f"Generated W({rs.name}) with {len(elements)} elements")
    return WeylGroup(root_system=rs, elements=tuple(elements), index=index)


@lru_cache(maxsize=32)
def weyl_group_for(type_tag: str, rank: int) -> WeylGroup:
    return generate_weyl(build_root_system(type_tag, rank))


def orbit(rs: RootSystem, w_group: WeylGroup, mu: Sequence[int]) -> Set[Weight]:
    return {w.apply(mu) for w in w_group}


def orbit_by_reflections(rs: RootSystem, mu: Sequence[int]) -> Set[Weight]:
    """The W-orbit of mu by closure under simple reflections (no group needed)."""
    start = tuple(mu)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in range(rs.rank):
            image = rs.reflect(current, i)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def sign_sum(w_group: WeylGroup) -> int:
    return sum(w.sign for w in w_group)


def _closure_order(rs: RootSystem, generators: Iterable[Matrix]) -> int:
    generators = list(generators)
    rho = rs.rho_weight
    start = _identity(rs.rank)
    seen = {rho}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in generators:
            matrix = _matmul(current, g)
            key = _apply(matrix, rho)
            if key not in seen:
                seen.add(key)
                queue.append(matrix)
    return len(seen)


def long_reflection_subgroup_order(rs: RootSystem) -> int:
    """|H|, H the normal subgroup generated by reflections in long roots."""
    return _closure_order(rs, (root_reflection_matrix(rs, k) for k in rs.long_root_indices()))


def short_parabolic_order(rs: RootSystem) -> int:
    """|W_s|, the parabolic subgroup generated by the short simple reflections."""
    short = [i for i in range(rs.rank) if rs.simple_norms[i] != rs.long_norm]
    return _closure_order(rs, (simple_reflection_matrix(rs, i) for i in short))
