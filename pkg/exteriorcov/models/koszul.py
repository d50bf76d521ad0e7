"""
The exterior algebra of sl(n) with its Chevalley-Eilenberg boundary and the
adjoint differential, and the transport of the covariants Psi, Phi into it.

Forms on sl(n) are identified with wedges through the trace form
B(X, Y) = tr(XY); the dual of E_ij is E_ji.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from exteriorcov.models.matrices import Number, RationalMatrix, determinant
from exteriorcov.models.slnpairing import canonical_element, monomial_orderings_sum, sl_basis

logger = logging.getLogger(__name__)

Indices = Tuple[int, ...]


def _normal_order(indices: Sequence[int]) -> Optional[Tuple[Indices, int]]:
    """Sort basis indices, returning the sign of the sort; None on a repeat."""
    items = list(indices)
    if len(set(items)) != len(items):
        return None
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return tuple(items), sign


class WedgeElement:
    """Rational combination of basis wedges z_i1 ^ ... ^ z_ik with i1 < ... < ik."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Indices, Number]] = None):
        self.terms: Dict[Indices, Fraction] = {}
        for key, value in (terms or {}).items():
            self._accumulate(key, value)

    def _accumulate(self, indices: Sequence[int], value: Number) -> None:
        if not value:
            return
        ordered = _normal_order(indices)
        if ordered is None:
            return
        key, sign = ordered
        total = self.terms.get(key, Fraction(0)) + sign * Fraction(value)
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    @classmethod
    def basis(cls, *indices: int) -> "WedgeElement":
        return cls({tuple(indices): 1})

    @classmethod
    def from_vectors(cls, vectors: Sequence[Mapping[int, Number]]) -> "WedgeElement":
        """v_1 ^ ... ^ v_k for vectors given by their basis coordinates."""
        current = cls({(): 1})
        for vector in vectors:
            current = current.wedge(cls({(k,): c for k, c in vector.items()}))
        return current

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "WedgeElement") -> "WedgeElement":
        result = WedgeElement(self.terms)
        for key, value in other.terms.items():
            result._accumulate(key, value)
        return result

    def __neg__(self) -> "WedgeElement":
        return WedgeElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "WedgeElement") -> "WedgeElement":
        return self + (-other)

    def __mul__(self, scalar: Number) -> "WedgeElement":
        return WedgeElement({k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def wedge(self, other: "WedgeElement") -> "WedgeElement":
        result = WedgeElement()
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result._accumulate(left + right, a * b)
        return result

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({len(k) for k in self.terms})

    def ratio_to(self, other: "WedgeElement") -> Optional[Fraction]:
        """The scalar c with self = c * other, or None if there is none."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        key, value = next(iter(other.terms.items()))
        c = self.terms.get(key, Fraction(0)) / value
        return c if self == other * c else None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"WedgeElement({dict(sorted(self.terms.items()))})"

    def format(self, labels: Sequence[str]) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for key, value in sorted(self.terms.items()):
            wedge = "^".join(labels[i] for i in key) or "1"
            parts.append(f"{value}*{wedge}")
        return " + ".join(parts)


class SlAlgebra:
    """sl(n) with its basis, trace-form Gram matrix, dual basis and structure constants."""

    def __init__(self, n: int):
        basis = sl_basis(n)
        self.n = n
        self.labels = [label for label, _ in basis]
        self.matrices = [m for _, m in basis]
        self.dim = len(basis)
        offdiagonal = [(i, j) for i in range(n) for j in range(n) if i != j]
        self._offdiagonal = {ij: pos for pos, ij in enumerate(offdiagonal)}
        self.gram = [[(a * b).trace() for b in self.matrices] for a in self.matrices]
        inverse = sympy.Matrix(self.gram).inv()
        self.dual: List[Dict[int, Fraction]] = []
        for a in range(self.dim):
            row = {}
            for b in range(self.dim):
                entry = inverse[a, b]
                if entry != 0:
                    row[b] = Fraction(int(entry.p), int(entry.q))
            self.dual.append(row)
        self.structure: List[List[Dict[int, Fraction]]] = [
            [self.coordinates(x.commutator(y)) for y in self.matrices] for x in self.matrices
        ]
        self._delta_basis = [self._delta_vector(b) for b in range(self.dim)]
        logger.debug(f"Built sl({n}) with {self.dim} basis vectors")

    def coordinates(self, X: RationalMatrix) -> Dict[int, Fraction]:
        """Coordinates of a traceless matrix in the E_ij, H_k basis."""
        if X.n != self.n or not X.is_traceless():
            raise ValueError("coordinates need a traceless matrix of the right size")
        coords: Dict[int, Fraction] = {}
        for (i, j), pos in self._offdiagonal.items():
            if X[i, j]:
                coords[pos] = Fraction(X[i, j])
        running = Fraction(0)
        first_h = self.n * (self.n - 1)
        for k in range(self.n - 1):
            running += X[k, k]
            if running:
                coords[first_h + k] = running
        return coords

    def bracket(self, a: int, b: int) -> Dict[int, Fraction]:
        return self.structure[a][b]

    def _delta_vector(self, b: int) -> WedgeElement:
        # delta(z_b) = -1/2 sum_a z^a ^ [z_a, z_b]
        result = WedgeElement()
        for a in range(self.dim):
            bracket = self.structure[a][b]
            if not bracket:
                continue
            for d, dc in self.dual[a].items():
                for e, ec in bracket.items():
                    result._accumulate((d, e), Fraction(-1, 2) * dc * ec)
        return result

    def dual_vector(self, a: int) -> Dict[int, Fraction]:
        return self.dual[a]

    def pair(self, x: WedgeElement, y: WedgeElement) -> Fraction:
        """<x_1^..^x_k, y_1^..^y_k> = det B(x_i, y_j), extended bilinearly."""
        total = Fraction(0)
        for left, a in x.terms.items():
            for right, b in y.terms.items():
                if len(left) != len(right):
                    continue
                if not left:
                    total += a * b
                    continue
                total += a * b * determinant([[self.gram[i][j] for j in right] for i in left])
        return total


@lru_cache(maxsize=None)
def sl_algebra(n: int) -> SlAlgebra:
    return SlAlgebra(n)


def koszul_boundary(w: WedgeElement, algebra: SlAlgebra) -> WedgeElement:
    """
    d(x_1^...^x_k) = sum_{i<j} (-1)^(i+j+1) [x_i, x_j] ^ x_1 ^..^ (omit i, j) ^..^ x_k,
    positions counted from 1, so that d(e^f) = [e, f].
    """
    result = WedgeElement()
    for key, value in w.terms.items():
        for p, q in combinations(range(len(key)), 2):
            bracket = algebra.bracket(key[p], key[q])
            if not bracket:
                continue
            sign = -1 if (p + q) % 2 == 0 else 1
            rest = key[:p] + key[p + 1:q] + key[q + 1:]
            for c, coeff in bracket.items():
                result._accumulate((c,) + rest, sign * value * coeff)
    return result


def koszul_delta(w: WedgeElement, algebra: SlAlgebra) -> WedgeElement:
    """The adjoint of the boundary under the trace form: an odd derivation of degree +1."""
    result = WedgeElement()
    for key, value in w.terms.items():
        for p, b in enumerate(key):
            sign = -1 if p % 2 else 1
            for pair, coeff in algebra._delta_basis[b].terms.items():
                result._accumulate(key[:p] + pair + key[p + 1:], sign * value * coeff)
    return result


def transport_form(values: Mapping[Indices, Number], algebra: SlAlgebra) -> WedgeElement:
    """The wedge sum_I xi(z_I) z^I of an alternating form given on increasing index tuples."""
    result = WedgeElement()
    for key, value in values.items():
        if not value:
            continue
        result = result + WedgeElement.from_vectors([algebra.dual_vector(i) for i in key]) * value
    return result


def _covariant_values(a: Sequence[int], algebra: SlAlgebra, arity: int, last_identity: bool) -> Dict[Indices, Fraction]:
    weight = Fraction(prod(factorial(x) for x in a), factorial(len(a)))
    values = {}
    for key in combinations(range(algebra.dim), arity):
        total = monomial_orderings_sum(a, [algebra.matrices[i] for i in key], last_identity)
        if total:
            values[key] = weight * total
    return values


def psi_wedge(a: Sequence[int], algebra: SlAlgebra) -> WedgeElement:
    """Psi(e^a) as an element of the (n-1)-th exterior power."""
    return transport_form(_covariant_values(a, algebra, algebra.n - 1, True), algebra)


def phi_wedge(a: Sequence[int], algebra: SlAlgebra) -> WedgeElement:
    return transport_form(_covariant_values(a, algebra, algebra.n, False), algebra)


@dataclass
class KoszulReport:
    n: int
    boundary_squares_zero: bool = True
    delta_squares_zero: bool = True
    boundary_zero: bool = True
    delta_scalar: Optional[Fraction] = None
    delta_proportional: bool = True
    laplacian_scalar: Optional[Fraction] = None
    laplacian_uniform: bool = True
    psi_top_scalar: Optional[Fraction] = None
    offending: List[str] = field(default_factory=list)

    @property
    def passes(self) -> bool:
        return (
            self.boundary_squares_zero
            and self.delta_squares_zero
            and self.boundary_zero
            and self.delta_proportional
            and bool(self.delta_scalar)
            and self.laplacian_uniform
            and bool(self.laplacian_scalar)
            and bool(self.psi_top_scalar)
        )


def _record_scalar(report: KoszulReport, attr: str, flag: str, found: Optional[Fraction], label: str) -> None:
    current = getattr(report, attr)
    if found is None or (current is not None and found != current):
        setattr(report, flag, False)
        report.offending.append(f"{label}: ratio {found} against {current}")
    elif current is None:
        setattr(report, attr, found)


def verify_koszul(n: int) -> KoszulReport:
    """
    Check the differentials square to zero, and on every monomial e^a of S^n V
    that d Psi = 0, delta Psi = c0 Phi and d delta Psi = c Psi with one c0, c.
    """
    algebra = sl_algebra(n)
    report = KoszulReport(n=n)

    for degree in (1, 2, 3):
        if degree > algebra.dim:
            break
        for key in combinations(range(algebra.dim), degree):
            w = WedgeElement.basis(*key)
            if degree >= 2 and not koszul_boundary(koszul_boundary(w, algebra), algebra).is_zero():
                report.boundary_squares_zero = False
                report.offending.append(f"d d {w.format(algebra.labels)} != 0")
            if degree <= 2 and not koszul_delta(koszul_delta(w, algebra), algebra).is_zero():
                report.delta_squares_zero = False
                report.offending.append(f"delta delta {w.format(algebra.labels)} != 0")

    top = tuple([n] + [0] * (n - 1))
    for a, _ in canonical_element(n):
        psi = psi_wedge(a, algebra)
        label = "e^" + "".join(str(x) for x in a)
        if not koszul_boundary(psi, algebra).is_zero():
            report.boundary_zero = False
            report.offending.append(f"{label}: d Psi != 0")
        delta_psi = koszul_delta(psi, algebra)
        _record_scalar(report, "delta_scalar", "delta_proportional", delta_psi.ratio_to(phi_wedge(a, algebra)), label)
        _record_scalar(report, "laplacian_scalar", "laplacian_uniform",
                       koszul_boundary(delta_psi, algebra).ratio_to(psi), label)
        if a == top:
            target = WedgeElement.from_vectors([{algebra.labels.index(f"E1{j}"): 1} for j in range(2, n + 1)])
            report.psi_top_scalar = psi.ratio_to(target)
            if not report.psi_top_scalar:
                report.offending.append(f"{label}: Psi is not a multiple of the E_1j wedge")
    logger.info(f"Koszul checks at n={n}: delta scalar {report.delta_scalar}, Laplacian {report.laplacian_scalar}")
    return report
