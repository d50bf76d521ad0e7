"""
Census of small modules and the type A partition scan.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Set, Tuple

from exteriorcov.exceptions import MarginCertificateError
from exteriorcov.models.closedforms import (
    FreenessVerdict,
    Partition,
    freeness_divisibility,
    partitions,
    partition_to_weight,
    stembridge_gm,
)
from exteriorcov.models.gradedchar import GradedCharacter
from exteriorcov.models.qpoly import QPoly
from exteriorcov.models.repthy import SmallnessVerdict, graded_multiplicity, irrep_info, is_small, weyl_dimension
from exteriorcov.models.rootdata import RootSystem, Weight, build_root_system, highest_roots

logger = logging.getLogger(__name__)

TRIVIAL = "trivial"
ADJOINT = "adjoint"
LITTLE_ADJOINT = "little_adjoint"
SYMMETRIC_POWER = "symmetric_power"
SYMMETRIC_POWER_DUAL = "symmetric_power_dual"
OTHER = "other"


@dataclass
class CensusRow:
    weight: Weight
    dim: int
    zero_weight_dim: int
    smallness: SmallnessVerdict
    multiplicity: QPoly
    reeder_ok: bool
    verdict: FreenessVerdict
    classification: str

    @property
    def passes(self) -> bool:
        return self.verdict.passes


@dataclass
class CensusReport:
    type_tag: str
    rank: int
    box_bound: int
    rows: List[CensusRow] = field(default_factory=list)
    incomplete: bool = False
    reason: Optional[str] = None

    @property
    def passes(self) -> List[CensusRow]:
        return [row for row in self.rows if row.passes]

    def expected_classifications(self) -> Set[str]:
        rs = build_root_system(self.type_tag, self.rank)
        return expected_pass_classes(rs)

    def discrepancies(self) -> List[str]:
        """Every way the report departs from the expected census outcome."""
        found = []
        expected = self.expected_classifications()
        for row in self.rows:
            if not row.reeder_ok:
                found.append(f"{row.weight}: M(1) = {row.multiplicity.at_one()} breaks the 2^r * dim L_0 count")
            if row.passes and row.classification == OTHER:
                found.append(f"{row.weight}: unexpected free covariant module")
            if not row.passes and row.classification in expected:
                found.append(f"{row.weight}: expected {row.classification} to pass the freeness test")
        if not self.incomplete:
            seen = {row.classification for row in self.rows}
            for name in sorted(expected - seen):
                found.append(f"no row classified {name}")
        return found


def expected_pass_classes(rs: RootSystem) -> Set[str]:
    expected = {TRIVIAL, ADJOINT}
    if not rs.simply_laced:
        expected.add(LITTLE_ADJOINT)
    if rs.type_tag == "A" and rs.rank >= 2:
        expected.update({SYMMETRIC_POWER, SYMMETRIC_POWER_DUAL})
    return expected


def classify(rs: RootSystem, lam: Sequence[int]) -> str:
    lam = tuple(lam)
    theta, theta_s = highest_roots(rs)
    if not any(lam):
        return TRIVIAL
    if lam == theta:
        return ADJOINT
    if theta_s is not None and lam == theta_s:
        return LITTLE_ADJOINT
    if rs.type_tag == "A":
        n = rs.rank + 1
        first = (n,) + (0,) * (rs.rank - 1)
        if lam == first:
            return SYMMETRIC_POWER
        if lam == tuple(reversed(first)):
            return SYMMETRIC_POWER_DUAL
    return OTHER


def enumerate_small_weights(rs: RootSystem, box_bound: int = 10) -> List[Weight]:
    """
    Dominant root-lattice small weights with every coordinate <= box_bound.

    Raises:
        MarginCertificateError: if a small weight has a coordinate above box_bound - 2
    """
    if box_bound < 1:
        raise ValueError(f"box_bound must be >= 1, got {box_bound}")
    found = []
    for weight in product(range(box_bound + 1), repeat=rs.rank):
        if rs.in_root_lattice(weight) and is_small(rs, weight):
            found.append(weight)
    crowded = [w for w in found if max(w) > box_bound - 2]
    if crowded:
        raise MarginCertificateError(
            f"small weight {crowded[0]} of {rs.name} is within 2 of the box bound {box_bound}; rerun with a larger box"
        )
    return sorted(found, key=lambda w: (weyl_dimension(rs, w), w))


def census_row(rs: RootSystem, lam: Weight, char: GradedCharacter) -> CensusRow:
    info = irrep_info(rs, lam)
    multiplicity = graded_multiplicity(rs, lam, char)
    return CensusRow(
        weight=lam,
        dim=info.dim,
        zero_weight_dim=info.zero_weight_dim,
        smallness=is_small(rs, lam),
        multiplicity=multiplicity,
        reeder_ok=multiplicity.at_one() == 2 ** rs.rank * info.zero_weight_dim,
        verdict=freeness_divisibility(multiplicity, rs, info.zero_weight_dim),
        classification=classify(rs, lam),
    )


_worker: Dict[str, object] = {}


def _init_worker(type_tag: str, rank: int, mode: str, terms: Dict[Tuple[int, ...], int], bits: int) -> None:
    rs = build_root_system(type_tag, rank)
    _worker["rs"] = rs
    _worker["char"] = GradedCharacter(rs, mode, terms, bits)


def _worker_row(lam: Weight) -> CensusRow:
    return census_row(_worker["rs"], lam, _worker["char"])


def run_census(rs: RootSystem, char: GradedCharacter, box_bound: int = 10, max_box_bound: int = 40,
               budget_seconds: Optional[float] = None, jobs: int = 1) -> CensusReport:
    """
    One row per small weight, ordered by (dim, coordinates).

    The box grows by 2 until the margin certificate holds. When the wall-clock
    budget runs out the rows computed so far are returned with incomplete set.

    Raises:
        MarginCertificateError: if the box would have to grow past max_box_bound
    """
    started = time.monotonic()
    bound = box_bound
    while True:
        try:
            weights = enumerate_small_weights(rs, bound)
            break
        except MarginCertificateError:
            if bound + 2 > max_box_bound:
                raise
            bound += 2
            logger.info(f"Growing the census box for {rs.name} to {bound}")

    report = CensusReport(type_tag=rs.type_tag, rank=rs.rank, box_bound=bound)

    def out_of_time() -> bool:
        return budget_seconds is not None and time.monotonic() - started > budget_seconds

    if jobs > 1 and len(weights) > 1:
        with ProcessPoolExecutor(
            max_workers=jobs,
            initializer=_init_worker,
            initargs=(rs.type_tag, rs.rank, char.mode, char.terms, char.bits),
        ) as pool:
            futures = [pool.submit(_worker_row, lam) for lam in weights]
            for future in futures:
                if out_of_time():
                    for pending in futures:
                        pending.cancel()
                    break
                report.rows.append(future.result())
    else:
        for lam in weights:
            if out_of_time():
                break
            report.rows.append(census_row(rs, lam, char))
            logger.debug(f"Census row {lam} of {rs.name} done")

    if len(report.rows) < len(weights):
        report.incomplete = True
        report.reason = f"budget of {budget_seconds}s exhausted after {len(report.rows)} of {len(weights)} rows"
        logger.warning(f"Census of {rs.name} incomplete: {report.reason}")
    logger.info(f"Census of {rs.name}: {len(report.rows)} small weights, {len(report.passes)} passes")
    return report


@dataclass
class PartitionScanRow:
    partition: Partition
    weight: Weight
    multiplicity: QPoly
    divisible: bool
    quotient: Optional[QPoly]
    expected_divisible: bool

    @property
    def consistent(self) -> bool:
        return self.divisible == self.expected_divisible


@dataclass
class PartitionScanReport:
    n: int
    divisor: QPoly
    rows: List[PartitionScanRow] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(row.consistent for row in self.rows)

    @property
    def divisible_partitions(self) -> List[Partition]:
        return [row.partition for row in self.rows if row.divisible]


def type_a_partition_scan(n: int) -> PartitionScanReport:
    """Divisibility of the hook-formula multiplicity by prod_{i=1}^{n-2}(1+q^{2i+1})."""
    if n < 2:
        raise ValueError(f"partition scan needs n >= 2, got {n}")
    if not 4 <= n <= 8:
        logger.warning(f"partition scan at n={n} is outside the range 4..8")
    divisor = QPoly.product(QPoly.binomial(2 * i + 1) for i in range(1, n - 1))
    free = {(n,), (2,) + (1,) * (n - 2)}
    report = PartitionScanReport(n=n, divisor=divisor)
    for p in partitions(n):
        if p.parts == (1,) * n:
            continue
        multiplicity = stembridge_gm(p)
        quotient = multiplicity.try_div(divisor)
        report.rows.append(PartitionScanRow(
            partition=p,
            weight=partition_to_weight(p),
            multiplicity=multiplicity,
            divisible=quotient is not None,
            quotient=quotient,
            expected_divisible=p.parts in free,
        ))
    return report
