"""
The sl(n) verification suite: the pairing identity, the Koszul checks and
the degree ledger of the S^n V covariants against the graded multiplicity.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from exteriorcov.models.gradedchar import FULL, GradedCharacter, lambda_g_character
from exteriorcov.models.koszul import KoszulReport, verify_koszul
from exteriorcov.models.qpoly import QPoly
from exteriorcov.models.repthy import graded_multiplicity
from exteriorcov.models.rootdata import Weight, build_root_system
from exteriorcov.models.slnpairing import PairingReport, verify_pairing

logger = logging.getLogger(__name__)


@dataclass
class DegreeLedger:
    weight: Weight
    measured: QPoly
    expected: QPoly

    @property
    def matches(self) -> bool:
        return self.measured == self.expected

    @property
    def invariant_count_ok(self) -> bool:
        """The covariant space has dimension 2^(n-1)."""
        return self.measured.at_one() == 2 ** (len(self.weight))


@dataclass
class SlReport:
    n: int
    seed: int
    pairing: PairingReport
    koszul: Optional[KoszulReport]
    ledger: DegreeLedger

    @property
    def passes(self) -> bool:
        return (
            self.pairing.passes
            and (self.koszul is None or self.koszul.passes)
            and self.ledger.matches
            and self.ledger.invariant_count_ok
        )


def symmetric_power_ledger(n: int) -> QPoly:
    """(q^(n-1) + q^n) * prod_{i=1}^{n-2} (1 + q^(2i+1)): generators Psi, Phi over T_1..T_{n-2}."""
    generators = QPoly.monomial(n - 1) + QPoly.monomial(n)
    return generators * QPoly.product(QPoly.binomial(2 * i + 1) for i in range(1, n - 1))


def degree_ledger(n: int, char: Optional[GradedCharacter] = None) -> DegreeLedger:
    rs = build_root_system("A", n - 1)
    if char is None:
        char = lambda_g_character(rs, FULL)
    weight = (n,) + (0,) * (n - 2)
    return DegreeLedger(weight=weight, measured=graded_multiplicity(rs, weight, char),
                        expected=symmetric_power_ledger(n))


def verify_sl(n: int, trials: int = 20, seed: int = 0, jobs: int = 1, koszul: bool = True,
              char: Optional[GradedCharacter] = None) -> SlReport:
    """Run every sl(n) identity; the report names each failing input."""
    if n < 2:
        raise ValueError(f"sl(n) verification needs n >= 2, got {n}")
    if n > 4:
        logger.warning(f"sl({n}) verification is far beyond the tested budget")
    report = SlReport(
        n=n,
        seed=seed,
        pairing=verify_pairing(n, trials=trials, seed=seed, jobs=jobs),
        koszul=verify_koszul(n) if koszul else None,
        ledger=degree_ledger(n, char),
    )
    logger.info(f"sl({n}) suite {'passed' if report.passes else 'FAILED'}")
    return report
