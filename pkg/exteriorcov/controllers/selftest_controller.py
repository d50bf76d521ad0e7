import logging
from itertools import product

from exteriorcov.config import Settings
from exteriorcov.db.cache_client import get_cache_client
from exteriorcov.exceptions import ConsistencyError, command_error
from exteriorcov.models.closedforms import (
    bazlov_gm,
    bazlov_product_form,
    dual_weight,
    freeness_divisibility,
    invariant_poincare,
    newton_pairing_identity_check,
    partition_to_weight,
    partitions,
    stembridge_gm,
)
from exteriorcov.models.gradedchar import FULL
from exteriorcov.models.repthy import graded_multiplicity, irrep_info, is_small
from exteriorcov.models.rootdata import build_root_system, highest_roots
from exteriorcov.models.slsuite import verify_sl
from exteriorcov.models.weyl import sign_sum, weyl_group_for
from exteriorcov.schemas.report import Report

logger = logging.getLogger(__name__)

SELFTEST_TYPES = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2))


class SelftestController:
    """
    Controller for the quick property suite over every root system of rank <= 3
    """

    def __init__(self, settings: Settings):
        self.settings = settings
        self.cache = get_cache_client(settings.cache_dir)

    def run(self, seed: int = 0) -> Report:
        """
        Run the suite; each identity becomes one check

        Args:
            seed: Seed for the randomized sl(n) trials

        Returns:
            One check per identity and root system

        Raises:
            CommandError: on an engine inconsistency
        """
        try:
            report = Report(command="selftest", inputs={"types": [f"{t}{r}" for t, r in SELFTEST_TYPES]}, seed=seed)
            for type_tag, rank in SELFTEST_TYPES:
                self._root_system_checks(report, type_tag, rank)
            self._partition_checks(report)
            for k, g in product(range(1, 4), repeat=2):
                report.add_check(f"Newton pairing identity k={k} g={g}", newton_pairing_identity_check(k, g, 3))
            for n in (2, 3):
                suite = verify_sl(n, trials=3, seed=seed, koszul=n == 2)
                report.add_check(f"sl({n}) pairing proportional", suite.pairing.proportional,
                                 suite.pairing.constant, suite.pairing.expected_constant)
                report.add_check(f"sl({n}) degree ledger", suite.ledger.matches, suite.ledger.measured,
                                 suite.ledger.expected)
                if suite.koszul is not None:
                    report.add_check(f"sl({n}) Koszul identities", suite.koszul.passes,
                                     suite.koszul.delta_scalar, suite.koszul.laplacian_scalar)
            logger.info(f"Selftest: {len(report.checks)} checks, {len(report.failed)} failed")
            return report
        except Exception as e:
            raise command_error("run the selftest", e)

    def _root_system_checks(self, report: Report, type_tag: str, rank: int) -> None:
        rs = build_root_system(type_tag, rank)
        name = rs.name
        w_group = weyl_group_for(type_tag, rank)
        char, _ = self.cache.get_character(rs, FULL, max_terms=self.settings.full_max_terms,
                                           full_max_rank=self.settings.full_max_rank)
        report.add_check(f"{name}: |W| = prod(m_i + 1)", w_group.order == rs.weyl_order_estimate,
                         w_group.order, rs.weyl_order_estimate)
        report.add_check(f"{name}: sum of signs = 0", sign_sum(w_group) == 0)
        report.add_check(f"{name}: character total = 2^dim", char.total_at_one() == 2 ** rs.dim,
                         char.total_at_one(), 2 ** rs.dim)

        zero = (0,) * rank
        trivial = graded_multiplicity(rs, zero, char)
        report.add_check(f"{name}: M(0) = invariant Poincare polynomial", trivial == invariant_poincare(rs),
                         trivial, invariant_poincare(rs))

        theta, theta_s = highest_roots(rs)
        adjoint = graded_multiplicity(rs, theta, char)
        verdict = freeness_divisibility(adjoint, rs, rank)
        report.add_check(f"{name}: adjoint module passes the freeness test", verdict.passes, adjoint)
        if theta_s is not None:
            formula = bazlov_gm(rs)
            oracle = graded_multiplicity(rs, theta_s, char)
            report.add_check(f"{name}: little adjoint formula", formula == oracle == bazlov_product_form(rs),
                             formula, oracle)

        bound = 2 if rank <= 2 else 1
        for weight in product(range(bound + 1), repeat=rank):
            try:
                is_small(rs, weight, cross_check=True)
            except ConsistencyError as e:
                report.add_check(f"{name}: smallness criterion at {weight}", False, str(e))
                continue
            if rs.in_root_lattice(weight) and is_small(rs, weight):
                m = graded_multiplicity(rs, weight, char)
                expected = 2 ** rank * irrep_info(rs, weight).zero_weight_dim
                report.add_check(f"{name}: M{weight}(1) = 2^r dim L_0", m.at_one() == expected, m.at_one(), expected)

    def _partition_checks(self, report: Report) -> None:
        for n in (2, 3, 4):
            rs = build_root_system("A", n - 1)
            char, _ = self.cache.get_character(rs, FULL, max_terms=self.settings.full_max_terms,
                                               full_max_rank=self.settings.full_max_rank)
            for p in partitions(n):
                weight = partition_to_weight(p)
                formula = stembridge_gm(p)
                oracle = graded_multiplicity(rs, weight, char)
                report.add_check(f"hook formula {p}", formula == oracle, formula, oracle)
                dual = graded_multiplicity(rs, dual_weight(weight), char)
                report.add_check(f"duality {p}", dual == oracle, oracle, dual)
