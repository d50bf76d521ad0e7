import logging
from typing import Optional, Sequence

from exteriorcov.config import Settings
from exteriorcov.db.cache_client import get_cache_client
from exteriorcov.exceptions import CommandError, command_error
from exteriorcov.models.closedforms import (
    Partition,
    bazlov_gm,
    bazlov_product_form,
    dual_weight,
    freeness_divisibility,
    generator_degrees_pair_to_top,
    kostant_generator_degrees,
    n0,
    partition_to_weight,
    stembridge_gm,
)
from exteriorcov.models.gradedchar import GradedCharacter, default_mode
from exteriorcov.models.repthy import graded_multiplicity, irrep_info, is_small, little_adjoint_weights
from exteriorcov.models.rootdata import RootSystem, build_root_system, highest_roots
from exteriorcov.models.weyl import long_reflection_subgroup_order, short_parabolic_order, sign_sum, weyl_group_for
from exteriorcov.schemas.report import Report

logger = logging.getLogger(__name__)


class MultiplicityController:
    """
    Controller for root-system summaries and single graded multiplicities
    """

    def __init__(self, settings: Settings):
        self.settings = settings
        self.cache = get_cache_client(settings.cache_dir)

    def character(self, rs: RootSystem, mode: Optional[str] = None) -> GradedCharacter:
        mode = mode or default_mode(rs, self.settings.full_max_rank)
        char, _ = self.cache.get_character(
            rs, mode, max_terms=self.settings.full_max_terms, full_max_rank=self.settings.full_max_rank
        )
        return char

    def roots(self, type_tag: str, rank: int) -> Report:
        """
        Summarize a root system and its Weyl group

        Args:
            type_tag: Cartan type letter A-G
            rank: Rank of the root system

        Returns:
            Root data and Weyl group order, with their consistency checks

        Raises:
            CommandError: on an invalid type/rank or an oversized Weyl group
        """
        try:
            rs = build_root_system(type_tag, rank)
            w_group = weyl_group_for(rs.type_tag, rs.rank)
            theta, theta_s = highest_roots(rs)
            report = Report(command="roots", inputs={"type": rs.type_tag, "rank": rs.rank})
            report.results.update({
                "name": rs.name,
                "dim": rs.dim,
                "cartan_matrix": [list(row) for row in rs.cartan_matrix],
                "exponents": list(rs.exponents),
                "coxeter_number": rs.coxeter_number,
                "positive_roots": len(rs.positive_roots),
                "theta": list(theta),
                "theta_s": list(theta_s) if theta_s is not None else None,
                "r_s": rs.r_s,
                "r_l": rs.r_l,
                "weyl_order": w_group.order,
            })
            report.add_check("|W| = prod(m_i + 1)", w_group.order == rs.weyl_order_estimate,
                             w_group.order, rs.weyl_order_estimate)
            report.add_check("sum of signs over W = 0", sign_sum(w_group) == 0, sign_sum(w_group), 0)
            report.add_check("|Delta+| = sum m_i", len(rs.positive_roots) == sum(rs.exponents),
                             len(rs.positive_roots), sum(rs.exponents))
            if not rs.simply_laced:
                w_s = short_parabolic_order(rs)
                h = long_reflection_subgroup_order(rs)
                report.results.update({"short_parabolic_order": w_s, "long_reflection_subgroup_order": h})
                report.add_check("|W| = |W_s| * |H|", w_s * h == w_group.order, w_s * h, w_group.order)
            return report
        except Exception as e:
            raise command_error("summarize the root system", e)

    def gm(self, type_tag: str, rank: int, weight: Sequence[int], mode: Optional[str] = None) -> Report:
        """
        Graded multiplicity of L(weight) in the exterior algebra, with the freeness verdict

        Args:
            type_tag: Cartan type letter A-G
            rank: Rank of the root system
            weight: Highest weight in fundamental coordinates
            mode: "full" or "targeted"; picked from the rank when omitted

        Returns:
            M_lambda(q), the smallness data and, for small weights, the freeness verdict

        Raises:
            CommandError: on invalid input, a budget overrun or an engine inconsistency
        """
        try:
            rs = build_root_system(type_tag, rank)
            lam = rs.check_weight(weight)
            char = self.character(rs, mode)
            multiplicity = graded_multiplicity(rs, lam, char)
            info = irrep_info(rs, lam)
            smallness = is_small(rs, lam)
            report = Report(command="gm", inputs={"type": rs.type_tag, "rank": rs.rank, "weight": list(lam),
                                                  "mode": char.mode})
            report.add_polynomial("M", multiplicity)
            report.results.update({
                "dim": info.dim,
                "zero_weight_dim": info.zero_weight_dim,
                "small": smallness.small,
                "small_witness": smallness.witness,
                "in_root_lattice": rs.in_root_lattice(lam),
            })
            report.add_check("M has nonnegative coefficients", multiplicity.is_nonnegative(), multiplicity)
            if smallness and rs.in_root_lattice(lam):
                expected = 2 ** rs.rank * info.zero_weight_dim
                report.add_check("M(1) = 2^r * dim L_0", multiplicity.at_one() == expected,
                                 multiplicity.at_one(), expected)
                verdict = freeness_divisibility(multiplicity, rs, info.zero_weight_dim)
                report.results.update({
                    "divisible": verdict.divisible,
                    "generator_count": verdict.generator_count,
                    "free_candidate": verdict.passes,
                })
                if verdict.quotient is not None:
                    report.add_polynomial("quotient", verdict.quotient)
            if rs.type_tag == "A":
                dual = dual_weight(lam)
                dual_m = graded_multiplicity(rs, dual, char)
                report.add_check("M(lam) = M(lam*)", dual_m == multiplicity, multiplicity, dual_m)
            return report
        except Exception as e:
            raise command_error("compute the graded multiplicity", e)

    def bazlov(self, type_tag: str, rank: int) -> Report:
        """
        Little adjoint multiplicity three ways: closed formula, alternating sum, product form

        Args:
            type_tag: B, C, F or G
            rank: Rank of the root system

        Returns:
            The three polynomials, n0 and the generator degrees

        Raises:
            CommandError: for simply laced types or on an engine inconsistency
        """
        try:
            rs = build_root_system(type_tag, rank)
            _, theta_s = highest_roots(rs)
            formula = bazlov_gm(rs)
            char = self.character(rs)
            oracle = graded_multiplicity(rs, theta_s, char)
            product_form = bazlov_product_form(rs)
            info = irrep_info(rs, theta_s)
            weights = little_adjoint_weights(rs)
            short_roots = {rs.weight_of_root(k) for k in rs.short_root_indices()}
            short_roots |= {tuple(-x for x in rs.weight_of_root(k)) for k in rs.short_root_indices()}
            short_roots.add((0,) * rs.rank)

            report = Report(command="bazlov", inputs={"type": rs.type_tag, "rank": rs.rank})
            report.add_polynomial("formula", formula)
            report.add_polynomial("oracle", oracle)
            report.add_polynomial("product_form", product_form)
            report.results.update({
                "theta_s": list(theta_s),
                "n0": n0(rs),
                "generator_degrees": kostant_generator_degrees(rs),
                "r_s": rs.r_s,
                "r_l": rs.r_l,
            })
            report.add_check("formula = alternating sum", formula == oracle, formula, oracle)
            report.add_check("formula = product form", formula == product_form, formula, product_form)
            report.add_check("dim L(theta_s)_0 = r_s", info.zero_weight_dim == rs.r_s, info.zero_weight_dim, rs.r_s)
            report.add_check("weights of L(theta_s) = short roots and 0", weights == short_roots,
                             len(weights), len(short_roots))
            report.add_check("generator degrees pair to the top exponent", generator_degrees_pair_to_top(rs))
            return report
        except Exception as e:
            raise command_error("check the little adjoint formula", e)

    def stembridge(self, partition: Partition) -> Report:
        """
        Hook formula for the module of a partition against the alternating sum

        Args:
            partition: Partition of n >= 2

        Returns:
            Both polynomials and the duality check

        Raises:
            CommandError: for partitions of n < 2 or on an engine inconsistency
        """
        try:
            n = partition.n
            if n < 2:
                raise CommandError(2, f"Failed to check the hook formula: {partition} is a partition of {n} < 2")
            rs = build_root_system("A", n - 1)
            weight = partition_to_weight(partition)
            formula = stembridge_gm(partition)
            oracle = graded_multiplicity(rs, weight, self.character(rs))
            report = Report(command="stembridge", inputs={"partition": list(partition.parts)})
            report.add_polynomial("formula", formula)
            report.add_polynomial("oracle", oracle)
            report.results.update({"weight": list(weight), "conjugate": list(partition.conjugate().parts)})
            report.add_check("hook formula = alternating sum", formula == oracle, formula, oracle)
            dual = graded_multiplicity(rs, dual_weight(weight), self.character(rs))
            report.add_check("M(lam) = M(lam*)", dual == oracle, oracle, dual)
            return report
        except CommandError:
            raise
        except Exception as e:
            raise command_error("check the hook formula", e)
