import logging
from typing import Optional

from exteriorcov.config import Settings
from exteriorcov.db.cache_client import get_cache_client
from exteriorcov.exceptions import command_error
from exteriorcov.models.census import run_census, type_a_partition_scan
from exteriorcov.models.gradedchar import default_mode
from exteriorcov.models.rootdata import build_root_system
from exteriorcov.schemas.report import Report

logger = logging.getLogger(__name__)


class CensusController:
    """
    Controller for the small-module census and the type A partition scan
    """

    def __init__(self, settings: Settings):
        self.settings = settings
        self.cache = get_cache_client(settings.cache_dir)

    def census(self, type_tag: str, rank: int, mode: Optional[str] = None,
               box_bound: Optional[int] = None) -> Report:
        """
        Freeness test on every small module of the root system

        Args:
            type_tag: Cartan type letter A-G
            rank: Rank of the root system
            mode: Character mode; picked from the rank when omitted
            box_bound: Starting bound of the weight box; settings value when omitted

        Returns:
            One row per small weight and the expected-pass comparison

        Raises:
            CommandError: on invalid input, a budget overrun or an engine inconsistency
        """
        try:
            rs = build_root_system(type_tag, rank)
            mode = mode or default_mode(rs, self.settings.full_max_rank)
            char, _ = self.cache.get_character(
                rs, mode, max_terms=self.settings.full_max_terms, full_max_rank=self.settings.full_max_rank
            )
            result = run_census(
                rs,
                char,
                box_bound=box_bound if box_bound is not None else self.settings.box_bound,
                max_box_bound=self.settings.max_box_bound,
                budget_seconds=self.settings.budget_seconds,
                jobs=self.settings.jobs,
            )
            report = Report(command="census", inputs={"type": rs.type_tag, "rank": rs.rank, "mode": mode,
                                                      "box_bound": result.box_bound})
            rows = []
            for row in result.rows:
                rows.append({
                    "weight": list(row.weight),
                    "dim": row.dim,
                    "zero_weight_dim": row.zero_weight_dim,
                    "is_small_witness": row.smallness.witness,
                    "classification": row.classification,
                    "multiplicity": row.multiplicity.to_pairs(),
                    "reeder_ok": row.reeder_ok,
                    "divisible": row.verdict.divisible,
                    "quotient_nonneg": row.verdict.quotient_nonneg,
                    "generator_count": row.verdict.generator_count,
                    "expected_count": row.verdict.expected_count,
                    "passes": row.passes,
                })
            report.results.update({
                "rows": rows,
                "passing": [list(row.weight) for row in result.passes],
                "incomplete": result.incomplete,
                "reason": result.reason,
            })
            discrepancies = result.discrepancies()
            report.add_check("small weights found",
                             None if result.incomplete and not result.rows else bool(result.rows),
                             len(result.rows))
            report.add_check("every row satisfies M(1) = 2^r * dim L_0",
                             all(row.reeder_ok for row in result.rows))
            report.add_check(
                "passing modules are exactly the expected ones",
                None if result.incomplete else not discrepancies,
                "; ".join(discrepancies) or "none",
                ", ".join(sorted(result.expected_classifications())),
            )
            return report
        except Exception as e:
            raise command_error("run the census", e)

    def scan_a(self, n: int) -> Report:
        """
        Divisibility scan over the partitions of n

        Args:
            n: Number of boxes

        Returns:
            The divisor and one row per partition

        Raises:
            CommandError: for n < 2 or on an engine inconsistency
        """
        try:
            result = type_a_partition_scan(n)
            report = Report(command="scan-a", inputs={"n": n})
            report.add_polynomial("divisor", result.divisor)
            report.results["rows"] = [
                {
                    "partition": list(row.partition.parts),
                    "weight": list(row.weight),
                    "multiplicity": row.multiplicity.to_pairs(),
                    "divisible": row.divisible,
                    "quotient": row.quotient.to_pairs() if row.quotient is not None else None,
                }
                for row in result.rows
            ]
            report.results["divisible"] = [list(p.parts) for p in result.divisible_partitions]
            for row in result.rows:
                if not row.consistent:
                    report.add_check(f"divisibility of {row.partition}", False, row.divisible, row.expected_divisible)
            report.add_check("only (n) and (2,1^(n-2)) are divisible", result.consistent,
                             ", ".join(str(p) for p in result.divisible_partitions))
            return report
        except Exception as e:
            raise command_error("scan the partitions", e)
