"""
Script for the long-run tier: rank 4 and rank 5 censuses, the rank 4 little adjoint
checks and the sl(4) suite. Each step writes one JSON report.
"""
import json
import logging
import sys
from pathlib import Path

from exteriorcov.config import get_settings
from exteriorcov.controllers.census_controller import CensusController
from exteriorcov.controllers.multiplicity_controller import MultiplicityController
from exteriorcov.controllers.sln_controller import SlnController
from exteriorcov.exceptions import CommandError

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
logger = logging.getLogger(__name__)

OUTPUT_DIR = Path("long_run_reports")
CENSUS_TYPES = [("A", 4), ("B", 4), ("C", 4), ("D", 4), ("F", 4), ("A", 5), ("B", 5), ("C", 5), ("D", 5)]
BAZLOV_TYPES = [("B", 4), ("C", 4), ("F", 4)]
SL_N = 4
SL_TRIALS = 20
SL_SEED = 2024


def write(name, report):
    OUTPUT_DIR.mkdir(parents=True, exist_ok=True)
    path = OUTPUT_DIR / f"{name}.json"
    path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
    status = "ok" if not report.failed else f"{len(report.failed)} failed"
    logger.info(f"{name}: {status} -> {path}")
    return not report.failed


def main():
    settings = get_settings()
    steps = []
    for type_tag, rank in CENSUS_TYPES:
        steps.append((f"census_{type_tag}{rank}",
                      lambda t=type_tag, r=rank: CensusController(settings).census(t, r)))
    for type_tag, rank in BAZLOV_TYPES:
        steps.append((f"bazlov_{type_tag}{rank}",
                      lambda t=type_tag, r=rank: MultiplicityController(settings).bazlov(t, r)))
    steps.append((f"verify_sl{SL_N}", lambda: SlnController(settings).verify(SL_N, SL_TRIALS, SL_SEED)))

    summary = {}
    for name, step in steps:
        try:
            summary[name] = write(name, step())
        except CommandError as e:
            logger.error(f"{name}: {e.detail}")
            summary[name] = False
    logger.info("Summary: " + json.dumps(summary, sort_keys=True))
    return 0 if all(summary.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
