"""
Script to precompute graded character expansions into the on-disk cache.
"""
import logging
import sys

from exteriorcov.config import get_settings
from exteriorcov.db.cache_client import get_cache_client
from exteriorcov.exceptions import BudgetExceededError
from exteriorcov.models.gradedchar import default_mode
from exteriorcov.models.rootdata import build_root_system

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
logger = logging.getLogger(__name__)

# Root systems warmed by default: everything the quick tier and the census touch
WARM_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4),
    ("D", 4),
    ("G", 2),
    ("F", 4),
]


def warm(type_tag, rank, settings):
    """Load or expand one character; returns True when it was already cached."""
    rs = build_root_system(type_tag, rank)
    mode = default_mode(rs, settings.full_max_rank)
    client = get_cache_client(settings.cache_dir)
    _, hit = client.get_character(rs, mode, max_terms=settings.full_max_terms,
                                  full_max_rank=settings.full_max_rank)
    return hit


def main():
    settings = get_settings()
    logger.info(f"Warming cache in {settings.cache_dir}")
    failures = 0
    for type_tag, rank in WARM_TYPES:
        try:
            hit = warm(type_tag, rank, settings)
            logger.info(f"{type_tag}{rank}: {'already cached' if hit else 'expanded and stored'}")
        except BudgetExceededError as e:
            failures += 1
            logger.warning(f"{type_tag}{rank} skipped: {str(e)}")
    logger.info(f"Cache warm-up finished with {failures} skipped root systems")
    return 0


if __name__ == "__main__":
    sys.exit(main())
