"""
Runtime settings for exteriorcov.

Values come from the environment (optionally a .env file) and can be
overridden per invocation by the command-line flags.
"""
import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field


def _optional_float(name: str) -> Optional[float]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    return float(raw)


class Settings(BaseModel):
    cache_dir: Path = Field(..., description="Directory holding cached character expansions")
    weyl_budget: int = Field(10_000_000, description="Largest Weyl group that may be enumerated")
    full_max_rank: int = Field(4, description="Largest rank allowed in full character mode")
    full_max_terms: int = Field(3_000_000, description="Largest number of stored weights in full mode")
    box_bound: int = Field(10, description="Initial coordinate bound for the small-weight scan")
    max_box_bound: int = Field(40, description="Coordinate bound at which the scan gives up")
    budget_seconds: Optional[float] = Field(None, description="Wall-clock budget for long commands")
    jobs: int = Field(1, description="Worker processes for independent rows and trials")
    log_level: str = Field("INFO", description="Root logging level")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Build the process-wide settings from the environment."""
    load_dotenv()
    return Settings(
        cache_dir=Path(os.getenv("EXTERIORCOV_CACHE_DIR", str(Path.home() / ".cache" / "exteriorcov"))),
        weyl_budget=int(os.getenv("EXTERIORCOV_WEYL_BUDGET", "10000000")),
        full_max_rank=int(os.getenv("EXTERIORCOV_FULL_MAX_RANK", "4")),
        full_max_terms=int(os.getenv("EXTERIORCOV_FULL_MAX_TERMS", "3000000")),
        box_bound=int(os.getenv("EXTERIORCOV_BOX_BOUND", "10")),
        max_box_bound=int(os.getenv("EXTERIORCOV_MAX_BOX_BOUND", "40")),
        budget_seconds=_optional_float("EXTERIORCOV_BUDGET_SECONDS"),
        jobs=int(os.getenv("EXTERIORCOV_JOBS", "1")),
        log_level=os.getenv("EXTERIORCOV_LOG_LEVEL", "INFO"),
    )
