import pytest
from hypothesis import HealthCheck, settings

from exteriorcov.config import get_settings
from exteriorcov.db.cache_client import CacheClient

settings.register_profile(
    "exteriorcov",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("exteriorcov")


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Every test gets its own cache directory and fresh settings."""
    cache_dir = tmp_path / "cache"
    monkeypatch.setenv("EXTERIORCOV_CACHE_DIR", str(cache_dir))
    get_settings.cache_clear()
    CacheClient.reset()
    yield cache_dir
    get_settings.cache_clear()
    CacheClient.reset()
