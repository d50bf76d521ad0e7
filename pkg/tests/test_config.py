from pathlib import Path

from exteriorcov.config import get_settings
from exteriorcov.exceptions import (
    EXIT_DISCREPANCY,
    EXIT_USAGE,
    BudgetExceededError,
    CommandError,
    ConsistencyError,
    InvalidRootSystemError,
    command_error,
)


def test_settings_from_environment(monkeypatch, isolated_cache):
    monkeypatch.setenv("EXTERIORCOV_BUDGET_SECONDS", "2.5")
    monkeypatch.setenv("EXTERIORCOV_JOBS", "3")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.cache_dir == Path(isolated_cache)
    assert settings.budget_seconds == 2.5
    assert settings.jobs == 3
    assert settings.full_max_rank == 4


def test_blank_budget_means_unbounded(monkeypatch):
    monkeypatch.setenv("EXTERIORCOV_BUDGET_SECONDS", " ")
    get_settings.cache_clear()
    assert get_settings().budget_seconds is None


def test_command_error_codes():
    assert command_error("x", ConsistencyError("bad")).exit_code == EXIT_DISCREPANCY
    assert command_error("x", InvalidRootSystemError("bad")).exit_code == EXIT_USAGE
    assert command_error("x", BudgetExceededError("big")).exit_code == EXIT_USAGE
    assert command_error("x", ValueError("bad")).exit_code == EXIT_USAGE
    assert command_error("x", RuntimeError("boom")).exit_code == EXIT_DISCREPANCY
    error = command_error("build the thing", ValueError("no"))
    assert error.detail == "Failed to build the thing: no"
    original = CommandError(2, "kept")
    assert command_error("x", original) is original
