import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional

from exteriorcov.api.commands import REGISTRARS
from exteriorcov.api.render import FORMATS, render
from exteriorcov.config import Settings, get_settings
from exteriorcov.exceptions import EXIT_USAGE, CommandError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exteriorcov",
        description="Graded multiplicities of irreducible modules in the exterior algebra of a simple Lie algebra",
    )
    parser.add_argument("--format", choices=FORMATS, default="text", help="Report format")
    parser.add_argument("--cache-dir", type=Path, default=None, help="Directory of cached character expansions")
    parser.add_argument("--budget-seconds", type=float, default=None, help="Wall-clock budget for long commands")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes")
    parser.add_argument("--log-level", default=None, help="Logging level (default INFO)")
    parser.add_argument("--timings", action="store_true", help="Record runtime_ms in the report")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for register in REGISTRARS:
        register(subparsers)
    return parser


def settings_for(args: argparse.Namespace) -> Settings:
    """Environment settings with the global flags applied on top."""
    overrides = {
        "cache_dir": args.cache_dir,
        "budget_seconds": args.budget_seconds,
        "jobs": args.jobs,
        "log_level": args.log_level,
    }
    return get_settings().model_copy(update={k: v for k, v in overrides.items() if v is not None})


def run_command(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one command, write its report to stdout and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    settings = settings_for(args)

    # Configure logging
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    if args.jobs is not None and args.jobs < 1:
        logger.error(f"--jobs must be >= 1, got {args.jobs}")
        return EXIT_USAGE

    started = time.perf_counter()
    try:
        report = args.handler(args, settings)
    except CommandError as e:
        logger.error(e.detail)
        return e.exit_code
    if args.timings:
        report.runtime_ms = int((time.perf_counter() - started) * 1000)
    sys.stdout.write(render(report, args.format))
    sys.stdout.flush()
    code = report.exit_code()
    if code:
        logger.error(f"{len(report.failed)} check(s) failed: " + "; ".join(c.name for c in report.failed))
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
