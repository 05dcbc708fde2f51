"""parastab - stability of tangent bundles of rational homogeneous spaces.

Main CLI entry point. Every command prints one JSON (or text) envelope on
stdout; logs go to stderr.

Exit codes:
    0   success (stability: equivariantly stable)
    2   invalid input
    3   resource cap hit (stability: truncated verdict)
    10  equivariantly strictly semistable
    11  equivariantly unstable
"""

import argparse
import sys
import time
from typing import List, Optional

from pydantic import BaseModel

import commands  # noqa: F401  (registers the commands)
from config.settings import Settings, get_settings, override_settings
from core.errors import InputError, ParastabError, ResourceError
from core.registry import ComponentRegistry
from models.envelope import ReportEnvelope
from services.cache_service import ChowCacheService
from services.stability_service import StabilityService
from utils.formatters import format_json_output, format_text_output, to_wire
from utils.logger import get_logger, setup_logging


def _global_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--format", choices=["json", "text"], default="json")
    options.add_argument("--cache-dir", default=None, help="Persistent cache directory (overrides PARASTAB_CACHE)")
    options.add_argument("--threads", type=int, default=None, help="Worker threads")
    options.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    return options


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser from the registered commands."""
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Equivariant subbundles, Schubert degrees and slope stability of T(G/P).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    options = _global_options()
    for name in ComponentRegistry.list_commands():
        command_cls = ComponentRegistry.get_command_class(name)
        sub = subparsers.add_parser(name, help=command_cls.help, parents=[options])
        command_cls().add_arguments(sub)
    return parser


def emit(envelope: ReportEnvelope, fmt: str) -> str:
    """Render the envelope in the requested format."""
    wire = to_wire(envelope.model_dump(mode="python"))
    return format_json_output(wire) if fmt == "json" else format_text_output(wire)


def _settings_error(argv: Optional[List[str]], exc: InputError) -> int:
    """Report unusable environment settings before argparse can run."""
    tokens = sys.argv[1:] if argv is None else argv
    command = next((token for token in tokens if not token.startswith("-")), "")
    envelope = ReportEnvelope(
        schema_version=Settings.model_fields["schema_version"].default,
        command=command,
        error=str(exc),
    )
    print(emit(envelope, "json"))
    return exc.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    try:
        get_settings()
    except InputError as exc:
        return _settings_error(argv, exc)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be at least 1")
    override_settings(cache_dir=args.cache_dir, threads=args.threads, log_level=args.log_level)
    setup_logging()
    logger = get_logger("main")

    service = StabilityService(ChowCacheService())
    command = ComponentRegistry.get_command_class(args.command)(stability=service)
    envelope = ReportEnvelope(command=args.command)

    start = time.perf_counter()
    code = 0
    try:
        envelope.input_echo = command.echo(args)
        result = command.run(args)
        envelope.result = result.model_dump(mode="python") if isinstance(result, BaseModel) else result
        envelope.caps = list(getattr(result, "caps", []) or [])
        code = command.exit_code(result)
    except ResourceError as exc:
        logger.warning("resource_cap", command=args.command, cap=exc.cap, reached=exc.reached)
        envelope.error = str(exc)
        envelope.caps = [exc.to_dict()]
        code = exc.exit_code
    except ParastabError as exc:
        logger.warning("command_failed", command=args.command, error=str(exc))
        envelope.error = str(exc)
        code = exc.exit_code
    envelope.timing_ms = round((time.perf_counter() - start) * 1000.0, 3)

    print(emit(envelope, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
