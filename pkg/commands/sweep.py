"""sweep: anticanonical verdicts over all small homogeneous spaces."""

import argparse
from typing import Any, Dict

from commands.common import add_char_argument, parse_char
from core.base_command import BaseCommand
from core.errors import InputError
from core.registry import ComponentRegistry
from models.stability import SweepReport


@ComponentRegistry.register_command("sweep")
class SweepCommand(BaseCommand):
    help = "Check every type of rank <= r and every Levi subset; exit 0 iff all stable"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--max-rank", type=int, default=4, help="Largest rank to include")
        add_char_argument(parser)

    def echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        if args.max_rank < 1:
            raise InputError(f"--max-rank must be positive, got {args.max_rank}")
        return {"max_rank": args.max_rank, "char": parse_char(args).characteristic}

    def run(self, args: argparse.Namespace) -> SweepReport:
        return self.config["stability"].sweep(args.max_rank, parse_char(args))

    def exit_code(self, result: SweepReport) -> int:
        if result.totals.get("truncated"):
            return 3
        return 0 if result.all_stable else 11
