"""submodules: every equivariant subbundle of T(G/P) in one characteristic."""

import argparse
from typing import Any, Dict

from commands.common import add_char_argument, add_space_arguments, parse_char, parse_space
from core.base_command import BaseCommand
from core.registry import ComponentRegistry
from engine.parabolic import enumerate_submodules
from models.algebra import CandidateReport, SubmoduleReport, TangentReport


@ComponentRegistry.register_command("submodules")
class SubmodulesCommand(BaseCommand):
    help = "Enumerate the closed subsets of tangent roots (P-submodules of g/p)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_space_arguments(parser)
        add_char_argument(parser)
        parser.add_argument(
            "--proper-only",
            action="store_true",
            help="Omit the zero and the full subbundle from the listing",
        )

    def echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        t, levi = parse_space(args)
        return {
            "type": t.family,
            "rank": t.rank,
            "levi": levi,
            "char": parse_char(args).characteristic,
            "proper_only": bool(args.proper_only),
        }

    def run(self, args: argparse.Namespace) -> SubmoduleReport:
        t, levi = parse_space(args)
        mode = parse_char(args)
        service = self.config["stability"]
        pd = service.parabolic(t, levi)

        cap = service.settings.submodule_cap
        candidates = list(enumerate_submodules(pd, mode, cap=cap))
        proper = [c for c in candidates if c.is_proper]
        listed = proper if args.proper_only else candidates
        self.logger.info("submodules", type=str(t), levi=levi, count=len(candidates))
        return SubmoduleReport(
            type=str(t),
            characteristic=mode.characteristic,
            tangent=TangentReport.from_parabolic(pd),
            count=len(candidates),
            proper_count=len(proper),
            candidates=[CandidateReport.from_candidate(c) for c in listed],
        )
