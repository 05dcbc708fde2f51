"""stability and search-polarization: verdicts on T(G/P)."""

import argparse
from typing import Any, Dict, List, Optional

from commands.common import (
    add_char_argument,
    add_space_arguments,
    parse_char,
    parse_int_list,
    parse_space,
)
from core.base_command import BaseCommand
from core.errors import InputError
from core.registry import ComponentRegistry
from models.stability import SearchReport, StabilityVerdict


def _parse_pol(text: Optional[str]) -> Optional[List[int]]:
    if text is None or text.strip().lower() in ("", "anticanonical"):
        return None
    return parse_int_list(text, "--pol")


@ComponentRegistry.register_command("stability")
class StabilityCommand(BaseCommand):
    help = "Equivariant (semi)stability of T(G/P); exit 0/10/11 for stable/semistable/unstable"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_space_arguments(parser)
        add_char_argument(parser)
        parser.add_argument(
            "--pol",
            default=None,
            help='Polarization coefficients over the crossed indices, e.g. "1,2" (default anticanonical)',
        )

    def echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        t, levi = parse_space(args)
        pol = _parse_pol(args.pol)
        return {
            "type": t.family,
            "rank": t.rank,
            "levi": levi,
            "char": parse_char(args).characteristic,
            "pol": pol if pol is not None else "anticanonical",
        }

    def run(self, args: argparse.Namespace) -> StabilityVerdict:
        t, levi = parse_space(args)
        service = self.config["stability"]
        return service.check_tangent_stability(t, levi, parse_char(args), _parse_pol(args.pol))

    def exit_code(self, result: StabilityVerdict) -> int:
        return result.exit_code


@ComponentRegistry.register_command("search-polarization")
class SearchPolarizationCommand(BaseCommand):
    help = "Scan primitive ample polarizations for destabilizing subbundles"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_space_arguments(parser)
        add_char_argument(parser)
        parser.add_argument("--max-coeff", type=int, required=True, help="Box size m")

    def echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        t, levi = parse_space(args)
        if args.max_coeff < 1:
            raise InputError(f"--max-coeff must be positive, got {args.max_coeff}")
        return {
            "type": t.family,
            "rank": t.rank,
            "levi": levi,
            "char": parse_char(args).characteristic,
            "max_coeff": args.max_coeff,
        }

    def run(self, args: argparse.Namespace) -> SearchReport:
        t, levi = parse_space(args)
        service = self.config["stability"]
        return service.search_destabilizing_polarization(t, levi, parse_char(args), args.max_coeff)
