"""rootsys: summary of a root datum."""

import argparse
from typing import Any, Dict

from commands.common import add_type_arguments, parse_type
from config.conventions import get_reference
from core.base_command import BaseCommand
from core.registry import ComponentRegistry
from engine.chevalley import CharMode, is_admissible, min_admissible_char
from engine.rootsys import build_root_system, weyl_group_order
from models.algebra import RootSystemReport


@ComponentRegistry.register_command("rootsys")
class RootSystemCommand(BaseCommand):
    help = "Root count, highest root, Weyl order and admissible characteristic"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_type_arguments(parser)
        parser.add_argument("--char", default=None, help="Optionally test this characteristic")

    def echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        t = parse_type(args)
        echo: Dict[str, Any] = {"type": t.family, "rank": t.rank}
        if args.char is not None:
            echo["char"] = CharMode.parse(args.char).characteristic
        return echo

    def run(self, args: argparse.Namespace) -> RootSystemReport:
        t = parse_type(args)
        rs = build_root_system(t)
        mode = CharMode.parse(args.char) if args.char is not None else None
        euclidean = None
        if t.family in ("B", "C", "D"):
            euclidean = list(rs.euclidean(rs.highest_root))
        return RootSystemReport(
            type=str(t),
            family=t.family,
            rank=t.rank,
            root_count=len(rs.roots),
            positive_root_count=len(rs.positive_roots),
            highest_root=list(rs.highest_root),
            highest_root_euclidean=euclidean,
            cartan_matrix=[list(row) for row in rs.cartan],
            weyl_order=weyl_group_order(rs),
            lie_algebra_dimension=rs.lie_algebra_dimension,
            max_coroot_pairing=rs.max_coroot_pairing(),
            min_admissible_char=min_admissible_char(t),
            characteristic=mode.characteristic if mode else None,
            admissible=is_admissible(t, mode) if mode else None,
            numbering=get_reference(),
        )
