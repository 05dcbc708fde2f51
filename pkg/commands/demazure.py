"""demazure: global vector fields on G/P."""

import argparse
from typing import Any, Dict

from commands.common import add_space_arguments, parse_space
from core.base_command import BaseCommand
from core.registry import ComponentRegistry
from engine.parabolic import demazure_vector_fields
from models.algebra import VectorFieldReport


@ComponentRegistry.register_command("demazure")
class DemazureCommand(BaseCommand):
    help = "Look up H^0(G/P, T(G/P))"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        add_space_arguments(parser)

    def echo(self, args: argparse.Namespace) -> Dict[str, Any]:
        t, levi = parse_space(args)
        return {"type": t.family, "rank": t.rank, "levi": levi}

    def run(self, args: argparse.Namespace) -> VectorFieldReport:
        t, levi = parse_space(args)
        algebra = demazure_vector_fields(t, levi)
        crossed = [i for i in range(1, t.rank + 1) if i not in levi]
        return VectorFieldReport.from_algebra(str(t), levi, crossed, algebra)
