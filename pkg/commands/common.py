"""Shared argument parsing for the space-valued commands."""

import argparse
from typing import List, Optional, Tuple

from core.errors import InputError
from engine.chevalley import CharMode
from engine.rootsys import SimpleType


def add_type_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--type", required=True, help="Cartan family: A, B, C, D, E, F or G")
    parser.add_argument("--rank", required=True, type=int, help="Rank n")


def add_space_arguments(parser: argparse.ArgumentParser) -> None:
    add_type_arguments(parser)
    parser.add_argument(
        "--levi",
        default="",
        help='Levi subset S as comma-separated Bourbaki indices; "" is the full flag',
    )


def add_char_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--char", default="0", help="Characteristic: 0 or a prime")


def parse_type(args: argparse.Namespace) -> SimpleType:
    family = str(args.type).strip().upper()
    if len(family) != 1:
        raise InputError(f"--type expects a single family letter, got '{args.type}'")
    return SimpleType(family, args.rank)


def parse_int_list(text: Optional[str], flag: str) -> List[int]:
    """Parse ``"1,2"`` into ``[1, 2]``; blank means empty."""
    if text is None or not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"{flag} expects comma-separated integers, got '{text}'") from exc


def parse_levi(args: argparse.Namespace, rank: int) -> List[int]:
    levi = sorted(set(parse_int_list(args.levi, "--levi")))
    bad = [i for i in levi if not 1 <= i <= rank]
    if bad:
        raise InputError(f"--levi indices {bad} are outside 1..{rank}")
    return levi


def parse_space(args: argparse.Namespace) -> Tuple[SimpleType, List[int]]:
    t = parse_type(args)
    return t, parse_levi(args, t.rank)


def parse_char(args: argparse.Namespace) -> CharMode:
    return CharMode.parse(args.char)
