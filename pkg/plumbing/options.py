import argparse
import logging
from typing import List, Optional

import yaml

from plumbing.decision.engines import THEOREM_DICT, get_theorem_class

COMMANDS = ["present", "analyze", "moves", "abelianize"]


def cli_argument_list(argv: List[str]) -> List[str]:
    """Append the entries of ``--config`` as flags, unless the flag is already given."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", default=None)
    args, _ = parser.parse_known_args(argv)
    if args.config is None:
        return list(argv)
    with open(args.config) as f:
        config = yaml.safe_load(f) or {}

    extra = []
    for key, value in config.items():
        flag = f"--{key.replace('_', '-')}"
        if flag in argv:
            continue
        if type(value) is not bool:
            extra += [flag, str(value)]
        elif value:
            extra.append(flag)
    return list(argv) + extra


def general_parser():
    parser = argparse.ArgumentParser(prog="plumb")
    parser.add_argument("command", choices=COMMANDS, help="Operation to run.")
    parser.add_argument("path", help="Graph file (YAML or JSON).")
    parser.add_argument(
        "--log-level",
        type=str,
        default="info",
        choices=[x.lower() for x in logging._levelToName.values()],
        help="Log level.",
    )
    parser.add_argument(
        "--config",
        default=None,
        help="YAML file of option values; flags on the command line take precedence.",
    )
    return parser


def add_oracle_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--oracle",
        type=str,
        default="off",
        choices=["off", "check"],
        help="Cross-check every verdict by coset enumeration.",
    )
    parser.add_argument(
        "--max-cosets",
        type=int,
        default=10 ** 6,
        help="Largest coset table the oracle may build.",
    )
    parser.add_argument(
        "--max-time",
        type=float,
        default=None,
        help="Wall-clock limit of one enumeration, in seconds.",
    )
    parser.add_argument(
        "--max-power",
        type=int,
        default=6,
        help="Largest k for which the cosets of <w^k> are enumerated when the group does not close.",
    )
    parser.add_argument(
        "--no-progress-bar",
        action="store_true",
        default=False,
        help="Do not use progress bar",
    )


def add_analyze_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--theorem",
        type=str,
        default="auto",
        choices=sorted(THEOREM_DICT),
        help="Theorem engine; auto tries c, then b, then a.",
    )
    parser.add_argument(
        "--pretty",
        action="store_true",
        default=False,
        help="Print a table instead of the JSON report.",
    )
    parser.add_argument(
        "--show-presentation",
        action="store_true",
        default=False,
        help="Include the presentation of the group in the report.",
    )
    add_oracle_args(parser)


def add_theorem_args(parser: argparse.ArgumentParser, cli_argument_list: Optional[List[str]] = None):
    if cli_argument_list is None:
        args, _ = parser.parse_known_args()
    else:
        args, _ = parser.parse_known_args(cli_argument_list)
    get_theorem_class(args.theorem).add_args(parser)


def add_moves_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "move",
        nargs="+",
        help="blowup-edge I J | blowup-point V | blowdown V | full-blowdown",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="Random order of contractions for full-blowdown.",
    )


def add_abelianize_args(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--pretty",
        action="store_true",
        default=False,
        help="Print a table instead of JSON.",
    )
