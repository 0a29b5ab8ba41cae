import json
import logging
import random
import sys

import pandas

from plumbing import options
from plumbing.data import GraphFile
from plumbing.decision import build_analyzer
from plumbing.errors import PlumbingError
from plumbing.graph.moves import apply_move_spec
from plumbing.group.presentation import abelianization, build_presentation

logging.basicConfig(
    format="%(asctime)s | %(levelname)-8s | %(name)-16s | %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
    level=logging.INFO,
    stream=sys.stderr,
)


logger = logging.getLogger("plumbing.cli")


def main() -> int:
    argv = sys.argv[1:]
    try:
        argv = options.cli_argument_list(argv)
    except (OSError, ValueError) as error:
        logger.error(f"Cannot read the config file: {error}")
        return 1
    args, _ = options.general_parser().parse_known_args(argv)
    logging.getLogger().setLevel(args.log_level.upper())

    command = {
        "present": present,
        "analyze": analyze,
        "moves": moves,
        "abelianize": abelianize,
    }[args.command]
    try:
        return command(argv)
    except OSError as error:
        logger.error(f"Cannot read {args.path}: {error}")
        return 1
    except PlumbingError as error:
        logger.error(f"{type(error).__name__}: {error}")
        return 1


def present(argv) -> int:
    args = options.general_parser().parse_args(argv)
    graph = GraphFile.from_path(args.path).graph
    print(build_presentation(graph).export_text())
    return 0


def analyze(argv) -> int:
    parser = options.general_parser()
    options.add_analyze_args(parser)
    options.add_theorem_args(parser, argv)
    args = parser.parse_args(argv)
    graph = GraphFile.from_path(args.path).graph
    report = build_analyzer(args)(graph)
    report.dump(args.pretty)
    return 0


def moves(argv) -> int:
    parser = options.general_parser()
    options.add_moves_args(parser)
    args = parser.parse_args(argv)
    graph_file = GraphFile.from_path(args.path)
    rng = random.Random(args.seed) if args.seed is not None else None
    try:
        graph, records = apply_move_spec(graph_file.graph, args.move, rng)
    except PlumbingError as error:
        vertex_id = getattr(error, "vertex_id", None)
        if vertex_id in graph_file.vertex_marks:
            line, column = graph_file.vertex_marks[vertex_id]
            logger.error(f"{args.path}:{line}:{column}: {type(error).__name__}: {error}")
            return 1
        raise
    for record in records:
        logger.info(f"Applied {json.dumps(record.json())}")
    print(GraphFile.to_text(graph), end="")
    return 0


def abelianize(argv) -> int:
    parser = options.general_parser()
    options.add_abelianize_args(parser)
    args = parser.parse_args(argv)
    graph = GraphFile.from_path(args.path).graph
    result = abelianization(build_presentation(graph))
    if not args.pretty:
        print(json.dumps(result.json(), indent=2))
        return 0
    print("invariant factors: " + (", ".join(map(str, result.invariant_factors)) or "trivial"))
    table = pandas.DataFrame(
        [
            {"vertex": v, "image": result.gamma_images[v], "order": result.gamma_orders[v] or "inf"}
            for v in sorted(result.gamma_images)
        ]
    )
    print(table.to_string(index=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
