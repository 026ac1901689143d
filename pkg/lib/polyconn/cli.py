from __future__ import annotations

import argparse
import sys
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path

from polyconn.batteries import BATTERIES, run_battery
from polyconn.constructors import (
    cycle_matroid,
    graph_connectivity,
    graph_rank,
    matroid_check,
    random_connectivity,
    random_coverage_polymatroid,
    random_graph,
    uniform_matroid,
)
from polyconn.core import CheckReport, classify, connectivity_report, polymatroid_report
from polyconn.core.checks import check_equal, check_k_polymatroid
from polyconn.core.setfunction import SetFunction, evaluate, to_rat
from polyconn.exceptions import ConstructionError, DomainError, ParseError, PolyconnError
from polyconn.formats import parse, parse_graph, parse_subset, serialize, serialize_graph
from polyconn.ops import (
    canonical_self_dual,
    compactify,
    connectivity_of,
    contract,
    delete,
    dual,
    induced_polymatroid,
    k_dual,
    pointwise_sum,
    run_lemmas,
    scale,
)
from polyconn.utils import LoggerWrapper

_logger = LoggerWrapper("cli")

USAGE = (
    "Usage: polyconn <command> [options]\n"
    "Commands: verify, dual, kdual, compactify, connectivity, induce, canonical, minor,\n"
    "          scale, sum, eval, eq, lemmas, gen, fromgraph, battery"
)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_ERROR = 2


def _read_text(path: str) -> str:
    source = "standard input" if path == "-" else path
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise DomainError(f"cannot read {source}: not UTF-8 text (byte {exc.start})") from None
    except OSError as exc:
        raise DomainError(f"cannot read {source}: {exc.strerror or exc}") from None


def _rational(text: str) -> Fraction:
    try:
        return to_rat(text)
    except ConstructionError as exc:
        raise argparse.ArgumentTypeError(exc.message) from None


def _read_function(path: str) -> SetFunction:
    return parse(_read_text(path))


def _subset(text: str, f: SetFunction) -> int:
    # argument text has no line number to report
    try:
        return parse_subset(text, f.ground)
    except ParseError as exc:
        raise DomainError(exc.cause) from None


def _write_text(text: str, output_path: str | None) -> None:
    if output_path:
        destination = Path(output_path)
        destination.parent.mkdir(parents=True, exist_ok=True)
        destination.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report_failure(report: CheckReport) -> None:
    print(report.describe(), file=sys.stderr)


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="Log progress to stderr.")
    return common


def _transform_parser(description: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description, parents=[_common_parser()])
    parser.add_argument("file", help="setfn v1 input file ('-' for standard input).")
    parser.add_argument("--output", "-o", help="Output file path (stdout by default).")
    parser.add_argument(
        "--force",
        action="store_true",
        help="Skip the precondition check and evaluate the raw formula.",
    )
    return parser


def build_verify_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Classify a set function and check one kind.", parents=[_common_parser()]
    )
    parser.add_argument("file", help="setfn v1 input file ('-' for standard input).")
    parser.add_argument(
        "--as",
        dest="kind",
        choices=["connectivity", "polymatroid", "matroid", "auto"],
        default="auto",
        help="Kind that must hold for exit code 0.",
    )
    return parser


def _run_verify(args: argparse.Namespace) -> int:
    f = _read_function(args.file)
    facts = classify(f)
    print("\n".join(facts.lines()))
    if args.kind == "connectivity":
        reports = [connectivity_report(f)]
    elif args.kind == "polymatroid":
        reports = [polymatroid_report(f)]
    elif args.kind == "matroid":
        reports = [matroid_check(f)]
    else:
        reports = [connectivity_report(f), polymatroid_report(f)]
    if any(report.holds for report in reports):
        return EXIT_OK
    for report in reports:
        _report_failure(report)
    return EXIT_FAILS


Transform = Callable[[SetFunction, argparse.Namespace, bool], SetFunction]
Precondition = Callable[[SetFunction, argparse.Namespace], CheckReport]
Runner = Callable[[argparse.Namespace], int]


def _polymatroid(f: SetFunction, args: argparse.Namespace) -> CheckReport:
    return polymatroid_report(f)


def _connectivity(f: SetFunction, args: argparse.Namespace) -> CheckReport:
    return connectivity_report(f)


def _run_transform(
    args: argparse.Namespace, operation: str, transform: Transform, precondition: Precondition
) -> int:
    f = _read_function(args.file)
    if args.force:
        report = precondition(f, args)
        if not report.holds:
            _logger.log_event(
                "precondition_bypassed",
                level="warning",
                verbose=True,
                operation=operation,
                detail=report.describe(),
            )
    result = transform(f, args, not args.force)
    _write_text(serialize(result), args.output)
    return EXIT_OK


def _minor(f: SetFunction, args: argparse.Namespace, enforce: bool) -> SetFunction:
    deleted = _subset(args.delete, f)
    contracted = _subset(args.contract, f)
    if deleted & contracted:
        raise DomainError(
            f"deleted and contracted sets overlap in {f.ground.render(deleted & contracted)}"
        )
    remaining = delete(f, deleted, enforce=enforce)
    return contract(remaining, f.ground.labels_of(contracted), enforce=False)


TRANSFORMS: dict[str, tuple[str, Transform, Precondition]] = {
    "dual": (
        "Dual r*(X) = r(E−X) + ‖X‖ − r(E) of a polymatroid.",
        lambda f, args, enforce: dual(f, enforce=enforce),
        _polymatroid,
    ),
    "kdual": (
        "k-dual r(E−X) + k|X| − r(E) of a k-polymatroid.",
        lambda f, args, enforce: k_dual(f, args.k, enforce=enforce),
        lambda f, args: check_k_polymatroid(f, args.k),
    ),
    "compactify": (
        "Compactification r♭ of a polymatroid.",
        lambda f, args, enforce: compactify(f, enforce=enforce),
        _polymatroid,
    ),
    "connectivity": (
        "Connectivity function λ(X) = r(X) + r(E−X) − r(E) of a polymatroid.",
        lambda f, args, enforce: connectivity_of(f, enforce=enforce),
        _polymatroid,
    ),
    "induce": (
        "Induced polymatroid λ(X) + ‖X‖ of a connectivity function.",
        lambda f, args, enforce: induced_polymatroid(f, enforce=enforce),
        _connectivity,
    ),
    "canonical": (
        "Half of the induced polymatroid; its connectivity function is λ.",
        lambda f, args, enforce: canonical_self_dual(f, enforce=enforce),
        _connectivity,
    ),
    "minor": (
        "Minor r\\D/C of a polymatroid.",
        _minor,
        _polymatroid,
    ),
}


def build_transform_parser(command: str) -> argparse.ArgumentParser:
    description, _, _ = TRANSFORMS[command]
    parser = _transform_parser(description)
    if command == "kdual":
        parser.add_argument("--k", type=_rational, required=True, help="Positive rational k.")
    if command == "minor":
        parser.add_argument("--delete", default="{}", help="Subset to delete, e.g. {a,c}.")
        parser.add_argument("--contract", default="{}", help="Subset to contract, e.g. {b}.")
    return parser


def _transform_runner(command: str) -> Runner:
    _, transform, precondition = TRANSFORMS[command]

    def run(args: argparse.Namespace) -> int:
        return _run_transform(args, command, transform, precondition)

    return run


def build_scale_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Multiply every value by a positive rational.", parents=[_common_parser()]
    )
    parser.add_argument("file", help="setfn v1 input file ('-' for standard input).")
    parser.add_argument("--factor", type=_rational, required=True, help="Positive rational.")
    parser.add_argument("--output", "-o", help="Output file path (stdout by default).")
    return parser


def _run_scale(args: argparse.Namespace) -> int:
    _write_text(serialize(scale(_read_function(args.file), args.factor)), args.output)
    return EXIT_OK


def _pair_parser(description: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=description, parents=[_common_parser()])
    parser.add_argument("first", help="First setfn v1 file.")
    parser.add_argument("second", help="Second setfn v1 file.")
    return parser


def build_sum_parser() -> argparse.ArgumentParser:
    parser = _pair_parser("Pointwise sum of two set functions on the same ground set.")
    parser.add_argument("--output", "-o", help="Output file path (stdout by default).")
    return parser


def _run_sum(args: argparse.Namespace) -> int:
    total = pointwise_sum(_read_function(args.first), _read_function(args.second))
    _write_text(serialize(total), args.output)
    return EXIT_OK


def build_eq_parser() -> argparse.ArgumentParser:
    return _pair_parser("Exit 0 iff both files encode the same set function.")


def _run_eq(args: argparse.Namespace) -> int:
    f, g = _read_function(args.first), _read_function(args.second)
    if f.ground != g.ground:
        print(
            f"ground sets differ: {list(f.ground.labels)} vs {list(g.ground.labels)}",
            file=sys.stderr,
        )
        return EXIT_FAILS
    report = check_equal(f, g, "equal", "first", "second")
    if report.holds:
        return EXIT_OK
    _report_failure(report)
    return EXIT_FAILS


def build_eval_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Print f(X) for a subset X.", parents=[_common_parser()]
    )
    parser.add_argument("file", help="setfn v1 input file ('-' for standard input).")
    parser.add_argument("subset", help="Subset in {a,b} syntax.")
    return parser


def _run_eval(args: argparse.Namespace) -> int:
    f = _read_function(args.file)
    print(evaluate(f, _subset(args.subset, f)))
    return EXIT_OK


def build_lemmas_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Check every applicable identity on one set function.",
        parents=[_common_parser()],
    )
    parser.add_argument("file", help="setfn v1 input file ('-' for standard input).")
    return parser


def _run_lemmas(args: argparse.Namespace) -> int:
    f = _read_function(args.file)
    results = run_lemmas(f, verbose=args.verbose)
    if not results:
        raise DomainError("input is neither a polymatroid nor a connectivity function")
    for result in results:
        status = "PASS" if result.holds else "FAIL"
        print(f"{status}  {result.family}: {result.identity}")
        if not result.holds:
            _report_failure(result.report)
    return EXIT_OK if all(result.holds for result in results) else EXIT_FAILS


def build_gen_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Generate a seeded random instance.", parents=[_common_parser()]
    )
    parser.add_argument(
        "--kind", choices=["graph", "coverage", "uniform", "connectivity"], required=True
    )
    parser.add_argument("--n", type=int, required=True, help="Number of elements (or edges).")
    parser.add_argument("--seed", type=int, default=0, help="Generator seed.")
    parser.add_argument(
        "--universe", type=int, default=None, help="Coverage universe size (default: n)."
    )
    parser.add_argument(
        "--rank", type=int, default=None, help="Uniform matroid rank (default: seed mod (n+1))."
    )
    parser.add_argument(
        "--source",
        choices=["coverage", "graph", "matroid-lambda"],
        default="coverage",
        help="Source of a random connectivity function.",
    )
    parser.add_argument("--output", "-o", help="Output file path (stdout by default).")
    return parser


def _run_gen(args: argparse.Namespace) -> int:
    if args.kind == "graph":
        text = serialize_graph(random_graph(args.n, args.seed))
    elif args.kind == "coverage":
        universe = args.n if args.universe is None else args.universe
        text = serialize(random_coverage_polymatroid(args.n, universe, args.seed))
    elif args.kind == "uniform":
        rank = args.seed % (args.n + 1) if args.rank is None else args.rank
        text = serialize(uniform_matroid(rank, args.n))
    else:
        text = serialize(random_connectivity(args.n, args.seed, args.source))
    _write_text(text, args.output)
    return EXIT_OK


def build_fromgraph_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Set function of a graph v1 file.", parents=[_common_parser()]
    )
    parser.add_argument("file", help="graph v1 input file ('-' for standard input).")
    parser.add_argument("--what", choices=["lambda", "rank", "cycle"], default="lambda")
    parser.add_argument(
        "--strip-isolated",
        action="store_true",
        help="Drop isolated vertices instead of rejecting them (lambda only).",
    )
    parser.add_argument("--output", "-o", help="Output file path (stdout by default).")
    return parser


def _run_fromgraph(args: argparse.Namespace) -> int:
    graph = parse_graph(_read_text(args.file))
    if args.what == "lambda":
        f = graph_connectivity(graph, strip_isolated=args.strip_isolated)
    elif args.what == "rank":
        f = graph_rank(graph)
    else:
        f = cycle_matroid(graph)
    _write_text(serialize(f), args.output)
    return EXIT_OK


def build_battery_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Run the seeded identity batteries.", parents=[_common_parser()]
    )
    parser.add_argument(
        "--name",
        action="append",
        choices=sorted(BATTERIES),
        default=None,
        help="Battery to run (repeatable; all by default).",
    )
    parser.add_argument("--count", type=int, default=None, help="Instances per battery.")
    parser.add_argument("--seed", type=int, default=0, help="Root seed.")
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes (default: POLYCONN_WORKERS or 1).",
    )
    return parser


def _run_battery(args: argparse.Namespace) -> int:
    names = args.name or list(BATTERIES)
    results = [
        run_battery(name, args.count, args.seed, args.workers, verbose=args.verbose)
        for name in names
    ]
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        failures = len(result.failures)
        print(f"{status}  {result.name}  instances={result.instances}  failures={failures}")
        for outcome in result.failures:
            print(
                f"{result.name} seed={outcome.seed} n={outcome.size}: {outcome.detail}",
                file=sys.stderr,
            )
    return EXIT_OK if all(result.passed for result in results) else EXIT_FAILS


COMMANDS: dict[str, tuple[Callable[[], argparse.ArgumentParser], Runner]] = {
    "verify": (build_verify_parser, _run_verify),
    "scale": (build_scale_parser, _run_scale),
    "sum": (build_sum_parser, _run_sum),
    "eval": (build_eval_parser, _run_eval),
    "eq": (build_eq_parser, _run_eq),
    "lemmas": (build_lemmas_parser, _run_lemmas),
    "gen": (build_gen_parser, _run_gen),
    "fromgraph": (build_fromgraph_parser, _run_fromgraph),
    "battery": (build_battery_parser, _run_battery),
}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]

    if not argv:
        print(USAGE, file=sys.stderr)
        return EXIT_ERROR

    command, *rest = argv
    if command in {"-h", "--help"}:
        print(USAGE)
        return EXIT_OK

    runner: Runner
    if command in TRANSFORMS:
        parser = build_transform_parser(command)
        runner = _transform_runner(command)
    elif command in COMMANDS:
        build, runner = COMMANDS[command]
        parser = build()
    else:
        print(f"Unknown command: {command}\n{USAGE}", file=sys.stderr)
        return EXIT_ERROR

    parser.prog = f"polyconn {command}"
    try:
        args = parser.parse_args(rest)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR

    try:
        return runner(args)
    except PolyconnError as exc:
        _logger.log_event("cli_error", verbose=args.verbose, command=command, error=exc.message)
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
