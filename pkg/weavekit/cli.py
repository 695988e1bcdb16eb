"""Command-line interface for weavekit."""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .clusterkit import (
    Seed,
    YSeedNumeric,
    dynkin_seed,
    enumerate_exchange_graph,
    initial_seed,
    mutate_y,
    random_y_seed,
)
from .clusterkit.coxeter import coxeter_mutation, coxeter_split, normal_form_walk
from .core import OUTPUT_FORMATS, SUITES, RunConfig, Verifier, VerifyCallbacks, VerifySummary, exit_code_for
from .flagkit import check_equivariance, extract_seed, generic_boundary_flags, monodromy, solve_face_flags
from .ngraphkit import (
    AdmissibleSetting,
    CycleTuple,
    NGraph,
    draw_png,
    draw_svg,
    is_G_admissible,
    legendrian_coxeter_mutation,
    legendrian_coxeter_power,
    legendrian_mutate,
    ngraph_to_dot,
    quiver_of,
    standard_graph,
)
from .rootdata import DynkinType
from .utils.errors import InputError, UnsupportedError, WeaveError
from .utils.file_utils import OutputManager
from .utils.result import CheckResult
from .utils.serialization import encode, encode_ngraph

logger = logging.getLogger(__name__)


def print_summary(summary: VerifySummary) -> None:
    """
    Print summary of verification results.

    Args:
        summary: Aggregated counts of a verification run
    """
    print("\n" + "=" * 60)
    print("SUMMARY")
    print("=" * 60)
    print(f"Total checks:   {summary.total}")
    print(f"Passed:         {summary.passed}")
    print(f"Failed:         {summary.failed}")
    print(f"Skipped:        {summary.skipped}")
    print(f"Errors:         {summary.errors}")

    # Break down errors by category
    if summary.errors > 0:
        print("\nError breakdown by category:")
        for category, count in sorted(summary.categories.items(), key=lambda x: x[1], reverse=True):
            print(f"  {category.value}: {count}")

    print("=" * 60)


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig.from_env(seed=args.seed, cap=args.cap, long_tests=args.long, output_format=args.format)
    config.validate()
    return config


def output_manager(args: argparse.Namespace) -> OutputManager:
    """--out names the file itself; an existing file is replaced."""
    return OutputManager(Path(args.out).resolve().parent, overwrite=True)


def emit(args: argparse.Namespace, config: RunConfig, payload: dict, text: str, name: str) -> None:
    """Print or write one artifact in the configured format."""
    if config.output_format == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        body = text if text.endswith("\n") else text + "\n"
    if args.out:
        path = output_manager(args).write_text(Path(args.out).name, body)
        print(f"Wrote {name} to {path}")
    else:
        print(body, end="")


def emit_ngraph(args: argparse.Namespace, config: RunConfig, g: NGraph, cycles: Optional[CycleTuple]) -> None:
    if config.output_format in ("svg", "png"):
        if not args.out:
            raise InputError(f"--format {config.output_format} needs --out FILE")
        draw = draw_svg if config.output_format == "svg" else draw_png
        path = output_manager(args).write_with(Path(args.out).name, lambda tmp: draw(g, tmp, cycles))
        print(f"Wrote N-graph to {path}")
        return
    text = ngraph_to_dot(g, cycles) if config.output_format == "dot" else f"{g}\nquiver: {quiver_of(g, cycles) if cycles else '-'}"
    emit(args, config, encode_ngraph(g, cycles), text, "N-graph")


def start_from_args(args: argparse.Namespace) -> Tuple[Seed, Optional[Tuple[NGraph, CycleTuple]]]:
    """Initial seed, and the N-graph when the start is a standard family."""
    if getattr(args, "type", None):
        return dynkin_seed(DynkinType.parse(args.type)), None
    if getattr(args, "tripod", None):
        g, cycles = standard_graph("tripod", args.tripod)
    elif getattr(args, "linear", None):
        g, cycles = standard_graph("linear", [args.linear])
    else:
        raise InputError("Give a start: --type, --tripod or --linear")
    return initial_seed(quiver_of(g, cycles).matrix), (g, cycles)


def graph_from_args(args: argparse.Namespace) -> Tuple[NGraph, CycleTuple]:
    if args.family == "theta":
        return standard_graph("theta", [])
    return standard_graph(args.family, args.params)


def parse_sequence(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(k) for k in text.split(",") if k.strip()]
    except ValueError as exc:
        raise InputError(f"Mutation sequence must be comma separated integers, got {text!r}") from exc


# commands -------------------------------------------------------------------

def enumerate_command(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Enumerate the exchange graph of a type or a tripod quiver.

    Args:
        args: Parsed command-line arguments
        config: Run configuration

    Returns:
        Exit code
    """
    seed, _ = start_from_args(args)

    def progress(count: int) -> None:
        logger.info("%d seeds so far", count)

    graph = enumerate_exchange_graph(seed, config.cap, on_progress=progress)
    seeds = len(graph.vertices)
    variables = len(graph.cluster_variables())
    text = f"seeds: {seeds}\nvariables: {variables}"
    if config.output_format == "dot":
        text = graph.to_dot()
    payload = {"seeds": seeds, "variables": variables, "exchange_graph": graph.to_json()}
    emit(args, config, payload, text, "exchange graph")
    return 0


def verify_command(args: argparse.Namespace, config: RunConfig) -> int:
    """
    Run an acceptance suite, printing one line per check.

    Returns:
        0 when everything passed, 2 on a failed check, otherwise the error exit code
    """
    results: List[CheckResult] = []

    def handle_result(res: CheckResult) -> None:
        results.append(res)
        if config.output_format == "text":
            print(res.format_line())

    callbacks = VerifyCallbacks(on_result=handle_result)
    _, summary = Verifier(config).run(args.suite, callbacks)
    if config.output_format == "json":
        payload = [
            {"suite": r.suite, "name": r.name, "result": r.result_type.value, "expected": r.expected,
             "actual": r.actual, "error": r.error, "reason": r.reason}
            for r in results
        ]
        print(json.dumps(payload, indent=2))
    else:
        print_summary(summary)
    return summary.exit_code


def walk_command(args: argparse.Namespace, config: RunConfig) -> int:
    """Apply ``--coxeter r`` and then the ``--seq`` mutations, reporting every seed visited."""
    seed, start = start_from_args(args)
    directions = parse_sequence(args.seq)
    seeds = normal_form_walk(seed, args.coxeter, directions)

    split = coxeter_split(seed) if args.coxeter else None
    yseed: YSeedNumeric = random_y_seed(seed.matrix, config.rng())
    yseeds = [yseed]
    graph = start
    graphs: List[Optional[Tuple[NGraph, CycleTuple]]] = [graph]
    steps_taken = [None] * args.coxeter + directions
    for k in steps_taken:
        yseed = coxeter_mutation(yseed, split) if k is None else mutate_y(yseed, k)
        yseeds.append(yseed)
        if graph is not None:
            try:
                graph = legendrian_coxeter_mutation(*graph) if k is None else legendrian_mutate(*graph, k)
            except UnsupportedError as exc:
                logger.warning("Stopped following the N-graph: %s", exc)
                graph = None
        graphs.append(graph)

    steps = []
    lines = []
    labels = ["start"] + [f"coxeter {r}" for r in range(1, args.coxeter + 1)] + [f"mutate {k}" for k in directions]
    for label, current, y, g in zip(labels, seeds, yseeds, graphs):
        step = {"step": label, "seed": encode(current), "y": encode(y)}
        if g is not None:
            step["ngraph"] = encode_ngraph(*g)
        steps.append(step)
        lines.append(f"{label}: cluster {current.key}  y {y}")
    distinct = len({s.key for s in seeds})
    lines.append(f"distinct seeds: {distinct} of {len(seeds)}")
    payload = {"steps": steps, "distinct": distinct, "returned": seeds[-1].key == seeds[0].key}
    emit(args, config, payload, "\n".join(lines), "walk")
    return 0


def ngraph_command(args: argparse.Namespace, config: RunConfig) -> int:
    """Build, mutate or inspect a standard N-graph."""
    g, cycles = graph_from_args(args)
    action = args.ngraph_action
    if action == "mutate":
        for k in parse_sequence(args.k):
            g, cycles = legendrian_mutate(g, cycles, k)
    elif action == "coxeter":
        g, cycles = legendrian_coxeter_power(g, cycles, args.r)
    if action == "quiver":
        quiver = quiver_of(g, cycles)
        emit(args, config, encode(quiver), str(quiver), "quiver")
        return 0
    if action == "check-admissible":
        setting = AdmissibleSetting(args.setting)
        ok = is_G_admissible(g, cycles, setting)
        emit(args, config, {"setting": setting.value, "admissible": ok},
             f"{setting.value}: {'admissible' if ok else 'not admissible'}", "admissibility")
        return 0 if ok else 2
    emit_ngraph(args, config, g, cycles)
    return 0


def flags_command(args: argparse.Namespace, config: RunConfig) -> int:
    """Generic boundary flags, face flags and monodromies of a standard N-graph."""
    g, cycles = graph_from_args(args)
    bf = generic_boundary_flags(g.boundary_word(), config.rng(), g)
    action = args.flags_action
    if action == "solve":
        fa = solve_face_flags(g, bf)
        lines = [f"face {face}: {flag}" for face, flag in sorted(fa.flags.items())]
        emit(args, config, {"boundary": encode(bf), "faces": fa.to_json()}, "\n".join(lines), "face flags")
        return 0
    if action == "monodromy":
        fa = solve_face_flags(g, bf)
        if args.cycle is None:
            yseed = extract_seed(g, cycles, fa)
            emit(args, config, encode(yseed), f"y {yseed}", "monodromies")
        else:
            value = monodromy(g, fa, cycles.by_label(args.cycle))
            emit(args, config, {"cycle": args.cycle, "monodromy": str(value)}, f"cycle {args.cycle}: {value}",
                 "monodromy")
        return 0
    labels = [args.cycle] if args.cycle is not None else [spec.label for spec in cycles]
    failed = []
    for k in labels:
        ok = check_equivariance(g, cycles, bf, k)
        print(f"{'PASS' if ok else 'FAIL'} | cycle {k}")
        if not ok:
            failed.append(k)
    return 2 if failed else 0


COMMANDS = {
    "enumerate": enumerate_command,
    "verify": verify_command,
    "walk": walk_command,
    "ngraph": ngraph_command,
    "flags": flags_command,
}


def add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("family", choices=["linear", "tripod", "theta"], help="Standard N-graph family")
    parser.add_argument("params", nargs="*", type=int, help="n for linear, a b c for tripod")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    common.add_argument("--seed", type=int, default=None, help="Random seed for generic draws (default: 0)")
    common.add_argument("--cap", type=int, default=None, help="Bound on enumerated seeds (default: 100000)")
    common.add_argument("--long", action="store_true", default=None, help="Include slow checks (E7, E8)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format (default: text)")
    common.add_argument("--out", default=None, help="Write the artifact to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="weavekit",
        description="Cluster seed patterns, N-graphs and flag monodromies for Legendrian weaves.",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    enum_parser = subparsers.add_parser("enumerate", parents=[common], help="Count seeds and cluster variables")
    start = enum_parser.add_mutually_exclusive_group(required=True)
    start.add_argument("--type", help="Dynkin type such as A3 or E6")
    start.add_argument("--tripod", nargs=3, type=int, metavar=("A", "B", "C"), help="Tripod quiver Q(a,b,c)")

    verify_parser = subparsers.add_parser("verify", parents=[common], help="Run acceptance suites")
    verify_parser.add_argument("suite", nargs="?", default="all", choices=("all",) + SUITES)

    walk_parser = subparsers.add_parser("walk", parents=[common], help="Follow a mutation sequence")
    start = walk_parser.add_mutually_exclusive_group(required=True)
    start.add_argument("--type", help="Dynkin type such as A2")
    start.add_argument("--tripod", nargs=3, type=int, metavar=("A", "B", "C"), help="Tripod N-graph G(a,b,c)")
    start.add_argument("--linear", type=int, metavar="N", help="Linear N-graph G(A_n)")
    walk_parser.add_argument("--seq", default="", help="Comma separated mutation directions")
    walk_parser.add_argument("--coxeter", type=int, default=0, metavar="R", help="Apply Coxeter mutation R times first")

    ngraph_parser = subparsers.add_parser("ngraph", help="Build and transform N-graphs")
    ngraph_actions = ngraph_parser.add_subparsers(dest="ngraph_action", required=True)
    add_graph_arguments(ngraph_actions.add_parser("build", parents=[common], help="Export a standard N-graph"))
    mutate_parser = ngraph_actions.add_parser("mutate", parents=[common], help="Legendrian mutation at cycles")
    add_graph_arguments(mutate_parser)
    mutate_parser.add_argument("--k", required=True, help="Comma separated cycle labels")
    coxeter_parser = ngraph_actions.add_parser("coxeter", parents=[common], help="Legendrian Coxeter mutation")
    add_graph_arguments(coxeter_parser)
    coxeter_parser.add_argument("--r", type=int, default=1, help="Number of Coxeter mutations")
    add_graph_arguments(ngraph_actions.add_parser("quiver", parents=[common], help="Intersection quiver"))
    admissible_parser = ngraph_actions.add_parser("check-admissible", parents=[common],
                                                  help="Check G-admissibility of the cycles")
    add_graph_arguments(admissible_parser)
    admissible_parser.add_argument("--setting", required=True, choices=[s.value for s in AdmissibleSetting])

    flags_parser = subparsers.add_parser("flags", help="Flags and monodromies")
    flags_actions = flags_parser.add_subparsers(dest="flags_action", required=True)
    add_graph_arguments(flags_actions.add_parser("solve", parents=[common], help="Face flags from boundary flags"))
    for name, help_text in (("monodromy", "Microlocal monodromy of cycles"),
                            ("check-equivariance", "Compare graph mutation with X-mutation")):
        action_parser = flags_actions.add_parser(name, parents=[common], help=help_text)
        add_graph_arguments(action_parser)
        action_parser.add_argument("--cycle", type=int, default=None, help="Cycle label (default: all)")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and run the command; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command not in COMMANDS:
        parser.print_help()
        return 1
    configure_logging(args.verbose)
    try:
        config = config_from_args(args)
        return COMMANDS[args.command](args, config)
    except WeaveError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        print(f"  Fix: {exc.fix_hint}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return exit_code_for(exc)


def main() -> None:
    """Main entry point for CLI."""
    sys.exit(run())


if __name__ == "__main__":
    main()
