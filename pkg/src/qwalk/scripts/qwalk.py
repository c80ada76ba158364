"""Provide functionality for `qwalk.scripts.qwalk`."""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

import structlog
from pydantic import ValidationError

from qwalk.core.coins import COIN_FACTORIES
from qwalk.core.errors import ConfigurationError, GoldenTableError, GraphParseError, IntegrityError
from qwalk.experiments.base import ExperimentParams, ExperimentReport
from qwalk.experiments.output import emit_distribution, render_json, write_state_dumps
from qwalk.experiments.registry import UnknownExperimentError, registry
from qwalk.experiments.tables import TableComparison, compare_tables, packaged_golden
from qwalk.graph.builders import DEFAULT_SLIT_COLS, DEFAULT_SLIT_ROWS, build_double_slit, build_lattice, build_line
from qwalk.graph.property_graph import PropertyGraph
from qwalk.graph.storage import dump_graph, load_graph, save_graph
from qwalk.logging import configure_logging
from qwalk.settings import get_settings

logger = structlog.get_logger(__name__)

EXIT_USAGE = 2
EXIT_INTEGRITY = 3
EXIT_IO = 4


def _int_list(text: str) -> tuple[int, ...]:
    """Parse ``"9,10"``.

    Args:
        text: The text value.

    Returns:
        The resulting value.

    Raises:
        argparse.ArgumentTypeError: If an entry is not an integer.
    """
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _int_groups(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse ``"6,7;12,13"``.

    Args:
        text: The text value.

    Returns:
        The resulting value.
    """
    return tuple(_int_list(group) for group in text.split(";") if group.strip())


def _build_parser() -> argparse.ArgumentParser:
    """Build the experiment parser.

    Returns:
        The resulting value.
    """
    parser = argparse.ArgumentParser(
        prog="qwalk",
        description="Run quantum and classical walk experiments. Use 'qwalk graph ...' to build or inspect graphs.",
    )
    parser.add_argument("experiment", nargs="?", help="Experiment name, for example 'line-hadamard'.")
    parser.add_argument("--list", action="store_true", help="List discovered experiments.")
    parser.add_argument("--vertices", type=int, default=None, help="Line length.")
    parser.add_argument("--width", type=int, default=None, help="Lattice width.")
    parser.add_argument("--height", type=int, default=None, help="Lattice height.")
    parser.add_argument("--slit-rows", type=_int_list, default=None, help="Screen rows, for example '9,10'.")
    parser.add_argument("--slit-cols", type=_int_groups, default=None, help="Slit columns, for example '6,7;12,13'.")
    parser.add_argument("--steps", type=int, default=None, help="Number of walk steps.")
    parser.add_argument("--coin", choices=sorted(COIN_FACTORIES), default=None, help="Coin operator.")
    parser.add_argument("--initial-spin", default=None, help="Initial spin as 're,im;re,im;...'.")
    parser.add_argument("--start", type=int, default=None, help="Start vertex.")
    parser.add_argument("--seed", type=int, default=0, help="Seed for every random draw.")
    parser.add_argument("--samples", type=int, default=1000, help="Sampled walkers for classical histograms.")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads for the quantum step.")
    parser.add_argument("--out", default=None, help="Output directory.")
    parser.add_argument("--format", choices=("csv", "json", "svg"), default="csv", help="Distribution file format.")
    parser.add_argument("--dump-iterations", action="store_true", help="Write a state dump for every iteration.")
    parser.add_argument(
        "--compare-golden",
        nargs="?",
        const="",
        default=None,
        metavar="PATH",
        help="Compare against a golden table; without PATH the packaged tables for the experiment are used.",
    )
    parser.add_argument("--json", action="store_true", help="Print the report as JSON instead of a summary.")
    parser.add_argument("--log-level", default=None, help="Log level (defaults to QWALK_LOG_LEVEL).")
    return parser


def _build_graph_parser() -> argparse.ArgumentParser:
    """Build the ``qwalk graph`` parser.

    Returns:
        The resulting value.
    """
    parser = argparse.ArgumentParser(prog="qwalk graph", description="Build or inspect graph files.")
    parser.add_argument("--log-level", default=None, help="Log level (defaults to QWALK_LOG_LEVEL).")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="Build a graph and write it as JSON.")
    build.add_argument("kind", choices=("line", "lattice", "double-slit"))
    build.add_argument("--vertices", type=int, default=100)
    build.add_argument("--width", type=int, default=20)
    build.add_argument("--height", type=int, default=20)
    build.add_argument("--slit-rows", type=_int_list, default=DEFAULT_SLIT_ROWS)
    build.add_argument("--slit-cols", type=_int_groups, default=DEFAULT_SLIT_COLS)
    build.add_argument("--out", default=None, help="Output file; stdout when omitted.")

    load = commands.add_parser("load", help="Validate a graph file and print a summary.")
    load.add_argument("path")
    return parser


def _print_experiments() -> None:
    """Print discovered experiments."""
    names = registry.names()
    if not names:
        print("No experiments discovered.")
        return

    print("Discovered experiments:")
    for name in names:
        print(f"- {name}: {registry.get(name).description}")


def _params_from_args(args: argparse.Namespace) -> ExperimentParams:
    """Map parsed flags onto experiment parameters.

    Args:
        args: The args value.

    Returns:
        The resulting value.
    """
    return ExperimentParams(
        vertices=args.vertices,
        width=args.width,
        height=args.height,
        slit_rows=args.slit_rows,
        slit_cols=args.slit_cols,
        steps=args.steps,
        coin=args.coin,
        initial_spin=args.initial_spin,
        start=args.start,
        seed=args.seed,
        samples=args.samples,
        threads=args.threads if args.threads is not None else get_settings().default_threads,
        dump_iterations=args.dump_iterations,
    )


def _print_summary(report: ExperimentReport, written: Sequence[Path]) -> None:
    """Print a human summary of a report.

    Args:
        report: The report value.
        written: Files written for this run.
    """
    print(f"Experiment: {report.experiment}")
    print(f"  parameters: {report.parameters}")
    if report.iterations:
        print(f"  iterations: {report.iterations[-1].iteration}")
    top = sorted(report.final.items(), key=lambda item: (-item[1], item[0]))[:5]
    print("  most likely: " + ", ".join(f"v{vertex}={p:.6f}" for vertex, p in top))
    if report.final_counts is not None:
        print(f"  total count: {sum(report.final_counts.values())}")
    if report.collapse is not None:
        print(f"  collapse: vertex {report.collapse[0]}, spin index {report.collapse[1]}")
    print(f"  max norm drift: {report.integrity.max_norm_drift:.3e}")
    if report.integrity.recovered_probability is not None:
        print(f"  recovered probability: {report.integrity.recovered_probability:.12f}")
    for key in sorted(report.extras):
        value = report.extras[key]
        if not isinstance(value, dict):
            print(f"  {key}: {value}")
    for path in written:
        print(f"  wrote {path}")


def _golden_comparisons(report: ExperimentReport, target: str) -> list[TableComparison]:
    """Run the requested golden comparisons.

    Args:
        report: The report value.
        target: Golden file path, or an empty string for the packaged tables.

    Returns:
        The resulting value.

    Raises:
        GoldenTableError: If no packaged table exists for the experiment.
    """
    if target:
        return [compare_tables(report, target)]
    names = registry.get(report.experiment).goldens
    if not names:
        raise GoldenTableError(f"No packaged golden table for '{report.experiment}'.")
    return [compare_tables(report, packaged_golden(name)) for name in names]


def _run_experiment(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    """Run one experiment and write its outputs.

    Args:
        parser: The parser value.
        args: The args value.

    Returns:
        The resulting value.
    """
    try:
        experiment_cls = registry.get(args.experiment)
        params = _params_from_args(args)
    except (UnknownExperimentError, ValidationError) as exc:
        parser.error(str(exc))

    try:
        report = experiment_cls().execute(params)
    except ConfigurationError as exc:
        parser.error(str(exc))

    written: list[Path] = []
    if report.graph_kind != "sets":
        out_dir = Path(args.out or get_settings().output_dir)
        written.append(emit_distribution(report, args.format, out_dir))
        if args.dump_iterations:
            written.extend(write_state_dumps(report, out_dir))

    if args.json:
        print(render_json(report), end="")
    elif report.listing is not None:
        print(report.listing, end="")
    else:
        _print_summary(report, written)

    if args.compare_golden is not None:
        comparisons = _golden_comparisons(report, args.compare_golden)
        failed = [comparison for comparison in comparisons if not comparison.passed]
        for comparison in failed:
            print(f"golden mismatch ({comparison.golden}): {comparison.first_mismatch}", file=sys.stderr)
        if failed:
            return EXIT_INTEGRITY
    return 0


def _summarize_graph(graph: PropertyGraph) -> str:
    """Return a one-line graph summary.

    Args:
        graph: The graph value.

    Returns:
        The resulting value.
    """
    labels = ",".join(graph.labels) or "-"
    return f"vertices={len(graph)} edges={len(graph.edges)} labels={labels}"


def _run_graph_command(argv: Sequence[str]) -> int:
    """Handle ``qwalk graph build|load``.

    Args:
        argv: Arguments after ``graph``.

    Returns:
        The resulting value.
    """
    parser = _build_graph_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or get_settings().log_level)

    if args.command == "load":
        graph = load_graph(args.path)
        print(_summarize_graph(graph))
        return 0

    try:
        if args.kind == "line":
            graph = build_line(args.vertices)
        elif args.kind == "lattice":
            graph = build_lattice(args.width, args.height)
        else:
            graph = build_double_slit(args.width, args.height, args.slit_rows, args.slit_cols)
    except ConfigurationError as exc:
        parser.error(str(exc))

    if args.out is None:
        print(dump_graph(graph), end="")
    else:
        save_graph(graph, args.out)
        print(f"wrote {args.out}: {_summarize_graph(graph)}")
    return 0


def _dispatch(argv: Sequence[str]) -> int:
    """Route to the graph tool or the experiment runner.

    Args:
        argv: The argv value.

    Returns:
        The resulting value.
    """
    if argv and argv[0] == "graph":
        return _run_graph_command(argv[1:])

    parser = _build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or get_settings().log_level)

    if args.list:
        _print_experiments()
        if not args.experiment:
            return 0

    if not args.experiment:
        parser.error("Provide an experiment name or pass --list.")
    return _run_experiment(parser, args)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the entrypoint.

    Args:
        argv: Arguments without the program name; defaults to ``sys.argv[1:]``.

    Returns:
        The resulting value.

    Raises:
        SystemExit: With code 3 on integrity failures and 4 on I/O errors.
    """
    arguments = list(sys.argv[1:] if argv is None else argv)
    try:
        return _dispatch(arguments)
    except (IntegrityError, GoldenTableError) as exc:
        logger.error("integrity_failure", error=str(exc))
        print(f"qwalk: integrity failure: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INTEGRITY) from exc
    except GraphParseError as exc:
        print(f"qwalk: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE) from exc
    except OSError as exc:
        logger.error("io_failure", error=str(exc))
        print(f"qwalk: I/O error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO) from exc


if __name__ == "__main__":
    raise SystemExit(main())
