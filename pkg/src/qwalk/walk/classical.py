"""Classical walks: bulked traverser counts and a single sampled walker."""

from collections.abc import Mapping, Sequence
from fractions import Fraction

import numpy as np
import structlog

from qwalk.core.errors import ConfigurationError, WalkError
from qwalk.graph.builders import LINE_LABELS
from qwalk.graph.property_graph import PropertyGraph

logger = structlog.get_logger(__name__)


def _require_start(graph: PropertyGraph, start: int, n: int) -> None:
    """Validate the start vertex and step count.

    Args:
        graph: The graph value.
        start: The start value.
        n: The n value.

    Raises:
        ConfigurationError: If the start is unknown or ``n`` is negative.
    """
    if n < 0:
        raise ConfigurationError(f"Step count must be >= 0, got {n}.")
    if not graph.has_vertex(start):
        raise ConfigurationError(f"Start vertex {start} is not in the graph.")


def classical_bulk_walk(
    graph: PropertyGraph,
    start: int,
    n: int,
    labels: Sequence[str] = LINE_LABELS,
) -> dict[int, int]:
    """Propagate traverser counts for ``n`` steps.

    Each count is sent along every target of every label; counts landing on the
    same vertex are summed. A share whose label has no target stays put, so the
    total after ``n`` steps is ``len(labels) ** n`` on single-target graphs.

    Args:
        graph: The graph value.
        start: The start value.
        n: The n value.
        labels: Edge labels followed each step.

    Returns:
        The resulting value.
    """
    _require_start(graph, start, n)
    graph.freeze()
    counts: dict[int, int] = {start: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for vertex, bulk in counts.items():
            for label in labels:
                targets = graph.out_neighbors(vertex, label) or (vertex,)
                for target in targets:
                    nxt[target] = nxt.get(target, 0) + bulk
        counts = nxt
    ordered = {vertex: counts[vertex] for vertex in sorted(counts)}
    logger.debug("classical_bulk_walk", start=start, steps=n, occupied=len(ordered))
    return ordered


def normalize_counts(counts: Mapping[int, int]) -> dict[int, Fraction]:
    """Divide every count by the total.

    Args:
        counts: The counts value.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the total is zero.
    """
    total = sum(counts.values())
    if total == 0:
        raise ConfigurationError("Cannot normalise an empty count table.")
    return {vertex: Fraction(count, total) for vertex, count in counts.items()}


def classical_random_walk(
    graph: PropertyGraph,
    start: int,
    n: int,
    seed: int,
    labels: Sequence[str] = LINE_LABELS,
) -> int:
    """Move a single walker ``n`` times, picking uniformly among available targets.

    Args:
        graph: The graph value.
        start: The start value.
        n: The n value.
        seed: The seed value.
        labels: Edge labels the walker may follow.

    Returns:
        The resulting value.

    Raises:
        WalkError: If the walker reaches a vertex with no movement edge.
    """
    _require_start(graph, start, n)
    graph.freeze()
    draws = np.random.default_rng(seed).random(n)
    vertex = start
    for step, draw in enumerate(draws):
        options = [target for label in labels for target in graph.out_neighbors(vertex, label)]
        if not options:
            raise WalkError(f"Vertex {vertex} has no {'/'.join(labels)} edge at step {step}.")
        vertex = options[int(draw * len(options))]
    return vertex


def random_walk_histogram(
    graph: PropertyGraph,
    start: int,
    n: int,
    seeds: Sequence[int],
    labels: Sequence[str] = LINE_LABELS,
) -> dict[int, float]:
    """Return the empirical end-vertex distribution over ``seeds``.

    Args:
        graph: The graph value.
        start: The start value.
        n: The n value.
        seeds: One walk per seed.
        labels: Edge labels the walker may follow.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If ``seeds`` is empty.
    """
    if not seeds:
        raise ConfigurationError("At least one seed is required.")
    hits: dict[int, int] = {}
    for seed in seeds:
        end = classical_random_walk(graph, start, n, seed, labels)
        hits[end] = hits.get(end, 0) + 1
    return {vertex: hits[vertex] / len(seeds) for vertex in sorted(hits)}
