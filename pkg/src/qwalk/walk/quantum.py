"""Bulk-synchronous quantum traverser engine.

Each step runs in two phases. Every occupied vertex first emits its children
(coin, then projection and movement or reflection per branch); this phase may run
on a thread pool. The barrier then merges children per vertex sequentially in
canonical order (ascending source vertex, then branch index), so results do not
depend on the thread count.
"""

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Literal

import numpy as np
import structlog

from qwalk.core.coins import CoinOperator, coin_apply, coin_adjoint
from qwalk.core.errors import AmbiguityError, BoundaryError, ConfigurationError
from qwalk.core.models import BranchSpec, Traverser, WalkConfig, WalkState
from qwalk.core.spin import SpinVector, basis_mask, spin_merge, spin_norm_sq, spin_project, spin_reflect
from qwalk.graph.property_graph import PropertyGraph
from qwalk.settings import get_settings

logger = structlog.get_logger(__name__)

type StepCallback = Callable[[WalkState], None]


def init_state(graph: PropertyGraph, config: WalkConfig) -> WalkState:
    """Place the single classical traverser at the start vertex.

    Args:
        graph: The graph value.
        config: The config value.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the start vertex is not in the graph.
    """
    if not graph.has_vertex(config.start_vertex):
        raise ConfigurationError(f"Start vertex {config.start_vertex} is not in the graph.")
    return WalkState(amplitudes={config.start_vertex: config.initial_spin.copy()}, iteration=0)


def _emit_children(
    vertex: int,
    spin: SpinVector,
    graph: PropertyGraph,
    config: WalkConfig,
    direction_flip: bool,
) -> list[Traverser]:
    """Project ``spin`` onto every branch and place each child.

    Args:
        vertex: Source vertex.
        spin: Spin after the coin (forward) or the merged spin (reverse).
        graph: The graph value.
        config: The config value.
        direction_flip: Walk edges against their configured direction.

    Returns:
        The resulting value.

    Raises:
        AmbiguityError: If a branch label has several targets.
        BoundaryError: If a ``forbid`` branch has no target.
    """
    children: list[Traverser] = []
    for branch in config.branches:
        child = spin_project(spin, basis_mask(config.dim, branch.projection_index))
        active: BranchSpec = branch.inverted() if direction_flip else branch
        targets = graph.neighbors(vertex, active.label, active.direction)
        if len(targets) > 1:
            raise AmbiguityError(
                f"Label '{branch.label}' has {len(targets)} targets at vertex {vertex}; quantum branches need one."
            )
        if targets:
            children.append(Traverser.model_construct(location=targets[0], spin=child, bulk=1))
            continue
        if branch.boundary_policy == "forbid":
            raise BoundaryError(f"Branch '{branch.label}' has no edge at vertex {vertex}.")
        axis = config.branch_axis(branch)
        children.append(Traverser.model_construct(location=vertex, spin=spin_reflect(child, axis), bulk=1))
    return children


def _chunks(items: Sequence[tuple[int, SpinVector]], parts: int) -> list[Sequence[tuple[int, SpinVector]]]:
    """Split ``items`` into at most ``parts`` contiguous slices.

    Args:
        items: The items value.
        parts: The parts value.

    Returns:
        The resulting value.
    """
    size = max(1, -(-len(items) // parts))
    return [items[index : index + size] for index in range(0, len(items), size)]


def _scatter(
    state: WalkState,
    graph: PropertyGraph,
    config: WalkConfig,
    *,
    coin: CoinOperator | None,
    direction_flip: bool,
    threads: int,
) -> list[Traverser]:
    """Emit children of every occupied vertex in canonical order.

    Args:
        state: The state value.
        graph: The graph value.
        config: The config value.
        coin: Coin applied before branching, or None to branch the raw spin.
        direction_flip: Walk edges against their configured direction.
        threads: Worker count for the emit phase.

    Returns:
        The resulting value.
    """
    items = list(state.amplitudes.items())

    def _emit_chunk(chunk: Sequence[tuple[int, SpinVector]]) -> list[Traverser]:
        """Emit children for a contiguous run of vertices.

        Args:
            chunk: The chunk value.

        Returns:
            The resulting value.
        """
        emitted: list[Traverser] = []
        for vertex, spin in chunk:
            rotated = coin_apply(coin, spin) if coin is not None else spin
            emitted.extend(_emit_children(vertex, rotated, graph, config, direction_flip))
        return emitted

    if threads <= 1 or len(items) < 2:
        return _emit_chunk(items)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_emit_chunk, _chunks(items, threads)))
    return [child for chunk_children in results for child in chunk_children]


def _barrier(children: Sequence[Traverser], prune_epsilon: float | None) -> dict[int, SpinVector]:
    """Merge co-located children into one spin per vertex.

    Args:
        children: Children in canonical order.
        prune_epsilon: Drop merged entries whose norm falls below this value.

    Returns:
        The resulting value.
    """
    merged: dict[int, SpinVector] = {}
    for child in children:
        current = merged.get(child.location)
        merged[child.location] = child.spin if current is None else spin_merge(current, child.spin)
    if prune_epsilon is not None:
        merged = {vertex: spin for vertex, spin in merged.items() if spin_norm_sq(spin) >= prune_epsilon}
    return merged


def _resolve_threads(threads: int | None) -> int:
    """Resolve the worker count.

    Args:
        threads: Explicit worker count or None for the configured default.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the count is below 1.
    """
    count = get_settings().default_threads if threads is None else threads
    if count < 1:
        raise ConfigurationError(f"threads must be >= 1, got {count}.")
    return count


def quantum_step(
    state: WalkState,
    graph: PropertyGraph,
    config: WalkConfig,
    *,
    threads: int | None = None,
) -> WalkState:
    """Apply one coin-shift-merge round.

    Args:
        state: The state value.
        graph: The graph value.
        config: The config value.
        threads: Worker count for the emit phase.

    Returns:
        The resulting value.
    """
    graph.freeze()
    children = _scatter(
        state, graph, config, coin=config.coin, direction_flip=False, threads=_resolve_threads(threads)
    )
    merged = _barrier(children, config.prune_epsilon)
    return WalkState(amplitudes=merged, iteration=state.iteration + 1)


def reverse_step(
    state: WalkState,
    graph: PropertyGraph,
    config: WalkConfig,
    *,
    threads: int | None = None,
) -> WalkState:
    """Undo one round: move against each branch's edges, merge, then apply the adjoint coin.

    Args:
        state: The state value.
        graph: The graph value.
        config: The config value.
        threads: Worker count for the emit phase.

    Returns:
        The resulting value.
    """
    graph.freeze()
    children = _scatter(state, graph, config, coin=None, direction_flip=True, threads=_resolve_threads(threads))
    merged = _barrier(children, config.prune_epsilon)
    adjoint = coin_adjoint(config.coin)
    restored = {vertex: coin_apply(adjoint, spin) for vertex, spin in merged.items()}
    return WalkState(amplitudes=restored, iteration=max(state.iteration - 1, 0))


def _evolve(
    graph: PropertyGraph,
    state: WalkState,
    config: WalkConfig,
    n: int,
    *,
    mode: Literal["forward", "reverse"],
    threads: int | None,
    on_step: StepCallback | None,
) -> WalkState:
    """Apply ``n`` forward or reverse steps.

    Args:
        graph: The graph value.
        state: The state value.
        config: The config value.
        n: Step count.
        mode: Direction of evolution.
        threads: Worker count for the emit phase.
        on_step: Called with every intermediate state.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If ``n`` is negative.
    """
    if n < 0:
        raise ConfigurationError(f"Step count must be >= 0, got {n}.")
    step = quantum_step if mode == "forward" else reverse_step
    for _ in range(n):
        state = step(state, graph, config, threads=threads)
        logger.debug("quantum_step", mode=mode, iteration=state.iteration, norm=state.total_norm_sq)
        if on_step is not None:
            on_step(state)
    return state


def run_walk(
    graph: PropertyGraph,
    config: WalkConfig,
    n: int,
    *,
    state: WalkState | None = None,
    threads: int | None = None,
    on_step: StepCallback | None = None,
) -> WalkState:
    """Run ``n`` quantum steps from the configured start, or from ``state``.

    Args:
        graph: The graph value.
        config: The config value.
        n: Step count.
        state: Optional state to continue from.
        threads: Worker count for the emit phase.
        on_step: Called with every intermediate state.

    Returns:
        The resulting value.
    """
    start = init_state(graph, config) if state is None else state
    return _evolve(graph, start, config, n, mode="forward", threads=threads, on_step=on_step)


def run_reverse(
    graph: PropertyGraph,
    state: WalkState,
    config: WalkConfig,
    n: int,
    *,
    threads: int | None = None,
    on_step: StepCallback | None = None,
) -> WalkState:
    """Run ``n`` inverse steps from ``state``.

    Args:
        graph: The graph value.
        state: The state value.
        config: The config value.
        n: Step count.
        threads: Worker count for the emit phase.
        on_step: Called with every intermediate state.

    Returns:
        The resulting value.
    """
    return _evolve(graph, state, config, n, mode="reverse", threads=threads, on_step=on_step)


def max_amplitude_difference(left: WalkState, right: WalkState) -> float:
    """Return the largest per-component difference between two states.

    Vertices missing from one side count as zero spins.

    Args:
        left: The left value.
        right: The right value.

    Returns:
        The resulting value.
    """
    worst = 0.0
    for vertex in set(left.amplitudes) | set(right.amplitudes):
        a = left.amplitudes.get(vertex)
        b = right.amplitudes.get(vertex)
        if a is None:
            a = np.zeros_like(b)
        if b is None:
            b = np.zeros_like(a)
        worst = max(worst, float(np.max(np.abs(a - b))))
    return worst
