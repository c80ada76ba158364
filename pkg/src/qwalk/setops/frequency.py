"""Frequency spins: integer branch tallies carried on traversers.

Set operations fall out of the merge. Walking several branches from the same
start and merging by destination leaves one tally per branch on every vertex;
intersection keeps vertices reached by every branch, symmetric difference keeps
vertices reached by exactly one.
"""

from collections.abc import Iterable, Sequence

import structlog
from pydantic import BaseModel, ConfigDict, Field

from qwalk.core.errors import ConfigurationError
from qwalk.graph.property_graph import PropertyGraph

logger = structlog.get_logger(__name__)

type FrequencySpin = tuple[int, ...]
type BranchResult = tuple[int, FrequencySpin]


class FrequencyBranch(BaseModel):
    """One frequency branch. ``label=None`` stays at the current vertex."""

    model_config = ConfigDict(frozen=True)

    label: str | None = None
    projection_index: int = Field(ge=0)


def _require_nonnegative(s: Sequence[int]) -> None:
    """Reject negative tallies.

    Args:
        s: The s value.

    Raises:
        ConfigurationError: If any tally is negative.
    """
    if any(tally < 0 for tally in s):
        raise ConfigurationError(f"Frequency tallies must be nonnegative, got {list(s)}.")


def split(s: Sequence[int]) -> FrequencySpin:
    """Place the tally sum in every component.

    Args:
        s: The s value.

    Returns:
        The resulting value.
    """
    _require_nonnegative(s)
    total = sum(s)
    return tuple(total for _ in s)


def norm_collapse(s: Sequence[int]) -> FrequencySpin:
    """Fold every tally into the first component.

    Args:
        s: The s value.

    Returns:
        The resulting value.
    """
    _require_nonnegative(s)
    if not s:
        return ()
    return (sum(s),) + (0,) * (len(s) - 1)


def _coerce_branches(branches: Iterable[FrequencyBranch | tuple[str | None, int]]) -> tuple[FrequencyBranch, ...]:
    """Accept branch models or ``(label, index)`` pairs.

    Args:
        branches: The branches value.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If projection indices are not ``0..n-1``.
    """
    coerced = tuple(
        branch if isinstance(branch, FrequencyBranch) else FrequencyBranch(label=branch[0], projection_index=branch[1])
        for branch in branches
    )
    if sorted(branch.projection_index for branch in coerced) != list(range(len(coerced))):
        raise ConfigurationError("Frequency branch projection indices must be a permutation of 0..n-1.")
    return coerced


def branch_walk(
    graph: PropertyGraph,
    start: int | Sequence[int],
    branches: Iterable[FrequencyBranch | tuple[str | None, int]],
) -> list[BranchResult]:
    """Split, move each branch along its label, and merge tallies per destination.

    Each traverser starts with tally ``[1, 0, ...]``. Parallel edges each carry
    one tally; an unknown label contributes nothing.

    Args:
        graph: The graph value.
        start: One start vertex, or several (each seeds its own traverser).
        branches: Branch labels with their tally positions.

    Returns:
        Results in ascending vertex order.

    Raises:
        ConfigurationError: If no branches are given or a start vertex is unknown.
    """
    wiring = _coerce_branches(branches)
    if not wiring:
        raise ConfigurationError("branch_walk needs at least one branch.")
    starts = [start] if isinstance(start, int) else list(start)
    for vertex in starts:
        if not graph.has_vertex(vertex):
            raise ConfigurationError(f"Start vertex {vertex} is not in the graph.")

    width = len(wiring)
    seed = (1,) + (0,) * (width - 1)
    merged: dict[int, list[int]] = {}
    for vertex in starts:
        spread = split(seed)
        for branch in wiring:
            targets = (vertex,) if branch.label is None else graph.out_neighbors(vertex, branch.label)
            for target in targets:
                tallies = merged.setdefault(target, [0] * width)
                tallies[branch.projection_index] += spread[branch.projection_index]
    results = [(vertex, tuple(merged[vertex])) for vertex in sorted(merged)]
    logger.debug("branch_walk", starts=len(starts), branches=width, results=len(results))
    return results


def intersect_filter(results: Iterable[BranchResult]) -> list[BranchResult]:
    """Keep results reached by every branch.

    Args:
        results: The results value.

    Returns:
        The resulting value.
    """
    return [(vertex, tallies) for vertex, tallies in results if all(tally > 0 for tally in tallies)]


def sym_diff_filter(results: Iterable[BranchResult]) -> list[BranchResult]:
    """Keep results reached by exactly one branch.

    Args:
        results: The results value.

    Returns:
        The resulting value.
    """
    return [(vertex, tallies) for vertex, tallies in results if sum(tally > 0 for tally in tallies) == 1]


def _label_branches(labels: Sequence[str]) -> list[FrequencyBranch]:
    """Wire one branch per label in order.

    Args:
        labels: The labels value.

    Returns:
        The resulting value.
    """
    return [FrequencyBranch(label=label, projection_index=index) for index, label in enumerate(labels)]


def intersect(graph: PropertyGraph, start: int, labels: Sequence[str]) -> list[BranchResult]:
    """Return vertices reachable from ``start`` over every label, tallies folded.

    Args:
        graph: The graph value.
        start: The start value.
        labels: The labels value.

    Returns:
        The resulting value.
    """
    kept = intersect_filter(branch_walk(graph, start, _label_branches(labels)))
    return [(vertex, norm_collapse(tallies)) for vertex, tallies in kept]


def sym_diff(graph: PropertyGraph, start: int, labels: Sequence[str]) -> list[BranchResult]:
    """Return vertices reachable from ``start`` over exactly one label, tallies folded.

    Args:
        graph: The graph value.
        start: The start value.
        labels: The labels value.

    Returns:
        The resulting value.
    """
    kept = sym_diff_filter(branch_walk(graph, start, _label_branches(labels)))
    return [(vertex, norm_collapse(tallies)) for vertex, tallies in kept]


def except_pattern(graph: PropertyGraph, start: int, label: str) -> list[int]:
    """Return two-hop ``label`` neighbours of ``start`` that are not one-hop neighbours.

    The one-hop frontier walks an identity branch and a ``label`` branch; a
    two-hop vertex is kept when no traverser reached it through the identity
    branch.

    Args:
        graph: The graph value.
        start: The start value.
        label: The label value.

    Returns:
        Vertex ids in ascending order.
    """
    frontier = list(graph.out_neighbors(start, label))
    if not frontier:
        return []
    results = branch_walk(
        graph,
        frontier,
        [FrequencyBranch(label=None, projection_index=0), FrequencyBranch(label=label, projection_index=1)],
    )
    return [vertex for vertex, (stayed, moved) in results if stayed == 0 and moved > 0]


def format_listing(results: Iterable[BranchResult]) -> str:
    """Render results one per line as ``==>[v[K], [t0, t1]]``.

    Args:
        results: The results value.

    Returns:
        The resulting value.
    """
    return "\n".join(f"==>[v[{vertex}], [{', '.join(str(t) for t in tallies)}]]" for vertex, tallies in results)
