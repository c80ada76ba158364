"""Standard branch wiring for line and lattice walks."""

from typing import Any

from qwalk.core.coins import CoinOperator
from qwalk.core.models import BoundaryPolicy, BranchSpec, WalkConfig, build_walk_config


def line_branches(boundary: BoundaryPolicy = "reflect") -> tuple[BranchSpec, ...]:
    """Return the left/right branches; component 0 moves left, component 1 moves right.

    Args:
        boundary: Policy applied when a vertex lacks the edge.

    Returns:
        The resulting value.
    """
    axis = (0, 1) if boundary == "reflect" else None
    return (
        BranchSpec(label="left", projection_index=0, boundary_policy=boundary, reflect_axis=axis),
        BranchSpec(label="right", projection_index=1, boundary_policy=boundary, reflect_axis=axis),
    )


def lattice_branches(boundary: BoundaryPolicy = "reflect") -> tuple[BranchSpec, ...]:
    """Return left/right/up/down branches with ``lr`` and ``ud`` reflection axes.

    Args:
        boundary: Policy applied when a vertex lacks the edge.

    Returns:
        The resulting value.
    """
    reflect = boundary == "reflect"
    return (
        BranchSpec(label="left", projection_index=0, boundary_policy=boundary, reflect_axis="lr" if reflect else None),
        BranchSpec(label="right", projection_index=1, boundary_policy=boundary, reflect_axis="lr" if reflect else None),
        BranchSpec(label="up", projection_index=2, boundary_policy=boundary, reflect_axis="ud" if reflect else None),
        BranchSpec(label="down", projection_index=3, boundary_policy=boundary, reflect_axis="ud" if reflect else None),
    )


def line_config(
    coin: CoinOperator,
    *,
    start_vertex: int = 50,
    initial_spin: Any = (1.0, 0.0),
    boundary: BoundaryPolicy = "reflect",
) -> WalkConfig:
    """Build a line-walk configuration.

    Args:
        coin: A 2x2 coin.
        start_vertex: The start vertex value.
        initial_spin: The initial spin value.
        boundary: The boundary value.

    Returns:
        The resulting value.
    """
    return build_walk_config(
        coin=coin,
        branches=line_branches(boundary),
        start_vertex=start_vertex,
        initial_spin=initial_spin,
    )


def lattice_config(
    coin: CoinOperator,
    *,
    start_vertex: int,
    initial_spin: Any = (0.0, 0.0, 1.0, 0.0),
    boundary: BoundaryPolicy = "reflect",
) -> WalkConfig:
    """Build a lattice-walk configuration. The default spin points up.

    Args:
        coin: A 4x4 coin.
        start_vertex: The start vertex value.
        initial_spin: The initial spin value.
        boundary: The boundary value.

    Returns:
        The resulting value.
    """
    return build_walk_config(
        coin=coin,
        branches=lattice_branches(boundary),
        start_vertex=start_vertex,
        initial_spin=initial_spin,
    )
