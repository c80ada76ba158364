"""Dense ``U = S·(I⊗C)`` construction used to cross-check the traverser engine.

Basis index of ``(vertex, k)`` is ``position(vertex) * dim + k`` where ``position``
is the rank of the vertex in ascending id order.
"""

import numpy as np
import structlog
from numpy.typing import NDArray

from qwalk.core.coins import is_unitary
from qwalk.core.errors import AmbiguityError, BoundaryError, CapabilityError, ConfigurationError, IntegrityError
from qwalk.core.models import WalkConfig, WalkState
from qwalk.core.spin import resolve_axis
from qwalk.graph.property_graph import PropertyGraph
from qwalk.settings import get_settings

logger = structlog.get_logger(__name__)

type DenseMatrix = NDArray[np.complex128]


def _positions(graph: PropertyGraph) -> dict[int, int]:
    """Map vertex ids to their rank.

    Args:
        graph: The graph value.

    Returns:
        The resulting value.
    """
    return {vertex: position for position, vertex in enumerate(graph.vertices)}


def _check_size(graph: PropertyGraph, dim: int) -> int:
    """Return ``|V|·dim`` or refuse if it is over the size guard.

    Args:
        graph: The graph value.
        dim: The dim value.

    Returns:
        The resulting value.

    Raises:
        CapabilityError: If the dense matrix would be too large.
    """
    size = len(graph) * dim
    limit = get_settings().oracle_max_dimension
    if size > limit:
        raise CapabilityError(f"Dense oracle needs a {size}x{size} matrix; the limit is {limit}.")
    return size


def shift_matrix(graph: PropertyGraph, config: WalkConfig) -> DenseMatrix:
    """Build the shift operator ``S`` including boundary reflections.

    Args:
        graph: The graph value.
        config: The config value.

    Returns:
        The resulting value.

    Raises:
        AmbiguityError: If a branch label has several targets.
        BoundaryError: If a ``forbid`` branch has no target.
    """
    dim = config.dim
    size = _check_size(graph, dim)
    positions = _positions(graph)
    shift = np.zeros((size, size), dtype=np.complex128)
    for vertex, position in positions.items():
        for branch in config.branches:
            k = branch.projection_index
            targets = graph.neighbors(vertex, branch.label, branch.direction)
            if len(targets) > 1:
                raise AmbiguityError(f"Label '{branch.label}' has {len(targets)} targets at vertex {vertex}.")
            if targets:
                shift[positions[targets[0]] * dim + k, position * dim + k] += 1.0
                continue
            if branch.boundary_policy == "forbid":
                raise BoundaryError(f"Branch '{branch.label}' has no edge at vertex {vertex}.")
            first, second = resolve_axis(branch.reflect_axis, dim)
            partner = second if k == first else first if k == second else k
            shift[position * dim + partner, position * dim + k] += 1.0
    return shift


def dense_oracle_step(graph: PropertyGraph, config: WalkConfig) -> DenseMatrix:
    """Return the full one-step unitary ``S·(I⊗C)``.

    Args:
        graph: The graph value.
        config: The config value.

    Returns:
        The resulting value.

    Raises:
        IntegrityError: If the assembled operator is not unitary.
    """
    coin_block = np.kron(np.eye(len(graph), dtype=np.complex128), config.coin.matrix)
    unitary = shift_matrix(graph, config) @ coin_block
    if not is_unitary(unitary, get_settings().oracle_unitarity_tolerance):
        raise IntegrityError("Dense step operator is not unitary; check the branch reflection axes.")
    logger.debug("dense_oracle_built", size=unitary.shape[0])
    return unitary


def state_to_vector(graph: PropertyGraph, state: WalkState, dim: int) -> NDArray[np.complex128]:
    """Flatten a state into the oracle basis.

    Args:
        graph: The graph value.
        state: The state value.
        dim: The dim value.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the state names a vertex outside the graph.
    """
    positions = _positions(graph)
    vector = np.zeros(len(graph) * dim, dtype=np.complex128)
    for vertex, spin in state.amplitudes.items():
        if vertex not in positions:
            raise ConfigurationError(f"State vertex {vertex} is not in the graph.")
        offset = positions[vertex] * dim
        vector[offset : offset + dim] = spin
    return vector


def vector_to_state(graph: PropertyGraph, vector: NDArray[np.complex128], dim: int, iteration: int = 0) -> WalkState:
    """Unflatten an oracle vector, keeping only vertices with a nonzero block.

    Args:
        graph: The graph value.
        vector: The vector value.
        dim: The dim value.
        iteration: The iteration value.

    Returns:
        The resulting value.
    """
    amplitudes = {}
    for position, vertex in enumerate(graph.vertices):
        block = vector[position * dim : (position + 1) * dim]
        if np.any(block != 0):
            amplitudes[int(vertex)] = block.copy()
    return WalkState(amplitudes=amplitudes, iteration=iteration)


def dense_oracle_run(
    graph: PropertyGraph,
    config: WalkConfig,
    psi0: NDArray[np.complex128],
    n: int,
) -> NDArray[np.complex128]:
    """Apply ``U`` to ``psi0`` ``n`` times.

    Args:
        graph: The graph value.
        config: The config value.
        psi0: Initial amplitude vector in the oracle basis.
        n: The n value.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If ``n`` is negative or ``psi0`` has the wrong length.
    """
    if n < 0:
        raise ConfigurationError(f"Step count must be >= 0, got {n}.")
    unitary = dense_oracle_step(graph, config)
    vector = np.asarray(psi0, dtype=np.complex128)
    if vector.shape != (unitary.shape[0],):
        raise ConfigurationError(f"psi0 must have length {unitary.shape[0]}, got {vector.shape}.")
    for _ in range(n):
        vector = unitary @ vector
    return vector
