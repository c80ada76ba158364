"""Turn a quantum state into probabilities and sample a basis state from it."""

import numpy as np
import structlog

from qwalk.core.errors import IntegrityError
from qwalk.core.models import ProbabilityDistribution, WalkState
from qwalk.core.spin import component_probabilities, spin_norm_sq
from qwalk.settings import get_settings

logger = structlog.get_logger(__name__)


def norm_drift(state: WalkState) -> float:
    """Return ``|sum of norms - 1|`` for a quantum state.

    Args:
        state: The state value.

    Returns:
        The resulting value.
    """
    return abs(state.total_norm_sq - 1.0)


def measure(state: WalkState) -> ProbabilityDistribution:
    """Map every occupied vertex to the modulus-squared of its spin.

    The result is not renormalised.

    Args:
        state: The state value.

    Returns:
        The resulting value.

    Raises:
        IntegrityError: If the total probability drifts past the measurement tolerance.
    """
    probs = {vertex: spin_norm_sq(spin) for vertex, spin in state.amplitudes.items()}
    drift = abs(sum(probs.values()) - 1.0)
    if drift > get_settings().measurement_tolerance:
        raise IntegrityError(f"Total probability deviates from 1 by {drift:.3e} at iteration {state.iteration}.")
    return ProbabilityDistribution(probs=probs)


def collapse(state: WalkState, seed: int) -> tuple[int, int]:
    """Sample one vertex and one spin basis index.

    The vertex is drawn from `measure`; the basis index from the per-component
    modulus-squared at that vertex.

    Args:
        state: The state value.
        seed: The seed value.

    Returns:
        The resulting value.
    """
    distribution = measure(state)
    rng = np.random.default_rng(seed)
    vertices = list(distribution.probs)
    weights = np.fromiter(distribution.probs.values(), dtype=np.float64, count=len(vertices))
    vertex = vertices[int(rng.choice(len(vertices), p=weights / weights.sum()))]

    components = component_probabilities(state.amplitudes[vertex])
    index = int(rng.choice(len(components), p=components / components.sum()))
    logger.debug("collapse", seed=seed, vertex=vertex, basis_index=index)
    return vertex, index
