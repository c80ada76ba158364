"""Shared quantum pipeline: classical start, evolution with norm checks, measurement, collapse."""

from typing import Any, ClassVar

import numpy as np
import structlog
from pydantic import BaseModel, ConfigDict, Field

from qwalk.core.coins import coin_by_name, unitarity_error
from qwalk.core.errors import IntegrityError
from qwalk.core.models import WalkConfig, WalkState
from qwalk.experiments.base import (
    BaseExperiment,
    ExperimentParams,
    ExperimentReport,
    IntegrityReport,
    IterationRecord,
    require_start,
)
from qwalk.graph.builders import build_line
from qwalk.graph.property_graph import PropertyGraph
from qwalk.settings import get_settings
from qwalk.walk.classical import classical_bulk_walk, normalize_counts
from qwalk.walk.configs import line_config
from qwalk.walk.measurement import collapse, measure, norm_drift
from qwalk.walk.quantum import init_state, run_walk

logger = structlog.get_logger(__name__)

INV_SQRT2 = 1.0 / np.sqrt(2.0)


class QuantumRun(BaseModel):
    """Represent `QuantumRun`."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    final_state: WalkState
    iterations: list[IterationRecord] = Field(default_factory=list)
    state_dumps: list[dict[str, Any]] = Field(default_factory=list)
    max_norm_drift: float = 0.0
    collapse: tuple[int, int]


def evolve(
    graph: PropertyGraph,
    config: WalkConfig,
    steps: int,
    *,
    seed: int,
    threads: int = 1,
    dump_iterations: bool = False,
) -> QuantumRun:
    """Run ``steps`` quantum steps, checking the norm after every one.

    Args:
        graph: The graph value.
        config: The config value.
        steps: The steps value.
        seed: Seed for the final collapse.
        threads: Worker count for the engine.
        dump_iterations: Keep a state dump for every iteration.

    Returns:
        The resulting value.

    Raises:
        IntegrityError: If the norm drifts past the configured tolerance.
    """
    tolerance = get_settings().norm_tolerance
    start = init_state(graph, config)
    records = [IterationRecord(iteration=0, probs=measure(start).probs)]
    dumps = [start.to_dump()] if dump_iterations else []
    worst = norm_drift(start)

    def _observe(state: WalkState) -> None:
        """Record one iteration and enforce norm conservation.

        Args:
            state: The state value.

        Raises:
            IntegrityError: If the norm drifts past the configured tolerance.
        """
        nonlocal worst
        drift = norm_drift(state)
        if drift > tolerance:
            raise IntegrityError(f"Norm drift {drift:.3e} at iteration {state.iteration} exceeds {tolerance:.0e}.")
        worst = max(worst, drift)
        records.append(IterationRecord(iteration=state.iteration, probs=measure(state).probs))
        if dump_iterations:
            dumps.append(state.to_dump())

    final = run_walk(graph, config, steps, state=start, threads=threads, on_step=_observe)
    sample = collapse(final, seed)
    logger.info("quantum_run_finished", steps=steps, max_norm_drift=worst, collapse_vertex=sample[0])
    return QuantumRun(final_state=final, iterations=records, state_dumps=dumps, max_norm_drift=worst, collapse=sample)


def mirror_error(probs: dict[int, float], centre: int) -> float:
    """Return ``max |p(centre - k) - p(centre + k)|`` over all ``k``.

    Args:
        probs: The probs value.
        centre: The centre value.

    Returns:
        The resulting value.
    """
    reach = max((abs(vertex - centre) for vertex in probs), default=0)
    return max(
        (abs(probs.get(centre - k, 0.0) - probs.get(centre + k, 0.0)) for k in range(1, reach + 1)),
        default=0.0,
    )


class LineQuantumExperiment(BaseExperiment):
    """Quantum walk on a line, started at one vertex with a fixed coin and spin."""

    abstract = True

    default_coin: ClassVar[str] = "hadamard"
    default_spin: ClassVar[tuple[complex, ...]] = (1.0, 0.0)
    default_vertices: ClassVar[int] = 100
    default_start: ClassVar[int] = 50
    default_steps: ClassVar[int] = 50

    def run(self, params: ExperimentParams) -> ExperimentReport:
        """Run the line walk and attach the classical overlay.

        Args:
            params: The params value.

        Returns:
            The resulting value.
        """
        vertices = params.vertices or self.default_vertices
        start = self.default_start if params.start is None else params.start
        steps = self.default_steps if params.steps is None else params.steps
        require_start(start, vertices)

        coin = coin_by_name(params.coin or self.default_coin)
        config = line_config(coin, start_vertex=start, initial_spin=params.spin_or(self.default_spin))
        graph = build_line(vertices)
        outcome = evolve(
            graph, config, steps, seed=params.seed, threads=params.threads, dump_iterations=params.dump_iterations
        )
        final = outcome.iterations[-1].probs
        overlay = {vertex: float(p) for vertex, p in normalize_counts(classical_bulk_walk(graph, start, steps)).items()}

        report = ExperimentReport(
            experiment=self.name,
            parameters={"vertices": vertices, "start": start, "steps": steps, "coin": coin.name, "seed": params.seed},
            graph_kind="line",
            iterations=outcome.iterations,
            final=final,
            classical_overlay=overlay,
            collapse=outcome.collapse,
            state_dumps=outcome.state_dumps,
            integrity=IntegrityReport(
                max_norm_drift=outcome.max_norm_drift, unitarity_error=unitarity_error(coin.matrix)
            ),
            extras={
                "left_mass": sum(p for vertex, p in final.items() if vertex < start),
                "right_mass": sum(p for vertex, p in final.items() if vertex > start),
                "symmetry_error": mirror_error(final, start),
            },
        )
        return report
