"""Run the Hadamard walk forward, then backward, and check the start is recovered."""

from qwalk.core.coins import coin_by_name, unitarity_error
from qwalk.core.errors import IntegrityError
from qwalk.experiments.base import BaseExperiment, ExperimentParams, ExperimentReport, IntegrityReport, require_start
from qwalk.experiments.pipeline import evolve
from qwalk.graph.builders import build_line
from qwalk.settings import get_settings
from qwalk.walk.configs import line_config
from qwalk.walk.measurement import collapse, measure
from qwalk.walk.quantum import init_state, max_amplitude_difference, run_reverse


class ReverseCheckExperiment(BaseExperiment):
    """Represent `ReverseCheckExperiment`."""

    name = "reverse-check"
    description = "50 Hadamard steps from v50, then 50 inverse steps; the walker must return to v50."

    def run(self, params: ExperimentParams) -> ExperimentReport:
        """Evolve, reverse and measure the recovered start probability.

        Args:
            params: The params value.

        Returns:
            The resulting value.

        Raises:
            IntegrityError: If the start vertex is not recovered.
        """
        vertices = params.vertices or 100
        start = 50 if params.start is None else params.start
        steps = 50 if params.steps is None else params.steps
        require_start(start, vertices)

        coin = coin_by_name(params.coin or "hadamard")
        config = line_config(coin, start_vertex=start, initial_spin=params.spin_or((1.0, 0.0)))
        graph = build_line(vertices)
        forward = evolve(graph, config, steps, seed=params.seed, threads=params.threads)
        restored = run_reverse(graph, forward.final_state, config, steps, threads=params.threads)

        recovered = measure(restored).get(start)
        threshold = 1.0 - get_settings().reverse_recovery_tolerance
        if recovered < threshold:
            raise IntegrityError(f"Reverse evolution recovered p(v{start}) = {recovered:.12f}, below {threshold}.")

        return ExperimentReport(
            experiment=self.name,
            parameters={"vertices": vertices, "start": start, "steps": steps, "coin": coin.name, "seed": params.seed},
            graph_kind="line",
            iterations=forward.iterations,
            final=measure(restored).probs,
            collapse=collapse(restored, params.seed),
            integrity=IntegrityReport(
                max_norm_drift=forward.max_norm_drift,
                unitarity_error=unitarity_error(coin.matrix),
                recovered_probability=recovered,
            ),
            extras={"max_amplitude_error": max_amplitude_difference(restored, init_state(graph, config))},
        )
