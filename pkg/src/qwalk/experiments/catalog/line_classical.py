"""Classical walks on the line: exact bulked counts and a sampled single walker."""

from qwalk.experiments.base import (
    BaseExperiment,
    ExperimentParams,
    ExperimentReport,
    IntegrityReport,
    IterationRecord,
    require_start,
)
from qwalk.graph.builders import build_line
from qwalk.walk.classical import classical_bulk_walk, classical_random_walk, normalize_counts, random_walk_histogram


class LineClassicalExperiment(BaseExperiment):
    """Represent `LineClassicalExperiment`."""

    name = "line-classical"
    description = "Bulked left/right traverser counts from v50 for 50 steps, plus sampled single walkers."
    goldens = ("line-classical.json", "line-classical-normalized.json")

    def run(self, params: ExperimentParams) -> ExperimentReport:
        """Count traversers per vertex at every iteration.

        Args:
            params: The params value.

        Returns:
            The resulting value.
        """
        vertices = params.vertices or 100
        start = 50 if params.start is None else params.start
        steps = 50 if params.steps is None else params.steps
        require_start(start, vertices)
        graph = build_line(vertices)

        records: list[IterationRecord] = []
        for iteration in range(steps + 1):
            counts = classical_bulk_walk(graph, start, iteration)
            probs = {vertex: float(p) for vertex, p in normalize_counts(counts).items()}
            records.append(IterationRecord(iteration=iteration, probs=probs, counts=counts))

        final = records[-1]
        seeds = range(params.seed, params.seed + params.samples)
        return ExperimentReport(
            experiment=self.name,
            parameters={"vertices": vertices, "start": start, "steps": steps, "seed": params.seed},
            graph_kind="line",
            quantity="count",
            iterations=records,
            final=final.probs,
            final_counts=final.counts,
            integrity=IntegrityReport(max_norm_drift=abs(sum(final.probs.values()) - 1.0)),
            extras={
                "total_count": sum(final.counts.values()),
                "random_walk_end": classical_random_walk(graph, start, steps, params.seed),
                "sampled": random_walk_histogram(graph, start, steps, seeds),
            },
        )
