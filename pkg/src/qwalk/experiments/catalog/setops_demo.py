"""Frequency-spin set operations on the read/wrote/liked fixture graph."""

from qwalk.experiments.base import BaseExperiment, ExperimentParams, ExperimentReport
from qwalk.graph.builders import build_fixture_graph, build_knows_graph
from qwalk.setops.frequency import (
    branch_walk,
    except_pattern,
    format_listing,
    intersect_filter,
    norm_collapse,
    sym_diff_filter,
)


class SetopsDemoExperiment(BaseExperiment):
    """Represent `SetopsDemoExperiment`."""

    name = "setops-demo"
    description = (
        "Branch tallies, intersection, symmetric difference, norm collapse and a friends-of-friends exclusion."
    )

    def run(self, params: ExperimentParams) -> ExperimentReport:
        """Build the listings printed by the CLI.

        Args:
            params: The params value.

        Returns:
            The resulting value.
        """
        fixture = build_fixture_graph()
        two = branch_walk(fixture, 0, [("read", 0), ("wrote", 1)])
        three = branch_walk(fixture, 0, [("read", 0), ("wrote", 1), ("liked", 2)])
        intersection = intersect_filter(two)
        collapsed = [(vertex, norm_collapse(tallies)) for vertex, tallies in intersection]

        knows = build_knows_graph()
        excluded = except_pattern(knows, 0, "knows")

        sections = [
            format_listing(two),
            format_listing(intersection),
            format_listing(sym_diff_filter(two)),
            format_listing(collapsed),
            format_listing(three),
            "\n".join(f"==>v[{vertex}]" for vertex in excluded),
        ]
        return ExperimentReport(
            experiment=self.name,
            parameters={"start": 0},
            graph_kind="sets",
            listing="\n\n".join(sections) + "\n",
            extras={
                "except_pattern": excluded,
                "except_names": [knows.get_property(vertex, "name") for vertex in excluded],
            },
        )
