"""Balanced-Y coin with spin ``[1, 0]``.

This wiring is not symmetric: its probabilities match the Hadamard walk. The
report's ``symmetry_error`` shows by how much.
"""

from qwalk.experiments.pipeline import LineQuantumExperiment


class LineYListingExperiment(LineQuantumExperiment):
    """Represent `LineYListingExperiment`."""

    name = "line-y-listing"
    description = "Balanced-Y coin from v50 with spin [1,0]; asymmetric, matches the Hadamard distribution."
    goldens = ("line-hadamard.json",)
    default_coin = "balanced-y"
