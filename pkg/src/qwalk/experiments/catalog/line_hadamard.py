"""Hadamard walk on the 100-vertex line; drifts to the left."""

from qwalk.experiments.pipeline import LineQuantumExperiment


class LineHadamardExperiment(LineQuantumExperiment):
    """Hadamard coin, spin ``[1, 0]`` at v50, 50 steps."""

    name = "line-hadamard"
    description = "Hadamard walk from v50 with spin [1,0]; left-biased distribution."
    goldens = ("line-hadamard.json",)
