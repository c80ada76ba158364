"""Hadamard walk that runs into both ends of the line and reflects."""

from qwalk.experiments.pipeline import LineQuantumExperiment


class LineBoundedExperiment(LineQuantumExperiment):
    """Represent `LineBoundedExperiment`."""

    name = "line-bounded"
    description = "Hadamard walk from v50 for 100 steps with reflecting ends."
    default_steps = 100
