"""Symmetric line walk."""

from qwalk.experiments.pipeline import INV_SQRT2, LineQuantumExperiment


class LineBalancedExperiment(LineQuantumExperiment):
    """Hadamard coin with spin ``(1/√2)[1, i]``; the distribution is mirror-symmetric about v50."""

    name = "line-balanced"
    description = "Hadamard walk from v50 with spin (1/sqrt2)[1,i]; symmetric distribution."
    goldens = ("line-balanced.json",)
    default_spin = (INV_SQRT2, 1j * INV_SQRT2)
