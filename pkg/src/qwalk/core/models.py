"""Provide functionality for `qwalk.core.models`."""

from collections.abc import Mapping, Sequence
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from qwalk.core.coins import CoinOperator, is_unitary
from qwalk.core.errors import ConfigurationError
from qwalk.core.spin import ReflectionAxis, SpinVector, resolve_axis, spin_norm_sq, spin_vector

Direction = Literal["out", "in"]
BoundaryPolicy = Literal["reflect", "forbid"]

INITIAL_NORM_TOLERANCE = 1e-12


class BranchSpec(BaseModel):
    """Represent `BranchSpec`.

    One traversal branch: the edge label to follow, the spin component it carries,
    and what happens when the edge is missing.
    """

    model_config = ConfigDict(frozen=True)

    label: str
    projection_index: int = Field(ge=0)
    direction: Direction = "out"
    boundary_policy: BoundaryPolicy = "forbid"
    reflect_axis: str | tuple[int, int] | None = None

    @model_validator(mode="after")
    def _require_axis_for_reflect(self) -> "BranchSpec":
        """Require an axis when the policy is ``reflect``.

        Returns:
            The resulting value.

        Raises:
            ValueError: If a reflect policy has no axis.
        """
        if self.boundary_policy == "reflect" and self.reflect_axis is None:
            raise ValueError(f"Branch '{self.label}' reflects at boundaries but has no reflect_axis.")
        return self

    def inverted(self) -> "BranchSpec":
        """Return the same branch walking edges in the opposite direction.

        Returns:
            The resulting value.
        """
        return self.model_copy(update={"direction": "in" if self.direction == "out" else "out"})


class WalkConfig(BaseModel):
    """Represent `WalkConfig`."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    coin: CoinOperator
    branches: tuple[BranchSpec, ...]
    start_vertex: int
    initial_spin: np.ndarray
    prune_epsilon: float | None = Field(default=None, gt=0)

    @field_validator("initial_spin", mode="before")
    @classmethod
    def _coerce_spin(cls, value: object) -> SpinVector:
        """Coerce the initial spin to a complex vector.

        Args:
            value: The raw spin value.

        Returns:
            The resulting value.
        """
        spin = spin_vector(np.asarray(value, dtype=np.complex128))
        spin.setflags(write=False)
        return spin

    @model_validator(mode="after")
    def _check_wiring(self) -> "WalkConfig":
        """Check coin unitarity, dimensions, projection permutation, axes and initial norm.

        Returns:
            The resulting value.

        Raises:
            ValueError: If the configuration is inconsistent.
        """
        if not is_unitary(self.coin):
            raise ValueError(f"Coin '{self.coin.name}' is not unitary.")
        dim = self.coin.dim
        if len(self.branches) != dim or self.initial_spin.shape != (dim,):
            raise ValueError(
                f"coin dim {dim}, {len(self.branches)} branches and spin dim "
                f"{self.initial_spin.shape[0]} must all agree."
            )
        if sorted(branch.projection_index for branch in self.branches) != list(range(dim)):
            raise ValueError("Branch projection indices must be a permutation of 0..dim-1.")
        for branch in self.branches:
            if branch.reflect_axis is not None:
                resolve_axis(branch.reflect_axis, dim)
        norm = spin_norm_sq(self.initial_spin)
        if abs(norm - 1.0) > INITIAL_NORM_TOLERANCE:
            raise ValueError(f"Initial spin must have unit norm, got {norm!r}.")
        return self

    @property
    def dim(self) -> int:
        """Return the spin dimension.

        Returns:
            The resulting value.
        """
        return self.coin.dim

    def branch_axis(self, branch: BranchSpec) -> ReflectionAxis | None:
        """Return the resolved reflection axis of ``branch``.

        Args:
            branch: The branch value.

        Returns:
            The resulting value.
        """
        if branch.reflect_axis is None:
            return None
        return resolve_axis(branch.reflect_axis, self.dim)


def build_walk_config(
    *,
    coin: CoinOperator,
    branches: Sequence[BranchSpec],
    start_vertex: int,
    initial_spin: Any,
    prune_epsilon: float | None = None,
) -> WalkConfig:
    """Build a walk configuration, reporting wiring problems as `ConfigurationError`.

    Args:
        coin: The coin value.
        branches: The branches value.
        start_vertex: The start vertex value.
        initial_spin: The initial spin value.
        prune_epsilon: Optional threshold under which merged entries are dropped.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the configuration is inconsistent.
    """
    try:
        return WalkConfig(
            coin=coin,
            branches=tuple(branches),
            start_vertex=start_vertex,
            initial_spin=initial_spin,
            prune_epsilon=prune_epsilon,
        )
    except (ValidationError, ConfigurationError) as exc:
        raise ConfigurationError(f"Invalid walk configuration: {exc}") from exc


class Traverser(BaseModel):
    """Represent `Traverser`."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    location: int
    spin: np.ndarray | None = None
    bulk: int = Field(default=1, ge=0)


class WalkState(BaseModel):
    """Represent `WalkState`.

    One merged spin per occupied vertex, keyed in ascending vertex order.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    amplitudes: dict[int, np.ndarray]
    iteration: int = Field(default=0, ge=0)

    @field_validator("amplitudes", mode="after")
    @classmethod
    def _sort_and_freeze(cls, value: dict[int, np.ndarray]) -> dict[int, np.ndarray]:
        """Sort entries by vertex and make spins read-only.

        Args:
            value: The amplitudes value.

        Returns:
            The resulting value.
        """
        ordered: dict[int, np.ndarray] = {}
        for vertex in sorted(value):
            spin = np.asarray(value[vertex], dtype=np.complex128)
            spin.setflags(write=False)
            ordered[vertex] = spin
        return ordered

    @property
    def total_norm_sq(self) -> float:
        """Return the summed modulus-squared over all vertices.

        Returns:
            The resulting value.
        """
        return float(sum(spin_norm_sq(spin) for spin in self.amplitudes.values()))

    def to_dump(self) -> dict[str, Any]:
        """Return the state-dump JSON payload.

        Returns:
            The resulting value.
        """
        return {
            "iteration": self.iteration,
            "entries": [
                {"vertex": vertex, "spin": [[float(c.real), float(c.imag)] for c in spin]}
                for vertex, spin in self.amplitudes.items()
            ],
        }

    @classmethod
    def from_dump(cls, payload: Mapping[str, Any]) -> "WalkState":
        """Rebuild a state from its dump payload.

        Args:
            payload: The payload value.

        Returns:
            The resulting value.
        """
        amplitudes = {int(entry["vertex"]): spin_vector(entry["spin"]) for entry in payload["entries"]}
        return cls(amplitudes=amplitudes, iteration=int(payload["iteration"]))


class ProbabilityDistribution(BaseModel):
    """Represent `ProbabilityDistribution`."""

    model_config = ConfigDict(frozen=True)

    probs: dict[int, float]

    @field_validator("probs", mode="after")
    @classmethod
    def _sorted(cls, value: dict[int, float]) -> dict[int, float]:
        """Order entries by vertex.

        Args:
            value: The probs value.

        Returns:
            The resulting value.
        """
        return {vertex: value[vertex] for vertex in sorted(value)}

    @property
    def total(self) -> float:
        """Return the summed probability.

        Returns:
            The resulting value.
        """
        return float(sum(self.probs.values()))

    def get(self, vertex: int) -> float:
        """Return the probability at ``vertex`` (0 when unoccupied).

        Args:
            vertex: The vertex value.

        Returns:
            The resulting value.
        """
        return self.probs.get(vertex, 0.0)
