"""Provide functionality for `qwalk.experiments.base`."""

import time
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Literal

import structlog
from pydantic import BaseModel, ConfigDict, Field

from qwalk.core.errors import ConfigurationError
from qwalk.core.spin import parse_spin

logger = structlog.get_logger(__name__)

GraphKind = Literal["line", "lattice", "sets"]
Quantity = Literal["probability", "count"]


class ExperimentParams(BaseModel):
    """Represent `ExperimentParams`.

    ``None`` means "use the experiment's default".
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    vertices: int | None = Field(default=None, ge=2)
    width: int | None = Field(default=None, ge=2)
    height: int | None = Field(default=None, ge=3)
    slit_rows: tuple[int, ...] | None = None
    slit_cols: tuple[tuple[int, ...], ...] | None = None
    steps: int | None = Field(default=None, ge=0)
    coin: str | None = None
    initial_spin: str | None = None
    start: int | None = Field(default=None, ge=0)
    seed: int = 0
    threads: int = Field(default=1, ge=1)
    samples: int = Field(default=1000, ge=1)
    dump_iterations: bool = False

    def spin_or(self, default: Any) -> Any:
        """Return the parsed ``--initial-spin`` or ``default``.

        Args:
            default: The default value.

        Returns:
            The resulting value.
        """
        return default if self.initial_spin is None else parse_spin(self.initial_spin)


class IterationRecord(BaseModel):
    """Represent `IterationRecord`."""

    iteration: int
    probs: dict[int, float]
    counts: dict[int, int] | None = None


class IntegrityReport(BaseModel):
    """Represent `IntegrityReport`."""

    max_norm_drift: float = 0.0
    unitarity_error: float | None = None
    recovered_probability: float | None = None


class ExperimentReport(BaseModel):
    """Represent `ExperimentReport`."""

    experiment: str
    parameters: dict[str, Any]
    graph_kind: GraphKind
    quantity: Quantity = "probability"
    lattice_width: int | None = None
    lattice_height: int | None = None
    iterations: list[IterationRecord] = Field(default_factory=list)
    final: dict[int, float] = Field(default_factory=dict)
    final_counts: dict[int, int] | None = None
    classical_overlay: dict[int, float] | None = None
    collapse: tuple[int, int] | None = None
    listing: str | None = None
    extras: dict[str, Any] = Field(default_factory=dict)
    state_dumps: list[dict[str, Any]] = Field(default_factory=list)
    integrity: IntegrityReport = Field(default_factory=IntegrityReport)
    duration_seconds: float = 0.0

    def record(self, iteration: int) -> IterationRecord | None:
        """Return the record for ``iteration`` if it was kept.

        Args:
            iteration: The iteration value.

        Returns:
            The resulting value.
        """
        return next((record for record in self.iterations if record.iteration == iteration), None)


class BaseExperiment(ABC):
    """Represent `BaseExperiment`."""

    name: str
    description: str
    goldens: ClassVar[tuple[str, ...]] = ()
    abstract: ClassVar[bool] = False

    def __init_subclass__(cls, **kwargs: object) -> None:
        """Customize subclass initialization.

        Args:
            **kwargs: The kwargs value.

        Raises:
            TypeError: If the subclass leaves ``name`` or ``description`` empty.
        """
        super().__init_subclass__(**kwargs)
        if cls.__dict__.get("abstract", False):
            return
        for attribute in ("name", "description"):
            value = getattr(cls, attribute, None)
            if not isinstance(value, str) or not value.strip():
                raise TypeError(f"{cls.__name__} must define a non-empty {attribute}.")

    @abstractmethod
    def run(self, params: ExperimentParams) -> ExperimentReport:
        """Run the experiment body.

        Args:
            params: The params value.

        Returns:
            The resulting value.
        """

    def execute(self, params: ExperimentParams | None = None) -> ExperimentReport:
        """Run with timing and a bound ``experiment`` log context.

        Args:
            params: The params value.

        Returns:
            The resulting value.
        """
        resolved = params or ExperimentParams()
        with structlog.contextvars.bound_contextvars(experiment=self.name):
            logger.info("experiment_started", parameters=resolved.model_dump(exclude_none=True))
            started = time.perf_counter()
            report = self.run(resolved)
            report.duration_seconds = time.perf_counter() - started
            logger.info(
                "experiment_finished",
                duration_seconds=round(report.duration_seconds, 6),
                max_norm_drift=report.integrity.max_norm_drift,
            )
        return report


def require_start(start: int, vertices: int, *, first: int = 1) -> None:
    """Reject starts outside ``first..first+vertices-1``.

    Args:
        start: The start value.
        vertices: The vertices value.
        first: Lowest vertex id.

    Raises:
        ConfigurationError: If the start is out of range.
    """
    if not first <= start < first + vertices:
        raise ConfigurationError(f"Start vertex {start} is outside {first}..{first + vertices - 1}.")
