"""Grover walk through a two-slit screen on a 2D lattice."""

from collections.abc import Sequence

from pydantic import BaseModel

from qwalk.core.coins import coin_by_name, unitarity_error
from qwalk.core.errors import ConfigurationError
from qwalk.experiments.base import BaseExperiment, ExperimentParams, ExperimentReport, IntegrityReport
from qwalk.experiments.pipeline import evolve
from qwalk.graph.builders import DEFAULT_SLIT_COLS, DEFAULT_SLIT_ROWS, build_double_slit, lattice_vertex
from qwalk.walk.configs import lattice_config

DEFAULT_WIDTH = 20
DEFAULT_HEIGHT = 20
DEFAULT_START_COL = 10
DEFAULT_STEPS = 26


class FilmRow(BaseModel):
    """Represent `FilmRow`."""

    row: int
    probs: dict[int, float]
    symmetry_error: float
    argmax_column: int


def film_row(probs: dict[int, float], *, width: int, height: int, centre_col: int) -> FilmRow:
    """Read the top row of the lattice as the film.

    Symmetry is measured as a mirror about ``centre_col``.

    Args:
        probs: Per-vertex probabilities.
        width: The width value.
        height: The height value.
        centre_col: The centre col value.

    Returns:
        The resulting value.
    """
    row = height - 1
    film = {col: probs.get(lattice_vertex(row, col, width), 0.0) for col in range(width)}
    pairs = [
        abs(film[col] - film[2 * centre_col - col]) for col in range(width) if 0 <= 2 * centre_col - col < width
    ]
    argmax = max(film, key=lambda col: (film[col], -col))
    return FilmRow(row=row, probs=film, symmetry_error=max(pairs, default=0.0), argmax_column=argmax)


def _slit_layout(params: ExperimentParams) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Return the screen rows and slit columns.

    Args:
        params: The params value.

    Returns:
        The resulting value.
    """
    rows: Sequence[int] = params.slit_rows or DEFAULT_SLIT_ROWS
    cols: Sequence[Sequence[int]] = params.slit_cols or DEFAULT_SLIT_COLS
    return tuple(rows), tuple(tuple(group) for group in cols)


class DoubleSlitExperiment(BaseExperiment):
    """Represent `DoubleSlitExperiment`."""

    name = "double-slit"
    description = "Grover walk on a 20x20 lattice with a two-slit screen; spin up from the bottom row, 26 steps."

    def run(self, params: ExperimentParams) -> ExperimentReport:
        """Run the walk and read the film row.

        Args:
            params: The params value.

        Returns:
            The resulting value.

        Raises:
            ConfigurationError: If the start is not on the lattice.
        """
        width = params.width or DEFAULT_WIDTH
        height = params.height or DEFAULT_HEIGHT
        steps = DEFAULT_STEPS if params.steps is None else params.steps
        start = lattice_vertex(0, DEFAULT_START_COL, width) if params.start is None else params.start
        if not 0 <= start < width * height:
            raise ConfigurationError(f"Start vertex {start} is outside the {width}x{height} lattice.")
        slit_rows, slit_cols = _slit_layout(params)

        coin = coin_by_name(params.coin or "grover")
        graph = build_double_slit(width, height, slit_rows, slit_cols)
        config = lattice_config(coin, start_vertex=start, initial_spin=params.spin_or((0.0, 0.0, 1.0, 0.0)))
        outcome = evolve(
            graph, config, steps, seed=params.seed, threads=params.threads, dump_iterations=params.dump_iterations
        )
        final = outcome.iterations[-1].probs
        film = film_row(final, width=width, height=height, centre_col=start % width)

        return ExperimentReport(
            experiment=self.name,
            parameters={
                "width": width,
                "height": height,
                "start": start,
                "steps": steps,
                "coin": coin.name,
                "slit_rows": list(slit_rows),
                "slit_cols": [list(group) for group in slit_cols],
                "seed": params.seed,
            },
            graph_kind="lattice",
            lattice_width=width,
            lattice_height=height,
            iterations=outcome.iterations,
            final=final,
            collapse=outcome.collapse,
            state_dumps=outcome.state_dumps,
            integrity=IntegrityReport(
                max_norm_drift=outcome.max_norm_drift, unitarity_error=unitarity_error(coin.matrix)
            ),
            extras={
                "film_row": film.row,
                "film": film.probs,
                "film_symmetry_error": film.symmetry_error,
                "film_argmax_column": film.argmax_column,
            },
        )
