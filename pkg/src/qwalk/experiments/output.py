"""Write experiment reports as CSV, JSON or SVG, and per-iteration state dumps.

All writers are deterministic for a given report: wall-clock duration is never
written to distribution files.
"""

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Literal

import structlog

from qwalk.experiments.base import ExperimentReport
from qwalk.graph.builders import lattice_position
from qwalk.settings import get_settings

logger = structlog.get_logger(__name__)

OutputFormat = Literal["csv", "json", "svg"]

_CHART_WIDTH = 800
_CHART_HEIGHT = 400
_MARGIN = 40
_CELL = 20


def render_csv(probs: Mapping[int, float], decimals: int | None = None) -> str:
    """Render ``vertex,probability`` rows in ascending vertex order.

    Args:
        probs: The probs value.
        decimals: Digits after the point; defaults to the configured precision.

    Returns:
        The resulting value.
    """
    places = get_settings().probability_decimals if decimals is None else decimals
    lines = ["vertex,probability"]
    lines.extend(f"{vertex},{probs[vertex]:.{places}f}" for vertex in sorted(probs))
    return "\n".join(lines) + "\n"


def render_json(report: ExperimentReport) -> str:
    """Render the report without timing and per-iteration payloads.

    Args:
        report: The report value.

    Returns:
        The resulting value.
    """
    payload = report.model_dump(mode="json", exclude={"duration_seconds", "state_dumps", "iterations"})
    payload["final_iteration"] = report.iterations[-1].iteration if report.iterations else None
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _polyline(points: Mapping[int, float], x_of: dict[int, float], y_of: float) -> str:
    """Format chart coordinates for an SVG polyline.

    Args:
        points: Probability per vertex.
        x_of: Horizontal position per vertex.
        y_of: Pixels per unit probability.

    Returns:
        The resulting value.
    """
    base = _CHART_HEIGHT - _MARGIN
    return " ".join(f"{x_of[vertex]:.2f},{base - points[vertex] * y_of:.2f}" for vertex in sorted(points))


def render_line_chart(report: ExperimentReport) -> str:
    """Draw the final distribution, and the classical overlay when present, as line series.

    Args:
        report: The report value.

    Returns:
        The resulting value.
    """
    overlay = report.classical_overlay or {}
    vertices = sorted(set(report.final) | set(overlay)) or [0]
    low, high = vertices[0], vertices[-1]
    span = max(high - low, 1)
    x_of = {vertex: _MARGIN + (vertex - low) * (_CHART_WIDTH - 2 * _MARGIN) / span for vertex in vertices}
    peak = max([*report.final.values(), *overlay.values(), 1e-12])
    y_of = (_CHART_HEIGHT - 2 * _MARGIN) / peak

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_CHART_WIDTH}" height="{_CHART_HEIGHT}">',
        f"<title>{report.experiment}</title>",
        f'<line class="axis" x1="{_MARGIN}" y1="{_CHART_HEIGHT - _MARGIN}" '
        f'x2="{_CHART_WIDTH - _MARGIN}" y2="{_CHART_HEIGHT - _MARGIN}" stroke="black"/>',
    ]
    if overlay:
        parts.append(
            f'<polyline class="classical" fill="none" stroke="gray" stroke-dasharray="4 3" '
            f'points="{_polyline(overlay, x_of, y_of)}"/>'
        )
    quantum_points = _polyline(report.final, x_of, y_of)
    parts.append(f'<polyline class="quantum" fill="none" stroke="black" points="{quantum_points}"/>')
    parts.append(f'<text x="{_MARGIN}" y="{_CHART_HEIGHT - 10}">v{low}</text>')
    parts.append(f'<text x="{_CHART_WIDTH - _MARGIN}" y="{_CHART_HEIGHT - 10}" text-anchor="end">v{high}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_heatmap(report: ExperimentReport) -> str:
    """Draw one square per lattice vertex; lighter squares are more probable.

    Args:
        report: The report value.

    Returns:
        The resulting value.

    Raises:
        ValueError: If the report has no lattice dimensions.
    """
    if report.lattice_width is None or report.lattice_height is None:
        raise ValueError(f"{report.experiment} has no lattice dimensions to draw.")
    width, height = report.lattice_width, report.lattice_height
    peak = max(report.final.values(), default=0.0) or 1.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width * _CELL}" height="{height * _CELL}">',
        f"<title>{report.experiment}</title>",
    ]
    for vertex in range(width * height):
        row, col = lattice_position(vertex, width)
        shade = int(round(32 + 223 * report.final.get(vertex, 0.0) / peak))
        parts.append(
            f'<rect class="cell" data-vertex="{vertex}" x="{col * _CELL}" y="{(height - 1 - row) * _CELL}" '
            f'width="{_CELL}" height="{_CELL}" fill="rgb({shade},{shade},{shade})"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_distribution(report: ExperimentReport, fmt: OutputFormat) -> str:
    """Render the final distribution in ``fmt``.

    Args:
        report: The report value.
        fmt: The fmt value.

    Returns:
        The resulting value.
    """
    if fmt == "csv":
        return render_csv(report.final)
    if fmt == "json":
        return render_json(report)
    if report.graph_kind == "lattice":
        return render_heatmap(report)
    return render_line_chart(report)


def emit_distribution(report: ExperimentReport, fmt: OutputFormat, path: str | Path) -> Path:
    """Write the rendered distribution to ``path``.

    Args:
        report: The report value.
        fmt: The fmt value.
        path: A file path, or a directory that receives ``<experiment>.<fmt>``.

    Returns:
        The resulting value.
    """
    target = Path(path)
    if target.is_dir() or not target.suffix:
        target = target / f"{report.experiment}.{fmt}"
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_distribution(report, fmt), encoding="utf-8")
    logger.info("distribution_written", path=str(target), format=fmt)
    return target


def write_state_dumps(report: ExperimentReport, directory: str | Path) -> list[Path]:
    """Write one state-dump JSON file per recorded iteration.

    Args:
        report: The report value.
        directory: The directory value.

    Returns:
        The resulting value.
    """
    root = Path(directory) / f"{report.experiment}-states"
    root.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for dump in report.state_dumps:
        target = root / f"iteration-{dump['iteration']:04d}.json"
        target.write_text(json.dumps(dump, indent=2) + "\n", encoding="utf-8")
        written.append(target)
    logger.info("state_dumps_written", directory=str(root), count=len(written))
    return written
