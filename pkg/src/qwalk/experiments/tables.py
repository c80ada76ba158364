"""Compare experiment reports against golden tables.

Golden values are strings. Fractions (``"5/8"``) and integers compare exactly;
decimals (``"0.015"``) compare within the row tolerance, or the configured golden
tolerance when the row has none.
"""

from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Literal

import structlog
from pydantic import BaseModel, Field, ValidationError

from qwalk.core.errors import GoldenTableError
from qwalk.experiments.base import ExperimentReport
from qwalk.settings import get_settings

logger = structlog.get_logger(__name__)

EXACT_TOLERANCE = 1e-12


class GoldenRow(BaseModel):
    """Represent `GoldenRow`."""

    iteration: int = Field(ge=0)
    values: dict[int, str]
    tolerance: float | None = Field(default=None, gt=0)
    complete: bool = False


class GoldenTable(BaseModel):
    """Represent `GoldenTable`."""

    experiment: str
    quantity: Literal["probability", "count"]
    rows: list[GoldenRow] = Field(min_length=1)


class TableComparison(BaseModel):
    """Represent `TableComparison`."""

    golden: str
    mismatches: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Return whether every golden value matched.

        Returns:
            True when the condition is met; otherwise, False.
        """
        return not self.mismatches

    @property
    def first_mismatch(self) -> str | None:
        """Return the first mismatch message, if any.

        Returns:
            The resulting value.
        """
        return self.mismatches[0] if self.mismatches else None


def parse_golden(text: str, *, source: str = "<string>") -> GoldenTable:
    """Parse and validate golden JSON.

    Args:
        text: The text value.
        source: Name used in error messages.

    Returns:
        The resulting value.

    Raises:
        GoldenTableError: If the document or any value is malformed.
    """
    try:
        table = GoldenTable.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ())) or "<document>"
        raise GoldenTableError(f"{source}: {location}: {first.get('msg', 'invalid value')}") from exc
    for row in table.rows:
        for vertex, raw in row.values.items():
            try:
                _parse_value(raw)
            except (ValueError, ZeroDivisionError) as exc:
                raise GoldenTableError(
                    f"{source}: iteration {row.iteration}, vertex {vertex}: bad value {raw!r}"
                ) from exc
    return table


def load_golden(path: str | Path) -> GoldenTable:
    """Load a golden table from disk.

    Args:
        path: The path value.

    Returns:
        The resulting value.
    """
    file_path = Path(path)
    return parse_golden(file_path.read_text(encoding="utf-8"), source=str(file_path))


def packaged_golden(name: str) -> GoldenTable:
    """Load a golden table shipped with the package.

    Args:
        name: File name under ``qwalk/experiments/goldens``.

    Returns:
        The resulting value.
    """
    resource = resources.files("qwalk.experiments").joinpath("goldens", name)
    return parse_golden(resource.read_text(encoding="utf-8"), source=name)


def _parse_value(raw: str) -> Fraction | float:
    """Parse a golden value.

    Args:
        raw: The raw value.

    Returns:
        An exact fraction, or a float for decimal strings.
    """
    text = raw.strip()
    if "." in text or "e" in text.lower():
        return float(text)
    return Fraction(text)


def _matches(observed: int | float, expected: Fraction | float, tolerance: float, quantity: str) -> bool:
    """Compare one observed value against its golden value.

    Args:
        observed: The observed value.
        expected: The expected value.
        tolerance: Tolerance for decimal golden values.
        quantity: ``count`` or ``probability``.

    Returns:
        True when the condition is met; otherwise, False.
    """
    if isinstance(expected, Fraction):
        if quantity == "count":
            return Fraction(observed) == expected
        return abs(float(observed) - float(expected)) <= EXACT_TOLERANCE
    return abs(float(observed) - expected) <= tolerance


def compare_tables(report: ExperimentReport, golden: GoldenTable | str | Path) -> TableComparison:
    """Check ``report`` against a golden table and collect located mismatches.

    Args:
        report: The report value.
        golden: A parsed table or a path to one.

    Returns:
        The resulting value.
    """
    table = golden if isinstance(golden, GoldenTable) else load_golden(golden)
    label = golden if isinstance(golden, (str, Path)) else table.experiment
    default_tolerance = get_settings().golden_tolerance
    mismatches: list[str] = []

    for row in table.rows:
        record = report.record(row.iteration)
        if record is None:
            mismatches.append(f"iteration {row.iteration}: not recorded by {report.experiment}")
            continue
        if table.quantity == "count":
            if record.counts is None:
                mismatches.append(f"iteration {row.iteration}: report has no counts")
                continue
            observed: dict[int, int] | dict[int, float] = record.counts
        else:
            observed = record.probs
        tolerance = row.tolerance or default_tolerance

        for vertex, raw in sorted(row.values.items()):
            expected = _parse_value(raw)
            value = observed.get(vertex, 0)
            if not _matches(value, expected, tolerance, table.quantity):
                mismatches.append(f"iteration {row.iteration}, vertex {vertex}: expected {raw}, got {value}")

        if row.complete:
            for vertex, value in observed.items():
                if vertex not in row.values and abs(value) > EXACT_TOLERANCE:
                    mismatches.append(f"iteration {row.iteration}, vertex {vertex}: expected 0, got {value}")

    comparison = TableComparison(golden=str(label), mismatches=mismatches)
    logger.info("golden_compared", golden=comparison.golden, passed=comparison.passed, mismatches=len(mismatches))
    return comparison
