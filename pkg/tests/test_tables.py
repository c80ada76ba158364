import json

import pytest

from qwalk.core.errors import GoldenTableError
from qwalk.experiments.base import ExperimentParams, ExperimentReport, IterationRecord
from qwalk.experiments.registry import registry, run_experiment
from qwalk.experiments.tables import GoldenRow, GoldenTable, compare_tables, packaged_golden, parse_golden


def _report() -> ExperimentReport:
    return ExperimentReport(
        experiment="toy",
        parameters={},
        graph_kind="line",
        iterations=[
            IterationRecord(iteration=0, probs={50: 1.0}, counts={50: 1}),
            IterationRecord(iteration=1, probs={49: 0.5, 51: 0.5}, counts={49: 1, 51: 1}),
        ],
    )


@pytest.mark.parametrize("name", ["line-hadamard", "line-balanced", "line-y-listing", "line-classical"])
def test_packaged_goldens_pass(name: str) -> None:
    params = ExperimentParams(samples=10) if name == "line-classical" else None
    report = run_experiment(name, params)

    for golden in registry.get(name).goldens:
        comparison = compare_tables(report, packaged_golden(golden))
        assert comparison.passed, comparison.first_mismatch


def test_exact_fraction_comparison() -> None:
    table = GoldenTable(
        experiment="toy",
        quantity="probability",
        rows=[GoldenRow(iteration=1, values={49: "1/2", 51: "1/2"}, complete=True)],
    )
    assert compare_tables(_report(), table).passed


def test_perturbed_value_is_located() -> None:
    table = GoldenTable(experiment="toy", quantity="probability", rows=[GoldenRow(iteration=1, values={49: "5/8"})])

    comparison = compare_tables(_report(), table)

    assert not comparison.passed
    assert comparison.first_mismatch == "iteration 1, vertex 49: expected 5/8, got 0.5"


def test_complete_rows_flag_unlisted_vertices() -> None:
    table = GoldenTable(
        experiment="toy",
        quantity="count",
        rows=[GoldenRow(iteration=1, values={49: "1"}, complete=True)],
    )

    comparison = compare_tables(_report(), table)

    assert comparison.mismatches == ["iteration 1, vertex 51: expected 0, got 1"]


def test_decimal_values_use_the_row_tolerance() -> None:
    loose = GoldenTable(
        experiment="toy", quantity="probability", rows=[GoldenRow(iteration=1, values={49: "0.51"}, tolerance=0.02)]
    )
    tight = GoldenTable(
        experiment="toy", quantity="probability", rows=[GoldenRow(iteration=1, values={49: "0.51"}, tolerance=0.001)]
    )

    assert compare_tables(_report(), loose).passed
    assert not compare_tables(_report(), tight).passed


def test_missing_iteration_is_reported() -> None:
    table = GoldenTable(experiment="toy", quantity="probability", rows=[GoldenRow(iteration=7, values={50: "1"})])

    assert compare_tables(_report(), table).first_mismatch == "iteration 7: not recorded by toy"


def test_compare_from_a_file(tmp_path) -> None:
    path = tmp_path / "toy.json"
    path.write_text(
        json.dumps({"experiment": "toy", "quantity": "count", "rows": [{"iteration": 1, "values": {"49": "1"}}]}),
        encoding="utf-8",
    )

    comparison = compare_tables(_report(), path)

    assert comparison.passed
    assert comparison.golden == str(path)


def test_malformed_goldens_are_rejected() -> None:
    with pytest.raises(GoldenTableError, match="rows"):
        parse_golden('{"experiment": "toy", "quantity": "probability", "rows": []}')
    with pytest.raises(GoldenTableError, match="bad value"):
        parse_golden(
            '{"experiment": "toy", "quantity": "probability", "rows": [{"iteration": 0, "values": {"1": "x"}}]}'
        )
    with pytest.raises(GoldenTableError):
        parse_golden('{"experiment": "toy", "quantity": "mass", "rows": [{"iteration": 0, "values": {}}]}')
