import json

import pytest

from qwalk.graph.builders import build_line
from qwalk.graph.storage import load_graph
from qwalk.scripts.qwalk import main


def test_list_prints_discovered_experiments(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--list"]) == 0

    out = capsys.readouterr().out
    assert out.startswith("Discovered experiments:\n")
    assert "- line-hadamard: " in out
    assert "- setops-demo: " in out


def test_missing_experiment_is_a_usage_error() -> None:
    with pytest.raises(SystemExit) as exc_info:
        main([])
    assert exc_info.value.code == 2


def test_unknown_experiment_is_a_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["no-such-walk"])

    assert exc_info.value.code == 2
    assert "Unknown experiment" in capsys.readouterr().err


def test_invalid_parameters_are_usage_errors() -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["line-hadamard", "--steps", "-3"])
    assert exc_info.value.code == 2

    with pytest.raises(SystemExit) as exc_info:
        main(["line-hadamard", "--vertices", "10", "--start", "50"])
    assert exc_info.value.code == 2


def test_zero_threads_is_a_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["line-hadamard", "--threads", "0"])

    assert exc_info.value.code == 2
    assert "threads" in capsys.readouterr().err


def test_setops_demo_prints_the_listing(capsys: pytest.CaptureFixture[str], tmp_path) -> None:
    assert main(["setops-demo", "--out", str(tmp_path)]) == 0

    out = capsys.readouterr().out
    assert out.startswith("==>[v[1], [1, 1]]\n==>[v[2], [1, 0]]\n==>[v[3], [2, 0]]\n\n")
    assert out.endswith("==>v[3]\n==>v[4]\n")
    assert list(tmp_path.iterdir()) == []


def test_experiment_writes_its_distribution(capsys: pytest.CaptureFixture[str], tmp_path) -> None:
    assert main(["line-hadamard", "--steps", "3", "--out", str(tmp_path)]) == 0

    csv_text = (tmp_path / "line-hadamard.csv").read_text(encoding="utf-8")
    assert csv_text.splitlines()[0] == "vertex,probability"
    assert "49,0.625000000000" in csv_text
    out = capsys.readouterr().out
    assert "Experiment: line-hadamard" in out
    assert "most likely: v49=0.625000" in out


def test_dump_iterations_writes_state_files(tmp_path) -> None:
    assert main(["line-hadamard", "--steps", "2", "--dump-iterations", "--out", str(tmp_path)]) == 0

    names = sorted(path.name for path in (tmp_path / "line-hadamard-states").iterdir())
    assert names == ["iteration-0000.json", "iteration-0001.json", "iteration-0002.json"]


def test_json_report_on_stdout(capsys: pytest.CaptureFixture[str], tmp_path) -> None:
    assert main(["line-balanced", "--steps", "4", "--json", "--format", "svg", "--out", str(tmp_path)]) == 0

    payload = json.loads(capsys.readouterr().out)
    assert payload["experiment"] == "line-balanced"
    assert payload["final_iteration"] == 4
    assert (tmp_path / "line-balanced.svg").exists()


def test_packaged_golden_comparison_passes(tmp_path) -> None:
    assert main(["line-hadamard", "--compare-golden", "--out", str(tmp_path)]) == 0


def test_golden_mismatch_exits_with_integrity_code(capsys: pytest.CaptureFixture[str], tmp_path) -> None:
    golden = tmp_path / "wrong.json"
    golden.write_text(
        json.dumps(
            {
                "experiment": "line-hadamard",
                "quantity": "probability",
                "rows": [{"iteration": 1, "values": {"49": "1"}}],
            }
        ),
        encoding="utf-8",
    )

    assert main(["line-hadamard", "--steps", "2", "--compare-golden", str(golden), "--out", str(tmp_path)]) == 3
    assert "iteration 1, vertex 49" in capsys.readouterr().err


def test_experiment_without_packaged_golden_fails_comparison(tmp_path) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["line-bounded", "--steps", "2", "--compare-golden", "--out", str(tmp_path)])
    assert exc_info.value.code == 3


def test_graph_build_and_load(capsys: pytest.CaptureFixture[str], tmp_path) -> None:
    path = tmp_path / "line.json"

    assert main(["graph", "build", "line", "--vertices", "3", "--out", str(path)]) == 0
    assert load_graph(path) == build_line(3)
    capsys.readouterr()

    assert main(["graph", "load", str(path)]) == 0
    assert capsys.readouterr().out == "vertices=3 edges=4 labels=right,left\n"


def test_graph_build_double_slit_to_stdout(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["graph", "build", "double-slit", "--slit-rows", "9,10", "--slit-cols", "6,7;12,13"]) == 0

    payload = json.loads(capsys.readouterr().out)
    assert len(payload["vertices"]) == 400


def test_graph_build_rejects_bad_layouts() -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["graph", "build", "lattice", "--width", "1"])
    assert exc_info.value.code == 2


def test_graph_load_of_a_missing_file_is_an_io_error(tmp_path) -> None:
    with pytest.raises(SystemExit) as exc_info:
        main(["graph", "load", str(tmp_path / "absent.json")])
    assert exc_info.value.code == 4


def test_graph_load_of_a_malformed_file_is_a_usage_error(tmp_path) -> None:
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": [1], "edges": [{"out": 1, "label": "right", "in": 2}]}', encoding="utf-8")

    with pytest.raises(SystemExit) as exc_info:
        main(["graph", "load", str(path)])
    assert exc_info.value.code == 2


def test_thread_count_does_not_change_the_csv(tmp_path) -> None:
    single = tmp_path / "single"
    pooled = tmp_path / "pooled"

    assert main(["line-hadamard", "--threads", "1", "--seed", "5", "--out", str(single)]) == 0
    assert main(["line-hadamard", "--threads", "4", "--seed", "5", "--out", str(pooled)]) == 0

    assert (single / "line-hadamard.csv").read_bytes() == (pooled / "line-hadamard.csv").read_bytes()


@pytest.mark.parametrize(
    "payload",
    [
        b'{"vertices": [-1]}',
        b'{"vertices": [1], "properties": [{"element": 1, "key": "name", "value": "\xe9"}]}',
    ],
)
def test_graph_load_of_invalid_ids_or_encoding_is_a_usage_error(tmp_path, payload: bytes) -> None:
    path = tmp_path / "bad.json"
    path.write_bytes(payload)

    with pytest.raises(SystemExit) as exc_info:
        main(["graph", "load", str(path)])
    assert exc_info.value.code == 2
