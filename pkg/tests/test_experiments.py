import pytest

from qwalk.core.errors import ConfigurationError
from qwalk.experiments.base import BaseExperiment, ExperimentParams, ExperimentReport, require_start
from qwalk.experiments.catalog.double_slit import film_row
from qwalk.experiments.pipeline import mirror_error
from qwalk.experiments.registry import ExperimentRegistry, UnknownExperimentError, registry, run_experiment

EXPECTED_NAMES = [
    "double-slit",
    "line-balanced",
    "line-bounded",
    "line-classical",
    "line-hadamard",
    "line-y-listing",
    "reverse-check",
    "setops-demo",
]


class DummyExperiment(BaseExperiment):
    name = "dummy"
    description = "Returns an empty report."

    def run(self, params: ExperimentParams) -> ExperimentReport:
        return ExperimentReport(experiment=self.name, parameters={"seed": params.seed}, graph_kind="sets")


def test_registry_discovers_the_catalog() -> None:
    assert registry.names() == EXPECTED_NAMES


def test_registry_rejects_unknown_names() -> None:
    with pytest.raises(UnknownExperimentError, match="line-hadamard"):
        registry.get("this-does-not-exist")


def test_registry_register_adds_an_experiment() -> None:
    local = ExperimentRegistry()
    local.register(DummyExperiment)

    assert "dummy" in local.names()
    assert local.get("dummy")().execute().parameters == {"seed": 0}


def test_subclass_without_name_is_rejected() -> None:
    with pytest.raises(TypeError):

        class Nameless(BaseExperiment):
            description = "no name"

            def run(self, params: ExperimentParams) -> ExperimentReport:
                raise NotImplementedError


def test_execute_records_duration() -> None:
    report = DummyExperiment().execute(ExperimentParams(seed=4))

    assert report.duration_seconds >= 0.0
    assert report.parameters == {"seed": 4}


def test_params_reject_unknown_fields_and_bad_ranges() -> None:
    with pytest.raises(ValueError):
        ExperimentParams(colour="red")
    with pytest.raises(ValueError):
        ExperimentParams(steps=-1)


def test_require_start() -> None:
    require_start(1, 100)
    require_start(100, 100)
    with pytest.raises(ConfigurationError):
        require_start(101, 100)


def test_line_hadamard_first_iterations() -> None:
    report = run_experiment("line-hadamard")

    third = report.record(3)
    assert third is not None
    assert third.probs == pytest.approx({47: 1 / 8, 49: 5 / 8, 51: 1 / 8, 53: 1 / 8}, abs=1e-12)
    assert report.record(50) is not None
    assert report.extras["left_mass"] > report.extras["right_mass"]
    assert report.integrity.max_norm_drift <= 1e-9
    assert report.classical_overlay is not None


def test_line_y_listing_shares_hadamard_probabilities() -> None:
    hadamard = run_experiment("line-hadamard", ExperimentParams(steps=20))
    y_listing = run_experiment("line-y-listing", ExperimentParams(steps=20))

    assert y_listing.parameters["coin"] == "balanced-y"
    assert y_listing.final.keys() == hadamard.final.keys()
    for vertex, p in hadamard.final.items():
        assert y_listing.final[vertex] == pytest.approx(p, abs=1e-12)


def test_line_balanced_is_symmetric() -> None:
    report = run_experiment("line-balanced")

    assert report.extras["symmetry_error"] <= 1e-9
    second = report.record(2)
    assert second is not None
    assert second.probs == pytest.approx({48: 1 / 4, 50: 1 / 2, 52: 1 / 4}, abs=1e-12)


def test_line_bounded_reaches_the_walls() -> None:
    report = run_experiment("line-bounded")

    assert report.record(100) is not None
    assert min(report.final) == 1
    assert sum(report.final.values()) == pytest.approx(1.0, abs=1e-9)
    assert report.integrity.max_norm_drift <= 1e-9


def test_initial_spin_override() -> None:
    report = run_experiment("line-hadamard", ExperimentParams(steps=1, initial_spin="0,0;1,0"))

    assert report.final == pytest.approx({49: 0.5, 51: 0.5})


def test_line_classical_counts() -> None:
    report = run_experiment("line-classical", ExperimentParams(samples=200))

    assert report.final_counts is not None
    assert report.final_counts[50] == 126410606437752
    assert report.extras["total_count"] == 1125899906842624
    assert sum(report.extras["sampled"].values()) == pytest.approx(1.0)
    fourth = report.record(4)
    assert fourth is not None
    assert fourth.counts == {46: 1, 48: 4, 50: 6, 52: 4, 54: 1}


def test_line_experiment_rejects_start_outside_the_line() -> None:
    with pytest.raises(ConfigurationError):
        run_experiment("line-hadamard", ExperimentParams(vertices=10, start=50))


def test_reverse_check_recovers_the_start() -> None:
    report = run_experiment("reverse-check", ExperimentParams(threads=2))

    assert report.integrity.recovered_probability == pytest.approx(1.0, abs=1e-9)
    assert report.extras["max_amplitude_error"] <= 1e-9
    assert report.collapse == (50, 0)


def test_double_slit_report() -> None:
    report = run_experiment("double-slit")

    assert report.lattice_width == 20
    assert report.record(26) is not None
    assert report.integrity.max_norm_drift <= 1e-9
    assert report.extras["film_row"] == 19
    assert len(report.extras["film"]) == 20
    assert report.extras["film_argmax_column"] in (9, 10)
    assert sum(report.final.values()) == pytest.approx(1.0, abs=1e-9)


def test_double_slit_rejects_starts_off_the_lattice() -> None:
    with pytest.raises(ConfigurationError):
        run_experiment("double-slit", ExperimentParams(start=400))


def test_setops_demo_listing() -> None:
    report = run_experiment("setops-demo")

    assert report.listing == (
        "==>[v[1], [1, 1]]\n==>[v[2], [1, 0]]\n==>[v[3], [2, 0]]\n\n"
        "==>[v[1], [1, 1]]\n\n"
        "==>[v[2], [1, 0]]\n==>[v[3], [2, 0]]\n\n"
        "==>[v[1], [2, 0]]\n\n"
        "==>[v[1], [1, 1, 1]]\n==>[v[2], [1, 0, 1]]\n==>[v[3], [2, 0, 1]]\n\n"
        "==>v[3]\n==>v[4]\n"
    )
    assert report.extras["except_names"] == ["dee", "eli"]


def test_mirror_error() -> None:
    assert mirror_error({49: 0.5, 51: 0.5}, 50) == 0.0
    assert mirror_error({49: 0.75, 51: 0.25}, 50) == pytest.approx(0.5)
    assert mirror_error({}, 50) == 0.0


def test_film_row_reads_the_top_row() -> None:
    probs = {6: 0.25, 7: 0.5, 8: 0.25}
    film = film_row(probs, width=3, height=3, centre_col=1)

    assert film.row == 2
    assert film.probs == {0: 0.25, 1: 0.5, 2: 0.25}
    assert film.symmetry_error == 0.0
    assert film.argmax_column == 1


def test_film_row_breaks_ties_toward_the_lowest_column() -> None:
    film = film_row({2: 0.5, 3: 0.5}, width=2, height=2, centre_col=0)

    assert film.argmax_column == 0
    assert film.symmetry_error == 0.0
