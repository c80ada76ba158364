from collections.abc import Iterator

import numpy as np
import pytest

from qwalk.core.coins import make_grover4, make_hadamard, unitarity_error
from qwalk.core.errors import AmbiguityError, BoundaryError, CapabilityError, ConfigurationError, IntegrityError
from qwalk.core.models import BranchSpec, build_walk_config
from qwalk.graph.builders import build_double_slit, build_lattice, build_line, lattice_vertex
from qwalk.graph.property_graph import PropertyGraph
from qwalk.settings import get_settings
from qwalk.walk.configs import lattice_config, line_config
from qwalk.walk.oracle import (
    dense_oracle_run,
    dense_oracle_step,
    shift_matrix,
    state_to_vector,
    vector_to_state,
)
from qwalk.walk.quantum import init_state, max_amplitude_difference, run_walk


@pytest.fixture
def reset_settings() -> Iterator[None]:
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_line_unitary_has_the_expected_shape_and_is_unitary() -> None:
    graph = build_line(20)
    unitary = dense_oracle_step(graph, line_config(make_hadamard(), start_vertex=10))

    assert unitary.shape == (40, 40)
    assert unitarity_error(unitary) <= 1e-10


def test_shift_is_a_permutation() -> None:
    shift = shift_matrix(build_line(6), line_config(make_hadamard(), start_vertex=3))

    np.testing.assert_array_equal(shift.sum(axis=0), np.ones(12))
    np.testing.assert_array_equal(shift.sum(axis=1), np.ones(12))


def test_shift_reflects_at_the_ends() -> None:
    shift = shift_matrix(build_line(3), line_config(make_hadamard(), start_vertex=1))

    # Left component at v1 turns into the right component at v1.
    assert shift[1, 0] == 1
    # Right component at v3 turns into the left component at v3.
    assert shift[4, 5] == 1


def test_double_slit_unitary() -> None:
    graph = build_double_slit()
    unitary = dense_oracle_step(graph, lattice_config(make_grover4(), start_vertex=10))

    assert unitary.shape == (1600, 1600)
    assert unitarity_error(unitary) <= 1e-10


@pytest.mark.parametrize(("vertices", "start", "steps"), [(20, 10, 10), (10, 5, 15)])
def test_engine_matches_dense_oracle_on_lines(vertices: int, start: int, steps: int) -> None:
    graph = build_line(vertices)
    config = line_config(make_hadamard(), start_vertex=start)

    psi0 = state_to_vector(graph, init_state(graph, config), config.dim)
    expected = vector_to_state(graph, dense_oracle_run(graph, config, psi0, steps), config.dim, steps)
    actual = run_walk(graph, config, steps)

    assert max_amplitude_difference(actual, expected) <= 1e-9


def test_engine_matches_dense_oracle_on_a_lattice() -> None:
    graph = build_lattice(6, 6)
    config = lattice_config(make_grover4(), start_vertex=lattice_vertex(2, 3, 6))

    psi0 = state_to_vector(graph, init_state(graph, config), config.dim)
    expected = vector_to_state(graph, dense_oracle_run(graph, config, psi0, 8), config.dim, 8)

    assert max_amplitude_difference(run_walk(graph, config, 8), expected) <= 1e-9


def test_vector_round_trip_keeps_only_occupied_vertices() -> None:
    graph = build_line(4)
    state = init_state(graph, line_config(make_hadamard(), start_vertex=2))

    vector = state_to_vector(graph, state, 2)

    np.testing.assert_array_equal(vector, [0, 0, 1, 0, 0, 0, 0, 0])
    assert list(vector_to_state(graph, vector, 2).amplitudes) == [2]


def test_oracle_run_validates_input() -> None:
    graph = build_line(4)
    config = line_config(make_hadamard(), start_vertex=2)

    with pytest.raises(ConfigurationError):
        dense_oracle_run(graph, config, np.zeros(8), -1)
    with pytest.raises(ConfigurationError):
        dense_oracle_run(graph, config, np.zeros(6), 1)


def test_oracle_refuses_large_graphs(monkeypatch: pytest.MonkeyPatch, reset_settings: None) -> None:
    monkeypatch.setenv("QWALK_ORACLE_MAX_DIMENSION", "30")
    get_settings.cache_clear()

    with pytest.raises(CapabilityError):
        dense_oracle_step(build_line(20), line_config(make_hadamard(), start_vertex=10))


def test_oracle_refuses_large_lines_by_default() -> None:
    with pytest.raises(CapabilityError):
        dense_oracle_step(build_line(2600), line_config(make_hadamard(), start_vertex=10))


def test_oracle_reports_ambiguous_and_forbidden_moves() -> None:
    with pytest.raises(BoundaryError):
        shift_matrix(build_line(4), line_config(make_hadamard(), start_vertex=2, boundary="forbid"))

    graph = PropertyGraph(range(3))
    graph.add_edge(1, "left", 0)
    graph.add_edge(1, "left", 2)
    with pytest.raises(AmbiguityError):
        shift_matrix(graph, line_config(make_hadamard(), start_vertex=1))


def test_oracle_rejects_reflections_that_break_unitarity() -> None:
    # "left" reflecting about ud leaves component 0 in place, colliding with the move from the right.
    branches = (
        BranchSpec(label="left", projection_index=0, boundary_policy="reflect", reflect_axis="ud"),
        BranchSpec(label="right", projection_index=1, boundary_policy="reflect", reflect_axis="lr"),
        BranchSpec(label="up", projection_index=2, boundary_policy="reflect", reflect_axis="ud"),
        BranchSpec(label="down", projection_index=3, boundary_policy="reflect", reflect_axis="ud"),
    )
    config = build_walk_config(
        coin=make_grover4(), branches=branches, start_vertex=4, initial_spin=(0.0, 0.0, 1.0, 0.0)
    )

    with pytest.raises(IntegrityError, match="not unitary"):
        dense_oracle_step(build_lattice(3, 3), config)
