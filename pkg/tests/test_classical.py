import math
from fractions import Fraction

import pytest

from qwalk.core.errors import ConfigurationError, WalkError
from qwalk.graph.builders import build_line
from qwalk.graph.property_graph import PropertyGraph
from qwalk.walk.classical import (
    classical_bulk_walk,
    classical_random_walk,
    normalize_counts,
    random_walk_histogram,
)


def test_bulk_walk_first_rows() -> None:
    graph = build_line(100)

    assert classical_bulk_walk(graph, 50, 0) == {50: 1}
    assert classical_bulk_walk(graph, 50, 1) == {49: 1, 51: 1}
    assert classical_bulk_walk(graph, 50, 2) == {48: 1, 50: 2, 52: 1}
    assert classical_bulk_walk(graph, 50, 3) == {47: 1, 49: 3, 51: 3, 53: 1}
    assert classical_bulk_walk(graph, 50, 4) == {46: 1, 48: 4, 50: 6, 52: 4, 54: 1}


def test_bulk_walk_after_fifty_steps() -> None:
    counts = classical_bulk_walk(build_line(100), 50, 50)

    assert counts[50] == 126410606437752
    assert counts[50] == math.comb(50, 25)
    assert sum(counts.values()) == 2**50
    assert all(count > 0 for count in counts.values())


def test_bulk_walk_matches_binomial_away_from_boundaries() -> None:
    graph = build_line(200)

    for n in (1, 7, 20, 50):
        counts = classical_bulk_walk(graph, 100, n)
        assert len(counts) == n + 1
        for k in range(n + 1):
            assert counts[100 - n + 2 * k] == math.comb(n, k)


def test_bulk_walk_keeps_blocked_share_in_place() -> None:
    assert classical_bulk_walk(build_line(3), 1, 1) == {1: 1, 2: 1}


def test_bulk_walk_follows_parallel_edges() -> None:
    graph = PropertyGraph(range(3))
    graph.add_edge(0, "right", 1)
    graph.add_edge(0, "right", 2)
    graph.add_edge(0, "left", 1)

    assert classical_bulk_walk(graph, 0, 1) == {1: 2, 2: 1}


def test_bulk_walk_rejects_bad_input() -> None:
    graph = build_line(10)

    with pytest.raises(ConfigurationError):
        classical_bulk_walk(graph, 50, 1)
    with pytest.raises(ConfigurationError):
        classical_bulk_walk(graph, 5, -1)


def test_normalize_counts() -> None:
    assert normalize_counts({48: 1, 50: 2, 52: 1}) == {48: Fraction(1, 4), 50: Fraction(1, 2), 52: Fraction(1, 4)}
    with pytest.raises(ConfigurationError):
        normalize_counts({})


def test_random_walk_zero_steps_stays_home() -> None:
    assert classical_random_walk(build_line(100), 50, 0, seed=3) == 50


def test_random_walk_is_deterministic_and_keeps_parity() -> None:
    graph = build_line(100)

    for seed in range(20):
        end = classical_random_walk(graph, 50, 10, seed)
        assert end == classical_random_walk(graph, 50, 10, seed)
        assert (end - 50) % 2 == 0
        assert abs(end - 50) <= 10


def test_random_walk_without_edges_fails() -> None:
    graph = PropertyGraph([0])

    with pytest.raises(WalkError):
        classical_random_walk(graph, 0, 1, seed=0)


def test_random_walk_histogram_approaches_binomial() -> None:
    trials = 20000
    histogram = random_walk_histogram(build_line(100), 50, 4, range(trials))

    assert sum(histogram.values()) == pytest.approx(1.0)
    for vertex, count in {46: 1, 48: 4, 50: 6, 52: 4, 54: 1}.items():
        p = count / 16
        sigma = math.sqrt(p * (1 - p) / trials)
        assert abs(histogram.get(vertex, 0.0) - p) <= 4 * sigma


def test_random_walk_histogram_needs_seeds() -> None:
    with pytest.raises(ConfigurationError):
        random_walk_histogram(build_line(10), 5, 2, [])
