import pytest

from qwalk.core.errors import ConfigurationError, GraphLookupError, GraphStateError
from qwalk.graph.property_graph import PropertyGraph


def _small_graph() -> PropertyGraph:
    graph = PropertyGraph(range(3))
    graph.add_edge(0, "knows", 1)
    graph.add_edge(0, "knows", 2)
    graph.add_edge(0, "knows", 2)
    graph.add_edge(1, "likes", 0)
    return graph


def test_out_neighbors_keep_insertion_order_and_parallel_edges() -> None:
    graph = _small_graph()

    assert graph.out_neighbors(0, "knows") == (1, 2, 2)
    assert graph.out_neighbors(0, "likes") == ()


def test_in_neighbors_and_direction_dispatch() -> None:
    graph = _small_graph()

    assert graph.in_neighbors(2, "knows") == (0, 0)
    assert graph.neighbors(0, "likes", "in") == (1,)
    assert graph.neighbors(1, "likes", "out") == (0,)


def test_degree_counts_both_directions() -> None:
    graph = _small_graph()

    assert graph.degree(0) == 4
    assert graph.degree(2) == 2


def test_unknown_vertex_raises_lookup_error() -> None:
    graph = _small_graph()

    with pytest.raises(GraphLookupError):
        graph.out_neighbors(9, "knows")
    with pytest.raises(KeyError):
        graph.add_edge(0, "knows", 9)


def test_negative_vertex_is_rejected() -> None:
    with pytest.raises(ConfigurationError):
        PropertyGraph([-1])


def test_duplicate_vertex_is_a_no_op() -> None:
    graph = PropertyGraph([1, 1, 2])
    assert len(graph) == 2


def test_frozen_graph_rejects_mutation() -> None:
    graph = _small_graph().freeze()

    assert graph.frozen
    with pytest.raises(GraphStateError):
        graph.add_vertex(5)
    with pytest.raises(GraphStateError):
        graph.add_edge(0, "knows", 1)
    with pytest.raises(GraphStateError):
        graph.set_property(0, "name", "x")


def test_freeze_is_idempotent() -> None:
    graph = _small_graph()
    assert graph.freeze() is graph.freeze()


def test_properties() -> None:
    graph = _small_graph()
    graph.set_property(0, "name", "ana")

    assert graph.get_property(0, "name") == "ana"
    assert graph.get_property(1, "name", "?") == "?"
    assert graph.properties == {(0, "name"): "ana"}


def test_accessors_and_equality() -> None:
    graph = _small_graph()

    assert graph.vertices == (0, 1, 2)
    assert graph.labels == ("knows", "likes")
    assert len(graph.edges) == 4
    assert graph == _small_graph()

    other = _small_graph()
    other.add_edge(2, "knows", 0)
    assert graph != other
