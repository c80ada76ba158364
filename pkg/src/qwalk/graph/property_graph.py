"""Labeled directed multigraph with a scalar property map.

Graphs are built by a single writer and then frozen; every walk freezes the graph
it runs on, after which any number of readers may share it.
"""

from collections.abc import Iterable
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from qwalk.core.errors import ConfigurationError, GraphLookupError, GraphStateError

type PropertyValue = str | int | float | bool


class Edge(BaseModel):
    """Represent `Edge`."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    out: int
    label: str
    in_: int = Field(alias="in")


class PropertyGraph:
    """Represent `PropertyGraph`."""

    def __init__(self, vertices: Iterable[int] = ()) -> None:
        """Initialize the instance.

        Args:
            vertices: Vertex ids to add up front.
        """
        self._vertices: set[int] = set()
        self._edges: list[Edge] = []
        self._out: dict[int, dict[str, list[int]]] = {}
        self._in: dict[int, dict[str, list[int]]] = {}
        self._properties: dict[tuple[int, str], PropertyValue] = {}
        self._frozen = False
        for vertex in vertices:
            self.add_vertex(vertex)

    @property
    def frozen(self) -> bool:
        """Return whether the graph rejects mutation.

        Returns:
            The resulting value.
        """
        return self._frozen

    def freeze(self) -> "PropertyGraph":
        """Make the graph immutable. Idempotent.

        Returns:
            The resulting value.
        """
        self._frozen = True
        return self

    def _require_mutable(self) -> None:
        """Require an unfrozen graph.

        Raises:
            GraphStateError: If the graph is frozen.
        """
        if self._frozen:
            raise GraphStateError("Graph is frozen; build a new graph instead of mutating this one.")

    def _require_vertex(self, vertex: int) -> None:
        """Require a known vertex.

        Args:
            vertex: The vertex value.

        Raises:
            GraphLookupError: If the vertex is unknown.
        """
        if vertex not in self._vertices:
            raise GraphLookupError(f"Unknown vertex {vertex}.")

    def add_vertex(self, vertex: int) -> None:
        """Add a vertex. Re-adding an existing id is a no-op.

        Args:
            vertex: A nonnegative vertex id.

        Raises:
            ConfigurationError: If the id is negative.
        """
        self._require_mutable()
        if vertex < 0:
            raise ConfigurationError(f"Vertex ids must be nonnegative, got {vertex}.")
        if vertex in self._vertices:
            return
        self._vertices.add(vertex)
        self._out[vertex] = {}
        self._in[vertex] = {}

    def add_edge(self, out: int, label: str, in_: int) -> None:
        """Add a directed labeled edge. Parallel edges are kept.

        Args:
            out: Tail vertex.
            label: Edge label.
            in_: Head vertex.
        """
        self._require_mutable()
        self._require_vertex(out)
        self._require_vertex(in_)
        self._edges.append(Edge(out=out, label=label, in_=in_))
        self._out[out].setdefault(label, []).append(in_)
        self._in[in_].setdefault(label, []).append(out)

    def set_property(self, element: int, key: str, value: PropertyValue) -> None:
        """Attach a scalar property to a vertex.

        Args:
            element: The element value.
            key: The key value.
            value: The value value.
        """
        self._require_mutable()
        self._require_vertex(element)
        self._properties[(element, key)] = value

    def get_property(self, element: int, key: str, default: Any = None) -> Any:
        """Read a property.

        Args:
            element: The element value.
            key: The key value.
            default: Value returned when the property is absent.

        Returns:
            The resulting value.
        """
        self._require_vertex(element)
        return self._properties.get((element, key), default)

    def out_neighbors(self, vertex: int, label: str) -> tuple[int, ...]:
        """Return heads of ``label`` edges leaving ``vertex`` in insertion order.

        Args:
            vertex: The vertex value.
            label: The label value.

        Returns:
            The resulting value.
        """
        self._require_vertex(vertex)
        return tuple(self._out[vertex].get(label, ()))

    def in_neighbors(self, vertex: int, label: str) -> tuple[int, ...]:
        """Return tails of ``label`` edges entering ``vertex`` in insertion order.

        Args:
            vertex: The vertex value.
            label: The label value.

        Returns:
            The resulting value.
        """
        self._require_vertex(vertex)
        return tuple(self._in[vertex].get(label, ()))

    def neighbors(self, vertex: int, label: str, direction: str = "out") -> tuple[int, ...]:
        """Dispatch to `out_neighbors` or `in_neighbors`.

        Args:
            vertex: The vertex value.
            label: The label value.
            direction: ``"out"`` or ``"in"``.

        Returns:
            The resulting value.
        """
        if direction == "out":
            return self.out_neighbors(vertex, label)
        return self.in_neighbors(vertex, label)

    def degree(self, vertex: int) -> int:
        """Return the number of incident edges (in plus out).

        Args:
            vertex: The vertex value.

        Returns:
            The resulting value.
        """
        self._require_vertex(vertex)
        outgoing = sum(len(targets) for targets in self._out[vertex].values())
        incoming = sum(len(sources) for sources in self._in[vertex].values())
        return outgoing + incoming

    def has_vertex(self, vertex: int) -> bool:
        """Return whether ``vertex`` exists.

        Args:
            vertex: The vertex value.

        Returns:
            True when the condition is met; otherwise, False.
        """
        return vertex in self._vertices

    @property
    def vertices(self) -> tuple[int, ...]:
        """Return vertex ids in ascending order.

        Returns:
            The resulting value.
        """
        return tuple(sorted(self._vertices))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Return edges in insertion order.

        Returns:
            The resulting value.
        """
        return tuple(self._edges)

    @property
    def labels(self) -> tuple[str, ...]:
        """Return distinct edge labels in first-seen order.

        Returns:
            The resulting value.
        """
        return tuple(dict.fromkeys(edge.label for edge in self._edges))

    @property
    def properties(self) -> dict[tuple[int, str], PropertyValue]:
        """Return a copy of the property map.

        Returns:
            The resulting value.
        """
        return dict(self._properties)

    def __len__(self) -> int:
        """Return the vertex count.

        Returns:
            The resulting value.
        """
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        """Compare structure, edge order and properties.

        Args:
            other: The other value.

        Returns:
            True when the condition is met; otherwise, False.
        """
        if not isinstance(other, PropertyGraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and self._properties == other._properties
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Return a short summary.

        Returns:
            The resulting value.
        """
        return f"PropertyGraph(vertices={len(self._vertices)}, edges={len(self._edges)}, frozen={self._frozen})"
