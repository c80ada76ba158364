"""Read and write graphs in the JSON interchange format.

The file holds ``vertices``, ``edges`` and an optional ``properties`` list. Edge
order in the file defines neighbour enumeration order.
"""

from pathlib import Path
from typing import Annotated

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from qwalk.core.errors import GraphLookupError, GraphParseError
from qwalk.graph.property_graph import PropertyGraph, PropertyValue

logger = structlog.get_logger(__name__)


class EdgeRecord(BaseModel):
    """Represent `EdgeRecord`."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    out: int = Field(ge=0)
    label: str
    in_: int = Field(alias="in", ge=0)


class PropertyRecord(BaseModel):
    """Represent `PropertyRecord`."""

    model_config = ConfigDict(extra="forbid")

    element: int = Field(ge=0)
    key: str
    value: PropertyValue


class GraphDocument(BaseModel):
    """Represent `GraphDocument`."""

    model_config = ConfigDict(extra="forbid")

    vertices: list[Annotated[int, Field(ge=0)]] = Field(min_length=1)
    edges: list[EdgeRecord] = Field(default_factory=list)
    properties: list[PropertyRecord] = Field(default_factory=list)


def _format_validation_error(exc: ValidationError) -> str:
    """Render the first validation problem with its location.

    Args:
        exc: The exc value.

    Returns:
        The resulting value.
    """
    first = exc.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "<document>"
    return f"{location}: {first.get('msg', 'invalid value')}"


def graph_from_document(document: GraphDocument) -> PropertyGraph:
    """Build a frozen graph from a parsed document.

    Args:
        document: The document value.

    Returns:
        The resulting value.

    Raises:
        GraphParseError: If an edge or property references a missing vertex.
    """
    graph = PropertyGraph(document.vertices)
    for index, edge in enumerate(document.edges):
        try:
            graph.add_edge(edge.out, edge.label, edge.in_)
        except GraphLookupError as exc:
            raise GraphParseError(f"edges.{index}: {exc}") from exc
    for index, record in enumerate(document.properties):
        try:
            graph.set_property(record.element, record.key, record.value)
        except GraphLookupError as exc:
            raise GraphParseError(f"properties.{index}: {exc}") from exc
    return graph.freeze()


def graph_to_document(graph: PropertyGraph) -> GraphDocument:
    """Convert a graph to its document form.

    Args:
        graph: The graph value.

    Returns:
        The resulting value.
    """
    return GraphDocument(
        vertices=list(graph.vertices),
        edges=[EdgeRecord(out=edge.out, label=edge.label, in_=edge.in_) for edge in graph.edges],
        properties=[
            PropertyRecord(element=element, key=key, value=value)
            for (element, key), value in graph.properties.items()
        ],
    )


def parse_graph(text: str, *, source: str = "<string>") -> PropertyGraph:
    """Parse graph JSON text.

    Args:
        text: The text value.
        source: Name used in error messages.

    Returns:
        The resulting value.

    Raises:
        GraphParseError: If the text is not a valid graph document.
    """
    try:
        document = GraphDocument.model_validate_json(text)
    except ValidationError as exc:
        raise GraphParseError(f"{source}: {_format_validation_error(exc)}") from exc
    try:
        return graph_from_document(document)
    except GraphParseError as exc:
        raise GraphParseError(f"{source}: {exc}") from exc


def load_graph(path: str | Path) -> PropertyGraph:
    """Load a graph file.

    Args:
        path: The path value.

    Returns:
        The resulting value.

    Raises:
        GraphParseError: If the file is not UTF-8 or not a valid graph document.
    """
    file_path = Path(path)
    try:
        text = file_path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise GraphParseError(f"{file_path}: byte {exc.start}: not valid UTF-8") from exc
    graph = parse_graph(text, source=str(file_path))
    logger.debug("graph_loaded", path=str(file_path), vertices=len(graph), edges=len(graph.edges))
    return graph


def dump_graph(graph: PropertyGraph) -> str:
    """Serialize a graph to JSON text.

    Args:
        graph: The graph value.

    Returns:
        The resulting value.
    """
    return graph_to_document(graph).model_dump_json(indent=2, by_alias=True) + "\n"


def save_graph(graph: PropertyGraph, path: str | Path) -> None:
    """Write a graph file.

    Args:
        graph: The graph value.
        path: The path value.
    """
    file_path = Path(path)
    file_path.write_text(dump_graph(graph), encoding="utf-8")
    logger.debug("graph_saved", path=str(file_path), vertices=len(graph), edges=len(graph.edges))
