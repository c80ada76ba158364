"""Builders for the line, lattice, double-slit and set-operation fixture graphs."""

from collections.abc import Sequence
from typing import Final

from qwalk.core.errors import ConfigurationError
from qwalk.graph.property_graph import PropertyGraph

LINE_LABELS: Final[tuple[str, str]] = ("left", "right")
LATTICE_LABELS: Final[tuple[str, str, str, str]] = ("left", "right", "up", "down")

DEFAULT_SLIT_ROWS: Final[tuple[int, int]] = (9, 10)
DEFAULT_SLIT_COLS: Final[tuple[tuple[int, int], tuple[int, int]]] = ((6, 7), (12, 13))


def lattice_vertex(row: int, col: int, width: int) -> int:
    """Return the row-major id of ``(row, col)``; row 0 is the bottom row.

    Args:
        row: The row value.
        col: The col value.
        width: Lattice column count.

    Returns:
        The resulting value.
    """
    return row * width + col


def lattice_position(vertex: int, width: int) -> tuple[int, int]:
    """Return ``(row, col)`` for a lattice vertex id.

    Args:
        vertex: The vertex value.
        width: Lattice column count.

    Returns:
        The resulting value.
    """
    return divmod(vertex, width)


def build_line(n: int) -> PropertyGraph:
    """Build a line with vertices ``1..n`` and left/right edges between neighbours.

    Args:
        n: Vertex count.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If ``n < 2``.
    """
    if n < 2:
        raise ConfigurationError(f"A line graph needs at least 2 vertices, got {n}.")
    graph = PropertyGraph(range(1, n + 1))
    for vertex in range(1, n):
        graph.add_edge(vertex, "right", vertex + 1)
        graph.add_edge(vertex + 1, "left", vertex)
    return graph.freeze()


def _lattice_edges(width: int, height: int, blocked: frozenset[int]) -> PropertyGraph:
    """Build a lattice, skipping every edge that touches a blocked vertex.

    Args:
        width: The width value.
        height: The height value.
        blocked: Vertex ids that stay isolated.

    Returns:
        The resulting value.
    """
    graph = PropertyGraph(range(width * height))
    steps = (("left", 0, -1), ("right", 0, 1), ("up", 1, 0), ("down", -1, 0))
    for vertex in range(width * height):
        if vertex in blocked:
            continue
        row, col = lattice_position(vertex, width)
        for label, d_row, d_col in steps:
            n_row, n_col = row + d_row, col + d_col
            if not (0 <= n_row < height and 0 <= n_col < width):
                continue
            neighbour = lattice_vertex(n_row, n_col, width)
            if neighbour in blocked:
                continue
            graph.add_edge(vertex, label, neighbour)
    return graph.freeze()


def build_lattice(w: int, h: int) -> PropertyGraph:
    """Build a ``w`` x ``h`` lattice with left/right/up/down edges.

    Args:
        w: Column count.
        h: Row count.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If either dimension is below 2.
    """
    if w < 2 or h < 2:
        raise ConfigurationError(f"A lattice needs at least 2x2 vertices, got {w}x{h}.")
    return _lattice_edges(w, h, frozenset())


def double_slit_walls(
    w: int,
    h: int,
    slit_rows: Sequence[int],
    slit_cols: Sequence[Sequence[int]],
) -> frozenset[int]:
    """Return the isolated screen vertices of a double-slit lattice.

    Args:
        w: Column count.
        h: Row count.
        slit_rows: Rows that form the screen.
        slit_cols: Column groups, one per slit, left open in every screen row.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the screen or slits fall outside the lattice or overlap.
    """
    if not slit_rows:
        raise ConfigurationError("The screen needs at least one row.")
    for row in slit_rows:
        if not 0 < row < h - 1:
            raise ConfigurationError(f"Slit row {row} must be strictly inside 0..{h - 1}.")

    open_cols: set[int] = set()
    for slit in slit_cols:
        if not slit:
            raise ConfigurationError("Each slit needs at least one column.")
        for col in slit:
            if not 0 <= col < w:
                raise ConfigurationError(f"Slit column {col} is outside 0..{w - 1}.")
            if col in open_cols:
                raise ConfigurationError(f"Slit column {col} is used by more than one slit.")
            open_cols.add(col)

    return frozenset(
        lattice_vertex(row, col, w) for row in set(slit_rows) for col in range(w) if col not in open_cols
    )


def build_double_slit(
    w: int = 20,
    h: int = 20,
    slit_rows: Sequence[int] = DEFAULT_SLIT_ROWS,
    slit_cols: Sequence[Sequence[int]] = DEFAULT_SLIT_COLS,
) -> PropertyGraph:
    """Build a lattice whose screen rows are walls except for the slit columns.

    The defaults open four vertices in each screen row, eight in total.

    Args:
        w: Column count.
        h: Row count.
        slit_rows: Rows that form the screen.
        slit_cols: Column groups, one per slit.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the lattice is too small.
    """
    if w < 2 or h < 3:
        raise ConfigurationError(f"A double-slit lattice needs at least 2x3 vertices, got {w}x{h}.")
    return _lattice_edges(w, h, double_slit_walls(w, h, slit_rows, slit_cols))


def build_fixture_graph() -> PropertyGraph:
    """Build the 4-vertex/8-edge read/wrote/liked graph used by the set-operation listings.

    Returns:
        The resulting value.
    """
    graph = PropertyGraph(range(4))
    for label, target in (
        ("read", 1),
        ("read", 2),
        ("read", 3),
        ("read", 3),
        ("wrote", 1),
        ("liked", 1),
        ("liked", 2),
        ("liked", 3),
    ):
        graph.add_edge(0, label, target)
    return graph.freeze()


def build_knows_graph() -> PropertyGraph:
    """Build a small `knows` graph for the friends-of-friends demonstration.

    Vertex 0 knows 1 and 2; 1 knows 2 and 3; 2 knows 4; 3 knows 0.

    Returns:
        The resulting value.
    """
    graph = PropertyGraph(range(5))
    for out, target in ((0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 0)):
        graph.add_edge(out, "knows", target)
    for vertex, name in enumerate(("ana", "ben", "cy", "dee", "eli")):
        graph.set_property(vertex, "name", name)
    return graph.freeze()
