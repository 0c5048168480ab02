"""Exact rational plane geometry for straight-line graph drawings.

Every predicate works on exact rational coordinates (Fraction, or plain int
where the value happens to be integral) and decides through the sign of a
cross product.  No floating point enters any decision, so crossing reports
are exact for arbitrary inputs, not just well-conditioned ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional, Sequence

from .errors import DegeneracyError
from .graph import Edge, RegularGraph

DRAWING_FORMAT_HEADER = "drawing v1"

LEFT = 1
RIGHT = -1
COLLINEAR = 0


class Point(NamedTuple):
    """A point with exact rational coordinates."""

    x: Fraction
    y: Fraction


def point(x, y) -> Point:
    """Build a Point, coercing coordinates to Fraction (lowest terms)."""
    return Point(Fraction(x), Fraction(y))


def orientation(p: Point, q: Point, r: Point) -> int:
    """Turn direction of the path p -> q -> r.

    Returns LEFT (+1) for a counterclockwise turn, RIGHT (-1) for clockwise,
    COLLINEAR (0) when the three points lie on one line.  The value is the
    sign of the cross product (q - p) x (r - p).
    """
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if cross > 0:
        return LEFT
    if cross < 0:
        return RIGHT
    return COLLINEAR


def segments_cross(a1: Point, a2: Point, b1: Point, b2: Point) -> bool:
    """True when the open segments a1-a2 and b1-b2 share an interior point.

    Segments that share an endpoint never count as crossing.  When all four
    endpoints are distinct, any collinear triple among them makes the
    proper-crossing question degenerate and raises DegeneracyError.
    """
    if a1 in (b1, b2) or a2 in (b1, b2):
        return False
    o1 = orientation(a1, a2, b1)
    o2 = orientation(a1, a2, b2)
    o3 = orientation(b1, b2, a1)
    o4 = orientation(b1, b2, a2)
    if 0 in (o1, o2, o3, o4):
        raise DegeneracyError(
            f"collinear endpoints among {a1}, {a2}, {b1}, {b2}"
        )
    return o1 != o2 and o3 != o4


@dataclass(frozen=True)
class GeometricDrawing:
    """A straight-line drawing: one position per vertex of a graph."""

    graph: RegularGraph
    positions: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.positions) != self.graph.n:
            raise ValueError(
                f"{self.graph.n} vertices but {len(self.positions)} positions"
            )


def validate_general_position(drawing: GeometricDrawing) -> Optional[tuple[int, ...]]:
    """None when vertex positions are in general position.

    Otherwise the first violation found: a pair (i, j) of coincident
    vertices, or a collinear triple (i, j, k).
    """
    pos = drawing.positions
    n = len(pos)
    for i in range(n):
        for j in range(i + 1, n):
            if pos[i] == pos[j]:
                return (i, j)
    for i, j, k in combinations(range(n), 3):
        if orientation(pos[i], pos[j], pos[k]) == COLLINEAR:
            return (i, j, k)
    return None


@dataclass(frozen=True, eq=True)
class CrossingReport:
    """Exact crossing statistics of one drawing.

    total counts unordered crossing pairs of edges; per_edge maps each edge
    to the number of crossings on it; noncrossing counts the non-adjacent
    edge pairs that do not cross.  total + noncrossing always equals the
    number of non-adjacent edge pairs.
    """

    total: int
    per_edge: dict[Edge, int]
    noncrossing: int

    @property
    def pair_count(self) -> int:
        """Number of unordered pairs of non-adjacent edges."""
        return self.total + self.noncrossing


def count_crossings_geometric(drawing: GeometricDrawing) -> CrossingReport:
    """Count pairwise edge crossings of a general-position drawing.

    Runs in O(m^2) over the m edges.  Adjacent edges (sharing a vertex) are
    skipped, so under general position every surviving pair either crosses
    properly or misses entirely.
    """
    violation = validate_general_position(drawing)
    if violation is not None:
        raise DegeneracyError(f"vertices {violation} violate general position")
    pos = drawing.positions
    edges = drawing.graph.edges
    per_edge = {edge: 0 for edge in edges}
    total = 0
    noncrossing = 0
    for index, (a, b) in enumerate(edges):
        for c, d in edges[index + 1 :]:
            if c in (a, b) or d in (a, b):
                continue
            if segments_cross(pos[a], pos[b], pos[c], pos[d]):
                total += 1
                per_edge[(a, b)] += 1
                per_edge[(c, d)] += 1
            else:
                noncrossing += 1
    return CrossingReport(total=total, per_edge=per_edge, noncrossing=noncrossing)


def drawing_to_text(drawing: GeometricDrawing, trailer: str | None = None) -> str:
    """Serialize in the drawing v1 format.

    Coordinates are written as numerator/denominator pairs of the reduced
    fraction.  An optional trailer comment records construction parameters;
    parsers ignore comment lines.
    """
    lines = [DRAWING_FORMAT_HEADER]
    lines.append(f"{drawing.graph.n} {len(drawing.graph.edges)}")
    for p in drawing.positions:
        x, y = Fraction(p.x), Fraction(p.y)
        lines.append(f"{x.numerator} {x.denominator} {y.numerator} {y.denominator}")
    lines.extend(f"{u} {v}" for u, v in drawing.graph.edges)
    if trailer is not None:
        lines.append(f"# {trailer}")
    return "\n".join(lines) + "\n"


def drawing_from_text(text: str) -> GeometricDrawing:
    """Parse the drawing v1 format; comment lines are skipped."""
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    if not lines or lines[0] != DRAWING_FORMAT_HEADER:
        raise ValueError(f"missing '{DRAWING_FORMAT_HEADER}' header")
    if len(lines) < 2:
        raise ValueError("truncated drawing file")
    try:
        n, m = map(int, lines[1].split())
    except ValueError as exc:
        raise ValueError(f"bad size line {lines[1]!r}") from exc
    body = [line for line in lines[2:] if line.strip()]
    if len(body) != n + m:
        raise ValueError(f"expected {n} point and {m} edge lines, got {len(body)}")
    positions = []
    for line in body[:n]:
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"bad point line {line!r}")
        xn, xd, yn, yd = map(int, parts)
        positions.append(Point(Fraction(xn, xd), Fraction(yn, yd)))
    edges = []
    degree = [0] * n
    for line in body[n:]:
        u, v = map(int, line.split())
        edges.append((u, v))
        degree[u] += 1
        degree[v] += 1
    degrees = set(degree)
    if len(degrees) != 1:
        raise ValueError(f"edge list is not regular, degrees {sorted(degrees)}")
    graph = RegularGraph(n, degrees.pop(), tuple(edges))
    return GeometricDrawing(graph, tuple(positions))


def save_drawing(drawing: GeometricDrawing, path, trailer: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(drawing_to_text(drawing, trailer))


def load_drawing(path) -> GeometricDrawing:
    with open(path, "r", encoding="utf-8") as handle:
        return drawing_from_text(handle.read())


def crossing_total(positions: Sequence[tuple[int, int]], edges: Sequence[Edge]) -> int:
    """Crossing total for integer positions already in general position.

    Lean companion to count_crossings_geometric for hot loops: it caches,
    per edge, the side every vertex falls on, turning each pair test into
    table lookups.  Exact (arbitrary-precision int arithmetic), but it must
    only be fed general-position integer coordinates.
    """
    m = len(edges)
    side = []
    for u, v in edges:
        ux, uy = positions[u]
        vx, vy = positions[v]
        dx = vx - ux
        dy = vy - uy
        side.append(
            [1 if dx * (py - uy) - dy * (px - ux) > 0 else -1 for px, py in positions]
        )
    total = 0
    for i in range(m):
        a, b = edges[i]
        row = side[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if c == a or c == b or d == a or d == b:
                continue
            if row[c] != row[d]:
                other = side[j]
                if other[a] != other[b]:
                    total += 1
    return total
