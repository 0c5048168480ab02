"""Endvertex-type statistics of general-position drawings.

At each endpoint of an edge, the edge's supporting line splits the other
d - 1 incident edges into two halfplanes; the endpoint's type is the
smaller count, between 0 and D = floor((d - 1)/2).  Types drive an exact
accounting of edge pairs that cannot cross, which is what turns crossing
maximization into counting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegeneracyError
from .geometry import (
    COLLINEAR,
    GeometricDrawing,
    count_crossings_geometric,
    orientation,
    validate_general_position,
)
from .graph import Edge


@dataclass(frozen=True)
class TypeProfile:
    """Aggregated type statistics of one drawing of a d-regular graph.

    endpoint_counts[i] is the number of edge endpoints of type i (summing
    to n*d).  edge_counts[(i, j)], i <= j, counts edges whose endpoint
    types normalize to (i, j).  accounting is the guaranteed non-crossing
    pair total: sum of (i*(d-j-1) + j*(d-i-1)) * edge_counts[(i, j)].
    vertex_profiles[v] is the sorted tuple of the d types at vertex v, and
    groups counts vertices per (minimum type, full sorted signature).
    """

    max_type: int
    endpoint_counts: tuple[int, ...]
    edge_counts: dict[tuple[int, int], int]
    accounting: int
    vertex_profiles: tuple[tuple[int, ...], ...]
    groups: dict[tuple[int, tuple[int, ...]], int]


def endvertex_type(drawing: GeometricDrawing, edge: Edge, endpoint: int) -> int:
    """Type of `endpoint` on `edge`: min over the two halfplane counts.

    Requires general position, under which no other incident edge can be
    collinear with the edge's line.
    """
    u, v = edge
    if endpoint == u:
        other = v
    elif endpoint == v:
        other = u
    else:
        raise ValueError(f"vertex {endpoint} is not an endpoint of {edge}")
    pos = drawing.positions
    left = right = 0
    for w in drawing.graph.adjacency[endpoint]:
        if w == other:
            continue
        side = orientation(pos[endpoint], pos[other], pos[w])
        if side == COLLINEAR:
            raise DegeneracyError(
                f"edge ({endpoint}, {w}) lies on the line of edge {edge}"
            )
        if side > 0:
            left += 1
        else:
            right += 1
    return min(left, right)


def type_profile(drawing: GeometricDrawing) -> TypeProfile:
    """Compute the full type statistics of a general-position drawing."""
    violation = validate_general_position(drawing)
    if violation is not None:
        raise DegeneracyError(f"vertices {violation} violate general position")
    graph = drawing.graph
    d = graph.d
    max_type = (d - 1) // 2
    endpoint_counts = [0] * (max_type + 1)
    edge_counts: dict[tuple[int, int], int] = {
        (i, j): 0 for i in range(max_type + 1) for j in range(i, max_type + 1)
    }
    per_vertex: list[list[int]] = [[] for _ in range(graph.n)]
    accounting = 0
    for edge in graph.edges:
        u, v = edge
        tu = endvertex_type(drawing, edge, u)
        tv = endvertex_type(drawing, edge, v)
        endpoint_counts[tu] += 1
        endpoint_counts[tv] += 1
        per_vertex[u].append(tu)
        per_vertex[v].append(tv)
        i, j = min(tu, tv), max(tu, tv)
        edge_counts[(i, j)] += 1
        accounting += i * (d - j - 1) + j * (d - i - 1)
    profiles = tuple(tuple(sorted(types)) for types in per_vertex)
    groups: dict[tuple[int, tuple[int, ...]], int] = {}
    for profile in profiles:
        key = (profile[0], profile)
        groups[key] = groups.get(key, 0) + 1
    return TypeProfile(
        max_type=max_type,
        endpoint_counts=tuple(endpoint_counts),
        edge_counts=edge_counts,
        accounting=accounting,
        vertex_profiles=profiles,
        groups=groups,
    )


def lemma_coverage_check(drawing: GeometricDrawing) -> tuple[int, int] | None:
    """Check type coverage at every vertex; None when it holds.

    At a vertex whose minimum type is s, every type in s..D must occur at
    least twice among the vertex's d endpoint types, except that the top
    type D only needs to occur once when d is odd.  Returns the first
    (vertex, missing type) counterexample otherwise.
    """
    profile = type_profile(drawing)
    d = drawing.graph.d
    max_type = profile.max_type
    for vertex, types in enumerate(profile.vertex_profiles):
        s = types[0]
        for i in range(s, max_type + 1):
            needed = 1 if (i == max_type and d % 2 == 1) else 2
            if types.count(i) < needed:
                return (vertex, i)
    return None


@dataclass(frozen=True)
class AccountingReport:
    """Measured versus guaranteed non-crossing pair counts of a drawing.

    noncrossing (N) is the measured count of non-adjacent edge pairs that
    do not cross, accounting (M) the type-derived total of guaranteed
    non-crossing incidences, pair_count (P) the number of non-adjacent
    pairs.  crossings = P - N always; N >= M/2 because each guaranteed
    pair is counted by at most two edges.
    """

    noncrossing: int
    accounting: int
    pair_count: int
    crossings: int

    @property
    def identity_holds(self) -> bool:
        return self.crossings == self.pair_count - self.noncrossing

    @property
    def accounting_bound_holds(self) -> bool:
        return 2 * self.noncrossing >= self.accounting


def noncrossing_accounting(drawing: GeometricDrawing) -> AccountingReport:
    """Measure N, M and P for one drawing (see AccountingReport)."""
    report = count_crossings_geometric(drawing)
    profile = type_profile(drawing)
    return AccountingReport(
        noncrossing=report.noncrossing,
        accounting=profile.accounting,
        pair_count=report.pair_count,
        crossings=report.total,
    )
