"""Labeled regular graphs: construction, enumeration, serialization.

Vertices are integers 0..n-1.  Edges are pairs (u, v) with u < v, and every
edge list is kept sorted lexicographically, so two graphs are equal exactly
when their dataclass fields are equal.  Disconnected graphs are first-class
citizens; the degree-2 extremal examples are disjoint unions of cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import ResourceLimitError

Edge = tuple[int, int]

ENUMERATION_CAP = 10
GRAPH_FORMAT_HEADER = "regular-graph v1"


def feasible(n: int, d: int) -> bool:
    """True when an n-vertex d-regular graph exists, i.e. n*d is even.

    The degree range of interest is 2 <= d <= n-1; anything outside it is
    rejected as an argument error rather than reported as infeasible.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got n={n}")
    if not 2 <= d <= n - 1:
        raise ValueError(f"need 2 <= d <= n-1, got d={d} for n={n}")
    return n * d % 2 == 0


@dataclass(frozen=True)
class RegularGraph:
    """An immutable labeled d-regular graph on vertices 0..n-1."""

    n: int
    d: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"need n >= 3, got n={self.n}")
        # d = 1 is admitted so diagonal classes such as the long diagonals
        # of an even polygon can be represented; most operations demand d >= 2.
        if not 1 <= self.d <= self.n - 1:
            raise ValueError(f"degree {self.d} out of range for n={self.n}")
        if self.n * self.d % 2:
            raise ValueError(f"infeasible pair n={self.n}, d={self.d}")
        if len(self.edges) != self.n * self.d // 2:
            raise ValueError(
                f"expected {self.n * self.d // 2} edges, got {len(self.edges)}"
            )
        degree = [0] * self.n
        previous = None
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"bad edge ({u}, {v})")
            if previous is not None and (u, v) <= previous:
                raise ValueError("edges must be strictly increasing")
            previous = (u, v)
            degree[u] += 1
            degree[v] += 1
        bad = [v for v in range(self.n) if degree[v] != self.d]
        if bad:
            raise ValueError(f"vertices {bad} do not have degree {self.d}")

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuple per vertex."""
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    def complement(self) -> "RegularGraph":
        """The complement graph, which is (n-1-d)-regular."""
        present = set(self.edges)
        edges = tuple(
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if (u, v) not in present
        )
        return RegularGraph(self.n, self.n - 1 - self.d, edges)


def make_graph(n: int, d: int, edges: Iterable[Edge]) -> RegularGraph:
    """Build a RegularGraph from any edge iterable, normalizing order."""
    normalized = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
    return RegularGraph(n, d, normalized)


def make_cycle(n: int) -> RegularGraph:
    """The cycle 0-1-..-(n-1)-0."""
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return make_graph(n, 2, edges)


def make_complete(n: int) -> RegularGraph:
    return make_graph(n, n - 1, combinations(range(n), 2))


def make_circulant(n: int, offsets: Iterable[int]) -> RegularGraph:
    """Circulant graph: i is joined to i+s (mod n) for each offset s.

    Offsets are cyclic lengths, 1 <= s <= n//2.  Each offset below n/2
    contributes 2 to the degree; the offset n/2 of an even n contributes 1
    (the long diagonals form a perfect matching, degree 1 on its own).
    """
    offset_set = sorted(set(offsets))
    if not offset_set:
        raise ValueError("need at least one offset")
    if offset_set[0] < 1 or offset_set[-1] > n // 2:
        raise ValueError(f"offsets must lie in 1..{n // 2}, got {offset_set}")
    edges = set()
    degree = 0
    for s in offset_set:
        degree += 1 if 2 * s == n else 2
        for i in range(n):
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return make_graph(n, degree, edges)


def connected_components(graph: RegularGraph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, smallest first."""
    seen = [False] * graph.n
    components = []
    for start in range(graph.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        component = []
        while stack:
            v = stack.pop()
            component.append(v)
            for w in graph.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(component))
    return components


def shard_prefixes(n: int, d: int) -> list[tuple[Edge, ...]]:
    """Disjoint forced-edge prefixes partitioning the enumeration stream.

    Every d-regular graph starts, in sorted edge order, with the d edges at
    vertex 0, so fixing that block yields C(n-1, d) disjoint sub-streams
    whose concatenation in prefix order reproduces the full lexicographic
    enumeration.
    """
    feasible(n, d)
    return [
        tuple((0, w) for w in combo) for combo in combinations(range(1, n), d)
    ]


def enumerate_labeled_regular(
    n: int,
    d: int,
    *,
    cap: int = ENUMERATION_CAP,
    prefix: tuple[Edge, ...] = (),
    connected_only: bool = False,
) -> Iterator[RegularGraph]:
    """Yield every labeled d-regular graph on n vertices, lexicographically.

    The stream order is the lexicographic order of sorted edge tuples; this
    is a contract other modules rely on (witness tie-breaking, sharding).
    A forced-edge prefix restricts the stream to graphs whose sorted edge
    list starts with exactly those edges.
    """
    if n > cap:
        raise ResourceLimitError(f"n={n} exceeds enumeration cap {cap}")
    if not feasible(n, d):
        return
    remaining = [d] * n
    last = (-1, -1)
    for u, v in prefix:
        if not 0 <= u < v < n:
            raise ValueError(f"bad prefix edge ({u}, {v})")
        if (u, v) <= last:
            raise ValueError("prefix edges must be strictly increasing")
        if remaining[u] == 0 or remaining[v] == 0:
            raise ValueError(f"prefix edge ({u}, {v}) oversaturates a vertex")
        remaining[u] -= 1
        remaining[v] -= 1
        last = (u, v)
    stack = list(prefix)

    def extend() -> Iterator[RegularGraph]:
        u = next((v for v in range(n) if remaining[v]), -1)
        if u == -1:
            graph = RegularGraph(n, d, tuple(stack))
            if not connected_only or len(connected_components(graph)) == 1:
                yield graph
            return
        lu, lw = stack[-1] if stack else (-1, -1)
        start = lw + 1 if lu == u else u + 1
        available = sum(1 for w in range(start, n) if remaining[w])
        if available < remaining[u]:
            return
        for w in range(start, n):
            if not remaining[w]:
                continue
            remaining[u] -= 1
            remaining[w] -= 1
            stack.append((u, w))
            yield from extend()
            stack.pop()
            remaining[u] += 1
            remaining[w] += 1

    yield from extend()


def graph_to_text(graph: RegularGraph) -> str:
    """Serialize in the regular-graph v1 format (UTF-8 text, LF endings)."""
    lines = [GRAPH_FORMAT_HEADER, f"{graph.n} {graph.d}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> RegularGraph:
    """Parse the regular-graph v1 format, validating every invariant."""
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    if not lines or lines[0] != GRAPH_FORMAT_HEADER:
        raise ValueError(f"missing '{GRAPH_FORMAT_HEADER}' header")
    if len(lines) < 2:
        raise ValueError("truncated graph file")
    try:
        n, d = map(int, lines[1].split())
    except ValueError as exc:
        raise ValueError(f"bad size line {lines[1]!r}") from exc
    body = [line for line in lines[2:] if line.strip()]
    expected = n * d // 2
    if len(body) != expected:
        raise ValueError(f"expected {expected} edge lines, got {len(body)}")
    edges = []
    for line in body:
        try:
            u, v = map(int, line.split())
        except ValueError as exc:
            raise ValueError(f"bad edge line {line!r}") from exc
        edges.append((u, v))
    return RegularGraph(n, d, tuple(edges))


def save_graph(graph: RegularGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(graph_to_text(graph))


def load_graph(path) -> RegularGraph:
    with open(path, "r", encoding="utf-8") as handle:
        return graph_from_text(handle.read())
