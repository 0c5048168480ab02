"""Crossing-count maximization: exhaustive convex oracle and random probes.

The convex oracle exploits one symmetry collapse: maximizing over pairs
(graph isomorphism class, convex order) equals maximizing over all labeled
d-regular graphs under the fixed identity order, because relabeling the
graph and reordering polygon slots are the same operation.  The stream of
labeled graphs is split into independent shards by the edge set at vertex
0, searched depth-first with an optimistic crossing bound, and merged
deterministically.
"""

from __future__ import annotations

import multiprocessing
import os
import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import ResourceLimitError
from .formulas import best_known
from .geometry import GeometricDrawing, Point, crossing_total
from .graph import Edge, RegularGraph, feasible, shard_prefixes

SEARCH_CAP = 9
LONG_RUN_CAP = 10
CHECKPOINT_HEADER = "ckpt v1"

MODE_CONVEX = "convex-exhaustive"
MODE_PERTURBATION = "perturbation"

# Previously reported maximum crossing numbers for 4 <= n <= 10.  Values the
# formulas disagree with get flagged as discrepancies instead of silently
# overwritten; currently that happens only at (10, 6).
REFERENCE_VALUES: dict[tuple[int, int], int] = {
    (5, 2): 5, (6, 2): 7, (7, 2): 14, (8, 2): 18, (9, 2): 27, (10, 2): 32,
    (4, 3): 1, (6, 3): 15, (8, 3): 38, (10, 3): 70,
    (5, 4): 5, (6, 4): 15, (7, 4): 35, (8, 4): 52, (9, 4): 81, (10, 4): 105,
    (6, 5): 15, (8, 5): 70, (10, 5): 150,
    (7, 6): 35, (8, 6): 70, (9, 6): 126, (10, 6): 133,
    (8, 7): 70, (10, 7): 210,
    (9, 8): 126, (10, 8): 210,
    (10, 9): 210,
}


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one maximization run.

    witness is the lexicographically least labeled graph attaining
    max_crossings (under the identity convex order in convex mode, in its
    best sampled drawing in perturbation mode).  Everything except elapsed
    is deterministic for fixed arguments and seed.
    """

    n: int
    d: int
    max_crossings: int
    witness: RegularGraph
    graphs_examined: int
    elapsed: float
    mode: str


def _interleave_masks(n: int, edges: Sequence[Edge]) -> list[int]:
    """Bitmask per edge of the other edges it crosses in convex position.

    Chords {a,b} and {c,d} of the identity-order polygon cross iff their
    endpoint pairs interleave; pairs sharing a vertex never cross.
    """
    masks = [0] * len(edges)
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if c in (a, b) or d in (a, b):
                continue
            if (a < c < b) != (a < d < b):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _search_shard(
    n: int, d: int, prefix: tuple[Edge, ...], floor: int
) -> tuple[int, Optional[tuple[Edge, ...]], int]:
    """Depth-first search of one forced-prefix shard.

    Returns (best, witness edges or None, graphs examined).  The floor
    seeds pruning: branches whose optimistic completion cannot beat it are
    cut, while ties stay reachable, so the first graph attaining the final
    maximum in lexicographic stream order is always found.
    """
    all_edges = list(combinations(range(n), 2))
    edge_index = {e: i for i, e in enumerate(all_edges)}
    masks = _interleave_masks(n, all_edges)
    m = n * d // 2
    max_partners = m - 2 * d + 1

    remaining = [d] * n
    stack: list[Edge] = []
    stack_mask = 0
    current = 0
    for u, v in prefix:
        current += (masks[edge_index[(u, v)]] & stack_mask).bit_count()
        stack_mask |= 1 << edge_index[(u, v)]
        stack.append((u, v))
        remaining[u] -= 1
        remaining[v] -= 1

    best = floor
    witness: Optional[tuple[Edge, ...]] = None
    examined = 0

    def dfs(current: int, stack_mask: int) -> None:
        nonlocal best, witness, examined
        u = -1
        for v0 in range(n):
            if remaining[v0]:
                u = v0
                break
        if u < 0:
            examined += 1
            if current > best:
                best = current
                witness = tuple(stack)
            elif current == best and witness is None:
                witness = tuple(stack)
            return
        if current + (m - len(stack)) * max_partners < best:
            return
        lu, lw = stack[-1] if stack else (-1, -1)
        start = lw + 1 if lu == u else u + 1
        available = 0
        for w in range(start, n):
            if remaining[w]:
                available += 1
        if available < remaining[u]:
            return
        for w in range(start, n):
            if not remaining[w]:
                continue
            index = edge_index[(u, w)]
            gained = (masks[index] & stack_mask).bit_count()
            remaining[u] -= 1
            remaining[w] -= 1
            stack.append((u, w))
            dfs(current + gained, stack_mask | (1 << index))
            stack.pop()
            remaining[u] += 1
            remaining[w] += 1

    dfs(current, stack_mask)
    return best, witness, examined


def _shard_task(args: tuple[int, int, tuple[Edge, ...], int]):
    return _search_shard(*args)


def _checkpoint_path(directory: str, index: int) -> str:
    return os.path.join(directory, f"shard-{index}.ckpt")


def _edges_token(edges: Sequence[Edge]) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges) if edges else "-"


def _parse_edges_token(token: str) -> tuple[Edge, ...]:
    if token.strip() == "-":
        return ()
    edges = []
    for item in token.split():
        u, v = item.split("-")
        edges.append((int(u), int(v)))
    return tuple(edges)


def write_shard_checkpoint(
    path: str,
    n: int,
    d: int,
    index: int,
    prefix: tuple[Edge, ...],
    best: int,
    witness: Optional[tuple[Edge, ...]],
    examined: int,
) -> None:
    """Persist one finished shard in the ckpt v1 text format."""
    lines = [
        CHECKPOINT_HEADER,
        f"n {n}",
        f"d {d}",
        f"shard {index}",
        f"prefix {_edges_token(prefix)}",
        f"examined {examined}",
        f"best {best}",
        f"witness {_edges_token(witness) if witness is not None else '-'}",
    ]
    temporary = path + ".tmp"
    with open(temporary, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
    os.replace(temporary, path)


def load_shard_checkpoint(path: str) -> dict:
    """Parse a ckpt v1 file into a field dict; raises ValueError on damage."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    if not lines or lines[0] != CHECKPOINT_HEADER:
        raise ValueError(f"missing '{CHECKPOINT_HEADER}' header in {path}")
    fields: dict[str, str] = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        key, _, value = line.partition(" ")
        fields[key] = value
    try:
        return {
            "n": int(fields["n"]),
            "d": int(fields["d"]),
            "shard": int(fields["shard"]),
            "prefix": _parse_edges_token(fields["prefix"]),
            "examined": int(fields["examined"]),
            "best": int(fields["best"]),
            "witness": (
                None
                if fields["witness"].strip() == "-"
                else _parse_edges_token(fields["witness"])
            ),
        }
    except KeyError as exc:
        raise ValueError(f"checkpoint {path} is missing field {exc}") from exc


def convex_max(
    n: int,
    d: int,
    *,
    workers: int = 1,
    cap: int = SEARCH_CAP,
    long_run: bool = False,
    checkpoint_dir: str | None = None,
) -> SearchResult:
    """Maximum of crossings_convex over every labeled d-regular graph.

    Work splits into one shard per possible edge set at vertex 0; shards
    never share state, so results (witness and graphs_examined included)
    are identical for any worker count.  With checkpoint_dir set, finished
    shards are written as ckpt v1 files and skipped on resume.
    """
    effective_cap = max(cap, LONG_RUN_CAP) if long_run else cap
    if n > effective_cap:
        raise ResourceLimitError(
            f"n={n} exceeds search cap {effective_cap}"
            + ("" if long_run else " (long-run mode raises the cap to 10)")
        )
    if not feasible(n, d):
        raise ValueError(f"no d-regular graph exists for n={n}, d={d}")
    started = time.perf_counter()
    floor = best_known(n, d).lower
    prefixes = shard_prefixes(n, d)
    results: dict[int, tuple[int, Optional[tuple[Edge, ...]], int]] = {}

    if checkpoint_dir is not None:
        os.makedirs(checkpoint_dir, exist_ok=True)
        for index, prefix in enumerate(prefixes):
            path = _checkpoint_path(checkpoint_dir, index)
            if not os.path.exists(path):
                continue
            data = load_shard_checkpoint(path)
            if (data["n"], data["d"], data["prefix"]) != (n, d, prefix):
                raise ValueError(f"checkpoint {path} belongs to a different run")
            results[index] = (data["best"], data["witness"], data["examined"])

    pending = [i for i in range(len(prefixes)) if i not in results]
    tasks = [(n, d, prefixes[i], floor) for i in pending]
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            computed = pool.map(_shard_task, tasks, chunksize=1)
    else:
        computed = [_search_shard(*task) for task in tasks]
    for index, outcome in zip(pending, computed):
        results[index] = outcome
        if checkpoint_dir is not None:
            best, witness, examined = outcome
            write_shard_checkpoint(
                _checkpoint_path(checkpoint_dir, index),
                n, d, index, prefixes[index], best, witness, examined,
            )

    best_value = None
    best_witness: Optional[tuple[Edge, ...]] = None
    examined_total = 0
    for index in range(len(prefixes)):
        shard_best, shard_witness, shard_examined = results[index]
        examined_total += shard_examined
        if shard_witness is None:
            continue
        if best_value is None or shard_best > best_value:
            best_value = shard_best
            best_witness = shard_witness
    if best_value is None or best_witness is None:
        raise AssertionError("seeded lower bound was never attained")
    return SearchResult(
        n=n,
        d=d,
        max_crossings=best_value,
        witness=RegularGraph(n, d, best_witness),
        graphs_examined=examined_total,
        elapsed=time.perf_counter() - started,
        mode=MODE_CONVEX,
    )


def sample_regular_graph(n: int, d: int, rng: random.Random) -> RegularGraph:
    """Random labeled d-regular graph via stub pairing with rejection.

    Dense degrees are sampled through the complement, which keeps the
    rejection rate of the pairing model tame for every feasible pair.
    """
    if not feasible(n, d):
        raise ValueError(f"no d-regular graph exists for n={n}, d={d}")
    if d == n - 1:
        return RegularGraph(
            n, d, tuple((u, v) for u in range(n) for v in range(u + 1, n))
        )
    if n - 1 - d < d:
        return _sample_by_pairing(n, n - 1 - d, rng).complement()
    return _sample_by_pairing(n, d, rng)


def _sample_by_pairing(n: int, d: int, rng: random.Random) -> RegularGraph:
    stubs = [v for v in range(n) for _ in range(d)]
    while True:
        rng.shuffle(stubs)
        edges: set[Edge] = set()
        simple = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                simple = False
                break
            edge = (u, v) if u < v else (v, u)
            if edge in edges:
                simple = False
                break
            edges.add(edge)
        if simple:
            return RegularGraph(n, d, tuple(sorted(edges)))


COORDINATE_SPAN_FACTOR = 4


def sample_positions(n: int, rng: random.Random) -> tuple[tuple[int, int], ...]:
    """Integer points uniform in [0, 4n^2]^2, resampled to general position."""
    span = COORDINATE_SPAN_FACTOR * n * n
    while True:
        pts = [(rng.randint(0, span), rng.randint(0, span)) for _ in range(n)]
        if _general_position(pts):
            return tuple(pts)


def _general_position(pts: list[tuple[int, int]]) -> bool:
    n = len(pts)
    if len(set(pts)) != n:
        return False
    for i in range(n):
        ax, ay = pts[i]
        for j in range(i + 1, n):
            bx, by = pts[j]
            dx, dy = bx - ax, by - ay
            for k in range(j + 1, n):
                cx, cy = pts[k]
                if dx * (cy - ay) == dy * (cx - ax):
                    return False
    return True


def sample_drawing(graph: RegularGraph, rng: random.Random) -> GeometricDrawing:
    """Random general-position drawing of a graph with integer coordinates."""
    pts = sample_positions(graph.n, rng)
    return GeometricDrawing(graph, tuple(Point(x, y) for x, y in pts))


def perturbation_probe(n: int, d: int, trials: int, seed: int) -> SearchResult:
    """Best crossing count over random drawings of random regular graphs.

    A falsification probe, not a proof: placements are unconstrained (in
    particular non-convex), so any trial beating the convex oracle would
    refute the convex-position conjecture.  Deterministic for fixed seed.
    """
    if not feasible(n, d):
        raise ValueError(f"no d-regular graph exists for n={n}, d={d}")
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    started = time.perf_counter()
    rng = random.Random(seed)
    best = -1
    witness: RegularGraph | None = None
    for _ in range(trials):
        graph = sample_regular_graph(n, d, rng)
        pts = sample_positions(n, rng)
        total = crossing_total(pts, graph.edges)
        if total > best:
            best = total
            witness = graph
    assert witness is not None
    return SearchResult(
        n=n,
        d=d,
        max_crossings=best,
        witness=witness,
        graphs_examined=trials,
        elapsed=time.perf_counter() - started,
        mode=MODE_PERTURBATION,
    )


@dataclass(frozen=True)
class TableEntry:
    """One cell of the reproduced value table.

    value is the best known (proven or conjectured) crossing number;
    reference the previously reported value when one exists.  status is
    proven, conjectured, or discrepancy (value and reference disagree).
    search_value is the convex oracle's confirmation when it was run.
    """

    n: int
    d: int
    value: int
    status: str
    reference: Optional[int]
    search_value: Optional[int]


TABLE_SEARCH_CAP = 8


def reproduce_table(
    max_n: int, *, convex_cap: int = TABLE_SEARCH_CAP, workers: int = 1
) -> list[TableEntry]:
    """Best-known values for every feasible (n, d) with 4 <= n <= max_n.

    Cells whose closed-form value contradicts the bundled reference value
    are flagged as discrepancies; with the current formulas that flags
    exactly (10, 6), where the construction gives 173 against the reported
    133.  Cells with n <= convex_cap additionally run the convex oracle;
    the default cap keeps the whole table under a second.
    """
    if not 4 <= max_n <= 10:
        raise ValueError(f"need 4 <= max_n <= 10, got {max_n}")
    entries = []
    for n in range(4, max_n + 1):
        for d in range(2, n):
            if n * d % 2:
                continue
            report = best_known(n, d)
            value = report.lower
            status = "proven" if report.exact else "conjectured"
            reference = REFERENCE_VALUES.get((n, d))
            if reference is not None and reference != value:
                status = "discrepancy"
            search_value = None
            if n <= convex_cap:
                search_value = convex_max(n, d, workers=workers).max_crossings
            entries.append(TableEntry(n, d, value, status, reference, search_value))
    return entries
