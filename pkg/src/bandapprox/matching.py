"""Auxiliary vertex-position bipartite graph and its matching engine.

A perfect matching between the n graph vertices and the n layout positions,
with vertex v connectable only to positions inside its box interval, is
exactly a feasible box-respecting layout.  The engine is Hopcroft-Karp
(O(sqrt(V) * E)), deterministic for a fixed input ordering.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass

from .boxes import BoxConfig, IntervalTable
from .graph import Graph
from .oracle import Layout


@dataclass(frozen=True)
class AuxGraph:
    """Left side: graph vertices 0..n-1; right side: positions 1..n.

    ``adj[v]`` lists v's admissible positions ascending; a vertex with an
    infeasible (empty) interval is isolated.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Matching:
    """Vertex-position pairs, each side used at most once, sorted by vertex."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def is_perfect(self, n: int) -> bool:
        return len(self.pairs) == n


def build_auxiliary(table: IntervalTable, cfg: BoxConfig) -> AuxGraph:
    """Connect each vertex to every position of every box in its interval."""
    rows: list[tuple[int, ...]] = []
    for v in range(cfg.n):
        iv = table.intervals[v]
        if iv is None:
            rows.append(())
            continue
        lo, hi = iv
        start = (lo - 1) * cfg.boxsize + 1
        stop = min(hi * cfg.boxsize, cfg.n)
        rows.append(tuple(range(start, stop + 1)))
    return AuxGraph(n=cfg.n, adj=tuple(rows))


def max_matching(aux: AuxGraph) -> Matching:
    """Maximum-cardinality matching via Hopcroft-Karp."""
    n = aux.n
    adj = aux.adj
    INF = n + 1
    match_v = [0] * n  # vertex -> position, 0 = free
    match_p = [-1] * (n + 1)  # position -> vertex, -1 = free
    dist = [INF] * n
    dist_nil = INF

    if n > 0:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    def bfs() -> bool:
        nonlocal dist_nil
        dist_nil = INF
        q: deque[int] = deque()
        for v in range(n):
            if match_v[v] == 0:
                dist[v] = 0
                q.append(v)
            else:
                dist[v] = INF
        while q:
            v = q.popleft()
            if dist[v] >= dist_nil:
                continue
            for p in adj[v]:
                w = match_p[p]
                if w == -1:
                    if dist_nil == INF:
                        dist_nil = dist[v] + 1
                elif dist[w] == INF:
                    dist[w] = dist[v] + 1
                    q.append(w)
        return dist_nil != INF

    def dfs(v: int) -> bool:
        for p in adj[v]:
            w = match_p[p]
            if w == -1:
                if dist[v] + 1 == dist_nil:
                    match_v[v] = p
                    match_p[p] = v
                    return True
            elif dist[w] == dist[v] + 1 and dfs(w):
                match_v[v] = p
                match_p[p] = v
                return True
        dist[v] = INF
        return False

    while bfs():
        for v in range(n):
            if match_v[v] == 0 and dist[v] == 0:
                dfs(v)

    pairs = tuple((v, match_v[v]) for v in range(n) if match_v[v])
    return Matching(pairs=pairs)


def matching_to_layout(m: Matching, cfg: BoxConfig) -> Layout:
    """Read a perfect matching off as a layout: f(v) = matched position."""
    if not m.is_perfect(cfg.n):
        raise ValueError(f"matching has size {m.size}, need a perfect one ({cfg.n})")
    pos = [0] * cfg.n
    for v, p in m.pairs:
        pos[v] = p
    return Layout(tuple(pos))


def normalize_matching(m: Matching, cfg: BoxConfig) -> Matching:
    """Within each box, hand positions to matched vertices in ascending id
    order.  Box membership (hence interval validity) is preserved; the point
    is a canonical layout independent of the augmenting-path history."""
    if not m.is_perfect(cfg.n):
        raise ValueError("only perfect matchings are normalized")
    by_box: dict[int, list[int]] = {}
    for v, p in m.pairs:
        by_box.setdefault(cfg.box_of(p), []).append(v)
    pairs = []
    for box, members in by_box.items():
        for v, p in zip(sorted(members), cfg.positions(box)):
            pairs.append((v, p))
    return Matching(pairs=tuple(sorted(pairs)))


def box_gap_violations(
    g: Graph, layout: Layout, table: IntervalTable, cfg: BoxConfig
) -> list[tuple[int, int, int, int]]:
    """Edges whose box gap exceeds the window case analysis.

    With the three-hop tightening on, an edge (u, v) whose designated roots
    sit gamma boxes apart can span at most 7 - gamma boxes for
    1 <= gamma <= 5 and at most 5 boxes for gamma = 0.  Returns offending
    ``(u, v, gap, gamma)`` tuples; empty on every layout the two-hop
    pipeline emits.
    """
    if table.near_window != 2 or table.far_window is None:
        raise ValueError("gap analysis applies to two-hop tables with the "
                         "three-hop tightening enabled")
    boxes = table.placement.as_mapping()
    root_set = set(table.roots)
    designated = [
        v if v in root_set else min(table.near[v]) for v in range(g.n)
    ]
    out = []
    for u, v in g.edges:
        gap = abs(cfg.box_of(layout.pos[u]) - cfg.box_of(layout.pos[v]))
        gamma = abs(boxes[designated[u]] - boxes[designated[v]])
        bound = 5 if gamma == 0 else 7 - gamma
        if gamma > 5 or gap > bound:
            out.append((u, v, gap, gamma))
    return out


def approx_bandwidth_alg1(
    g: Graph,
    params=None,
    seed: int = 0,
    *,
    use_3hop: bool = True,
    narrow_range: bool = False,
    max_tries: int = 50,
    record_trace: bool = False,
):
    """Approximate bandwidth via placement enumeration + perfect matching.

    Scans box sizes ascending; for each, enumerates root placements, builds
    the auxiliary graph, and returns the first perfect matching as a layout
    together with the winning box size and run statistics.
    """
    from .search import run_search

    return run_search(
        g,
        params,
        seed,
        backend="matching",
        hop_radius=2,
        use_3hop=use_3hop,
        narrow_range=narrow_range,
        max_tries=max_tries,
        record_trace=record_trace,
        label="alg1",
    )


def approx_bandwidth_baseline(
    g: Graph,
    params=None,
    seed: int = 0,
    *,
    narrow_range: bool = False,
    max_tries: int = 50,
    record_trace: bool = False,
):
    """Comparison mode: one-hop dominating roots with +/-1 windows feeding
    the same matching back end."""
    from .search import run_search

    return run_search(
        g,
        params,
        seed,
        backend="matching",
        hop_radius=1,
        use_3hop=False,
        narrow_range=narrow_range,
        max_tries=max_tries,
        record_trace=record_trace,
        label="baseline",
    )
