"""Graph builders and independent oracles shared across the test modules.

Every oracle here is deliberately naive (Floyd-Warshall, exhaustive
matching enumeration, cut enumeration) so that the fast implementations
are checked against something that cannot share their bugs.
"""

from __future__ import annotations

import random

from bandapprox.boxes import BoxConfig, IntervalTable, RootPlacement
from bandapprox.flow import FlowInstance
from bandapprox.graph import Graph, make_graph


def synthetic_table(intervals, cfg: BoxConfig, near_window=2, far_window=3) -> IntervalTable:
    """IntervalTable with given intervals and no dominator records; enough
    for auxiliary-graph building, counting, and conversion, none of which
    consult the records."""
    n = len(intervals)
    roots = tuple(
        v for v, iv in enumerate(intervals) if iv is not None and iv[0] == iv[1]
    )
    placement = RootPlacement(roots=roots, boxes=tuple(intervals[r][0] for r in roots))
    return IntervalTable(
        cfg=cfg,
        roots=roots,
        placement=placement,
        intervals=tuple(intervals),
        near=((),) * n,
        far=((),) * n,
        near_window=near_window,
        far_window=far_window,
    )


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def er_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return make_graph(n, edges)


def floyd_warshall_from_set(g: Graph, sources) -> list[int | None]:
    """All-pairs shortest paths, then min over the source set."""
    big = g.n + 10
    dist = [[big] * g.n for _ in range(g.n)]
    for v in range(g.n):
        dist[v][v] = 0
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(g.n):
        dk = dist[k]
        for i in range(g.n):
            dik = dist[i][k]
            if dik >= big:
                continue
            di = dist[i]
            for j in range(g.n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    out: list[int | None] = []
    for v in range(g.n):
        best = min(dist[s][v] for s in sources)
        out.append(None if best >= big else best)
    return out


def brute_force_matching_size(adj) -> int:
    """Maximum matching size by exhaustive search over left vertices.

    Memoized on the set of used right vertices, so it stays exact while
    handling sides of size 12; shares no structure with the
    augmenting-path engine it checks.
    """
    n = len(adj)
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def best(i: int, used_mask: int) -> int:
        if i == n:
            return 0
        result = best(i + 1, used_mask)  # leave vertex i unmatched
        for p in adj[i]:
            bit = 1 << p
            if not used_mask & bit:
                result = max(result, 1 + best(i + 1, used_mask | bit))
        return result

    return best(0, 0)


def min_cut_value(inst: FlowInstance) -> int:
    """Minimum s-t cut by enumerating all source-side subsets."""
    internal = [v for v in range(inst.node_count) if v not in (inst.source, inst.sink)]
    best = None
    for mask in range(1 << len(internal)):
        side = {inst.source}
        for i, node in enumerate(internal):
            if mask >> i & 1:
                side.add(node)
        cut = sum(c for u, v, c in inst.arcs if u in side and v not in side)
        if best is None or cut < best:
            best = cut
    assert best is not None
    return best
