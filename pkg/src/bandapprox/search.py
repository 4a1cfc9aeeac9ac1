"""Shared scan over box sizes and root placements driving both back ends.

One driver owns the whole pipeline: measure density, size and certify the
root sample, run one BFS per root, then walk (boxsize, placement)
configurations until a back end reports feasibility.  The matching back
end rebuilds the interval table per placement and runs Hopcroft-Karp; the
flow back end updates the table in place and solves the compressed flow
instance.  Both return the first success in the same deterministic order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

from .boxes import (
    BoxConfig,
    build_intervals,
    enumerate_placements,
    make_box_config,
    root_distances,
    update_intervals,
)
from .domset import SamplingParams, k_size, kprime_size, sample_certified
from .flow import build_flow_instance, count_intervals, flow_to_layout, max_flow
from .graph import Graph, density
from .matching import build_auxiliary, matching_to_layout, max_matching, normalize_matching
from .oracle import Layout, degree_lower_bound
from .util import ceil_snapped


class InfeasibleError(RuntimeError):
    """No (boxsize, placement) configuration admitted a complete assignment."""

    def __init__(self, message: str, stats: "SearchStats | None" = None) -> None:
        super().__init__(message)
        self.stats = stats


@dataclass
class SearchStats:
    """Counters and phase timings for one pipeline run.

    Everything except the ``time_*`` fields is deterministic for a fixed
    seed, which is what report byte-identity tests rely on.
    """

    algorithm: str
    seed: int
    n: int
    delta: float
    alpha: float
    c: float
    hop_radius: int
    use_3hop: bool
    search_mode: str
    root_count: int = 0
    certify_attempts: int = 0
    boxsizes_tried: int = 0
    configs_tried: int = 0
    empty_interval_configs: int = 0
    max_interval_keys: int = 0
    max_flow_nodes: int = 0
    linear_boxsize: int | None = None
    binary_agrees_linear: bool | None = None
    trace: list | None = None
    time_certify: float = 0.0
    time_bfs: float = 0.0
    time_scan: float = 0.0
    time_total: float = 0.0


def run_search(
    g: Graph,
    params: SamplingParams | None,
    seed: int,
    *,
    backend: str,
    hop_radius: int,
    use_3hop: bool,
    search: str = "linear",
    verify_monotone: bool = False,
    narrow_range: bool = False,
    max_tries: int = 50,
    record_trace: bool = False,
    label: str = "",
) -> tuple[Layout, int, SearchStats]:
    if backend not in ("matching", "flow"):
        raise ValueError(f"unknown backend {backend!r}")
    if search not in ("linear", "binary"):
        raise ValueError(f"unknown search mode {search!r}")
    if search == "binary" and backend != "flow":
        raise ValueError("binary box-size search is only wired to the flow back end")

    t_start = time.perf_counter()
    if params is None:
        params = SamplingParams()
    n = g.n
    delta = params.delta_at(n) if params.delta is not None else float(density(g))
    if delta <= 0.0:
        raise ValueError("graph has an isolated vertex (density 0); dense input required")

    sized = replace(params, delta=delta)
    size = kprime_size(n, sized) if hop_radius == 2 else k_size(n, sized)
    size = min(size, n)

    stats = SearchStats(
        algorithm=label or backend,
        seed=seed,
        n=n,
        delta=delta,
        alpha=params.alpha,
        c=params.c,
        hop_radius=hop_radius,
        use_3hop=use_3hop,
        search_mode=search,
    )
    if record_trace:
        stats.trace = []

    t0 = time.perf_counter()
    rs = sample_certified(g, size, seed, hop_radius=hop_radius, max_tries=max_tries)
    stats.time_certify = time.perf_counter() - t0
    stats.root_count = len(rs.roots)
    stats.certify_attempts = rs.attempts or 0

    t0 = time.perf_counter()
    dists = root_distances(g, rs)
    stats.time_bfs = time.perf_counter() - t0

    if narrow_range:
        start = max(1, ceil_snapped(delta * n))
        stop = n // 2
    else:
        start = max(degree_lower_bound(g), 1)
        stop = n

    t0 = time.perf_counter()
    if search == "linear":
        result = _linear_scan(g, rs, dists, start, stop, backend, use_3hop, stats)
    else:
        result = _binary_scan(
            g, rs, dists, start, stop, backend, use_3hop, stats, verify_monotone
        )
    stats.time_scan = time.perf_counter() - t0
    stats.time_total = time.perf_counter() - t_start

    if result is None:
        raise InfeasibleError(
            f"no feasible configuration for box sizes {start}..{stop}", stats
        )
    layout, boxsize = result
    return layout, boxsize, stats


def _linear_scan(g, rs, dists, start, stop, backend, use_3hop, stats):
    for boxsize in range(start, stop + 1):
        layout = _scan_boxsize(g, rs, dists, boxsize, backend, use_3hop, stats)
        if layout is not None:
            return layout, boxsize
    return None


def _binary_scan(g, rs, dists, start, stop, backend, use_3hop, stats, verify_monotone):
    """Bisect the box size assuming feasibility is monotone in it.

    That assumption is unproven, so a failed final probe falls back to
    scanning upward; with ``verify_monotone`` the linear answer is computed
    too and the agreement recorded.
    """
    result = None
    lo, hi = start, stop
    if lo > hi:
        return None
    best: tuple | None = None
    while lo < hi:
        mid = (lo + hi) // 2
        layout = _scan_boxsize(g, rs, dists, mid, backend, use_3hop, stats)
        if layout is not None:
            best = (layout, mid)
            hi = mid
        else:
            lo = mid + 1
    if best is not None and best[1] == lo:
        result = best
    else:
        layout = _scan_boxsize(g, rs, dists, lo, backend, use_3hop, stats)
        if layout is not None:
            result = (layout, lo)
        else:
            for boxsize in range(lo + 1, stop + 1):
                layout = _scan_boxsize(g, rs, dists, boxsize, backend, use_3hop, stats)
                if layout is not None:
                    result = (layout, boxsize)
                    break
            if result is None:
                result = best

    if verify_monotone and result is not None:
        linear = _linear_scan(g, rs, dists, start, stop, backend, use_3hop, stats)
        stats.linear_boxsize = linear[1] if linear is not None else None
        stats.binary_agrees_linear = (
            linear is not None and linear[1] == result[1]
        )
    return result


def _scan_boxsize(g, rs, dists, boxsize, backend, use_3hop, stats):
    cfg = make_box_config(g.n, boxsize)
    stats.boxsizes_tried += 1
    table = None
    prev = None
    for rp in enumerate_placements(rs, cfg):
        if backend == "flow" and table is not None:
            table = update_intervals(table, prev, rp)
        else:
            table = build_intervals(g, rs, rp, cfg, dists, use_3hop=use_3hop)
        prev = rp
        layout = _try_config(table, cfg, backend, stats)
        if layout is not None:
            return layout
    return None


def _try_config(table, cfg: BoxConfig, backend: str, stats: SearchStats):
    stats.configs_tried += 1
    layout = None
    if backend == "matching":
        aux = build_auxiliary(table, cfg)
        m = max_matching(aux)
        feasible = m.is_perfect(cfg.n)
        if feasible:
            layout = matching_to_layout(normalize_matching(m, cfg), cfg)
    else:
        counts = count_intervals(table)
        if counts is None:
            stats.empty_interval_configs += 1
            feasible = False
        else:
            stats.max_interval_keys = max(stats.max_interval_keys, len(counts.counts))
            inst = build_flow_instance(counts, cfg)
            stats.max_flow_nodes = max(stats.max_flow_nodes, inst.node_count)
            res = max_flow(inst)
            feasible = res.value == cfg.n
            if feasible:
                layout = flow_to_layout(res, table, cfg)
    if stats.trace is not None:
        stats.trace.append((cfg.boxsize, table.placement.boxes, feasible))
    return layout
