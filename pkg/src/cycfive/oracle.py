"""Brute-force reference implementations.

Nothing here calls into the fast paths: girth, connectivity, cycle detection
and the three-vertex extension are all re-derived from the edge list so that
agreement between the two routes means something. Expect exponential time.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Any

from .errors import Disconnected, NotCubic, TooLarge
from .graph import CubicGraph, EdgeCut

EDGE_BUDGET = 40


@dataclass(frozen=True)
class OracleReport:
    subject: str
    oracle_value: Any
    fast_value: Any
    agree: bool
    elapsed: float = 0.0


def workers() -> int:
    """Worker processes allowed by ``CYCFIVE_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("CYCFIVE_THREADS", "1")))
    except ValueError:
        return 1


def _adjacency(n, pairs):
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(pairs):
        adj[u].append((v, i))
        if u != v:
            adj[v].append((u, i))
    return adj


def _cyclic_count(n, pairs, adj, removed) -> int:
    """Components of G - removed whose edge count reaches their vertex count."""
    label = [-1] * n
    nv, ne = [], []
    for s in range(n):
        if label[s] >= 0:
            continue
        c = len(nv)
        label[s] = c
        stack = [s]
        verts = 0
        while stack:
            v = stack.pop()
            verts += 1
            for w, i in adj[v]:
                if i not in removed and label[w] < 0:
                    label[w] = c
                    stack.append(w)
        nv.append(verts)
        ne.append(0)
    for i, (u, _) in enumerate(pairs):
        if i not in removed:
            ne[label[u]] += 1
    return sum(1 for c in range(len(nv)) if ne[c] >= nv[c])


def _connected(n, adj) -> bool:
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w, _ in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _girth(n, pairs) -> float:
    """For each edge uv: one plus the shortest u-v path avoiding that edge."""
    adj = _adjacency(n, pairs)
    best = float("inf")
    for i, (u, v) in enumerate(pairs):
        if u == v:
            return 1
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            nxt = []
            for a in frontier:
                for w, j in adj[a]:
                    if j != i and w not in dist:
                        dist[w] = dist[a] + 1
                        nxt.append(w)
            frontier = nxt
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


def _prepare(g: CubicGraph):
    if g.m > EDGE_BUDGET:
        raise TooLarge(f"{g.m} edges exceeds the oracle budget of {EDGE_BUDGET}")
    pairs = [e.ends for e in g.edges]
    adj = _adjacency(g.n, pairs)
    if not _connected(g.n, adj):
        raise Disconnected("graph is not connected")
    if any(len(adj[v]) + sum(1 for w, _ in adj[v] if w == v) != 3 for v in range(g.n)):
        raise NotCubic("graph is not cubic")
    return pairs, adj


def _scan(args):
    """All cycle-separating k-subsets whose smallest index is ``first``."""
    n, pairs, k, first, stop_early = args
    adj = _adjacency(n, pairs)
    hits = []
    for rest in combinations(range(first + 1, len(pairs)), k - 1):
        sub = (first,) + rest
        if _cyclic_count(n, pairs, adj, set(sub)) >= 2:
            hits.append(sub)
            if stop_early:
                break
    return hits


def _cuts_of_size(n, pairs, k, stop_early):
    tasks = [(n, pairs, k, first, stop_early) for first in range(len(pairs) - k + 1)]
    if workers() > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers()) as ex:
            results = list(ex.map(_scan, tasks))
    else:
        results = []
        for t in tasks:
            r = _scan(t)
            results.append(r)
            if stop_early and r:
                break
    hits = [h for r in results for h in r]
    return hits[:1] if stop_early else hits


def zeta_oracle(g: CubicGraph) -> int:
    """Exhaustive search over every edge subset of size 1..girth."""
    pairs, _ = _prepare(g)
    beta = len(pairs) - g.n + 1
    gi = _girth(g.n, pairs)
    limit = len(pairs) if gi == float("inf") else int(gi)
    for k in range(1, limit + 1):
        if _cuts_of_size(g.n, pairs, k, stop_early=True):
            return min(k, beta)
    return beta


def all_min_cuts(g: CubicGraph) -> list[EdgeCut]:
    """Every cycle-separating cut of minimum size, in lexicographic order."""
    pairs, _ = _prepare(g)
    gi = _girth(g.n, pairs)
    limit = len(pairs) if gi == float("inf") else int(gi)
    for k in range(1, limit + 1):
        hits = _cuts_of_size(g.n, pairs, k, stop_early=False)
        if hits:
            return [EdgeCut(g, tuple(g.edges[i] for i in h)) for h in hits]
    return []


def _part_graph(h) -> tuple[CubicGraph, list[int]]:
    graph = getattr(h, "graph", h)
    deficient = [v for v in range(graph.n) if graph.degree(v) == 2]
    return graph, deficient


def all_girth5_perms(h) -> list[tuple[int, ...]]:
    """Orderings of the degree-2 vertices whose three-vertex extension has girth >= 5."""
    graph, A = _part_graph(h)
    base = [e.ends for e in graph.edges]
    x, y, z = graph.n, graph.n + 1, graph.n + 2
    out = []
    for p in permutations(A):
        pairs = base + [(x, y), (y, z), (x, p[0]), (x, p[1]), (y, p[2]), (z, p[3]), (z, p[4])]
        if _girth(graph.n + 3, pairs) >= 5:
            out.append(p)
    return out


def timed(subject: str, oracle_fn, fast_fn, equal=None) -> OracleReport:
    t0 = time.perf_counter()
    o = oracle_fn()
    f = fast_fn()
    ok = equal(o, f) if equal else o == f
    return OracleReport(subject, o, f, bool(ok), time.perf_counter() - t0)
