"""Cycle-separating edge cuts and cyclic edge-connectivity.

Minimum cuts are found by exhaustive search over edge sets of increasing
size. Only independent edge sets (matchings) are generated: in a cubic graph
a cycle-separating cut with two edges at a common vertex can be shrunk by
moving that vertex across, so every minimum cut is a matching. The oracle
module checks the result against an unpruned search.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import Disconnected, NotCubic, NotMinimumCut, PreconditionViolated
from .graph import (
    CubicGraph,
    EdgeCut,
    boundary,
    bridges_and_blocks,
    components,
    cycle_rank,
    has_cycle,
    induced,
    is_connected,
    is_two_connected,
    remove_edges,
)


@dataclass(frozen=True)
class CutSearchResult:
    zeta: int
    witness: Optional[EdgeCut] = None
    fragments: Optional[tuple[frozenset, frozenset]] = None


class SixPoleTag(str, enum.Enum):
    ACYCLIC = "acyclic"
    BRIDGED_APEX = "bridged_apex"
    TWO_CONNECTED = "two_connected"


@dataclass(frozen=True)
class SixPoleClass:
    tag: SixPoleTag
    apex: Optional[int] = None
    fragment: Optional[frozenset] = None


def _cyclic_components(n: int, eu: list, ev: list, removed: set) -> int:
    """Number of components of the graph minus ``removed`` that contain a cycle."""
    parent = list(range(n))
    cyclic = [False] * n

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(eu)):
        if i in removed:
            continue
        a, b = find(eu[i]), find(ev[i])
        if a == b:
            cyclic[a] = True
        else:
            parent[a] = b
            cyclic[b] = cyclic[b] or cyclic[a]
    return sum(1 for v in range(n) if parent[v] == v and cyclic[v])


def is_cycle_separating(g: CubicGraph, s: Iterable) -> bool:
    cut = s if isinstance(s, EdgeCut) else EdgeCut(g, tuple(s))
    rest = remove_edges(g, cut.edges)
    cyclic = 0
    for comp in components(rest):
        sub, _ = induced(rest, comp)
        cyclic += has_cycle(sub)
    return cyclic >= 2


def _matchings(g: CubicGraph, k: int) -> Iterator[tuple[int, ...]]:
    """Index tuples of k pairwise non-adjacent, non-loop edges, lexicographically."""
    edges = g.edges
    m = len(edges)
    chosen: list[int] = []
    used: set[int] = set()

    def rec(start: int):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, m - (k - len(chosen)) + 1):
            e = edges[i]
            if e.is_loop() or e.u in used or e.v in used:
                continue
            chosen.append(i)
            used.update(e.ends)
            yield from rec(i + 1)
            chosen.pop()
            used.difference_update(e.ends)

    yield from rec(0)


def _require_cubic_connected(g: CubicGraph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    if not g.is_cubic():
        raise NotCubic("graph is not cubic")


@lru_cache(maxsize=512)
def min_cycle_separating_cut(g: CubicGraph) -> CutSearchResult:
    _require_cubic_connected(g)
    beta = cycle_rank(g)
    eu = [e.u for e in g.edges]
    ev = [e.v for e in g.edges]
    for k in range(1, beta):
        for idx in _matchings(g, k):
            if _cyclic_components(g.n, eu, ev, set(idx)) >= 2:
                cut = EdgeCut(g, tuple(g.edges[i] for i in idx))
                return CutSearchResult(k, cut, _two_sides(g, cut))
    return CutSearchResult(beta)


def zeta(g: CubicGraph) -> int:
    return min_cycle_separating_cut(g).zeta


def _two_sides(g: CubicGraph, cut: EdgeCut) -> tuple[frozenset, frozenset]:
    comps = components(remove_edges(g, cut.edges))
    if len(comps) != 2:
        raise NotMinimumCut(f"cut leaves {len(comps)} components, expected 2")
    return comps[0], comps[1]


def fragments(g: CubicGraph, s: Iterable) -> tuple[frozenset, frozenset]:
    """The two cyclic parts left by a minimum cycle-separating cut."""
    cut = s if isinstance(s, EdgeCut) else EdgeCut(g, tuple(s))
    if not is_cycle_separating(g, cut):
        raise NotMinimumCut("cut is not cycle-separating")
    z = zeta(g)
    if len(cut) != z:
        raise NotMinimumCut(f"cut has {len(cut)} edges but zeta is {z}")
    return _two_sides(g, cut)


def classify_subgraph(sub: CubicGraph, outside: list[int]) -> SixPoleClass:
    """Sort a connected subgraph into the three six-pole shapes.

    ``outside[v]`` is the number of boundary edges at ``v``. Vertex labels in
    the result are those of ``sub``. Raises ``PreconditionViolated`` when no
    shape fits, which cannot happen inside a cyclically 5-connected host.
    """
    if not has_cycle(sub):
        return SixPoleClass(SixPoleTag.ACYCLIC)
    blocks = bridges_and_blocks(sub)
    if blocks.is_two_connected:
        if all(c <= 1 for c in outside):
            return SixPoleClass(SixPoleTag.TWO_CONNECTED)
        raise PreconditionViolated("2-connected subgraph with adjacent boundary edges")
    if len(blocks.bridges) == 1:
        e = blocks.bridges[0]
        for apex in e.ends:
            if outside[apex] == 2 and sub.degree(apex) == 1:
                rest = frozenset(range(sub.n)) - {apex}
                rest_graph, _ = induced(sub, rest)
                if is_two_connected(rest_graph):
                    return SixPoleClass(SixPoleTag.BRIDGED_APEX, apex, rest)
    raise PreconditionViolated(
        f"cyclic subgraph with {len(blocks.bridges)} bridges fits no six-pole shape"
    )


def classify_six_pole(g: CubicGraph, xs: Iterable[int]) -> SixPoleClass:
    xs = frozenset(xs)
    if zeta(g) < 5:
        raise PreconditionViolated("host is not cyclically 5-connected")
    if len(boundary(g, xs)) != 6:
        raise PreconditionViolated("boundary does not have six edges")
    sub, order = induced(g, xs)
    if not is_connected(sub):
        raise PreconditionViolated("induced subgraph is disconnected")
    cls = classify_subgraph(sub, [3 - sub.degree(v) for v in range(sub.n)])
    if cls.tag is SixPoleTag.BRIDGED_APEX:
        return SixPoleClass(cls.tag, order[cls.apex], frozenset(order[v] for v in cls.fragment))
    return cls
