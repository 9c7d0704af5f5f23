"""Small immutable multigraphs with maximum degree three.

Vertices are the integers ``0..n-1``. Edges are stored as a sorted tuple of
``Edge(u, v, slot)`` with ``u <= v``; ``slot`` numbers parallel copies of the
same pair so every edge has its own identity. A loop contributes 2 to the
degree of its vertex.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple

import networkx as nx

from .errors import (
    DegreeViolation,
    Disconnected,
    EmptyOrFullSet,
    MalformedInput,
    PreconditionViolated,
)

INF = math.inf


class Edge(NamedTuple):
    u: int
    v: int
    slot: int = 0

    @property
    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u

    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class CubicGraph:
    n: int
    edges: tuple[Edge, ...]
    _adj: tuple = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise MalformedInput("negative vertex count")
        deg = [0] * self.n
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            if not (0 <= e.u <= e.v < self.n):
                raise MalformedInput(f"edge {e.ends} out of range for n={self.n}")
            adj[e.u].append((e.v, i))
            if e.is_loop():
                deg[e.u] += 2
            else:
                adj[e.v].append((e.u, i))
                deg[e.u] += 1
                deg[e.v] += 1
        bad = [v for v in range(self.n) if deg[v] > 3]
        if bad:
            raise DegreeViolation(f"vertices {bad} have degree > 3")
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_deg", tuple(deg))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "CubicGraph":
        """Build from unordered pairs; repeated pairs become parallel edges."""
        norm = sorted((min(a, b), max(a, b)) for a, b in pairs)
        seen: Counter = Counter()
        edges = []
        for p in norm:
            edges.append(Edge(p[0], p[1], seen[p]))
            seen[p] += 1
        return cls(n, tuple(edges))

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self._deg)

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbour, edge index) pairs at ``v``. A loop appears once."""
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbours of ``v`` other than ``v`` itself, ascending."""
        return sorted({w for w, _ in self._adj[v] if w != v})

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for w, _ in self._adj[u] if w == v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def pairs(self) -> list[tuple[int, int]]:
        return [e.ends for e in self.edges]

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.pairs())
        return G


@dataclass(frozen=True)
class EdgeCut:
    """A set of edges of ``host``, kept sorted for deterministic output."""

    host: CubicGraph = field(repr=False)
    edges: tuple[Edge, ...]

    def __post_init__(self):
        known = set(self.host.edges)
        for e in self.edges:
            if e not in known:
                raise PreconditionViolated(f"{tuple(e)} is not an edge of the host")
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges))))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def is_independent(self) -> bool:
        """True if no two cut edges share an endpoint (and none is a loop)."""
        used: set[int] = set()
        for e in self.edges:
            if e.is_loop() or e.u in used or e.v in used:
                return False
            used.update(e.ends)
        return True

    def pairs(self) -> list[tuple[int, int]]:
        return [e.ends for e in self.edges]


@dataclass(frozen=True)
class BlockStructure:
    bridges: tuple[Edge, ...]
    blocks: tuple[frozenset, ...]  # 2-edge-connected pieces, i.e. components minus bridges
    cut_vertices: tuple[int, ...]
    n: int

    @property
    def is_two_connected(self) -> bool:
        return self.n >= 3 and not self.bridges and not self.cut_vertices


# -- parsing and serialisation ---------------------------------------------


def _parse_adjlist(text: str) -> CubicGraph:
    rows: dict[int, list[int]] = {}
    for raw in text.replace("/", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise MalformedInput(f"missing ':' in line {raw!r}")
        try:
            v = int(head)
            nbrs = [int(t) for t in tail.split()]
        except ValueError as exc:
            raise MalformedInput(f"non-integer token in line {raw!r}") from exc
        if v in rows:
            raise MalformedInput(f"vertex {v} listed twice")
        rows[v] = nbrs
    if not rows:
        raise MalformedInput("empty adjacency list")
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise MalformedInput("vertices must be numbered 0..n-1 with one line each")
    count: Counter = Counter()
    for v, nbrs in rows.items():
        for u in nbrs:
            if not 0 <= u < n:
                raise MalformedInput(f"vertex {v} lists unknown neighbour {u}")
            count[(v, u)] += 1
    pairs = []
    for (v, u), c in count.items():
        if u == v:
            # a loop is written as two self-entries
            if c % 2:
                raise MalformedInput(f"odd number of self-entries at vertex {v}")
            pairs += [(v, v)] * (c // 2)
        elif v < u:
            if count[(u, v)] != c:
                raise MalformedInput(f"asymmetric entries between {v} and {u}")
            pairs += [(v, u)] * c
        elif count[(u, v)] != c:
            raise MalformedInput(f"asymmetric entries between {u} and {v}")
    return CubicGraph.from_pairs(n, pairs)


def _parse_graph6(text: str) -> CubicGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or "\n" in s:
        raise MalformedInput("expected exactly one graph6 line")
    try:
        G = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise MalformedInput(f"bad graph6 string: {exc}") from exc
    return CubicGraph.from_pairs(G.number_of_nodes(), G.edges())


def detect_format(text: str) -> str:
    return "adjlist" if ":" in text else "graph6"


def parse_graph(text: str, format: str = "auto", strict: bool = False) -> CubicGraph:
    """Parse ``text`` as graph6 or adjlist.

    With ``strict=True`` every vertex must have degree exactly 3.
    """
    if not text.strip():
        raise MalformedInput("empty input")
    if format == "auto":
        format = detect_format(text)
    if format == "graph6":
        g = _parse_graph6(text)
    elif format == "adjlist":
        g = _parse_adjlist(text)
    else:
        raise ValueError(f"unknown format {format!r}")
    if strict and not g.is_cubic():
        bad = [v for v in range(g.n) if g.degree(v) != 3]
        raise DegreeViolation(f"vertices {bad} do not have degree 3")
    return g


def to_adjlist(g: CubicGraph) -> str:
    rows: list[list[int]] = [[] for _ in range(g.n)]
    for e in g.edges:
        rows[e.u].append(e.v)
        rows[e.v].append(e.u)
    return "".join(f"{v}: {' '.join(map(str, sorted(r)))}".rstrip() + "\n" for v, r in enumerate(rows))


def to_graph6(g: CubicGraph) -> str:
    if any(e.is_loop() or e.slot for e in g.edges):
        raise PreconditionViolated("graph6 encodes simple graphs only")
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.pairs())
    return nx.to_graph6_bytes(G, header=False).decode("ascii").strip()


def serialize_graph(g: CubicGraph, format: str = "adjlist") -> str:
    if format == "adjlist":
        return to_adjlist(g)
    if format == "graph6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown format {format!r}")


# -- structure -------------------------------------------------------------


def _check_vertices(g: CubicGraph, xs: Iterable[int]) -> frozenset:
    s = frozenset(xs)
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise PreconditionViolated(f"vertices {sorted(bad)} not in graph")
    return s


def boundary(g: CubicGraph, xs: Iterable[int]) -> EdgeCut:
    s = _check_vertices(g, xs)
    if not s or len(s) == g.n:
        raise EmptyOrFullSet("vertex set must be non-empty and proper")
    return EdgeCut(g, tuple(e for e in g.edges if (e.u in s) != (e.v in s)))


def induced(g: CubicGraph, xs: Iterable[int]) -> tuple[CubicGraph, tuple[int, ...]]:
    """Induced subgraph relabelled 0..k-1, plus ``new_to_old`` (ascending old labels)."""
    order = tuple(sorted(_check_vertices(g, xs)))
    new = {v: i for i, v in enumerate(order)}
    pairs = [(new[e.u], new[e.v]) for e in g.edges if e.u in new and e.v in new]
    return CubicGraph.from_pairs(len(order), pairs), order


def remove_edges(g: CubicGraph, cut: Iterable[Edge]) -> CubicGraph:
    drop = set(cut)
    return CubicGraph.from_pairs(g.n, [e.ends for e in g.edges if e not in drop])


def components(g: CubicGraph) -> list[frozenset]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in g.incident(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: CubicGraph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def _require_connected(g: CubicGraph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def girth(g: CubicGraph) -> float:
    """Length of a shortest cycle: 1 for a loop, 2 for parallel edges, ``inf`` for forests."""
    if any(e.is_loop() for e in g.edges):
        return 1
    if any(e.slot for e in g.edges):
        return 2
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        via = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= best:
                break
            for w, i in g.incident(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    via[w] = i
                    queue.append(w)
                elif i != via[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def cycle_rank(g: CubicGraph) -> int:
    _require_connected(g)
    return g.m - g.n + 1


def distance(g: CubicGraph, u: int, v: int) -> float:
    _check_vertices(g, (u, v))
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for w, _ in g.incident(a):
            if w not in dist:
                dist[w] = dist[a] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return INF


def bridges_and_blocks(g: CubicGraph) -> BlockStructure:
    """Bridges, cut vertices and bridge-free blocks by iterative low-link DFS."""
    _require_connected(g)
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: list[Edge] = []
    cuts: set[int] = set()
    t = 0
    root = 0
    disc[root] = low[root] = t
    t += 1
    root_children = 0
    # stack entries: (vertex, edge index used to enter, iterator over incidences)
    stack = [(root, -1, iter(g.incident(root)))]
    while stack:
        v, via, it = stack[-1]
        advanced = False
        for w, i in it:
            if i == via:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = t
                t += 1
                if v == root:
                    root_children += 1
                stack.append((w, i, iter(g.incident(w))))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] > disc[p]:
                bridges.append(g.edges[via])
            if p != root and low[v] >= disc[p]:
                cuts.add(p)
    if root_children > 1:
        cuts.add(root)
    rest = remove_edges(g, bridges)
    return BlockStructure(tuple(sorted(bridges)), tuple(components(rest)), tuple(sorted(cuts)), g.n)


def is_two_connected(g: CubicGraph) -> bool:
    return is_connected(g) and bridges_and_blocks(g).is_two_connected


def has_cycle(g: CubicGraph) -> bool:
    """A graph has a cycle iff some component has at least as many edges as vertices."""
    return g.m > g.n - len(components(g))


def disjoint_union(*graphs: CubicGraph) -> CubicGraph:
    pairs, off = [], 0
    for h in graphs:
        pairs += [(e.u + off, e.v + off) for e in h.edges]
        off += h.n
    return CubicGraph.from_pairs(off, pairs)


def iter_paths2(g: CubicGraph):
    """Every path x-y-z of length two once, as (x, y, z) with x < z."""
    for y in range(g.n):
        for x, z in combinations(g.neighbors(y), 2):
            yield (x, y, z)
