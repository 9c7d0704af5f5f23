"""Cyclic parts of cyclically 5-connected cubic graphs and their completion.

A cyclic part ``H`` has exactly five vertices of degree 2 (the set ``A``).
Adding a path ``x-y-z`` with ``x`` joined to ``a1, a2``, ``y`` to ``a3`` and
``z`` to ``a4, a5`` restores 3-regularity. ``complete`` chooses the ordering
so that the result is again cyclically 5-connected, which is possible for
every part except the 5-cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations, permutations
from typing import Iterable, Optional

from .cyccut import SixPoleClass, SixPoleTag, classify_subgraph, fragments, min_cycle_separating_cut, zeta
from .errors import (
    DistributionViolated,
    InternalContradiction,
    InvariantViolation,
    IsFiveCycle,
    NotAPermutation,
    NotAValidPart,
    PreconditionViolated,
    RepairFailed,
)
from .graph import (
    CubicGraph,
    Edge,
    EdgeCut,
    boundary,
    components,
    distance,
    girth,
    induced,
    is_connected,
    is_two_connected,
    remove_edges,
)


@dataclass(frozen=True)
class PartOrigin:
    host: CubicGraph = field(repr=False)
    vertex_map: tuple[int, ...]  # part label -> host label
    cut: EdgeCut = field(repr=False)


@dataclass(frozen=True)
class CyclicPart:
    graph: CubicGraph
    origin: Optional[PartOrigin] = None
    boundary_vertices: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        g = self.graph
        A = tuple(v for v in range(g.n) if g.degree(v) == 2)
        object.__setattr__(self, "boundary_vertices", A)
        if len(A) != 5:
            raise InvariantViolation("five_degree_two", f"found {len(A)} vertices of degree 2")
        odd = [v for v in range(g.n) if g.degree(v) not in (2, 3)]
        if odd:
            raise InvariantViolation("degrees_two_or_three", f"vertices {odd}")
        if not is_connected(g):
            raise InvariantViolation("connected")
        if not is_two_connected(g):
            raise InvariantViolation("two_connected")
        if girth(g) < 5:
            raise InvariantViolation("girth_at_least_5", f"girth is {girth(g)}")
        if not self.is_five_cycle:
            for a in A:
                if sum(1 for b in g.neighbors(a) if b in A) > 1:
                    raise InvariantViolation(
                        "boundary_vertex_has_one_boundary_neighbour", f"vertex {a}"
                    )

    @property
    def A(self) -> tuple[int, ...]:
        return self.boundary_vertices

    @property
    def is_five_cycle(self) -> bool:
        return self.graph.n == 5 and self.graph.m == 5

    def boundary_edges(self) -> list[tuple[int, int]]:
        """Edges of ``H[A]``."""
        A = set(self.A)
        return [e.ends for e in self.graph.edges if e.u in A and e.v in A]


@dataclass(frozen=True)
class DistanceGraph:
    vertices: tuple[int, ...]
    edges: frozenset  # pairs (u, v), u < v, at distance exactly 2
    adjacent: frozenset  # pairs at distance 1

    def has(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class CutDecomposition:
    """A 4-edge cycle-separating cut of an extension, oriented so that side 1
    holds ``a1, a2`` and side 2 holds ``a3, a4, a5``.

    ``perm`` is the extension's ordering, reversed when ``y`` fell on the side
    of the original ``x``; ``b[i]``-``c[i]`` are the cut edges inside the part.
    """

    cut: EdgeCut
    perm: tuple[int, ...]
    reversed: bool
    side1: frozenset  # extension vertices, contains the vertex joined to a1, a2
    side2: frozenset
    c1: frozenset  # side1 minus {x, y, z}
    c2: frozenset
    b: tuple[int, ...]
    c: tuple[int, ...]
    c2_structure: SixPoleClass
    apex_slot: Optional[int] = None  # i with c[0] == a_i, bridged case only


@dataclass(frozen=True)
class Extension:
    graph: CubicGraph
    part: CyclicPart = field(repr=False)
    perm: tuple[int, ...]
    x: int
    y: int
    z: int
    added: tuple[tuple[str, Edge], ...]
    initial_perm: Optional[tuple[int, ...]] = None
    repair_branch: Optional[str] = None
    decomposition: Optional[CutDecomposition] = field(default=None, repr=False)

    @property
    def repaired(self) -> bool:
        return self.repair_branch is not None


def _part_from(host: CubicGraph, side: Iterable[int], cut: EdgeCut) -> CyclicPart:
    sub, order = induced(host, side)
    return CyclicPart(sub, PartOrigin(host, order, cut))


def make_part(g: CubicGraph, s: Iterable, side: Iterable[int]) -> CyclicPart:
    cut = s if isinstance(s, EdgeCut) else EdgeCut(g, tuple(s))
    z = zeta(g)
    if z != 5:
        raise InvariantViolation("host_zeta_5", f"zeta is {z}")
    if len(cut) != 5:
        raise InvariantViolation("cut_size_5", f"cut has {len(cut)} edges")
    sides = fragments(g, cut)
    side = frozenset(side)
    if side not in sides:
        raise InvariantViolation("side_is_fragment")
    part = _part_from(g, side, cut)
    ends = sorted(part.origin.vertex_map.index(w) for e in cut for w in e.ends if w in side)
    if tuple(ends) != part.A:
        raise InvariantViolation("cut_endpoints_are_boundary")
    return part


def remove_path2(g: CubicGraph, x: int, y: int, z: int) -> CyclicPart:
    """The part left after deleting the path ``x-y-z`` from a cyclically 5-connected graph."""
    if len({x, y, z}) != 3 or not (g.has_edge(x, y) and g.has_edge(y, z)):
        raise PreconditionViolated("x-y-z is not a path of length two")
    if g.has_edge(x, z):
        raise PreconditionViolated("x and z are adjacent")
    zg = zeta(g)
    if zg != 5:
        raise NotAValidPart("host_zeta_5", f"zeta is {zg}")
    side = frozenset(range(g.n)) - {x, y, z}
    try:
        return _part_from(g, side, boundary(g, side))
    except InvariantViolation as exc:
        raise NotAValidPart(exc.clause, str(exc)) from exc


def _check_perm(h: CyclicPart, perm) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(h.A):
        raise NotAPermutation(f"{perm} is not an ordering of {h.A}")
    return perm


def extend(h: CyclicPart, perm) -> Extension:
    perm = _check_perm(h, perm)
    n = h.graph.n
    x, y, z = n, n + 1, n + 2
    labelled = [
        ("xy", (x, y)),
        ("yz", (y, z)),
        ("xa1", (perm[0], x)),
        ("xa2", (perm[1], x)),
        ("ya3", (perm[2], y)),
        ("za4", (perm[3], z)),
        ("za5", (perm[4], z)),
    ]
    graph = CubicGraph.from_pairs(n + 3, h.graph.pairs() + [p for _, p in labelled])
    added = tuple((name, Edge(*p)) for name, p in labelled)
    return Extension(graph, h, perm, x, y, z, added)


def distance_graph(h: CyclicPart) -> DistanceGraph:
    d2, d1 = set(), set()
    for u, v in combinations(h.A, 2):
        d = distance(h.graph, u, v)
        if d == 1:
            d1.add((u, v))
        elif d == 2:
            d2.add((u, v))
    return DistanceGraph(h.A, frozenset(d2), frozenset(d1))


def girth_condition(h: CyclicPart, perm, dg: Optional[DistanceGraph] = None) -> bool:
    """Whether ``extend(h, perm)`` has girth at least five, read off distances in ``h``."""
    a1, a2, a3, a4, a5 = _check_perm(h, perm)
    dg = dg or distance_graph(h)
    near = dg.edges | dg.adjacent

    def close(u, v):
        return (min(u, v), max(u, v)) in near

    if any((min(a3, b), max(a3, b)) in dg.adjacent for b in (a1, a2, a4, a5)):
        return False
    return not close(a1, a2) and not close(a4, a5)


def boundary_edge_case(h: CyclicPart) -> str:
    """'i', 'ii' or 'iii' by the number of edges of ``H[A]`` (2, 1 or 0)."""
    k = len(h.boundary_edges())
    if k > 2:
        raise InternalContradiction(f"H[A] has {k} edges")
    return {2: "i", 1: "ii", 0: "iii"}[k]


def _case_candidates(h: CyclicPart, dg: DistanceGraph):
    """Orderings the constructive case analysis may pick, each passing its case's test."""
    E = [tuple(e) for e in h.boundary_edges()]
    A = h.A
    case = boundary_edge_case(h)
    if case == "i":
        (t,) = [v for v in A if not any(v in e for e in E)]
        for outer, inner in ((E[0], E[1]), (E[1], E[0])):
            for a1, a5 in (outer, outer[::-1]):
                for b2, b4 in (inner, inner[::-1]):
                    if not dg.has(a1, b2) and not dg.has(a5, b4):
                        yield (a1, b2, t, b4, a5)
    elif case == "ii":
        (e,) = E
        for a1, a5 in (e, e[::-1]):
            if dg.degree(a5) > dg.degree(a1):
                continue
            rest = [v for v in A if v not in e]
            for a2 in rest:
                if dg.has(a1, a2):
                    continue
                for a4 in rest:
                    if a4 == a2 or dg.has(a5, a4):
                        continue
                    (a3,) = [v for v in rest if v not in (a2, a4)]
                    yield (a1, a2, a3, a4, a5)
    else:
        for p in permutations(A):
            if not dg.has(p[0], p[1]) and not dg.has(p[3], p[4]):
                yield p


def choose_permutation(h: CyclicPart) -> tuple[int, ...]:
    if h.is_five_cycle:
        raise IsFiveCycle()
    dg = distance_graph(h)
    found = sorted(_case_candidates(h, dg))
    if not found:
        raise InternalContradiction(f"case {boundary_edge_case(h)} produced no ordering")
    perm = found[0]
    if not girth_condition(h, perm, dg):
        raise InternalContradiction(f"ordering {perm} from case {boundary_edge_case(h)} leaves a short cycle")
    return perm


def find_distribution(e: Extension) -> Optional[CutDecomposition]:
    """Locate a small cycle-separating cut of an extension, checking its shape.

    Returns ``None`` when the extension is cyclically 5-connected.
    """
    if girth(e.graph) < 5:
        raise PreconditionViolated("extension has girth below 5")
    res = min_cycle_separating_cut(e.graph)
    if res.zeta >= 5:
        return None
    return decompose_cut(e, res.witness)


def decompose_cut(e: Extension, cut: EdgeCut) -> CutDecomposition:
    comps = components(remove_edges(e.graph, cut.edges))
    if len(comps) != 2:
        raise DistributionViolated(f"cut leaves {len(comps)} components")
    if len(cut) != 4:
        raise DistributionViolated(f"minimum cut has {len(cut)} edges, expected 4")
    x, y, z = e.x, e.y, e.z
    sx = comps[0] if x in comps[0] else comps[1]
    sz = comps[1] if sx is comps[0] else comps[0]
    a1, a2, a3, a4, a5 = e.perm
    if z in sx or not {a1, a2} <= sx or not {a4, a5} <= sz:
        raise DistributionViolated("cut does not separate {x, a1, a2} from {z, a4, a5}")
    xy, yz = (x, y), (y, z)
    pairs = set(cut.pairs())
    if (xy in pairs) == (yz in pairs):
        raise DistributionViolated("cut must contain exactly one of xy, yz")
    perm, reverse = e.perm, False
    side1, side2 = sx, sz
    if y in sx:
        perm, reverse = perm[::-1], True
        side1, side2 = sz, sx
    if perm[2] not in side2:
        raise DistributionViolated("a3 is not on the side of y")
    n = e.part.graph.n
    inner = [p for p in cut.pairs() if p[0] < n and p[1] < n]
    if len(inner) != 3:
        raise DistributionViolated("cut edges other than xy/yz must lie inside the part")
    c1 = frozenset(v for v in side1 if v < n)
    c2 = frozenset(v for v in side2 if v < n)
    bc = sorted((u, v) if u in c1 else (v, u) for u, v in inner)

    H = e.part.graph
    sub, order = induced(H, c2)
    try:
        if not is_connected(sub):
            raise PreconditionViolated("C2 is disconnected")
        cls = classify_subgraph(sub, [3 - sub.degree(v) for v in range(sub.n)])
    except PreconditionViolated as exc:
        raise DistributionViolated(f"C2 fits no six-pole shape: {exc}") from exc
    apex_slot = None
    if cls.tag is SixPoleTag.ACYCLIC:
        raise DistributionViolated("C2 is acyclic")
    if cls.tag is SixPoleTag.BRIDGED_APEX:
        apex = order[cls.apex]
        cls = SixPoleClass(cls.tag, apex, frozenset(order[v] for v in cls.fragment))
        if apex not in perm[2:]:
            raise DistributionViolated(f"bridge apex {apex} is not among a3, a4, a5")
        first = [p for p in bc if p[1] == apex]
        if len(first) != 1:
            raise DistributionViolated(f"bridge apex {apex} is not the end of one cut edge")
        bc = first + [p for p in bc if p[1] != apex]
        apex_slot = perm.index(apex) + 1
    return CutDecomposition(
        cut=cut,
        perm=perm,
        reversed=reverse,
        side1=frozenset(side1),
        side2=frozenset(side2),
        c1=c1,
        c2=c2,
        b=tuple(p[0] for p in bc),
        c=tuple(p[1] for p in bc),
        c2_structure=cls,
        apex_slot=apex_slot,
    )


def _repair(h: CyclicPart, d: CutDecomposition) -> tuple[tuple[int, ...], str]:
    a1, a2, *rest = d.perm
    if d.c2_structure.tag is SixPoleTag.TWO_CONNECTED:
        A = set(h.A)
        isolated = [v for v in sorted(rest) if not any(w in A for w in h.graph.neighbors(v))]
        if not isolated:
            raise RepairFailed("no vertex among a3, a4, a5 is isolated in H[A]")
        aj = isolated[0]
        ai, ak = sorted(set(rest) - {aj})
        return (a1, ai, aj, a2, ak), "two_connected"
    ai = d.c2_structure.apex
    aj, ak = sorted(set(rest) - {ai})
    return (a1, aj, ai, ak, a2), "bridged"


def repair(e: Extension) -> Extension:
    """Re-route an extension of girth >= 5 that has a cycle-separating 4-cut.

    Returns ``e`` itself when it is already cyclically 5-connected.
    """
    h = e.part
    d = find_distribution(e)
    if d is None:
        return e
    new, branch = _repair(h, d)
    return replace(extend(h, new), initial_perm=e.perm, repair_branch=branch, decomposition=d)


def complete(h: CyclicPart) -> Extension:
    """Extend ``h`` by a path of length two to a cyclically 5-connected cubic graph."""
    if h.is_five_cycle:
        raise IsFiveCycle()
    perm = choose_permutation(h)
    ext = repair(extend(h, perm))
    if not ext.repaired:
        ext = replace(ext, initial_perm=perm)
    gi = girth(ext.graph)
    if gi < 5:
        raise RepairFailed(f"completion has girth {gi}")
    z = zeta(ext.graph)
    if z < 5:
        raise RepairFailed(f"completion has cyclic connectivity {z}")
    return ext


def single_vertex_candidates(h: CyclicPart):
    """All ten ways to finish ``h`` with one new vertex and one new edge.

    Yields ``(pair, graph)`` where ``pair`` is the two boundary vertices
    joined directly; the other three go to the new vertex ``n``.
    """
    n = h.graph.n
    for pair in combinations(h.A, 2):
        others = [a for a in h.A if a not in pair]
        pairs = h.graph.pairs() + [pair] + [(a, n) for a in others]
        yield pair, CubicGraph.from_pairs(n + 1, pairs)


def single_vertex_completions(h: CyclicPart) -> list[CubicGraph]:
    return [g for _, g in single_vertex_candidates(h) if zeta(g) >= 5]


def single_vertex_obstruction(h: CyclicPart, strict: bool = True) -> bool:
    """Three boundary vertices with a common neighbour, or on a 6-cycle
    ``a v1 b v2 c v3`` through them. ``strict`` keeps the ``v``'s out of ``A``."""
    g, A = h.graph, set(h.A)
    nb = {a: set(g.neighbors(a)) for a in A}
    for a, b, c in combinations(sorted(A), 3):
        if nb[a] & nb[b] & nb[c]:
            return True
        v1s, v2s, v3s = nb[a] & nb[b], nb[b] & nb[c], nb[c] & nb[a]
        for v1 in v1s:
            for v2 in v2s:
                for v3 in v3s:
                    vs = {v1, v2, v3}
                    if len(vs) < 3 or vs & {a, b, c}:
                        continue
                    if strict and vs & A:
                        continue
                    return True
    return False
