from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cycfive import corpus
from cycfive.cyccut import (
    SixPoleTag,
    classify_six_pole,
    fragments,
    is_cycle_separating,
    min_cycle_separating_cut,
    zeta,
)
from cycfive.errors import Disconnected, NotCubic, NotMinimumCut, PreconditionViolated
from cycfive.graph import boundary, cycle_rank, disjoint_union, girth, induced, is_connected, is_two_connected
from cycfive.oracle import zeta_oracle

from conftest import from_nx

SPOKES = {(i, i + 5) for i in range(5)}


def edges_with_ends(g, pairs):
    return [e for e in g.edges if e.ends in pairs]


def test_spokes_separate_cycles(petersen):
    assert is_cycle_separating(petersen, edges_with_ends(petersen, SPOKES))


def test_single_edge_of_k4_does_not_separate(k4):
    for e in k4.edges:
        assert not is_cycle_separating(k4, [e])


def test_star_cut_does_not_separate(petersen):
    star = [e for e in petersen.edges if 0 in e.ends]
    assert len(star) == 3
    assert not is_cycle_separating(petersen, star)


def test_small_constants(k4, k33):
    r = min_cycle_separating_cut(k4)
    assert (r.zeta, r.witness, r.fragments) == (3, None, None)
    r = min_cycle_separating_cut(k33)
    assert (r.zeta, r.witness) == (4, None)


def test_petersen_witness(petersen):
    r = min_cycle_separating_cut(petersen)
    assert r.zeta == 5 and len(r.witness) == 5
    assert r.witness.is_independent()
    assert is_cycle_separating(petersen, r.witness)


@pytest.mark.parametrize("name,value", [("k4", 3), ("k33", 4), ("petersen", 5), ("dodecahedron", 5),
                                        ("cube", 4), ("prism", 3)])
def test_zeta_values(name, value):
    assert zeta(corpus.load(name)) == value


def test_zeta_preconditions(k4):
    with pytest.raises(Disconnected):
        zeta(disjoint_union(k4, k4))
    with pytest.raises(NotCubic):
        zeta(corpus.load("c5_part"))


def test_petersen_fragments(petersen):
    sides = fragments(petersen, edges_with_ends(petersen, SPOKES))
    assert sides == (frozenset(range(5)), frozenset(range(5, 10)))


def test_join_fragments_are_two_parts():
    g = corpus.load("petersen_join")
    r = min_cycle_separating_cut(g)
    assert r.zeta == 5
    a, b = fragments(g, r.witness)
    assert (len(a), len(b)) == (7, 7)
    assert zeta_oracle(g) == 5


def test_fragments_rejects_non_minimum(k4, dodecahedron):
    star = [e for e in k4.edges if 0 in e.ends]
    with pytest.raises(NotMinimumCut):
        fragments(k4, star)
    # a face plus one neighbour: six edges, cycle-separating, but zeta is 5
    face = next(c for c in nx.simple_cycles(dodecahedron.to_networkx(), length_bound=5) if len(c) == 5)
    w = next(u for u in dodecahedron.neighbors(face[0]) if u not in face)
    cut = boundary(dodecahedron, set(face) | {w})
    assert len(cut) == 6 and is_cycle_separating(dodecahedron, cut)
    with pytest.raises(NotMinimumCut):
        fragments(dodecahedron, cut)


def test_fragments_of_join_cut():
    g = corpus.load("petersen_join")
    r = min_cycle_separating_cut(g)
    assert fragments(g, r.witness.edges) == r.fragments


def test_six_pole_path_is_acyclic(petersen):
    G = petersen.to_networkx()
    paths = [p for s in range(10) for t in range(10) if s < t
             for p in nx.all_simple_paths(G, s, t, cutoff=3) if len(p) == 4]
    assert paths
    for p in paths:
        sub, _ = induced(petersen, p)
        if sub.m != 3:
            continue
        assert classify_six_pole(petersen, p).tag is SixPoleTag.ACYCLIC


def test_six_pole_face_plus_neighbour_is_bridged(dodecahedron):
    G = dodecahedron.to_networkx()
    faces = [c for c in nx.simple_cycles(G, length_bound=5) if len(c) == 5]
    assert len(faces) == 12
    face = set(faces[0])
    for v in sorted(face):
        for w in dodecahedron.neighbors(v):
            if w in face:
                continue
            cls = classify_six_pole(dodecahedron, face | {w})
            assert cls.tag is SixPoleTag.BRIDGED_APEX
            assert cls.apex == w
            assert cls.fragment == frozenset(face)


def test_six_pole_six_cycle_is_two_connected(petersen):
    six_cycles = []
    for xs in combinations(range(10), 6):
        if len(boundary(petersen, xs)) != 6:
            continue
        sub, _ = induced(petersen, xs)
        if is_two_connected(sub):
            six_cycles.append(xs)
            assert classify_six_pole(petersen, xs).tag is SixPoleTag.TWO_CONNECTED
    assert len(six_cycles) == 10


def test_petersen_has_no_six_pole_with_independent_boundary(petersen):
    # the four vertices outside an induced 6-cycle form a claw, so two
    # boundary edges always meet at each leaf of the claw
    for xs in combinations(range(10), 6):
        cut = boundary(petersen, xs)
        if len(cut) == 6:
            assert not cut.is_independent()


def test_six_pole_preconditions(petersen, k4):
    with pytest.raises(PreconditionViolated):
        classify_six_pole(k4, [0])
    with pytest.raises(PreconditionViolated):
        classify_six_pole(petersen, [0, 1])


@pytest.mark.parametrize("name", [n for n in corpus.names() if n not in ("c5_part", "petersen_part", "dodecahedron_part")])
def test_corpus_bounds(name):
    g = corpus.load(name)
    if not (g.is_cubic() and is_connected(g)):
        pytest.skip("not a connected cubic graph")
    r = min_cycle_separating_cut(g)
    assert r.zeta <= girth(g)
    assert r.zeta <= cycle_rank(g)
    if r.witness is not None:
        assert r.zeta < cycle_rank(g)
        assert r.witness.is_independent()
        for side in r.fragments:
            sub, _ = induced(g, side)
            assert is_connected(sub)
            if r.zeta > 3:
                assert is_two_connected(sub)


@pytest.mark.parametrize("name", [n for n in corpus.names() if n not in ("c5_part", "petersen_part", "dodecahedron_part")])
def test_fast_matches_oracle(name):
    g = corpus.load(name)
    if not (g.is_cubic() and is_connected(g)) or g.m > 33:
        pytest.skip("outside the oracle's quick range")
    assert zeta(g) == zeta_oracle(g)


@st.composite
def random_cubic(draw):
    n = draw(st.sampled_from([4, 6, 8, 10, 12]))
    seed = draw(st.integers(0, 10_000))
    return from_nx(nx.random_regular_graph(3, n, seed=seed))


@settings(max_examples=40, deadline=None)
@given(random_cubic())
def test_random_cubic_matches_oracle(g):
    if not is_connected(g):
        return
    r = min_cycle_separating_cut(g)
    assert r.zeta == zeta_oracle(g)
    assert r.zeta <= min(girth(g), cycle_rank(g))
    if r.witness is not None:
        assert is_cycle_separating(g, r.witness)
        assert r.witness.is_independent()
