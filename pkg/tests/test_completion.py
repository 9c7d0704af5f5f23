from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cycfive import corpus
from cycfive.completion import (
    CyclicPart,
    choose_permutation,
    complete,
    decompose_cut,
    distance_graph,
    extend,
    find_distribution,
    girth_condition,
    boundary_edge_case,
    make_part,
    remove_path2,
    repair,
    single_vertex_candidates,
    single_vertex_completions,
    single_vertex_obstruction,
)
from cycfive.cyccut import SixPoleTag, min_cycle_separating_cut, zeta
from cycfive.errors import (
    DistributionViolated,
    InvariantViolation,
    IsFiveCycle,
    NotAPermutation,
    NotAValidPart,
    PreconditionViolated,
)
from cycfive.graph import CubicGraph, distance, girth, iter_paths2
from cycfive.oracle import all_girth5_perms, zeta_oracle

from conftest import all_perms, isomorphic


def host_to_part(h, v):
    return h.origin.vertex_map.index(v)


# -- construction -------------------------------------------------------------


def test_make_part_from_join():
    g = corpus.load("petersen_join")
    res = min_cycle_separating_cut(g)
    for side in res.fragments:
        h = make_part(g, res.witness, side)
        assert len(h.A) == 5 and h.graph.n == 7


def test_make_part_spoke_side_is_c5(petersen):
    spokes = [e for e in petersen.edges if e.ends in {(i, i + 5) for i in range(5)}]
    h = make_part(petersen, spokes, range(5))
    assert h.is_five_cycle and h.A == (0, 1, 2, 3, 4)


def test_make_part_needs_zeta_5():
    cube = corpus.load("cube")
    res = min_cycle_separating_cut(cube)
    with pytest.raises(InvariantViolation) as info:
        make_part(cube, res.witness, res.fragments[0])
    assert info.value.clause == "host_zeta_5"


def test_remove_path2_sizes(petersen, dodecahedron):
    for g, size in ((petersen, 7), (dodecahedron, 17)):
        for x, y, z in iter_paths2(g):
            h = remove_path2(g, x, y, z)
            assert h.graph.n == size
            assert sorted(h.graph.degrees()).count(2) == 5


def test_remove_path2_preconditions(petersen):
    cube = corpus.load("cube")
    x, y, z = next(iter_paths2(cube))
    with pytest.raises(NotAValidPart):
        remove_path2(cube, x, y, z)
    with pytest.raises(PreconditionViolated):
        remove_path2(petersen, 0, 1, 3)


def test_remove_path2_on_k4_fails():
    k4 = corpus.load("k4")
    with pytest.raises(PreconditionViolated):
        remove_path2(k4, 1, 0, 2)


@pytest.mark.parametrize(
    "pairs,n,clause",
    [
        ([(0, 1), (1, 2), (2, 3)], 4, "five_degree_two"),
        ([(i, (i + 1) % 6) for i in range(6)], 6, "five_degree_two"),
        # two subdivided K4-minus-an-edge blocks joined by the bridge 0-4
        ([(0, 1), (0, 2), (1, 8), (8, 2), (1, 9), (9, 3), (2, 3), (4, 5), (4, 6), (5, 10), (10, 6), (5, 7),
          (6, 7), (0, 4)], 11, "two_connected"),
    ],
)
def test_part_validation(pairs, n, clause):
    with pytest.raises(InvariantViolation) as info:
        CyclicPart(CubicGraph.from_pairs(n, pairs))
    assert info.value.clause == clause


def test_part_girth_clause():
    # 4-cycle with a pendant cycle glued on: degrees fine, girth 4
    g = CubicGraph.from_pairs(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 2)])
    with pytest.raises(InvariantViolation) as info:
        CyclicPart(g)
    assert info.value.clause == "girth_at_least_5"


def test_part_boundary_neighbour_clause():
    # a 6-cycle with a chord-free 3-path across: A contains a 3-vertex run
    g = CubicGraph.from_pairs(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4), (6, 2)])
    with pytest.raises(InvariantViolation):
        CyclicPart(g)


def test_every_corpus_part_respects_boundary_neighbours(corpus_parts):
    for _, h in corpus_parts:
        A = set(h.A)
        limit = 2 if h.is_five_cycle else 1
        for a in h.A:
            assert sum(1 for b in h.graph.neighbors(a) if b in A) <= limit


# -- extension ----------------------------------------------------------------


def test_extend_degrees(corpus_parts):
    for _, h in corpus_parts:
        e = extend(h, h.A)
        assert e.graph.n == h.graph.n + 3 and e.graph.is_cubic()
        assert (e.x, e.y, e.z) == (h.graph.n, h.graph.n + 1, h.graph.n + 2)


def test_extend_restores_petersen(petersen, petersen_part):
    h = petersen_part
    a1, a2 = sorted(v for v in petersen.neighbors(1) if v != 0)
    (a3,) = [v for v in petersen.neighbors(0) if v not in (1, 4)]
    a4, a5 = sorted(v for v in petersen.neighbors(4) if v != 0)
    perm = tuple(host_to_part(h, v) for v in (a1, a2, a3, a4, a5))
    e = extend(h, perm)
    assert isomorphic(e.graph, petersen)
    assert girth_condition(h, perm)
    assert find_distribution(e) is None


def test_extend_rejects_bad_perm(petersen_part):
    with pytest.raises(NotAPermutation):
        extend(petersen_part, (0, 0, 0, 0, 0))


def test_c5_extensions_all_short(c5_part):
    perms = all_perms(c5_part)
    assert len(perms) == 120
    assert all(girth(extend(c5_part, p).graph) <= 4 for p in perms)
    assert not any(girth_condition(c5_part, p) for p in perms)


def test_distance_graph_c5(c5_part):
    dg = distance_graph(c5_part)
    assert dg.adjacent == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    assert dg.edges == {(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)}


def test_distance_graph_case_i(petersen_part):
    h = petersen_part
    assert boundary_edge_case(h) == "i"
    dg = distance_graph(h)
    for u, v in h.boundary_edges():
        assert (u, v) in dg.adjacent and not dg.has(u, v)
    for u, v in combinations(h.A, 2):
        assert dg.has(u, v) == (distance(h.graph, u, v) == 2)
        assert ((u, v) in dg.adjacent) == (distance(h.graph, u, v) == 1)


def test_girth_condition_distance_two_pair(petersen_part):
    h = petersen_part
    dg = distance_graph(h)
    u, v = sorted(dg.edges)[0]
    rest = [a for a in h.A if a not in (u, v)]
    assert not girth_condition(h, (u, v, *rest))


def test_choose_permutation_c5(c5_part):
    with pytest.raises(IsFiveCycle):
        choose_permutation(c5_part)
    with pytest.raises(IsFiveCycle):
        complete(c5_part)


def test_choose_permutation_case_i_slot(petersen_part):
    h = petersen_part
    perm = choose_permutation(h)
    A = set(h.A)
    assert not any(w in A for w in h.graph.neighbors(perm[2]))
    assert {(min(perm[0], perm[4]), max(perm[0], perm[4])), (min(perm[1], perm[3]), max(perm[1], perm[3]))} == set(
        h.boundary_edges()
    )
    assert perm in all_girth5_perms(h)


def test_choose_permutation_cases_covered(corpus_parts):
    seen = {boundary_edge_case(h) for _, h in corpus_parts if not h.is_five_cycle}
    assert seen == {"i", "ii", "iii"}
    for _, h in corpus_parts:
        if not h.is_five_cycle:
            assert girth_condition(h, choose_permutation(h))


# -- distribution and repair -------------------------------------------------


def _bad_extension(h):
    for p in all_perms(h):
        if girth_condition(h, p):
            e = extend(h, p)
            if zeta(e.graph) < 5:
                return e
    return None


@pytest.mark.parametrize("host,path", corpus.REPAIR_PATHS)
def test_find_distribution_on_zeta4_extension(host, path):
    h = remove_path2(corpus.load(host), *path)
    e = _bad_extension(h)
    assert e is not None
    d = find_distribution(e)
    assert len(d.cut) == 4
    a1, a2, a3, a4, a5 = d.perm
    assert {a1, a2} <= d.c1 and {a3, a4, a5} <= d.c2
    assert zeta_oracle(e.graph) == 4


def test_find_distribution_girth4(petersen_part):
    h = petersen_part
    p = next(p for p in all_perms(h) if girth(extend(h, p).graph) < 5)
    with pytest.raises(PreconditionViolated):
        find_distribution(extend(h, p))


@pytest.mark.parametrize("host,path", corpus.REPAIR_PATHS)
def test_repair_paths(host, path):
    h = remove_path2(corpus.load(host), *path)
    e = complete(h)
    assert e.repaired
    assert e.initial_perm != e.perm
    assert zeta_oracle(e.graph) == 5 and girth(e.graph) >= 5
    d = e.decomposition
    if e.repair_branch == "bridged":
        assert d.c2_structure.tag is SixPoleTag.BRIDGED_APEX
        assert d.c[0] == d.c2_structure.apex
        assert e.perm[2] == d.c2_structure.apex
    else:
        assert d.c2_structure.tag is SixPoleTag.TWO_CONNECTED


def test_both_repair_branches_exercised():
    branches = {complete(remove_path2(corpus.load(host), *path)).repair_branch for host, path in corpus.REPAIR_PATHS}
    assert branches == {"bridged", "two_connected"}


def test_repair_any_bad_extension():
    tried = 0
    for host, path in corpus.REPAIR_PATHS + [("r18_250", (3, 0, 14))]:
        h = remove_path2(corpus.load(host), *path)
        for p in all_perms(h)[::5]:
            if not girth_condition(h, p):
                continue
            e = extend(h, p)
            if zeta(e.graph) >= 5:
                assert repair(e) is e
                continue
            fixed = repair(e)
            tried += 1
            assert fixed.repair_branch in ("bridged", "two_connected")
            assert girth(fixed.graph) >= 5 and zeta(fixed.graph) == 5
    assert tried > 0


def test_decompose_cut_rejects_wrong_sides(petersen_part):
    h = petersen_part
    e = extend(h, choose_permutation(h))
    g = e.graph
    res = min_cycle_separating_cut(g)
    with pytest.raises(DistributionViolated):
        decompose_cut(e, res.witness)


# -- completion ----------------------------------------------------------------


def test_complete_petersen_and_dodecahedron(petersen_part, dodecahedron_part):
    for h in (petersen_part, dodecahedron_part):
        e = complete(h)
        assert zeta(e.graph) == 5 and girth(e.graph) >= 5


def test_remove_path_inverts_extend(corpus_parts):
    for _, h in corpus_parts:
        if h.is_five_cycle:
            continue
        e = complete(h)
        back = remove_path2(e.graph, e.x, e.y, e.z)
        assert back.graph == h.graph


# -- single vertex probe -------------------------------------------------------


def _six_cycle_witness(h, strict):
    A = set(h.A)
    G = h.graph.to_networkx()
    for cyc in nx.simple_cycles(G, length_bound=6):
        if len(cyc) != 6:
            continue
        for start in (0, 1):
            on = cyc[start::2]
            off = cyc[1 - start::2]
            if set(on) <= A and (not strict or not set(off) & A):
                return True
    return False


def test_single_vertex_candidates_count(petersen_part):
    cands = list(single_vertex_candidates(petersen_part))
    assert len(cands) == 10
    assert all(g.is_cubic() and g.n == 8 for _, g in cands)


def test_single_vertex_petersen(petersen_part):
    h = petersen_part
    assert single_vertex_completions(h) == []
    A = set(h.A)
    assert any(sum(1 for w in h.graph.neighbors(v) if w in A) >= 3 for v in range(h.graph.n))
    assert single_vertex_obstruction(h)


def test_single_vertex_c5(c5_part):
    assert single_vertex_completions(c5_part) == []
    assert not single_vertex_obstruction(c5_part)
    assert not single_vertex_obstruction(c5_part, strict=False)


def test_obstruction_matches_enumeration(corpus_parts):
    for _, h in corpus_parts:
        A = set(h.A)
        common = any(sum(1 for w in h.graph.neighbors(v) if w in A) >= 3 for v in range(h.graph.n))
        for strict in (True, False):
            assert single_vertex_obstruction(h, strict) == (common or _six_cycle_witness(h, strict))


def test_small_parts_have_no_single_vertex_completion(corpus_parts):
    for _, h in corpus_parts:
        if h.graph.n < 9:
            assert single_vertex_completions(h) == []


# -- properties over random 2-paths --------------------------------------------


ZETA5 = list(corpus.ZETA5_HOSTS)


@st.composite
def host_path(draw):
    g = corpus.load(draw(st.sampled_from(ZETA5)))
    paths = list(iter_paths2(g))
    return g, draw(st.sampled_from(paths))


@settings(max_examples=30, deadline=None)
@given(host_path())
def test_random_path_completion(gp):
    g, (x, y, z) = gp
    h = remove_path2(g, x, y, z)
    perm = choose_permutation(h)
    assert girth_condition(h, perm)
    e = complete(h)
    assert e.graph.is_cubic()
    assert girth(e.graph) >= 5 and zeta(e.graph) == 5


@settings(max_examples=20, deadline=None)
@given(host_path(), st.permutations(range(5)))
def test_girth_condition_matches_construction(gp, order):
    g, path = gp
    h = remove_path2(g, *path)
    perm = tuple(h.A[i] for i in order)
    assert girth_condition(h, perm) == (girth(extend(h, perm).graph) >= 5)
