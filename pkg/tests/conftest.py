import itertools

import networkx as nx
import pytest

from cycfive import corpus
from cycfive.completion import CyclicPart, remove_path2
from cycfive.graph import CubicGraph


def from_nx(G) -> CubicGraph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return CubicGraph.from_pairs(G.number_of_nodes(), G.edges())


def isomorphic(a: CubicGraph, b: CubicGraph) -> bool:
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def brute_girth(g: CubicGraph) -> float:
    """Shortest cycle by enumerating simple paths; only for small graphs."""
    best = float("inf")
    for e in g.edges:
        if e.is_loop():
            return 1
    counts = {}
    for e in g.edges:
        counts[e.ends] = counts.get(e.ends, 0) + 1
    if any(c > 1 for c in counts.values()):
        return 2

    def walk(start, v, seen, length):
        nonlocal best
        if length + 1 >= best:
            return
        for w in g.neighbors(v):
            if w == start and length >= 2:
                best = min(best, length + 1)
            elif w not in seen and w > start:
                walk(start, w, seen | {w}, length + 1)

    for s in range(g.n):
        walk(s, s, {s}, 0)
    return best


@pytest.fixture(scope="session")
def petersen():
    return corpus.load("petersen")


@pytest.fixture(scope="session")
def dodecahedron():
    return corpus.load("dodecahedron")


@pytest.fixture(scope="session")
def k4():
    return corpus.load("k4")


@pytest.fixture(scope="session")
def k33():
    return corpus.load("k33")


@pytest.fixture(scope="session")
def c5_part():
    return CyclicPart(corpus.load("c5_part"))


@pytest.fixture(scope="session")
def petersen_part(petersen):
    return remove_path2(petersen, 1, 0, 4)


@pytest.fixture(scope="session")
def dodecahedron_part(dodecahedron):
    return remove_path2(dodecahedron, 0, 1, 2)


@pytest.fixture(scope="session")
def corpus_parts():
    return corpus.parts()


def all_perms(h):
    return list(itertools.permutations(h.A))


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
