"""Regenerate the adjlist files under src/cycfive/data.

Random graphs depend on the networkx generator, so the files are frozen in
the repository and this script is only kept to document where they came from.
"""
import itertools
import random
from pathlib import Path

import networkx as nx

from cycfive.completion import remove_path2
from cycfive.cyccut import min_cycle_separating_cut
from cycfive.graph import CubicGraph, girth, to_adjlist
from cycfive.oracle import zeta_oracle

DATA = Path(__file__).resolve().parents[1] / "src" / "cycfive" / "data"


def from_nx(G):
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return CubicGraph.from_pairs(G.number_of_nodes(), G.edges())


def write(name, g, note):
    lines = [f"# {name}", f"# {note}", f"# n={g.n} m={g.m}"]
    (DATA / f"{name}.adj").write_text("\n".join(lines) + "\n" + to_adjlist(g))


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return CubicGraph.from_pairs(10, outer + spokes + inner)


def petersen_join():
    h = remove_path2(petersen(), 1, 0, 4)
    n = h.graph.n
    for perm in itertools.permutations(h.A):
        pairs = h.graph.pairs() + [(u + n, v + n) for u, v in h.graph.pairs()]
        pairs += [(a, b + n) for a, b in zip(h.A, perm)]
        j = CubicGraph.from_pairs(2 * n, pairs)
        if girth(j) >= 5 and zeta_oracle(j) == 5:
            # Any 5-cycle also spans a minimum 5-cut, so which cut the search
            # reports first depends on labels. Shuffle until it is the join.
            for seed in range(1000):
                lab = list(range(2 * n))
                random.Random(seed).shuffle(lab)
                k = CubicGraph.from_pairs(2 * n, [(lab[u], lab[v]) for u, v in j.pairs()])
                if len(min_cycle_separating_cut(k).fragments[0]) == n:
                    return k, perm, seed
    raise RuntimeError("no cyclically 5-connected join found")


def main():
    DATA.mkdir(exist_ok=True)
    write("k4", from_nx(nx.complete_graph(4)), "complete graph K4")
    write("k33", from_nx(nx.complete_bipartite_graph(3, 3)), "complete bipartite graph K3,3")
    write("petersen", petersen(), "Petersen graph; outer cycle 0-4, spokes i~i+5, inner pentagram")
    write("dodecahedron", from_nx(nx.dodecahedral_graph()), "networkx.dodecahedral_graph()")
    write("prism", from_nx(nx.circular_ladder_graph(3)), "triangular prism, networkx.circular_ladder_graph(3)")
    write("cube", from_nx(nx.hypercube_graph(3)), "3-cube, networkx.hypercube_graph(3)")
    write("theta", CubicGraph.from_pairs(2, [(0, 1)] * 3), "two vertices joined by three parallel edges")
    write("dumbbell", CubicGraph.from_pairs(2, [(0, 0), (1, 1), (0, 1)]), "two loops joined by a bridge")
    j, perm, seed = petersen_join()
    write("petersen_join", j, f"two copies of petersen minus path 1-0-4 joined by boundary matching {perm}; "
          f"vertices shuffled with random.Random({seed})")
    for n, seed in [(14, 146), (18, 250), (18, 786), (20, 1386), (22, 813)]:
        g = from_nx(nx.random_regular_graph(3, n, seed=seed))
        assert girth(g) >= 5 and zeta_oracle(g) == 5
        write(f"r{n}_{seed}", g, f"networkx.random_regular_graph(3, {n}, seed={seed}); girth>=5, zeta=5 by exhaustive oracle")
    write("c5_part", CubicGraph.from_pairs(5, [(i, (i + 1) % 5) for i in range(5)]), "five-cycle part (a side of the Petersen spoke cut)")
    write("petersen_part", remove_path2(petersen(), 1, 0, 4).graph, "petersen minus the path 1-0-4")
    write("dodecahedron_part", remove_path2(from_nx(nx.dodecahedral_graph()), 0, 1, 2).graph, "dodecahedron minus the path 0-1-2")


if __name__ == "__main__":
    main()
