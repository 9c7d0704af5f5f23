"""Graphs shipped with the package, for tests and demos.

``scripts/build_corpus.py`` records how each file was produced.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .completion import CyclicPart, make_part, remove_path2
from .cyccut import min_cycle_separating_cut
from .graph import CubicGraph, parse_graph

HOSTS = [
    "k4", "k33", "prism", "cube", "theta", "dumbbell",
    "petersen", "dodecahedron", "petersen_join",
    "r14_146", "r18_250", "r18_786", "r20_1386", "r22_813",
]
ZETA5_HOSTS = ["petersen", "dodecahedron", "petersen_join", "r14_146", "r18_250", "r18_786", "r20_1386", "r22_813"]
PART_FILES = ["c5_part", "petersen_part", "dodecahedron_part"]

# paths whose removal gives parts on which the first extension needs repair
REPAIR_PATHS = [
    ("r18_786", (5, 10, 8)),  # bridged
    ("r20_1386", (2, 4, 10)),  # bridged
    ("r22_813", (2, 14, 17)),  # two_connected
]


def names() -> list[str]:
    files = resources.files("cycfive.data").iterdir()
    return sorted(f.name[:-4] for f in files if f.name.endswith(".adj"))


def text(name: str) -> str:
    return resources.files("cycfive.data").joinpath(f"{name}.adj").read_text()


@lru_cache(maxsize=None)
def load(name: str) -> CubicGraph:
    return parse_graph(text(name), "adjlist")


@lru_cache(maxsize=None)
def parts() -> tuple[tuple[str, CyclicPart], ...]:
    """Every corpus part with a descriptive label, in a fixed order.

    Stored part files, both sides of the minimum-cut witness of each
    cyclically 5-connected host, the first two 2-path removals of each host
    and the repair-triggering removals.
    """
    out = [(name, CyclicPart(load(name))) for name in PART_FILES]
    for host in ZETA5_HOSTS:
        g = load(host)
        res = min_cycle_separating_cut(g)
        for i, side in enumerate(res.fragments):
            out.append((f"{host}/cut-side{i}", make_part(g, res.witness, side)))
        k = 0
        for y in range(g.n):
            for x, z in ((a, b) for a in g.neighbors(y) for b in g.neighbors(y) if a < b):
                if k < 2:
                    out.append((f"{host}/path-{x}-{y}-{z}", remove_path2(g, x, y, z)))
                    k += 1
    for host, (x, y, z) in REPAIR_PATHS:
        out.append((f"{host}/path-{x}-{y}-{z}", remove_path2(load(host), x, y, z)))
    return tuple(out)
