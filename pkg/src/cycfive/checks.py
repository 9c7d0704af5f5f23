"""Invariant battery used by ``cycfive verify``.

Each check returns a ``Check`` rather than raising, so that a report can list
every failing clause at once.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .completion import (
    CyclicPart,
    complete,
    choose_permutation,
    extend,
    girth_condition,
    make_part,
    single_vertex_completions,
    single_vertex_obstruction,
)
from .cyccut import min_cycle_separating_cut
from .errors import CycFiveError, InvariantViolation, IsFiveCycle
from .graph import (
    CubicGraph,
    boundary,
    cycle_rank,
    girth,
    induced,
    is_connected,
    is_two_connected,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def sample_acyclic_set(g: CubicGraph, rng: random.Random, max_size: int) -> frozenset:
    """Grow a random vertex set whose induced subgraph is a tree.

    A vertex joins only if it sends exactly one edge into the current set.
    """
    loopless = [v for v in range(g.n) if not g.has_edge(v, v)]
    if not loopless:
        return frozenset()
    start = rng.choice(loopless)
    chosen = {start}
    target = rng.randint(1, max_size)
    while len(chosen) < target:
        frontier = sorted(
            w
            for v in chosen
            for w in g.neighbors(v)
            if w not in chosen
            and sum(1 for u, _ in g.incident(w) if u in chosen) == 1
            and not g.has_edge(w, w)
        )
        if not frontier:
            break
        chosen.add(rng.choice(frontier))
    return frozenset(chosen)


def tree_boundary_samples(g: CubicGraph, count: int, seed: int = 0, max_size: int = 8):
    """Yield ``(vertex set, boundary size)`` for random tree-inducing sets."""
    rng = random.Random(seed)
    for _ in range(count):
        xs = sample_acyclic_set(g, rng, min(max_size, g.n - 1))
        if not xs:
            return
        yield xs, len(boundary(g, xs))


def _part_checks(label: str, h: CyclicPart) -> list[Check]:
    out = []
    if h.is_five_cycle:
        try:
            complete(h)
            out.append(Check(f"{label}:five_cycle_exception", False, "completed a five-cycle"))
        except IsFiveCycle:
            out.append(Check(f"{label}:five_cycle_exception", True))
        return out
    perms = list(permutations(h.A))
    disagree = [p for p in perms if girth_condition(h, p) != (girth(extend(h, p).graph) >= 5)]
    out.append(Check(f"{label}:girth_condition_equivalence", not disagree, f"{len(disagree)} disagreements"))
    try:
        p = choose_permutation(h)
        out.append(Check(f"{label}:girth_extension_exists", True, str(list(p))))
    except CycFiveError as exc:
        out.append(Check(f"{label}:girth_extension_exists", False, str(exc)))
    try:
        e = complete(h)
        out.append(Check(f"{label}:completion", True, f"repair={e.repair_branch}"))
    except CycFiveError as exc:
        out.append(Check(f"{label}:completion", False, f"{type(exc).__name__}: {exc}"))
    if single_vertex_obstruction(h):
        found = single_vertex_completions(h)
        out.append(Check(f"{label}:single_vertex_obstruction", not found, f"{len(found)} completions"))
    return out


def verify_part(g: CubicGraph) -> list[Check]:
    try:
        h = CyclicPart(g)
    except InvariantViolation as exc:
        return [Check(f"part:{exc.clause}", False, str(exc))]
    return [Check("part:valid", True)] + _part_checks("part", h)


def verify_graph(g: CubicGraph, host: bool = False, samples: int = 100, seed: int = 0) -> list[Check]:
    checks = [Check("cubic", g.is_cubic()), Check("connected", is_connected(g))]
    if not all(c.passed for c in checks):
        return checks
    bad = [sorted(xs) for xs, b in tree_boundary_samples(g, samples, seed) if b != len(xs) + 2]
    checks.append(Check("acyclic_boundary_law", not bad, f"{samples} samples, {len(bad)} failures"))

    res = min_cycle_separating_cut(g)
    gi, beta = girth(g), cycle_rank(g)
    checks.append(Check("zeta_le_girth", res.zeta <= gi, f"zeta={res.zeta} girth={gi}"))
    checks.append(Check("zeta_le_cycle_rank", res.zeta <= beta, f"zeta={res.zeta} beta={beta}"))
    if res.witness is not None:
        checks.append(Check("witness_independent", res.witness.is_independent()))
        subs = [induced(g, side)[0] for side in res.fragments]
        checks.append(Check("fragments_connected", all(is_connected(s) for s in subs)))
        if res.zeta > 3:
            checks.append(Check("fragments_two_connected", all(is_two_connected(s) for s in subs)))
    if host:
        checks.append(Check("host_zeta_5", res.zeta == 5, f"zeta={res.zeta}"))
    if res.zeta == 5 and res.witness is not None:
        for i, side in enumerate(res.fragments):
            try:
                h = make_part(g, res.witness, side)
            except InvariantViolation as exc:
                checks.append(Check(f"side{i}:{exc.clause}", False, str(exc)))
                continue
            checks += _part_checks(f"side{i}", h)
    return checks
