"""Command-line front end.

Every subcommand prints one JSON report to stdout. Exit codes:
0 success, 1 a verification or oracle comparison failed, 2 unreadable input,
3 violated precondition, 4 five-cycle part, 5 input too large for the oracle.
"""
from __future__ import annotations

import argparse
import math
import sys
import time
from itertools import permutations
from typing import Optional

from . import corpus
from .checks import verify_graph, verify_part
from .completion import (
    CyclicPart,
    Extension,
    complete,
    choose_permutation,
    girth_condition,
    boundary_edge_case,
    make_part,
    remove_path2,
    single_vertex_completions,
    single_vertex_obstruction,
)
from .cyccut import min_cycle_separating_cut
from .errors import CycFiveError, IsFiveCycle, MalformedInput, PreconditionViolated, TooLarge
from .graph import CubicGraph, boundary, cycle_rank, detect_format, girth, parse_graph, serialize_graph
from .oracle import all_girth5_perms, all_min_cuts, timed, zeta_oracle
from .report import Report

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_PRECONDITION, EXIT_FIVE_CYCLE, EXIT_TOO_LARGE = 0, 1, 2, 3, 4, 5


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, MalformedInput):
        return EXIT_PARSE
    if isinstance(exc, IsFiveCycle):
        return EXIT_FIVE_CYCLE
    if isinstance(exc, TooLarge):
        return EXIT_TOO_LARGE
    return EXIT_PRECONDITION


def _num(x):
    return None if x == math.inf else int(x)


def _pairs(cut) -> list:
    return [list(p) for p in cut.pairs()] if cut is not None else None


def read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.startswith("corpus:"):
        return corpus.text(source[len("corpus:"):])
    try:
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {source}: {exc.strerror}") from exc


def to_dot(g: CubicGraph, boundary_vertices=(), added=(), name: str = "G") -> str:
    boundary_vertices, added = set(boundary_vertices), set(added)
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(g.n):
        if v in added:
            lines.append(f'  {v} [fillcolor="#dd8452", label="{v}"];')
        elif v in boundary_vertices:
            lines.append(f'  {v} [fillcolor="#4c72b0", fontcolor=white];')
        else:
            lines.append(f"  {v};")
    for e in g.edges:
        lines.append(f"  {e.u} -- {e.v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(g: CubicGraph, fmt: str, boundary_vertices=(), added=()) -> str:
    if fmt == "dot":
        return to_dot(g, boundary_vertices, added)
    return serialize_graph(g, fmt)


def _part_json(h: CyclicPart) -> dict:
    d = {
        "n": h.graph.n,
        "boundary_vertices": list(h.A),
        "is_five_cycle": h.is_five_cycle,
        "adjlist": serialize_graph(h.graph, "adjlist"),
    }
    if not h.is_five_cycle:
        d["case"] = boundary_edge_case(h)
    if h.origin is not None:
        d["host_vertices"] = list(h.origin.vertex_map)
        d["host_boundary_vertices"] = [h.origin.vertex_map[a] for a in h.A]
    return d


def _extension_json(e: Extension) -> dict:
    d = {
        "perm": list(e.perm),
        "initial_perm": list(e.initial_perm) if e.initial_perm else None,
        "repair_fired": e.repaired,
        "repair_branch": e.repair_branch,
        "added_vertices": {"x": e.x, "y": e.y, "z": e.z},
        "added_edges": {name: list(edge.ends) for name, edge in e.added},
        "n": e.graph.n,
        "girth": _num(girth(e.graph)),
    }
    if e.part.origin is not None:
        d["perm_host_labels"] = [e.part.origin.vertex_map[a] for a in e.perm]
    if e.decomposition is not None:
        dec = e.decomposition
        d["decomposition"] = {
            "cut": _pairs(dec.cut),
            "oriented_perm": list(dec.perm),
            "reversed": dec.reversed,
            "c1": sorted(dec.c1),
            "c2": sorted(dec.c2),
            "b": list(dec.b),
            "c": list(dec.c),
            "c2_structure": dec.c2_structure.tag.value,
            "apex": dec.c2_structure.apex,
            "apex_slot": dec.apex_slot,
        }
    return d


# -- subcommands ------------------------------------------------------------


def cmd_analyze(g: CubicGraph, args) -> tuple[dict, int]:
    res = min_cycle_separating_cut(g)
    out = {
        "n": g.n,
        "m": g.m,
        "girth": _num(girth(g)),
        "beta": cycle_rank(g),
        "zeta": res.zeta,
        "witness": _pairs(res.witness),
        "witness_independent": res.witness.is_independent() if res.witness else None,
        "fragments": [sorted(s) for s in res.fragments] if res.fragments else None,
    }
    if args.figure:
        from .plotting import draw_graph

        draw_graph(g, args.figure, f"zeta = {res.zeta}", side=res.fragments[0] if res.fragments else (),
                   cut=res.witness.pairs() if res.witness else ())
    return out, EXIT_OK


def cmd_decompose(g: CubicGraph, args) -> tuple[dict, int]:
    res = min_cycle_separating_cut(g)
    if res.zeta != 5 or res.witness is None:
        raise PreconditionViolated(f"decomposition needs zeta = 5 with a witness cut, got zeta = {res.zeta}")
    parts = [_part_json(make_part(g, res.witness, side)) for side in res.fragments]
    if args.figure:
        from .plotting import draw_graph

        draw_graph(g, args.figure, "5-cut decomposition", side=res.fragments[0], cut=res.witness.pairs())
    return {"zeta": 5, "cut": _pairs(res.witness), "parts": parts}, EXIT_OK


def _load_part(g: CubicGraph, args) -> CyclicPart:
    if args.side:
        side = [int(t) for t in args.side.split(",")]
        return make_part(g, boundary(g, side), side)
    if args.remove_path:
        x, y, z = (int(t) for t in args.remove_path.split(","))
        return remove_path2(g, x, y, z)
    return CyclicPart(g)


def cmd_complete(g: CubicGraph, args) -> tuple[dict, int]:
    h = _load_part(g, args)
    e = complete(h)
    res = min_cycle_separating_cut(e.graph)
    out = {"part": _part_json(h), "completion": _extension_json(e), "zeta": res.zeta}
    out["single_vertex"] = {
        "obstruction_strict": single_vertex_obstruction(h),
        "obstruction_lax": single_vertex_obstruction(h, strict=False),
        "completions": len(single_vertex_completions(h)),
    }
    text = _emit(e.graph, args.emit, h.A, (e.x, e.y, e.z))
    out["emit_format"] = args.emit
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        out["emitted_to"] = args.output
    else:
        out["emitted"] = text
    if args.figure:
        from .plotting import draw_graph

        draw_graph(e.graph, args.figure, f"completion, perm {list(e.perm)}", boundary=h.A, added=(e.x, e.y, e.z))
    return out, EXIT_OK


def cmd_verify(g: CubicGraph, args) -> tuple[dict, int]:
    deficient = sum(1 for v in range(g.n) if g.degree(v) == 2)
    if not g.is_cubic() and deficient == 5 and not args.host:
        checks = verify_part(g)
        mode = "part"
    else:
        checks = verify_graph(g, host=args.host, samples=args.samples, seed=args.seed)
        mode = "graph"
    ok = all(c.passed for c in checks)
    rows = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
    return {"mode": mode, "checks": rows, "all_passed": ok}, EXIT_OK if ok else EXIT_FAILED


def cmd_oracle(g: CubicGraph, args) -> tuple[dict, int]:
    reports = []
    if args.check == "zeta":
        reports.append(timed("zeta", lambda: zeta_oracle(g), lambda: min_cycle_separating_cut(g).zeta))
    elif args.check == "cuts":
        cuts = all_min_cuts(g)
        res = min_cycle_separating_cut(g)
        oracle_min = len(cuts[0]) if cuts else None
        fast_min = len(res.witness) if res.witness else None
        reports.append(timed("min_cut_size", lambda: oracle_min, lambda: fast_min))
        witness = _pairs(res.witness)
        reports.append(timed("witness_is_minimum", lambda: [_pairs(c) for c in cuts], lambda: witness,
                             lambda o, f: (f is None and not o) or f in o))
    else:
        h = CyclicPart(g)
        oracle_perms = [list(p) for p in all_girth5_perms(h)]
        fast_perms = [list(p) for p in permutations(h.A) if girth_condition(h, p)]
        reports.append(timed("girth5_perms", lambda: oracle_perms, lambda: fast_perms))
        try:
            chosen = [list(choose_permutation(h))]
        except IsFiveCycle:
            chosen = []
        reports.append(timed("chosen_perm", lambda: oracle_perms, lambda: chosen,
                             lambda o, f: (not o and not f) or (bool(f) and f[0] in o)))
    rows = []
    for r in reports:
        row = {"subject": r.subject, "oracle": r.oracle_value, "fast": r.fast_value, "agree": r.agree}
        if args.timings:
            row["elapsed"] = round(r.elapsed, 6)
        rows.append(row)
    ok = all(r.agree for r in reports)
    return {"check": args.check, "rows": rows, "all_agree": ok}, EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "analyze": cmd_analyze,
    "decompose": cmd_decompose,
    "complete": cmd_complete,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cycfive", description="Cyclic 5-connectivity tools for cubic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("source", help="input file, '-' for stdin, or corpus:NAME")
        sp.add_argument("--format", choices=["auto", "graph6", "adjlist"], default="auto")
        sp.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")
        return sp

    a = common(sub.add_parser("analyze", help="girth, cycle rank, cyclic connectivity and a minimum cut"))
    a.add_argument("--figure", help="write a drawing of the graph and its cut to this file")

    d = common(sub.add_parser("decompose", help="split a cyclically 5-connected graph along a 5-cut"))
    d.add_argument("--figure", help="write a drawing of the cut to this file")

    c = common(sub.add_parser("complete", help="complete a cyclic part by a path of length two"))
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--part", action="store_true", help="input is the part itself (default)")
    mode.add_argument("--side", help="input is a zeta=5 host; comma-separated vertices of one side of a 5-cut")
    mode.add_argument("--remove-path", help="input is a zeta=5 host; comma-separated path x,y,z to delete")
    c.add_argument("--emit", choices=["adjlist", "graph6", "dot"], default="adjlist")
    c.add_argument("-o", "--output", help="write the emitted graph here instead of into the report")
    c.add_argument("--figure", help="write a drawing of the completion to this file")

    v = common(sub.add_parser("verify", help="run the invariant battery"))
    v.add_argument("--host", action="store_true", help="require the input to be cyclically 5-connected")
    v.add_argument("--samples", type=int, default=100, help="random acyclic subgraphs to test")
    v.add_argument("--seed", type=int, default=0)

    o = common(sub.add_parser("oracle", help="compare fast paths with brute force"))
    o.add_argument("--check", choices=["zeta", "perms", "cuts"], default="zeta")
    return p


def run(argv: Optional[list] = None) -> tuple[Report, int]:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    inp = {"source": args.source, "format": args.format if args.format != "auto" else "adjlist"}
    try:
        text = read_source(args.source)
        fmt = detect_format(text) if args.format == "auto" else args.format
        inp["format"] = fmt
        g = parse_graph(text, fmt)
        inp.update(n=g.n, m=g.m)
        results, code = COMMANDS[args.command](g, args)
        report = Report(args.command, inp, results, code)
    except CycFiveError as exc:
        code = exit_code_for(exc)
        err = {"type": type(exc).__name__, "message": str(exc), "clause": getattr(exc, "clause", None)}
        report = Report(args.command, inp, {}, code, err)
    if args.timings:
        report.timings = {"total_seconds": round(time.perf_counter() - t0, 6)}
    return report, code


def main(argv: Optional[list] = None) -> int:
    report, code = run(argv)
    sys.stdout.write(report.to_json())
    if report.error:
        print(f"cycfive: {report.error['type']}: {report.error['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
