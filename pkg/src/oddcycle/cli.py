"""Command-line front end.

Subcommands: classify | orient | color | paint | verify | batch. All machine
output is JSON on stdout (CSV derived from it in batch mode). Exit codes:
0 success, 1 a queried property is false, 2 usage or contract error,
3 an enumeration budget or size cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from pathlib import Path

from .color import bbs_color, choose_edges, tuple_color
from .errors import (
    ClassificationError,
    ContractViolation,
    DemandError,
    EnumerationBudgetError,
    GraphParseError,
    GraphValidationError,
    OddCycleError,
    ProtocolError,
    SizeCapError,
)
from .graphs import Graph, crown_graph, line_graph, parse_graph
from .orient import DemandFunction, LineDigraph, orient_graph
from .paint import exhaustive_paintability, kernel_painter, play_game
from .recognize import classify_graph
from .verify import (
    check_kernel_perfect,
    every_clique_has_sink,
    search_orientation,
    verify_triple_diamond_sharpness,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def threads() -> int:
    env = os.environ.get("ODDCYCLE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _read_graph(path: str, fmt: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if fmt == "auto":
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
    return parse_graph(text, fmt)


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    print(text)


def _load_lists(path: str, g: Graph) -> dict[int, frozenset[int]]:
    raw = json.loads(Path(path).read_text())
    return {int(e): frozenset(colors) for e, colors in raw.items()}


def _uniform_lists(g: Graph, k: int) -> dict[int, frozenset[int]]:
    return {e: frozenset(range(1, k + 1)) for e in range(g.m)}


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    g = _read_graph(args.input, args.format)
    cls = classify_graph(g)
    _emit(cls.to_json(), args.out)
    return EXIT_OK if cls.in_gstar else EXIT_FALSE


def cmd_orient(args) -> int:
    g = _read_graph(args.input, args.format)
    try:
        d, cert = orient_graph(g, args.t)
    except ClassificationError as exc:
        report = {"error": str(exc), "witness": None}
        if exc.witness is not None:
            report["witness"] = {
                "cycle1": sorted(exc.witness[0]),
                "cycle2": sorted(exc.witness[1]),
            }
        _emit(report, args.out)
        return EXIT_FALSE
    report = {
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "t": args.t,
        "arcs": sorted(list(a) for a in d.arcs),
        "max_outdegree": d.max_outdeg(),
        "certificate": cert.to_json(),
    }
    _emit(report, args.out)
    return EXIT_OK


def cmd_color(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.lists:
        lists = _load_lists(args.lists, g)
    elif args.k:
        lists = _uniform_lists(g, args.k)
    else:
        raise ContractViolation("color needs --lists FILE or --k K")
    if args.via == "choose":
        if args.m != 1:
            raise ContractViolation("tuple coloring runs through --via bbs")
        colors = choose_edges(g, lists)
        report = {"colors": {str(e): c for e, c in colors.items()}}
    else:
        t = args.t or max(4, g.max_degree())
        d, cert = orient_graph(g, t)
        if args.m == 1:
            colors = bbs_color(g, d, lists, cert)
            report = {"colors": {str(e): c for e, c in colors.items()}}
        else:
            tup = tuple_color(g, d, lists, args.m, cert)
            report = {"colors": {str(e): sorted(cs) for e, cs in tup.items()}}
    _emit(report, args.out)
    return EXIT_OK


def cmd_paint(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.exact:
        if args.f:
            budgets = args.f
        elif args.k and args.v is not None:
            budgets = {
                e: (g.degree(args.v) if args.v in g.edges[e] else args.k)
                for e in range(g.m)
            }
        else:
            raise ContractViolation("paint --exact needs --f or --k with --v")
        res = exhaustive_paintability(g, budgets, m=args.m)
        _emit({"paintable": res.paintable}, args.out)
        return EXIT_OK if res.paintable else EXIT_FALSE
    t = args.t or max(4, g.max_degree())
    d, cert = orient_graph(g, t)
    budgets = {e: d.outdeg(e) + 1 for e in range(g.m)}
    rng = random.Random(args.seed)

    def lister(state):
        alive = sorted(state.alive)
        return rng.sample(alive, rng.randint(1, len(alive)))

    result = play_game(g, d, budgets, lister, kernel_painter(d, cert), m=args.m)
    _emit(
        {
            "winner": result.winner,
            "budgets": {str(e): budgets[e] for e in budgets},
            "transcript": list(result.transcript),
        },
        args.out,
    )
    return EXIT_OK if result.winner == "Painter" else EXIT_FALSE


def _verify_check(args) -> int:
    data = json.loads(Path(args.check).read_text())
    g = Graph.from_edges(data["n"], [tuple(e) for e in data["edges"]])
    d = LineDigraph(line_graph(g), frozenset(tuple(a) for a in data["arcs"]))
    rep = check_kernel_perfect(d)
    report = {
        "kernel_perfect": rep.ok,
        "max_outdegree": d.max_outdeg(),
        "failing_subset": sorted(rep.failing) if rep.failing else None,
    }
    if "t" in data:
        report["within_cap"] = d.max_outdeg() <= data["t"] - 1
    _emit(report, args.out)
    return EXIT_OK if rep.ok else EXIT_FALSE


def _verify_lemma(args) -> int:
    if args.lemma == "nok4minus":
        diamond = crown_graph(2)
        tip = min(v for v in range(4) if diamond.degree(v) == 2)
        tight = search_orientation(
            diamond, DemandFunction.at_vertex(diamond, 3, tip), "raw", stop_at_first=False
        )
        relaxed = search_orientation(
            diamond, DemandFunction.at_vertex(diamond, 4, tip), "raw"
        )
        report = {
            "orientations_scanned": tight.scanned,
            "found": tight.valid_count,
            "relaxed_cap_found": relaxed.orientation is not None,
        }
        _emit(report, args.out)
        return EXIT_OK if tight.valid_count == 0 else EXIT_FALSE
    if args.lemma == "fig7":
        log = verify_triple_diamond_sharpness()
        _emit(log, args.out)
        return EXIT_OK if log["verified"] else EXIT_FALSE
    raise ContractViolation(f"unknown lemma {args.lemma!r}")


def _verify_maffray(args) -> int:
    from .graphs import glue_at_vertex, complete_graph, cycle_graph, path_graph

    rng = random.Random(args.seed)
    pool = [
        cycle_graph(3),
        crown_graph(2),
        crown_graph(3),
        complete_graph(4),
        cycle_graph(4),
        path_graph(2),
        cycle_graph(6),
    ]
    trials = 0
    disagreements = 0
    budget = args.budget or 1000
    while trials < budget:
        g = rng.choice(pool)
        if rng.random() < 0.5:
            h = rng.choice(pool)
            if g.m + h.m <= 12:
                g = glue_at_vertex(g, h, rng.randrange(g.n), rng.randrange(h.n))
        if g.m > 12:
            continue
        lg = line_graph(g)
        arcs = []
        for e, f in lg.pairs:
            s = rng.randrange(3)
            if s != 1:
                arcs.append((e, f))
            if s != 0:
                arcs.append((f, e))
        d = LineDigraph(lg, frozenset(arcs))
        trials += 1
        if check_kernel_perfect(d).ok != every_clique_has_sink(g, d):
            disagreements += 1
    _emit({"trials": trials, "disagreements": disagreements}, args.out)
    return EXIT_OK if disagreements == 0 else EXIT_FALSE


def _verify_choosable(args) -> int:
    from .verify import check_choosable

    g = _read_graph(args.choosable, args.format)
    if not args.k:
        raise ContractViolation("--choosable needs --k for the uniform list size")
    choosable, bad = check_choosable(
        g, args.k, universe=args.universe, budget=args.budget or 50_000_000
    )
    report = {"choosable": choosable, "universe": args.universe, "k": args.k}
    if bad is not None:
        report["bad_assignment"] = {str(e): sorted(cs) for e, cs in bad.items()}
    _emit(report, args.out)
    return EXIT_OK if choosable else EXIT_FALSE


def cmd_verify(args) -> int:
    if args.check:
        return _verify_check(args)
    if args.choosable:
        return _verify_choosable(args)
    if not args.lemma:
        raise ContractViolation("verify needs --lemma, --check, or --choosable")
    if args.lemma == "maffray":
        return _verify_maffray(args)
    return _verify_lemma(args)


_BATCH_FIELDS = [
    "file", "n", "m", "in_gstar", "in_g1", "verdicts",
    "t", "max_outdegree", "colored", "error",
]


def _classify_one(item: tuple[str, str, str]) -> dict:
    """Full pipeline for one file: classify, then orient and color members."""
    name, path, fmt = item
    row = dict.fromkeys(_BATCH_FIELDS)
    row["file"] = name
    try:
        g = _read_graph(path, fmt)
        cls = classify_graph(g)
        row.update(
            n=g.n,
            m=g.m,
            in_gstar=cls.in_gstar,
            in_g1=cls.in_g1,
            verdicts=sorted({r.verdict for r in cls.per_block}),
        )
        if cls.in_gstar and g.m:
            t = max(4, g.max_degree())
            d, cert = orient_graph(g, t)
            row["t"] = t
            row["max_outdegree"] = d.max_outdeg()
            lists = _uniform_lists(g, t)
            colors = bbs_color(g, d, lists, cert)
            row["colored"] = len(colors) == g.m
    except OddCycleError as exc:
        row["error"] = str(exc)
    return row


def cmd_batch(args) -> int:
    directory = Path(args.input)
    if not directory.is_dir():
        raise ContractViolation(f"{args.input} is not a directory")
    items = [
        (path.name, str(path), args.format)
        for path in sorted(directory.iterdir())
        if path.is_file()
    ]
    workers = min(threads(), len(items)) if items else 1
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_classify_one, items)
    else:
        rows = [_classify_one(item) for item in items]
    report = {"files": len(rows), "results": rows}
    _emit(report, args.out)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=_BATCH_FIELDS)
            writer.writeheader()
            for row in rows:
                flat = dict(row)
                if flat["verdicts"] is not None:
                    flat["verdicts"] = ";".join(flat["verdicts"])
                writer.writerow(flat)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddcycle",
        description=(
            "Recognize graphs whose odd cycles pairwise share at most one "
            "edge, orient their line graphs kernel-perfectly, color edges "
            "from lists, and play the online coloring game."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument(
            "--format",
            choices=["edgelist", "graph6", "auto"],
            default="auto",
            help="input format (auto: by file extension)",
        )
        p.add_argument("--out", help="also write the JSON report to this path")

    p = sub.add_parser("classify", help="block verdicts and class membership")
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orient", help="kernel-perfect orientation with cap t-1")
    add_common(p)
    p.add_argument("--t", type=int, required=True, help="uniform demand, >= max(4, max degree)")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("color", help="list edge coloring")
    add_common(p)
    p.add_argument("--lists", help="JSON file of per-edge color lists")
    p.add_argument("--k", type=int, help="uniform lists 1..k instead of --lists")
    p.add_argument("--via", choices=["choose", "bbs"], default="choose")
    p.add_argument("--t", type=int, help="demand for --via bbs (default max(4, max degree))")
    p.add_argument("--m", type=int, default=1, help="tuple size (with --via bbs)")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("paint", help="marking game: exact solve or simulation")
    add_common(p)
    p.add_argument("--exact", action="store_true", help="exact solver over both players")
    p.add_argument("--f", type=int, help="uniform budget for --exact")
    p.add_argument("--k", type=int, help="anchored budget away from --v")
    p.add_argument("--v", type=int, help="anchor vertex for --k")
    p.add_argument("--m", type=int, default=1, help="selections needed per edge")
    p.add_argument("--t", type=int, help="orientation demand for simulation")
    p.add_argument("--seed", type=int, default=0, help="Lister seed for simulation")
    p.set_defaults(func=cmd_paint)

    p = sub.add_parser("verify", help="run a stored impossibility or an orientation check")
    p.add_argument("--lemma", choices=["nok4minus", "fig7", "maffray"])
    p.add_argument("--check", help="orientation JSON produced by orient")
    p.add_argument("--choosable", metavar="GRAPH", help="exhaustive list-coloring check")
    p.add_argument("--k", type=int, help="uniform list size for --choosable")
    p.add_argument("--universe", type=int, default=7, help="color universe for --choosable")
    p.add_argument("--budget", type=int, default=None,
                   help="trials for --lemma maffray (default 1000); assignment "
                        "cap for --choosable (default 50 million)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["edgelist", "graph6", "auto"], default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="classify every graph file in a directory")
    add_common(p)
    p.add_argument("--csv", help="also write a CSV summary to this path")
    p.set_defaults(func=cmd_batch)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (EnumerationBudgetError, SizeCapError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_BUDGET
    except (
        GraphParseError,
        GraphValidationError,
        ContractViolation,
        DemandError,
        ProtocolError,
        FileNotFoundError,
        json.JSONDecodeError,
    ) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except ClassificationError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
