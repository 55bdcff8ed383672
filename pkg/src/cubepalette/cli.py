"""Command-line front end.

Subcommands::

    construct --mode {general,proper} --n N --out FILE
    verify FILE [--require-proper]
    search --mode {general,proper} --n N (--k K | --min [--k-max K])
           [--max-nodes N] [--max-seconds S] [--threads T]
           [--deterministic-witness] [--out FILE]
    bound (--graph FILE | --hypercube N)
    seqirr (--paper-h2-check | --graph FILE [--k K | --specific | --general] [--k-max K])
    export --in FILE [--format {dot,json}] [--out FILE]

Exit codes: 0 success or decisive verdict, 1 verification failed, 2 invalid
request, 3 I/O or format error, 4 search budget exhausted (Unknown).

Graph files are plain text.  Lines starting with ``#`` are comments; every
other line is ``u v`` (0-based vertex ids) except for at most one line
``order: i1 i2 ...`` that lists 0-based edge positions, in file order, from
first to last in the global ordering.  Without it the file order is used.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import documents
from .constructions import general_two_coloring, proper_n_coloring, proper_table
from .errors import DomainError, FormatError, RangeError
from .hypercube import MAX_DIMENSION, Coloring
from .search import Budget, Status, color_floor, feasible, min_colors
from .seqirr import (
    feasible_for_ordering,
    general_strength,
    hypercube_ordering,
    mg_bound,
    h2_claim_check,
    parse_edge_list,
    specific_strength,
)
from .verify import distinguishes, full_report, is_proper

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_IO = 3
EXIT_UNKNOWN = 4


def construct(mode: str, n: int) -> tuple[Coloring, str]:
    if mode == "general":
        if not 2 <= n <= MAX_DIMENSION:
            raise RangeError(f"general construction needs 2 <= n <= {MAX_DIMENSION}")
        return general_two_coloring(n), f"general two-coloring of H{n}, inductive doubling"
    if not 2 <= n <= MAX_DIMENSION:
        raise RangeError(f"proper construction needs 2 <= n <= {MAX_DIMENSION}")
    if n <= 4:
        return proper_table(n), f"proper table for H{n}"
    return proper_n_coloring(n), f"proper {n}-coloring of H{n}, inductive from the H5 base"


def _print_report(c: Coloring) -> None:
    r = full_report(c)
    print(
        f"H{r['n']}: mode={r['mode']} k={r['k']} colors_used={r['colors_used']} "
        f"vertices={r['vertices']} distinct_palettes={r['distinct_palettes']} "
        f"proper={r['proper']} distinguishes={r['distinguishes']}"
    )


def cmd_construct(args) -> int:
    c, provenance = construct(args.mode, args.n)
    documents.write_document(args.out, c, provenance)
    _print_report(c)
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    c, _prov = documents.read_document(args.path)
    _print_report(c)
    d = distinguishes(c)
    if not d.ok:
        print(f"FAIL: vertices with equal palettes {d.witness}")
        return EXIT_FAILED
    if args.require_proper:
        p = is_proper(c)
        if not p.ok:
            a, b = p.witness
            print(f"FAIL: edges {tuple(a)} and {tuple(b)} share a color at a vertex")
            return EXIT_FAILED
    print("OK")
    return EXIT_OK


def _budget(args) -> Budget:
    return Budget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)


def _write_witness(args, witness: Coloring, provenance: str) -> None:
    if args.out:
        documents.write_document(args.out, witness, provenance)
        print(f"witness written to {args.out}")
    else:
        print("witness colors:", " ".join(str(int(x)) for x in witness.colors))


def cmd_search(args) -> int:
    if args.k is None and not args.min:
        raise DomainError("search needs --k K or --min")
    if args.n < 2:
        raise RangeError("search needs n >= 2")
    opts = dict(
        symmetry_breaking=not args.no_symmetry_breaking,
        deterministic_witness=args.deterministic_witness,
        workers=args.threads,
    )
    budget = _budget(args)
    if args.min:
        k_max = args.k_max if args.k_max is not None else color_floor(args.n, args.mode) + 3
        res = min_colors(args.n, args.mode, k_max, budget, **opts)
        for k, out in res.outcomes.items():
            print(f"k={k}: {out.status} (nodes={out.nodes_explored}, {out.elapsed:.3f} s)")
        if res.k_min is None:
            last = list(res.outcomes.values())[-1] if res.outcomes else None
            if last is not None and last.status is Status.UNKNOWN:
                print("k_min = Unknown (budget exhausted)")
                return EXIT_UNKNOWN
            print(f"k_min > {k_max}")
            return EXIT_OK
        print(f"k_min = {res.k_min}")
        _write_witness(args, res.witness, f"search witness, {args.mode} H{args.n} k={res.k_min}")
        return EXIT_OK
    out = feasible(args.n, args.mode, args.k, budget, **opts)
    print(f"{out.status} (n={args.n}, mode={args.mode}, k={args.k}, "
          f"nodes={out.nodes_explored}, {out.elapsed:.3f} s)")
    if out.status is Status.UNKNOWN:
        return EXIT_UNKNOWN
    if out.status is Status.FEASIBLE:
        _write_witness(args, out.witness, f"search witness, {args.mode} H{args.n} k={args.k}")
    return EXIT_OK


def _load_graph(args):
    if getattr(args, "hypercube", None) is not None:
        return hypercube_ordering(args.hypercube)
    return parse_edge_list(Path(args.graph).read_text())


def cmd_bound(args) -> int:
    g = _load_graph(args)
    print(f"M_G = {mg_bound(g)}")
    return EXIT_OK


def cmd_seqirr(args) -> int:
    if args.paper_h2_check:
        rep = h2_claim_check()
        print(f"H2 ordering e1={{00,01}} e2={{00,10}} e3={{10,11}} e4={{01,11}}: "
              f"{rep.colorings_checked} two-colorings enumerated")
        for colors in rep.distinguishing:
            print("  distinguishing:", colors)
        print(f"verdict: {rep.status} (pruned search: {rep.search_status})")
        flag = "AGREES" if rep.agrees_with_claim else "DISAGREES"
        print(f"published claim that no distinguishing 2-coloring exists: {flag}")
        return EXIT_OK
    if args.graph is None:
        raise DomainError("seqirr needs --graph FILE or --paper-h2-check")
    g = _load_graph(args)
    budget = _budget(args)
    if args.k is not None:
        out = feasible_for_ordering(g, None, args.k, budget)
        print(f"{out.status} (k={args.k}, nodes={out.nodes_explored})")
        if out.status is Status.FEASIBLE:
            print("coloring:", " ".join(map(str, out.witness)))
        return EXIT_UNKNOWN if out.status is Status.UNKNOWN else EXIT_OK
    which = []
    if args.specific or not args.general:
        which.append(("specific", specific_strength))
    if args.general or not args.specific:
        which.append(("general", general_strength))
    code = EXIT_OK
    for label, fn in which:
        res = fn(g, args.k_max, budget)
        if res.value is None:
            print(f"{label} strength: Unknown (k_max={args.k_max})")
            code = EXIT_UNKNOWN
        else:
            print(f"{label} strength = {res.value} ({res.orderings_checked} ordering checks)")
    try:
        print(f"M_G = {mg_bound(g)}")
    except DomainError:
        pass
    return code


def cmd_export(args) -> int:
    c, prov = documents.read_document(args.input)
    text = documents.to_dot(c) if args.format == "dot" else documents.dumps(c, prov)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cube-palette", description="Distinguishing edge colorings of hypercubes.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a known distinguishing coloring")
    c.add_argument("--mode", choices=("general", "proper"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a coloring document")
    v.add_argument("path")
    v.add_argument("--require-proper", action="store_true")
    v.set_defaults(func=cmd_verify)

    def budget_flags(sp):
        sp.add_argument("--max-nodes", type=int, default=None)
        sp.add_argument("--max-seconds", type=float, default=None)

    s = sub.add_parser("search", help="exact feasibility / minimum color search")
    s.add_argument("--mode", choices=("general", "proper"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--min", action="store_true")
    s.add_argument("--k-max", type=int)
    budget_flags(s)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--deterministic-witness", action="store_true")
    s.add_argument("--no-symmetry-breaking", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    b = sub.add_parser("bound", help="counting lower bound M_G")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--graph")
    g.add_argument("--hypercube", type=int)
    b.set_defaults(func=cmd_bound)

    q = sub.add_parser("seqirr", help="sequence irregularity strength of small graphs")
    q.add_argument("--graph")
    q.add_argument("--paper-h2-check", action="store_true")
    mode = q.add_mutually_exclusive_group()
    mode.add_argument("--k", type=int)
    mode.add_argument("--specific", action="store_true")
    mode.add_argument("--general", action="store_true")
    q.add_argument("--k-max", type=int, default=4)
    budget_flags(q)
    q.set_defaults(func=cmd_seqirr)

    e = sub.add_parser("export", help="re-emit a document as DOT or JSON")
    e.add_argument("--in", dest="input", required=True)
    e.add_argument("--format", choices=("dot", "json"), default="dot")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
