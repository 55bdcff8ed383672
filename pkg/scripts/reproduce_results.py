"""Recompute the headline numbers: constructions, minimum color counts, bounds.

    python scripts/reproduce_results.py [--general-max 16] [--proper-max 12]
"""

import argparse
import time
from dataclasses import dataclass

from cubepalette import (
    Status,
    distinguishes,
    general_two_coloring,
    is_proper,
    min_colors,
    permutation_csp,
    proper_n_coloring,
    proper_table,
)
from cubepalette.seqirr import general_strength, h2_claim_check, hypercube_ordering, mg_bound, specific_strength


@dataclass
class Config:
    general_max: int = 16
    proper_max: int = 12


def row(label, value, t0):
    print(f"{label:<44} {value:<22} {time.perf_counter() - t0:8.3f} s")


def main(cfg: Config):
    print("-- two-colorings --")
    for n in range(2, cfg.general_max + 1):
        t0 = time.perf_counter()
        c = general_two_coloring(n)
        row(f"H{n} general, k=2", "distinguishes" if distinguishes(c) else "FAILS", t0)

    print("-- proper colorings --")
    for n in (2, 3, 4):
        t0 = time.perf_counter()
        c = proper_table(n)
        ok = is_proper(c).ok and distinguishes(c).ok
        row(f"H{n} proper table, k={c.k}", "ok" if ok else "FAILS", t0)
    for n in range(5, cfg.proper_max + 1):
        t0 = time.perf_counter()
        c = proper_n_coloring(n)
        ok = is_proper(c).ok and distinguishes(c).ok
        row(f"H{n} proper, k={n}", "ok" if ok else "FAILS", t0)

    print("-- exact minima --")
    for n in (2, 3, 4):
        t0 = time.perf_counter()
        res = min_colors(n, "proper", 6)
        row(f"H{n} proper k_min", res.k_min, t0)
    t0 = time.perf_counter()
    out = permutation_csp(4)
    row("H4 proper with 4 colors (permutation search)", f"{out.status}, {out.nodes_explored} nodes", t0)
    t0 = time.perf_counter()
    out = permutation_csp(5)
    row("H5 proper with 5 colors (permutation search)", f"{out.status}, {out.nodes_explored} nodes", t0)

    print("-- global orderings --")
    for n in range(2, 7):
        t0 = time.perf_counter()
        row(f"M_G(H{n})", mg_bound(hypercube_ordering(n)), t0)
    t0 = time.perf_counter()
    h2 = hypercube_ordering(2)
    row("H2 specific / general strength",
        f"{specific_strength(h2).value} / {general_strength(h2).value}", t0)
    t0 = time.perf_counter()
    rep = h2_claim_check()
    flag = "agrees" if rep.agrees_with_claim else "disagrees"
    row("H2 claimed ordering, k=2", f"{rep.status} ({flag})", t0)
    assert rep.status in (Status.FEASIBLE, Status.INFEASIBLE)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--general-max", type=int, default=Config.general_max)
    p.add_argument("--proper-max", type=int, default=Config.proper_max)
    a = p.parse_args()
    main(Config(a.general_max, a.proper_max))
