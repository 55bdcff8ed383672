"""Compare the specific sequence irregularity strength with M_G on small graphs.

Walks the networkx graph atlas (all graphs up to 7 vertices), keeps graphs
without isolated vertices or K2 components and with at most --max-edges
edges, and reports every graph where the two numbers differ.
"""

import argparse
import time
from dataclasses import dataclass

import networkx as nx

from cubepalette.seqirr import general_strength, graph, mg_bound, specific_strength


@dataclass
class Config:
    max_edges: int = 6
    k_max: int = 4  # raised to M_G + 1 per graph
    with_general: bool = False


def eligible(G, max_edges):
    if G.number_of_edges() == 0 or G.number_of_edges() > max_edges:
        return False
    return all(len(comp) > 2 for comp in nx.connected_components(G))


def main(cfg: Config):
    t0 = time.perf_counter()
    checked, mismatches = 0, []
    for G in nx.graph_atlas_g():
        if not eligible(G, cfg.max_edges):
            continue
        g = graph(G.number_of_nodes(), list(G.edges()))
        bound = mg_bound(g)
        k_max = max(cfg.k_max, bound + 1)
        spec = specific_strength(g, k_max).value
        gen = general_strength(g, k_max).value if cfg.with_general else None
        checked += 1
        if spec != bound:
            mismatches.append((sorted(G.edges()), bound, spec, gen))
        elif cfg.with_general and gen != bound:
            print(f"general strength {gen} > M_G {bound}: {sorted(G.edges())}")
    print(f"{checked} graphs with <= {cfg.max_edges} edges checked in {time.perf_counter() - t0:.1f} s")
    if not mismatches:
        print("specific strength equals M_G on every one")
    for edges, bound, spec, gen in mismatches:
        print(f"MISMATCH M_G={bound} specific={spec} general={gen}: {edges}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-edges", type=int, default=Config.max_edges)
    p.add_argument("--k-max", type=int, default=Config.k_max)
    p.add_argument("--with-general", action="store_true")
    a = p.parse_args()
    main(Config(a.max_edges, a.k_max, a.with_general))
