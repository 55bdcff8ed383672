"""Place the 32 listed H5 palettes on vertices and print the resulting table.

Shows how many consistent placements exist (vertex 0 pinned to the first
listed palette) and checks the frozen assignment against the first one.
"""

import argparse
from dataclasses import dataclass

from cubepalette.constructions import H5_LISTED_PALETTES, H5_VERTEX_ASSIGNMENT, h5_base, reconstruct_from_palettes
from cubepalette.documents import vertex_label
from cubepalette.hypercube import palette
from cubepalette.verify import color_dimension_profile, distinguishes, is_proper


@dataclass
class Config:
    show_table: bool = True


def count_placements(pals, limit=64):
    """Count consistent placements by a plain DFS over BFS vertex order."""
    n = 5
    order = sorted(range(1 << n), key=lambda v: (bin(v).count("1"), v))
    placed = {order[0]: 0}
    used = {0}
    found = 0

    def ok(v, j):
        p = pals[j]
        return all(pals[placed[v ^ (1 << i)]][i] == p[i] for i in range(n) if v ^ (1 << i) in placed)

    def dfs(pos):
        nonlocal found
        if found >= limit:
            return
        if pos == len(order):
            found += 1
            return
        v = order[pos]
        for j in range(len(pals)):
            if j not in used and ok(v, j):
                placed[v] = j
                used.add(j)
                dfs(pos + 1)
                used.discard(j)
                del placed[v]

    dfs(1)
    return found


def main(cfg: Config):
    pals = [tuple(int(ch) for ch in s) for s in H5_LISTED_PALETTES]
    assign = reconstruct_from_palettes(5, H5_LISTED_PALETTES)
    print("reconstruction:", "found" if assign is not None else "none")
    print("matches frozen assignment:", assign == list(H5_VERTEX_ASSIGNMENT))
    print("consistent placements with vertex 0 pinned:", count_placements(pals))
    c = h5_base()
    print("proper:", is_proper(c).ok, " distinguishes:", distinguishes(c).ok)
    print("color-1 dimensions:", sorted(color_dimension_profile(c)[1]))
    if cfg.show_table:
        for v in range(32):
            print(f"  {vertex_label(5, v)}  {''.join(map(str, palette(c, v)))}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--no-table", action="store_true")
    main(Config(show_table=not p.parse_args().no_table))
