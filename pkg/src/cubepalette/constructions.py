"""Explicit distinguishing colorings of hypercubes.

Two families are built inductively by doubling H_{n-1} into H_n:

* ``general_two_coloring`` uses colors {1, 2} for every n >= 2.  The second
  copy gets the first copy's colors swapped, and the matching edges are
  colored so that vertices with complementary palettes get different colors.
* ``proper_n_coloring`` is a proper n-coloring for every n >= 5, seeded with a
  fixed H5 coloring whose color-1 edges sit only in dimensions 3 and 5.

Small proper cases (n = 2, 3, 4) are fixed tables.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError, RangeError
from .hypercube import (
    MAX_DIMENSION,
    Coloring,
    Palette,
    canonical_vertices,
    check_dimension,
    coloring_from_palettes,
    palette_matrix,
    squeeze_array,
)

# Colors 0/1 of the two-color drawing are stored as 1/2.
H2_GENERAL_COLORS = (1, 2, 1, 2)

H2_PROPER_COLORS = (3, 4, 1, 2)

# Transcribed from the H3 drawing: horizontal = dim 1, vertical = dim 2,
# diagonal = dim 3, outer square at coordinate 3 equal to 0.
H3_PROPER_COLORS = (1, 1, 3, 4, 3, 2, 1, 2, 4, 4, 2, 3)

# Transcribed from the H4 drawing with the same convention; the two H3 copies
# are joined by dimension-4 edges, all colored 5.
H4_PROPER_COLORS = (
    3, 1, 4, 2, 2, 4, 3, 1,
    4, 2, 1, 3, 3, 1, 4, 2,
    2, 1, 3, 4, 1, 4, 2, 3,
    5, 5, 5, 5, 5, 5, 5, 5,
)

# The 32 palettes of the base H5 coloring, in the order they are listed in the
# source.  No vertex labels are given there; see reconstruct_from_palettes.
H5_LISTED_PALETTES = (
    "45321", "35421", "54321", "53421", "43521", "35124", "54231", "52134",
    "24351", "23451", "42351", "32451", "24531", "25134", "43251", "32154",
    "54123", "43125", "52143", "32145", "54132", "45231", "53142", "32541",
    "25143", "35142", "24153", "43152", "23145", "35241", "24135", "42531",
)

# Output of reconstruct_from_palettes(5, H5_LISTED_PALETTES): entry v is the
# position in H5_LISTED_PALETTES of the palette carried by vertex v.
H5_VERTEX_ASSIGNMENT = (
    0, 4, 24, 28, 8, 12, 16, 20, 1, 5, 25, 29, 9, 13, 17, 21,
    2, 6, 26, 30, 10, 14, 18, 22, 3, 7, 27, 31, 11, 15, 19, 23,
)


@dataclass(frozen=True)
class GeneralStepTrace:
    """Record of the matching step that lifts a 2-coloring of H_{n-1} to H_n.

    ``pairs`` lists ``(v, partner)`` with ``v < partner``, both in H_{n-1},
    whose palettes are entrywise complementary; ``matching_colors`` holds the
    colors given to their dimension-n edges.
    """

    pairs: tuple[tuple[int, int], ...]
    matching_colors: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ProperBaseProperties:
    special_color: int
    allowed_dims: frozenset[int]


H5_BASE_PROPERTIES = ProperBaseProperties(special_color=1, allowed_dims=frozenset({3, 5}))


def complement_palette(p: Sequence[int]) -> Palette:
    if any(x not in (1, 2) for x in p):
        raise DomainError(f"palette {tuple(p)} is not over colors {{1, 2}}")
    return tuple(3 - x for x in p)


def _stack_halves(n: int, first: np.ndarray, second: np.ndarray, matching: np.ndarray) -> np.ndarray:
    """Colors of H_n from the colorings of its two halves and the dimension-n matching.

    For ``i < n`` the block of dimension ``i`` in H_n is the block of H_{n-1}
    for the half with top bit 0 followed by the one with top bit 1.
    """
    h = 1 << (n - 2)
    blocks = []
    for i in range(n - 1):
        blocks.append(first[i * h:(i + 1) * h])
        blocks.append(second[i * h:(i + 1) * h])
    blocks.append(matching)
    return np.concatenate(blocks)


def general_step(prev: Coloring) -> tuple[Coloring, GeneralStepTrace]:
    """Lift a distinguishing {1,2}-coloring of H_{n-1} to H_n."""
    if prev.k != 2:
        raise DomainError("general_step needs a 2-coloring")
    m = prev.n
    n = m + 1
    check_dimension(n, 2)
    pal = palette_matrix(prev).astype(np.int64)
    codes = ((pal - 1) << np.arange(m)).sum(axis=1)
    vertex_of = np.full(1 << m, -1, dtype=np.int64)
    vertex_of[codes] = np.arange(1 << m)
    if (vertex_of < 0).any():
        raise DomainError("input coloring does not distinguish all vertices")
    partner = vertex_of[codes ^ ((1 << m) - 1)]
    v = np.arange(1 << m)
    # first-half vertices are visited in increasing order; the smaller of
    # each complementary pair gets matching color 1
    matching = np.where(v < partner, 1, 2)
    swapped = 3 - prev.colors.astype(np.int64)
    colors = _stack_halves(n, prev.colors.astype(np.int64), swapped, matching)
    lo = v < partner
    trace = GeneralStepTrace(
        pairs=tuple(zip(v[lo].tolist(), partner[lo].tolist())),
        matching_colors=tuple((1, 2) for _ in range(int(lo.sum()))),
    )
    return Coloring(n, 2, "general", colors), trace


def general_two_coloring(n: int) -> Coloring:
    check_dimension(n, 2)
    c = Coloring(2, 2, "general", np.array(H2_GENERAL_COLORS))
    for _ in range(n - 2):
        c, _trace = general_step(c)
    return c


def proper_table(n: int) -> Coloring:
    tables = {2: (4, H2_PROPER_COLORS), 3: (4, H3_PROPER_COLORS), 4: (5, H4_PROPER_COLORS)}
    if n not in tables:
        raise RangeError(f"proper_table covers n in {{2, 3, 4}}, got {n}")
    k, colors = tables[n]
    return Coloring(n, k, "proper", np.array(colors))


def _bfs_order(n: int) -> list[int]:
    order, seen = [], {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        order.append(v)
        for i in range(n):
            w = v ^ (1 << i)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def reconstruct_from_palettes(n: int, palettes: Sequence[Sequence[int] | str]) -> list[int] | None:
    """Place ``2**n`` unlabeled palettes on the vertices of H_n.

    Returns ``assignment`` with ``assignment[v]`` the index of the palette at
    vertex ``v``, such that both ends of every dimension-``i`` edge agree in
    position ``i``; ``None`` if no such placement exists.  Vertex 0 takes
    palette 0, which loses nothing since translations of H_n preserve edge
    dimensions.
    """
    pals = [tuple(int(ch) for ch in p) for p in palettes]
    if len(pals) != 1 << n or any(len(p) != n for p in pals):
        raise DomainError(f"expected {1 << n} palettes of length {n}")
    # by_entry[(i, color)] is a bitset over palette indices
    by_entry: dict[tuple[int, int], int] = {}
    for idx, p in enumerate(pals):
        for i, col in enumerate(p):
            by_entry[(i, col)] = by_entry.get((i, col), 0) | (1 << idx)
    everything = (1 << len(pals)) - 1
    order = _bfs_order(n)
    assign = [-1] * (1 << n)

    def place(j: int, free: int) -> bool:
        if j == len(order):
            return True
        v = order[j]
        cand = free
        for i in range(n):
            w = v ^ (1 << i)
            if assign[w] >= 0:
                cand &= by_entry.get((i, pals[assign[w]][i]), 0)
        while cand:
            low = cand & -cand
            idx = low.bit_length() - 1
            assign[v] = idx
            if place(j + 1, free & ~low):
                return True
            cand ^= low
        assign[v] = -1
        return False

    assign[0] = 0
    if not place(1, everything & ~1):
        return None
    return assign


def h5_base() -> Coloring:
    pals = [H5_LISTED_PALETTES[H5_VERTEX_ASSIGNMENT[v]] for v in range(32)]
    return coloring_from_palettes(5, 5, "proper", [[int(ch) for ch in p] for p in pals])


def dimension_permuted(c: Coloring, perm: Sequence[int]) -> Coloring:
    """Relabel dimensions: an edge of dimension ``i`` becomes one of ``perm[i-1]``.

    The vertex map moves coordinate ``i`` of ``v`` to coordinate ``perm[i-1]``,
    so that ``palette(out, m(v))[perm[i-1]] == palette(c, v)[i]``.
    """
    n = c.n
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(1, n + 1)):
        raise DomainError(f"{perm} is not a permutation of 1..{n}")

    def vmap(v: np.ndarray) -> np.ndarray:
        out = np.zeros_like(v)
        for i, p in enumerate(perm):
            out |= ((v >> i) & 1) << (p - 1)
        return out

    half = 1 << (n - 1)
    colors = np.zeros(c.edge_count, dtype=np.int64)
    for dim in range(1, n + 1):
        target = perm[dim - 1]
        image = vmap(canonical_vertices(n, dim))
        colors[(target - 1) * half + squeeze_array(image, target)] = c.colors[
            (dim - 1) * half:dim * half
        ]
    return Coloring(n, c.k, c.mode, colors)


def color_swapped(c: Coloring, a: int, b: int) -> Coloring:
    if not (1 <= a <= c.k and 1 <= b <= c.k):
        raise RangeError(f"colors {a}, {b} must lie in [1, {c.k}]")
    colors = c.colors.astype(np.int64)
    out = colors.copy()
    out[colors == a] = b
    out[colors == b] = a
    return Coloring(c.n, c.k, c.mode, out)


def proper_n_coloring(n: int) -> Coloring:
    check_dimension(n, 5, MAX_DIMENSION)
    c = h5_base()
    if n == 5:
        return c
    half = 1 << 5
    rotated = dimension_permuted(c, [2, 3, 4, 5, 1])
    c = Coloring(6, 6, "proper", _stack_halves(6, c.colors, rotated.colors, np.full(half, 6)))
    for m in range(7, n + 1):
        swapped = color_swapped(c.with_k(m), m - 1, m - 2)
        colors = _stack_halves(m, c.colors, swapped.colors, np.full(1 << (m - 1), m))
        c = Coloring(m, m, "proper", colors)
    return c
