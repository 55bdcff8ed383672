"""Property checks for hypercube edge colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import DomainError
from .hypercube import Coloring, EdgeRef, canonical_vertices, hamming, palette_matrix


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Any = None

    def __post_init__(self):
        if self.ok != (self.witness is None):
            raise ValueError("a failing verdict needs a witness, a passing one must not carry one")

    def __bool__(self) -> bool:
        return self.ok


def is_proper(c: Coloring) -> Verdict:
    """Check that no two edges at a vertex share a color.

    The witness is the pair of clashing edges ``(EdgeRef, EdgeRef)`` at the
    smallest offending vertex, with the smallest clashing dimension pair.
    """
    pal = palette_matrix(c)
    bad = np.zeros(pal.shape[0], dtype=bool)
    for a in range(c.n):
        for b in range(a + 1, c.n):
            bad |= pal[:, a] == pal[:, b]
    if not bad.any():
        return Verdict(True)
    v = int(np.flatnonzero(bad)[0])
    row = pal[v]
    for a in range(c.n):
        for b in range(a + 1, c.n):
            if row[a] == row[b]:
                return Verdict(
                    False,
                    (EdgeRef(v & ~(1 << a), a + 1), EdgeRef(v & ~(1 << b), b + 1)),
                )
    raise AssertionError("unreachable")


def distinguishes(c: Coloring) -> Verdict:
    """Check that all palettes are pairwise distinct.

    Palettes are sorted lexicographically and compared with their successor.
    On failure the witness is the lexicographically smallest colliding vertex
    pair ``(u, v)`` with ``u < v``.
    """
    pal = palette_matrix(c)
    order = np.lexsort(pal.T[::-1])
    srt = pal[order]
    same = (srt[1:] == srt[:-1]).all(axis=1)
    if not same.any():
        return Verdict(True)
    # label each run of equal palettes, then find the smallest vertex in a
    # run of length >= 2 together with the runner-up of its run
    run_id = np.concatenate([[0], np.cumsum(~same)])
    best = None
    for r in np.unique(run_id[1:][same]):
        members = np.sort(order[run_id == r])
        pair = (int(members[0]), int(members[1]))
        if best is None or pair < best:
            best = pair
    return Verdict(False, best)


def color_dimension_profile(c: Coloring) -> dict[int, set[int]]:
    """Map each used color to the set of dimensions in which it occurs."""
    half = 1 << (c.n - 1)
    profile: dict[int, set[int]] = {}
    for dim in range(1, c.n + 1):
        for col in np.unique(c.colors[(dim - 1) * half:dim * half]):
            profile.setdefault(int(col), set()).add(dim)
    return profile


def parallel_color_multiplicity(c: Coloring) -> dict[tuple[int, int], int]:
    half = 1 << (c.n - 1)
    counts = {}
    for dim in range(1, c.n + 1):
        cols, freq = np.unique(c.colors[(dim - 1) * half:dim * half], return_counts=True)
        for col, f in zip(cols, freq):
            counts[(dim, int(col))] = int(f)
    return counts


def palette_permutation_check(c: Coloring) -> bool:
    if c.k != c.n:
        raise DomainError(f"permutation check needs k == n, got k={c.k}, n={c.n}")
    pal = np.sort(palette_matrix(c), axis=1)
    return bool((pal == np.arange(1, c.n + 1)).all())


def parallel_edge_distance(n: int, e1: EdgeRef, e2: EdgeRef) -> int:
    """Distance between two parallel edges: min over the far endpoint pairing.

    For ``e1 = xy`` and ``e2 = x'y'`` this is ``min(dist(x, x'), dist(x, y'))``.
    """
    e1, e2 = EdgeRef(*e1), EdgeRef(*e2)
    if e1.dimension != e2.dimension:
        raise DomainError("edges have different dimensions")
    x = min(e1.endpoints())
    x2, y2 = sorted(e2.endpoints())
    if x == x2:
        raise DomainError("the two edges coincide")
    if max(x, x2) >= 1 << n:
        raise DomainError(f"edges do not belong to H_{n}")
    return min(hamming(x, x2), hamming(x, y2))


def full_report(c: Coloring) -> dict:
    """Summary used by the CLI."""
    pal = palette_matrix(c)
    return {
        "n": c.n,
        "k": c.k,
        "mode": c.mode,
        "colors_used": int(len(np.unique(c.colors))),
        "distinct_palettes": int(len(np.unique(pal, axis=0))),
        "vertices": int(pal.shape[0]),
        "proper": is_proper(c).ok,
        "distinguishes": distinguishes(c).ok,
    }


def edges_of_dimension(n: int, dim: int) -> list[EdgeRef]:
    return [EdgeRef(int(v), dim) for v in canonical_vertices(n, dim)]
