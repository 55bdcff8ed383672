"""Bit-level model of the hypercube H_n.

Vertices are integers in ``[0, 2**n)``; coordinate ``i`` (1-based) of a vertex
is bit ``i - 1``.  An edge of dimension ``i`` joins ``v`` and ``v ^ (1 << (i-1))``
and is named by its canonical endpoint, the one with that bit cleared.

Edges are numbered dimension-major: all edges of dimension 1 first, then
dimension 2, and so on, each block holding ``2**(n-1)`` edges ordered by the
canonical vertex with the dimension bit squeezed out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError, RangeError

MAX_DIMENSION = 24

Palette = tuple[int, ...]


@dataclass(frozen=True)
class HypercubeDescriptor:
    n: int
    vertex_count: int
    edge_count: int


class EdgeRef(NamedTuple):
    vertex: int
    dimension: int

    def endpoints(self) -> tuple[int, int]:
        return self.vertex, self.vertex ^ (1 << (self.dimension - 1))


def check_dimension(n: int, lo: int = 1, hi: int = MAX_DIMENSION) -> None:
    if not isinstance(n, (int, np.integer)) or not lo <= n <= hi:
        raise RangeError(f"dimension n={n!r} outside [{lo}, {hi}]")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < (1 << n):
        raise RangeError(f"vertex {v} outside [0, {1 << n})")


def make_hypercube(n: int) -> HypercubeDescriptor:
    check_dimension(n)
    return HypercubeDescriptor(n=n, vertex_count=1 << n, edge_count=n << (n - 1))


def squeeze(v: int, dim: int) -> int:
    """Delete bit ``dim - 1`` of ``v`` and shift the higher bits down."""
    low = v & ((1 << (dim - 1)) - 1)
    return low | ((v >> dim) << (dim - 1))


def unsqueeze(s: int, dim: int) -> int:
    """Inverse of :func:`squeeze`, inserting a zero bit at position ``dim - 1``."""
    low = s & ((1 << (dim - 1)) - 1)
    return low | ((s >> (dim - 1)) << dim)


def edge_index(n: int, v: int, dim: int) -> int:
    """Dimension-major index of the dimension-``dim`` edge at ``v``.

    Either endpoint may be passed; the vertex is canonicalized first.
    """
    if not 1 <= dim <= n:
        raise RangeError(f"dimension {dim} outside [1, {n}]")
    _check_vertex(n, v)
    v &= ~(1 << (dim - 1))
    return ((dim - 1) << (n - 1)) + squeeze(v, dim)


def edge_from_index(n: int, idx: int) -> EdgeRef:
    if not 0 <= idx < (n << (n - 1)):
        raise RangeError(f"edge index {idx} outside [0, {n << (n - 1)})")
    dim = (idx >> (n - 1)) + 1
    return EdgeRef(unsqueeze(idx & ((1 << (n - 1)) - 1), dim), dim)


def neighbors(n: int, v: int) -> list[int]:
    _check_vertex(n, v)
    return [v ^ (1 << i) for i in range(n)]


def hamming(u: int, v: int) -> int:
    return (u ^ v).bit_count()


# -- vectorized index tables -------------------------------------------------

def squeeze_array(v: np.ndarray, dim: int) -> np.ndarray:
    low = v & ((1 << (dim - 1)) - 1)
    return low | ((v >> dim) << (dim - 1))


def canonical_vertices(n: int, dim: int) -> np.ndarray:
    """Canonical endpoints of the dimension-``dim`` edges, in index order."""
    s = np.arange(1 << (n - 1), dtype=np.int64)
    low = s & ((1 << (dim - 1)) - 1)
    return low | ((s >> (dim - 1)) << dim)


def incidence_table(n: int) -> np.ndarray:
    """``table[v, i-1]`` is the index of the dimension-``i`` edge at ``v``."""
    v = np.arange(1 << n, dtype=np.int64)
    cols = []
    for dim in range(1, n + 1):
        canon = v & ~(1 << (dim - 1))
        cols.append(((dim - 1) << (n - 1)) + squeeze_array(canon, dim))
    return np.stack(cols, axis=1)


def color_dtype(k: int) -> np.dtype:
    return np.dtype(np.uint8) if k < 256 else np.dtype(np.int32)


@dataclass(frozen=True, eq=False)
class Coloring:
    """A full edge coloring of H_n with colors ``1..k``, stored by edge index."""

    n: int
    k: int
    mode: str
    colors: np.ndarray

    def __post_init__(self):
        check_dimension(self.n)
        if self.k < 1:
            raise RangeError(f"color count k={self.k} must be >= 1")
        if self.mode not in ("general", "proper"):
            raise DomainError(f"unknown mode {self.mode!r}")
        raw = np.asarray(self.colors)
        if raw.shape != (self.n << (self.n - 1),):
            raise DomainError(
                f"expected {self.n << (self.n - 1)} edge colors, got shape {raw.shape}"
            )
        if raw.dtype.kind not in "iu":
            raise DomainError(f"edge colors must be integers, got dtype {raw.dtype}")
        if raw.min() < 1 or raw.max() > self.k:
            raise DomainError(f"edge colors must lie in [1, {self.k}]")
        arr = raw.astype(color_dtype(self.k), copy=True)
        arr.flags.writeable = False
        object.__setattr__(self, "colors", arr)

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return (self.n, self.k, self.mode) == (other.n, other.k, other.mode) and bool(
            np.array_equal(self.colors, other.colors)
        )

    __hash__ = None

    @property
    def edge_count(self) -> int:
        return self.n << (self.n - 1)

    def color_of(self, v: int, dim: int) -> int:
        return int(self.colors[edge_index(self.n, v, dim)])

    def with_k(self, k: int) -> "Coloring":
        return Coloring(self.n, k, self.mode, self.colors)

    def with_mode(self, mode: str) -> "Coloring":
        return Coloring(self.n, self.k, mode, self.colors)


def monochromatic(n: int, color: int = 1, k: int | None = None, mode: str = "general") -> Coloring:
    k = color if k is None else k
    return Coloring(n, k, mode, np.full(n << (n - 1), color))


def palette(c: Coloring, v: int) -> Palette:
    _check_vertex(c.n, v)
    return tuple(int(c.colors[edge_index(c.n, v, i)]) for i in range(1, c.n + 1))


def palette_matrix(c: Coloring) -> np.ndarray:
    """All palettes as a ``(2**n, n)`` array, row ``v`` is the palette of ``v``."""
    return c.colors[incidence_table(c.n)]


def all_palettes(c: Coloring) -> list[Palette]:
    return [tuple(int(x) for x in row) for row in palette_matrix(c)]


def coloring_from_edges(n: int, k: int, mode: str, edge_colors: dict[tuple[int, int], int]) -> Coloring:
    """Build a coloring from ``{(u, w): color}`` with ``u, w`` adjacent vertices."""
    colors = np.zeros(n << (n - 1), dtype=np.int64)
    for (u, w), col in edge_colors.items():
        diff = u ^ w
        if diff == 0 or diff & (diff - 1):
            raise DomainError(f"{u} and {w} are not adjacent in H_{n}")
        colors[edge_index(n, u, diff.bit_length())] = col
    if (colors == 0).any():
        missing = [edge_from_index(n, int(i)) for i in np.flatnonzero(colors == 0)]
        raise DomainError(f"uncolored edges: {missing[:4]}")
    return Coloring(n, k, mode, colors)


def coloring_from_palettes(n: int, k: int, mode: str, palettes: Sequence[Sequence[int]]) -> Coloring:
    """Inverse of :func:`all_palettes`; raises if endpoint palettes disagree."""
    pal = np.asarray(palettes, dtype=np.int64)
    if pal.shape != (1 << n, n):
        raise DomainError(f"expected {1 << n} palettes of length {n}")
    table = incidence_table(n)
    colors = np.zeros(n << (n - 1), dtype=np.int64)
    for dim in range(1, n + 1):
        canon = canonical_vertices(n, dim)
        a = pal[canon, dim - 1]
        b = pal[canon ^ (1 << (dim - 1)), dim - 1]
        if not np.array_equal(a, b):
            bad = int(canon[np.flatnonzero(a != b)[0]])
            raise DomainError(f"palettes disagree on dimension-{dim} edge at vertex {bad}")
        colors[table[canon, dim - 1]] = a
    return Coloring(n, k, mode, colors)
