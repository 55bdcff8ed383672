"""Sequence irregularity strength of small graphs with a global edge ordering.

A bijection from the edges to ``1..|E|`` fixes, at every vertex, the order in
which the colors of its incident edges are read.  A coloring distinguishes
the graph if the resulting color sequences are pairwise distinct.

Everything here is exhaustive and intended for graphs with a handful of
edges.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, FormatError, RangeError
from .hypercube import edge_from_index
from .search import Budget, SearchOutcome, Status, _Meter, _OutOfBudget

MAX_STRENGTH_EDGES = 8
MAX_ORDERING_EDGES = 20


@dataclass(frozen=True)
class EdgeOrderedGraph:
    """Simple graph on ``0..num_vertices-1``; ``ordering[j]`` is the global index of ``edges[j]``."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    ordering: tuple[int, ...]

    def __post_init__(self):
        edges = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "ordering", tuple(int(x) for x in self.ordering))
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{self.num_vertices - 1}")
        if len(set(edges)) != len(edges):
            raise DomainError("repeated edge")
        check_ordering(self.ordering, len(edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def with_ordering(self, ordering: Sequence[int]) -> "EdgeOrderedGraph":
        return EdgeOrderedGraph(self.num_vertices, self.edges, tuple(ordering))

    def incident(self, v: int, ordering: Sequence[int] | None = None) -> list[int]:
        """Positions of the edges at ``v``, sorted by global index."""
        ordering = self.ordering if ordering is None else ordering
        return sorted((j for j, e in enumerate(self.edges) if v in e), key=lambda j: ordering[j])

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def components(self) -> list[set[int]]:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        groups: dict[int, set[int]] = {}
        for x in range(self.num_vertices):
            groups.setdefault(find(x), set()).add(x)
        return list(groups.values())


def check_ordering(ordering: Sequence[int], m: int) -> None:
    if sorted(ordering) != list(range(1, m + 1)):
        raise DomainError(f"ordering {tuple(ordering)} is not a bijection onto 1..{m}")


def graph(num_vertices: int, edges: Iterable[tuple[int, int]], ordering: Sequence[int] | None = None) -> EdgeOrderedGraph:
    """Convenience constructor; the default ordering follows the edge list."""
    edges = tuple(edges)
    if ordering is None:
        ordering = range(1, len(edges) + 1)
    return EdgeOrderedGraph(num_vertices, edges, tuple(ordering))


@dataclass(frozen=True)
class DegreeProfile:
    counts: dict[int, int]  # degree -> number of vertices, degree 0 included

    @property
    def max_degree(self) -> int:
        return max(self.counts, default=0)


def degree_profile(g: EdgeOrderedGraph) -> DegreeProfile:
    counts: dict[int, int] = {}
    for d in g.degrees():
        counts[d] = counts.get(d, 0) + 1
    return DegreeProfile(dict(sorted(counts.items())))


def global_palette(g: EdgeOrderedGraph, colors: Sequence[int], v: int,
                   ordering: Sequence[int] | None = None) -> tuple[int, ...]:
    if len(colors) != g.num_edges:
        raise DomainError(f"expected {g.num_edges} edge colors, got {len(colors)}")
    return tuple(colors[j] for j in g.incident(v, ordering))


def distinguishes_graph(g: EdgeOrderedGraph, colors: Sequence[int], ordering: Sequence[int] | None = None) -> bool:
    pals = [global_palette(g, colors, v, ordering) for v in range(g.num_vertices)]
    return len(set(pals)) == len(pals)


def int_root_ceil(x: int, i: int) -> int:
    """Smallest integer ``k >= 1`` with ``k**i >= x``, by binary search."""
    if i < 1:
        raise DomainError("root order must be positive")
    lo, hi = 1, max(1, x)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** i >= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


def mg_bound(g: EdgeOrderedGraph) -> int:
    """Counting lower bound: max over degrees i of the least k with k**i >= n_i."""
    if g.num_vertices == 0:
        raise DomainError("empty graph")
    profile = degree_profile(g)
    if profile.counts.get(0):
        raise DomainError("graph has isolated vertices, which can never be told apart by palettes")
    return max(int_root_ceil(cnt, deg) for deg, cnt in profile.counts.items())


def _check_strength_input(g: EdgeOrderedGraph) -> None:
    if g.num_edges > MAX_STRENGTH_EDGES:
        raise RangeError(f"strength search is limited to {MAX_STRENGTH_EDGES} edges, got {g.num_edges}")
    for comp in g.components():
        if len(comp) == 1:
            raise DomainError(f"vertex {next(iter(comp))} is isolated")
        if len(comp) == 2:
            raise DomainError(f"component {sorted(comp)} is a K2, whose ends always share a palette")


def _ordered_search(g: EdgeOrderedGraph, ordering: Sequence[int], k: int, meter: _Meter) -> list[int] | None:
    """Backtracking over edges in global order with first-use color order."""
    m, nv = g.num_edges, g.num_vertices
    seq = sorted(range(m), key=lambda j: ordering[j])
    last = {}
    for pos, j in enumerate(seq):
        for x in g.edges[j]:
            last[x] = pos
    finishing = [[x for x in g.edges[j] if last[x] == pos] for pos, j in enumerate(seq)]
    colors = [0] * m
    pal: list[list[int]] = [[] for _ in range(nv)]
    seen: set[tuple[int, ...]] = set()
    # an isolated vertex finishes before any edge is colored
    for x in range(nv):
        if x not in last:
            if () in seen:
                return None
            seen.add(())

    def dfs(pos: int, top: int) -> bool:
        meter.tick()
        if pos == m:
            return True
        j = seq[pos]
        for col in range(1, min(k, top + 1) + 1):
            colors[j] = col
            for x in g.edges[j]:
                pal[x].append(col)
            added, clash = [], False
            for x in finishing[pos]:
                key = tuple(pal[x])
                if key in seen:
                    clash = True
                    break
                seen.add(key)
                added.append(key)
            if not clash and dfs(pos + 1, max(top, col)):
                return True
            for key in added:
                seen.discard(key)
            for x in g.edges[j]:
                pal[x].pop()
            colors[j] = 0
        return False

    return list(colors) if dfs(0, 0) else None


def feasible_for_ordering(g: EdgeOrderedGraph, ordering: Sequence[int] | None = None, k: int = 2,
                          budget: Budget = Budget()) -> SearchOutcome:
    """Is there a ``k``-coloring whose global palettes are pairwise distinct?

    The witness, if any, is the tuple of edge colors indexed like ``g.edges``.
    """
    ordering = g.ordering if ordering is None else tuple(ordering)
    check_ordering(ordering, g.num_edges)
    if g.num_edges > MAX_ORDERING_EDGES:
        raise RangeError(f"ordering search is limited to {MAX_ORDERING_EDGES} edges")
    if k < 1:
        raise RangeError("k must be positive")
    meter = _Meter(budget)
    try:
        found = _ordered_search(g, ordering, k, meter)
    except _OutOfBudget:
        return SearchOutcome(Status.UNKNOWN, None, meter.nodes, meter.elapsed, budget)
    if found is None:
        return SearchOutcome(Status.INFEASIBLE, None, meter.nodes, meter.elapsed, budget)
    if not distinguishes_graph(g, found, ordering):
        raise AssertionError("ordering search produced an invalid witness")
    return SearchOutcome(Status.FEASIBLE, tuple(found), meter.nodes, meter.elapsed, budget)


def _edge_permutation(g: EdgeOrderedGraph, vperm: Sequence[int]) -> list[int]:
    pos = {e: j for j, e in enumerate(g.edges)}
    out = []
    for u, v in g.edges:
        a, b = vperm[u], vperm[v]
        key = (min(a, b), max(a, b))
        if key not in pos:
            raise DomainError(f"{tuple(vperm)} is not an automorphism")
        out.append(pos[key])
    return out


def orderings(g: EdgeOrderedGraph, automorphisms: Sequence[Sequence[int]] | None = None) -> Iterator[tuple[int, ...]]:
    """All orderings of ``g``'s edges, one per orbit when automorphisms are given.

    An ordering is skipped if some supplied automorphism maps it to a
    lexicographically smaller one, so every orbit keeps its minimum.
    """
    m = g.num_edges
    eperms = [_edge_permutation(g, a) for a in automorphisms or ()]
    for o in itertools.permutations(range(1, m + 1)):
        skip = False
        for ep in eperms:
            image = [0] * m
            for j, t in enumerate(ep):
                image[t] = o[j]
            if tuple(image) < o:
                skip = True
                break
        if not skip:
            yield o


@dataclass
class StrengthResult:
    """``value`` is None when the answer is Unknown (budget or ``k_max`` reached).

    ``ordering``/``coloring`` hold a witness for the value found: for the
    specific strength a good ordering and its coloring, for the general
    strength the last ordering that failed below ``value`` (if any).
    """

    value: int | None
    ordering: tuple[int, ...] | None = None
    coloring: tuple[int, ...] | None = None
    orderings_checked: int = 0
    elapsed: float = 0.0


def specific_strength(g: EdgeOrderedGraph, k_max: int = 4, budget: Budget = Budget(),
                      automorphisms: Sequence[Sequence[int]] | None = None) -> StrengthResult:
    """Least k such that SOME ordering admits a distinguishing k-coloring."""
    _check_strength_input(g)
    start = time.perf_counter()
    checked = 0
    for k in range(1, k_max + 1):
        unknown = False
        for o in orderings(g, automorphisms):
            checked += 1
            out = feasible_for_ordering(g, o, k, budget)
            if out.status is Status.FEASIBLE:
                return StrengthResult(k, o, out.witness, checked, time.perf_counter() - start)
            unknown |= out.status is Status.UNKNOWN
        if unknown:
            break
    return StrengthResult(None, orderings_checked=checked, elapsed=time.perf_counter() - start)


def general_strength(g: EdgeOrderedGraph, k_max: int = 4, budget: Budget = Budget(),
                     automorphisms: Sequence[Sequence[int]] | None = None) -> StrengthResult:
    """Least k such that EVERY ordering admits a distinguishing k-coloring."""
    _check_strength_input(g)
    start = time.perf_counter()
    checked = 0
    bad = None
    for k in range(1, k_max + 1):
        unknown = False
        failed = None
        for o in orderings(g, automorphisms):
            checked += 1
            out = feasible_for_ordering(g, o, k, budget)
            if out.status is Status.INFEASIBLE:
                failed = o
                break
            unknown |= out.status is Status.UNKNOWN
        if failed is not None:
            bad = failed
            continue
        if unknown:
            break
        return StrengthResult(k, bad, None, checked, time.perf_counter() - start)
    return StrengthResult(None, bad, None, checked, time.perf_counter() - start)


def hypercube_ordering(n: int) -> EdgeOrderedGraph:
    """H_n with edges numbered dimension by dimension (global index = edge index + 1)."""
    if not 1 <= n <= 10:
        raise RangeError(f"hypercube_ordering supports 1 <= n <= 10, got {n}")
    m = n << (n - 1)
    edges = [tuple(edge_from_index(n, idx).endpoints()) for idx in range(m)]
    return EdgeOrderedGraph(1 << n, tuple(edges), tuple(range(1, m + 1)))


def vertex_from_string(s: str) -> int:
    """'01' -> 2: the first character is coordinate 1, stored in bit 0."""
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def h2_claim_graph() -> EdgeOrderedGraph:
    """H2 with e1 = {00, 01}, e2 = {00, 10}, e3 = {10, 11}, e4 = {01, 11}."""
    named = [("00", "01"), ("00", "10"), ("10", "11"), ("01", "11")]
    edges = [(vertex_from_string(a), vertex_from_string(b)) for a, b in named]
    return EdgeOrderedGraph(4, tuple(edges), (1, 2, 3, 4))


@dataclass
class H2CheckReport:
    colorings_checked: int
    distinguishing: list[tuple[int, ...]]
    search_status: Status
    claimed_infeasible: bool = True

    @property
    def status(self) -> Status:
        return Status.FEASIBLE if self.distinguishing else Status.INFEASIBLE

    @property
    def agrees_with_claim(self) -> bool:
        return (self.status is Status.INFEASIBLE) == self.claimed_infeasible


def h2_claim_check() -> H2CheckReport:
    """Enumerate all 16 two-colorings of the H2 ordering claimed to need three colors.

    The pruned search is run as well; the two verdicts must match.
    """
    g = h2_claim_graph()
    good = []
    total = 0
    for colors in itertools.product((1, 2), repeat=g.num_edges):
        total += 1
        if distinguishes_graph(g, colors):
            good.append(colors)
    searched = feasible_for_ordering(g, None, 2).status
    report = H2CheckReport(total, good, searched)
    if report.status is not searched:
        raise AssertionError("enumeration and search disagree on the H2 ordering")
    return report


# -- edge-list files ------------------------------------------------------------

def parse_edge_list(text: str) -> EdgeOrderedGraph:
    """Parse the edge-list format.

    ``#`` starts a comment line; every other non-blank line is either a pair
    ``u v`` of 0-based vertex ids or a single ``order: i1 i2 ...`` line listing
    0-based edge positions (in file order) from first to last in the global
    ordering.  Without an ``order:`` line the file order is the global order.
    The vertex count is one more than the largest id.
    """
    edges: list[tuple[int, int]] = []
    order_line: list[int] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("order:"):
            if order_line is not None:
                raise FormatError(f"line {lineno}: second order: line")
            try:
                order_line = [int(tok) for tok in line[len("order:"):].split()]
            except ValueError:
                raise FormatError(f"line {lineno}: order: expects integers") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: vertex ids must be non-negative")
        edges.append((u, v))
    if not edges:
        raise FormatError("no edges")
    m = len(edges)
    if order_line is None:
        ordering = tuple(range(1, m + 1))
    else:
        if sorted(order_line) != list(range(m)):
            raise FormatError(f"order: must list each edge position 0..{m - 1} exactly once")
        rank = [0] * m
        for r, j in enumerate(order_line, 1):
            rank[j] = r
        ordering = tuple(rank)
    nv = 1 + max(max(e) for e in edges)
    try:
        return EdgeOrderedGraph(nv, tuple(edges), ordering)
    except DomainError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(g: EdgeOrderedGraph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges]
    by_rank = sorted(range(g.num_edges), key=lambda j: g.ordering[j])
    if by_rank != list(range(g.num_edges)):
        lines.append("order: " + " ".join(map(str, by_rank)))
    return "\n".join(lines) + "\n"
