"""Exact search for distinguishing colorings of H_n.

Two engines:

* an edge-by-edge backtracking search for any ``(n, mode, k)``, with colors
  introduced in first-use order to factor out color relabeling;
* a vertex-by-vertex search for proper colorings with exactly ``n`` colors,
  where every palette must be a permutation of ``1..n``.  Vertex 0 is pinned
  to the identity permutation.

Infeasible is only reported after the search space is exhausted; running out
of budget gives Unknown.
"""

from __future__ import annotations

import enum
import itertools
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .constructions import _bfs_order
from .errors import DomainError, RangeError
from .hypercube import Coloring, coloring_from_palettes, edge_from_index, edge_index
from .verify import distinguishes, is_proper

ORACLE_CAP = 1 << 28


class Status(enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass
class SearchOutcome:
    status: Status
    witness: Coloring | tuple[int, ...] | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    budget: Budget = field(default_factory=Budget)

    def __post_init__(self):
        if (self.status is Status.FEASIBLE) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the status is Feasible")


class _OutOfBudget(Exception):
    pass


class _Meter:
    def __init__(self, budget: Budget, deadline: float | None = None):
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()
        if deadline is None and budget.max_seconds is not None:
            deadline = self.start + budget.max_seconds
        self.deadline = deadline

    def tick(self):
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise _OutOfBudget
        if self.deadline is not None and not self.nodes & 1023 and time.perf_counter() > self.deadline:
            raise _OutOfBudget

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def _check_witness(c: Coloring, mode: str) -> None:
    # a failure here is a bug in the search, not a property of the instance
    if not distinguishes(c).ok or (mode == "proper" and not is_proper(c).ok):
        raise AssertionError(f"search produced an invalid witness for n={c.n}, k={c.k}")


# -- edge-by-edge search ------------------------------------------------------

def vertex_completion_order(n: int) -> list[int]:
    """Edge indices grouped so that vertices 0, 1, 2, ... complete in turn."""
    order, seen = [], set()
    for v in range(1 << n):
        for dim in range(1, n + 1):
            idx = edge_index(n, v, dim)
            if idx not in seen:
                seen.add(idx)
                order.append(idx)
    return order


class EdgeSearch:
    """Backtracking over edges in a fixed order.

    A vertex's palette is checked against all finished palettes as soon as its
    last incident edge is colored.  With ``symmetry_breaking`` the colors are
    introduced in first-use order along the edge order, so among colorings
    equal up to a color bijection only the one in that normal form is visited.
    """

    def __init__(self, n: int, k: int, mode: str, order: list[int] | None = None,
                 symmetry_breaking: bool = True):
        self.n, self.k, self.mode = n, k, mode
        self.proper = mode == "proper"
        if order is None:
            order = vertex_completion_order(n)
        self.order = order
        self.symmetry_breaking = symmetry_breaking
        self.ends = []
        for idx in order:
            v, dim = edge_from_index(n, idx)
            self.ends.append((v, v ^ (1 << (dim - 1)), dim - 1))
        self.reset()

    def reset(self):
        n = self.n
        self.colors = [0] * (n << (n - 1))
        self.pal = [[0] * n for _ in range(1 << n)]
        self.remaining = [n] * (1 << n)
        self.used = [0] * (1 << n)
        self.finished: dict[tuple[int, ...], int] = {}
        self.top = 0

    def _push(self, pos: int, col: int):
        """Color edge ``order[pos]``; returns (palettes finished by it, clash flag)."""
        u, w, d = self.ends[pos]
        self.colors[self.order[pos]] = col
        added = []
        for x in (u, w):
            self.pal[x][d] = col
            self.used[x] |= 1 << col
            self.remaining[x] -= 1
        clash = False
        for x in (u, w):
            if self.remaining[x] == 0:
                key = tuple(self.pal[x])
                if key in self.finished:
                    clash = True
                    break
                self.finished[key] = x
                added.append(key)
        return added, clash

    def _pop(self, pos: int, col: int, added):
        u, w, d = self.ends[pos]
        for key in added:
            del self.finished[key]
        for x in (u, w):
            self.pal[x][d] = 0
            self.used[x] &= ~(1 << col)
            self.remaining[x] += 1
        self.colors[self.order[pos]] = 0

    def candidates(self, pos: int, top: int) -> list[int]:
        u, w, _ = self.ends[pos]
        hi = min(self.k, top + 1) if self.symmetry_breaking else self.k
        blocked = self.used[u] | self.used[w] if self.proper else 0
        return [c for c in range(1, hi + 1) if not blocked >> c & 1]

    def replay(self, prefix: tuple[int, ...]) -> bool:
        """Apply a prefix of colors; False if it already clashes."""
        self.reset()
        for pos, col in enumerate(prefix):
            _added, clash = self._push(pos, col)
            if clash:
                return False
            self.top = max(self.top, col)
        return True

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        out = []

        def walk(pos, top, acc):
            if pos == depth or pos == len(self.order):
                out.append(tuple(acc))
                return
            for col in self.candidates(pos, top):
                added, clash = self._push(pos, col)
                if not clash:
                    acc.append(col)
                    walk(pos + 1, max(top, col), acc)
                    acc.pop()
                self._pop(pos, col, added)

        self.reset()
        walk(0, 0, [])
        return out

    def run(self, meter: _Meter, start: int = 0) -> list[int] | None:
        """Depth-first search from ``start``; returns the color array or None."""
        order_len = len(self.order)

        def dfs(pos: int, top: int) -> bool:
            meter.tick()
            if pos == order_len:
                return True
            for col in self.candidates(pos, top):
                added, clash = self._push(pos, col)
                if not clash and dfs(pos + 1, max(top, col)):
                    return True
                self._pop(pos, col, added)
            return False

        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, order_len + 200))
        try:
            if dfs(start, self.top):
                return list(self.colors)
            return None
        finally:
            sys.setrecursionlimit(limit)


# -- permutation CSP ----------------------------------------------------------

class PermutationSearch:
    """Assign a distinct permutation of ``1..n`` to every vertex of H_n.

    Neighbors across dimension ``i`` must agree in position ``i``.  Vertices
    are visited in breadth-first order from 0 and candidates in lexicographic
    order.  ``parallel_cap`` bounds how many edges of one dimension may carry
    the same color.
    """

    def __init__(self, n: int, symmetry_breaking: bool = True, parallel_cap: int | None = None,
                 forward_check: bool = True):
        self.n = n
        self.perms = list(itertools.permutations(range(1, n + 1)))
        self.by_entry = {}
        for idx, p in enumerate(self.perms):
            for i, col in enumerate(p):
                self.by_entry[(i, col)] = self.by_entry.get((i, col), 0) | (1 << idx)
        self.order = _bfs_order(n)
        self.symmetry_breaking = symmetry_breaking
        self.parallel_cap = parallel_cap
        self.forward_check = forward_check

    def _allowed(self, v: int, assign: list[int], free: int) -> int:
        cand = free
        for i in range(self.n):
            a = assign[v ^ (1 << i)]
            if a >= 0:
                cand &= self.by_entry[(i, self.perms[a][i])]
        return cand

    def run(self, meter: _Meter) -> list[tuple[int, ...]] | None:
        n, perms, order = self.n, self.perms, self.order
        assign = [-1] * (1 << n)
        counts = [[0] * (n + 1) for _ in range(n)]
        cap = self.parallel_cap

        def dfs(j: int, free: int) -> bool:
            meter.tick()
            if j == len(order):
                return True
            v = order[j]
            cand = self._allowed(v, assign, free)
            if j == 0 and self.symmetry_breaking:
                cand &= 1
            while cand:
                low = cand & -cand
                cand ^= low
                idx = low.bit_length() - 1
                p = perms[idx]
                fresh = [i for i in range(n) if assign[v ^ (1 << i)] < 0]
                if cap is not None and any(counts[i][p[i]] >= cap for i in fresh):
                    continue
                assign[v] = idx
                rest = free & ~low
                ok = True
                if self.forward_check:
                    for i in fresh:
                        if not self._allowed(v ^ (1 << i), assign, rest):
                            ok = False
                            break
                if ok:
                    for i in fresh:
                        counts[i][p[i]] += 1
                    if dfs(j + 1, rest):
                        return True
                    for i in fresh:
                        counts[i][p[i]] -= 1
                assign[v] = -1
            return False

        if dfs(0, (1 << len(perms)) - 1):
            return [perms[a] for a in assign]
        return None


def permutation_csp(n: int, budget: Budget = Budget(), symmetry_breaking: bool = True,
                    r2_pruning: bool = False) -> SearchOutcome:
    """Decide whether H_n has a proper distinguishing coloring with exactly n colors.

    ``r2_pruning`` (n = 4 only) caps every (dimension, color) class at two
    edges, which any such coloring of H_4 must satisfy.
    """
    if not 2 <= n <= 6:
        raise RangeError(f"permutation_csp supports 2 <= n <= 6, got {n}")
    if r2_pruning and n != 4:
        raise DomainError("r2_pruning is only justified for n = 4")
    meter = _Meter(budget)
    engine = PermutationSearch(n, symmetry_breaking, parallel_cap=2 if r2_pruning else None)
    try:
        found = engine.run(meter)
    except _OutOfBudget:
        return SearchOutcome(Status.UNKNOWN, None, meter.nodes, meter.elapsed, budget)
    if found is None:
        return SearchOutcome(Status.INFEASIBLE, None, meter.nodes, meter.elapsed, budget)
    witness = coloring_from_palettes(n, n, "proper", found)
    _check_witness(witness, "proper")
    return SearchOutcome(Status.FEASIBLE, witness, meter.nodes, meter.elapsed, budget)


# -- front door ---------------------------------------------------------------

def _run_subtree(args):
    n, k, mode, order, symmetry_breaking, prefix, max_nodes, deadline = args
    engine = EdgeSearch(n, k, mode, order, symmetry_breaking)
    meter = _Meter(Budget(max_nodes=max_nodes), deadline=deadline)
    if not engine.replay(prefix):
        return "done", None, 0
    try:
        found = engine.run(meter, start=len(prefix))
    except _OutOfBudget:
        return "budget", None, meter.nodes
    return "done", found, meter.nodes


def _edge_search(n, k, mode, budget, symmetry_breaking, deterministic_witness, workers):
    order = list(range(n << (n - 1))) if deterministic_witness else None
    engine = EdgeSearch(n, k, mode, order, symmetry_breaking)
    start = time.perf_counter()
    if workers <= 1:
        meter = _Meter(budget)
        try:
            found = engine.run(meter)
        except _OutOfBudget:
            return Status.UNKNOWN, None, meter.nodes, meter.elapsed
        status = Status.FEASIBLE if found is not None else Status.INFEASIBLE
        return status, found, meter.nodes, meter.elapsed

    # subtree-parallel: split on a prefix of the edge order, node budget per subtree
    depth = 1
    prefixes = engine.prefixes(depth)
    while len(prefixes) < 4 * workers and depth < min(len(engine.order), 12):
        depth += 1
        prefixes = engine.prefixes(depth)
    deadline = None if budget.max_seconds is None else start + budget.max_seconds
    tasks = [(n, k, mode, engine.order, symmetry_breaking, p, budget.max_nodes, deadline)
             for p in prefixes]
    nodes, unknown, found = 0, False, None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_subtree, t) for t in tasks]
        # consume in prefix order so the first witness is the sequential one
        for fut in futures:
            state, colors, used = fut.result()
            nodes += used
            if colors is not None:
                found = colors
                break
            unknown |= state == "budget"
        for fut in futures:
            fut.cancel()
    elapsed = time.perf_counter() - start
    if found is not None:
        return Status.FEASIBLE, found, nodes, elapsed
    return (Status.UNKNOWN if unknown else Status.INFEASIBLE), None, nodes, elapsed


def feasible(n: int, mode: str, k: int, budget: Budget = Budget(), *,
             symmetry_breaking: bool = True, deterministic_witness: bool = False,
             workers: int = 1) -> SearchOutcome:
    """Decide whether H_n has a distinguishing ``k``-coloring in ``mode``.

    Proper instances with ``k == n`` and ``n <= 6`` go to the permutation
    search; everything else to the edge search, which colors edges so that
    vertices 0, 1, 2, ... finish in turn.  With ``deterministic_witness`` it
    runs in edge-index order instead, so the first witness found is the
    lexicographically smallest color array (much slower beyond n = 3).
    """
    if n < 2:
        raise RangeError(f"feasible needs n >= 2, got {n}")
    if k < 1:
        raise RangeError(f"feasible needs k >= 1, got {k}")
    if mode not in ("general", "proper"):
        raise DomainError(f"unknown mode {mode!r}")
    if mode == "proper" and k == n and n <= 6 and not deterministic_witness:
        return permutation_csp(n, budget, symmetry_breaking)
    status, found, nodes, elapsed = _edge_search(
        n, k, mode, budget, symmetry_breaking, deterministic_witness, workers
    )
    witness = None
    if found is not None:
        witness = Coloring(n, k, mode, np.array(found))
        _check_witness(witness, mode)
    return SearchOutcome(status, witness, nodes, elapsed, budget)


@dataclass
class MinColorsResult:
    k_min: int | None
    witness: Coloring | None
    outcomes: dict[int, SearchOutcome]

    @property
    def status(self) -> Status:
        return Status.FEASIBLE if self.k_min is not None else Status.UNKNOWN


def color_floor(n: int, mode: str) -> int:
    """Smallest k worth probing: 2 in general mode, the chromatic index n when proper."""
    return n if mode == "proper" else 2


def min_colors(n: int, mode: str, k_max: int, budget: Budget = Budget(), **kwargs) -> MinColorsResult:
    """Smallest ``k <= k_max`` with a Feasible verdict, all smaller ``k`` Infeasible.

    ``k_min`` is None when some probe ran out of budget or nothing up to
    ``k_max`` was feasible; ``outcomes`` says which.
    """
    if n < 2:
        raise RangeError(f"min_colors needs n >= 2, got {n}")
    outcomes = {}
    for k in range(color_floor(n, mode), k_max + 1):
        out = feasible(n, mode, k, budget, **kwargs)
        outcomes[k] = out
        if out.status is Status.FEASIBLE:
            return MinColorsResult(k, out.witness, outcomes)
        if out.status is Status.UNKNOWN:
            break
    return MinColorsResult(None, None, outcomes)


def brute_force_oracle(n: int, mode: str, k: int) -> SearchOutcome:
    """Plain enumeration of all ``k**(n 2**(n-1))`` colorings, no pruning at all."""
    if n < 1 or k < 1:
        raise RangeError("n and k must be positive")
    edges = n << (n - 1)
    if k ** edges > ORACLE_CAP:
        raise RangeError(f"{k}^{edges} colorings exceed the oracle cap 2^28")
    if mode not in ("general", "proper"):
        raise DomainError(f"unknown mode {mode!r}")
    start = time.perf_counter()
    incident = [[edge_index(n, v, i) for i in range(1, n + 1)] for v in range(1 << n)]
    tried = 0
    for colors in itertools.product(range(1, k + 1), repeat=edges):
        tried += 1
        pals = [tuple(colors[e] for e in inc) for inc in incident]
        if mode == "proper" and any(len(set(p)) < n for p in pals):
            continue
        if len(set(pals)) == len(pals):
            witness = Coloring(n, k, mode, np.array(colors))
            return SearchOutcome(Status.FEASIBLE, witness, tried, time.perf_counter() - start)
    return SearchOutcome(Status.INFEASIBLE, None, tried, time.perf_counter() - start)
