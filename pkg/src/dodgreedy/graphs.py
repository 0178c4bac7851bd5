"""Undirected simple graphs with exact independence and greedy solvers.

The two central quantities are the independence number (largest independent
set) and the best value achievable by the minimum-degree greedy heuristic
over all of its tie-breaking choices.  Both are computed exactly; searches
carry an explicit state budget and raise instead of approximating.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceededError

DEFAULT_BUDGET = 2_000_000

Ratio = Fraction | int


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Self-loops are rejected; duplicate edges collapse.  Instances are
    immutable and safe to share between threads.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            normalized.add((u, v) if u < v else (v, u))
        adj = [0] * n
        for u, v in normalized:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    def complement(self) -> Graph:
        full = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)]
        return Graph(self.n, [e for e in full if e not in self.edges])

    def disjoint_union(self, other: Graph) -> Graph:
        shifted = [(u + self.n, v + self.n) for u, v in other.edges]
        return Graph(self.n + other.n, list(self.edges) + shifted)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@dataclass(frozen=True)
class GreedyTrace:
    """Selection order of one minimum-degree greedy run."""

    picks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.picks)


def _bits(mask: int):
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask -= lsb


def _components(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v] & mask
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _ensure_recursion_room(n: int) -> None:
    want = 4 * n + 1000
    if sys.getrecursionlimit() < want:
        sys.setrecursionlimit(want)


class _MisSolver:
    """Exact maximum-independent-set sizes on vertex subsets of one graph.

    Memoized recursion with three generic simplifications: vertices of
    residual degree <= 1 are always safe to take, connected components are
    scored independently, and a residual component whose degrees are all 2
    is a cycle with a closed-form answer.  Branching is on a vertex of
    maximum residual degree.
    """

    def __init__(self, g: Graph, budget: int):
        self.adj = g._adj
        self.budget = budget
        self.cache: dict[int, int] = {}
        _ensure_recursion_room(g.n)

    def _remember(self, mask: int, value: int) -> int:
        if len(self.cache) >= self.budget:
            raise BudgetExceededError("independence number", self.budget)
        self.cache[mask] = value
        return value

    def solve(self, mask: int) -> int:
        if mask == 0:
            return 0
        hit = self.cache.get(mask)
        if hit is not None:
            return hit

        adj = self.adj
        taken = 0
        work = mask
        # Take degree<=1 vertices until none remain; each such pick is safe.
        changed = True
        while changed:
            changed = False
            for v in _bits(work):
                if not work >> v & 1:
                    continue  # already dropped as an earlier pick's neighbor
                nb = adj[v] & work
                if nb == 0:
                    work &= ~(1 << v)
                    taken += 1
                    changed = True
                elif nb & (nb - 1) == 0:
                    work &= ~((1 << v) | nb)
                    taken += 1
                    changed = True
        if work == 0:
            return self._remember(mask, taken)

        comps = _components(adj, work)
        if len(comps) > 1:
            value = taken + sum(self.solve(c) for c in comps)
            return self._remember(mask, value)

        comp = comps[0]
        best_v, best_d = -1, -1
        for v in _bits(comp):
            d = (adj[v] & comp).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d == 2:
            # every degree is exactly 2 here, so the component is one cycle
            value = taken + comp.bit_count() // 2
            return self._remember(mask, value)

        include = 1 + self.solve(comp & ~((1 << best_v) | adj[best_v]))
        exclude = self.solve(comp & ~(1 << best_v))
        return self._remember(mask, taken + max(include, exclude))

    def witness(self, mask: int) -> int:
        chosen = 0
        cur = mask
        while cur:
            target = self.solve(cur)
            for v in _bits(cur):
                rest = cur & ~((1 << v) | self.adj[v])
                if 1 + self.solve(rest) == target:
                    chosen |= 1 << v
                    cur = rest
                    break
            else:  # pragma: no cover - solve() guarantees a witness exists
                raise AssertionError("witness reconstruction failed")
        return chosen


class _GreedySolver:
    """Best-over-ties minimum-degree greedy values on residual subsets.

    Branches only over vertices whose residual degree is strictly minimum,
    memoizes on the residual vertex set, and scores disconnected residuals
    one component at a time: greedy interleavings across components never
    interact, so the best value is the sum of the components' best values.
    """

    def __init__(self, g: Graph, budget: int):
        self.adj = g._adj
        self.budget = budget
        self.cache: dict[int, int] = {}
        _ensure_recursion_room(g.n)

    def _remember(self, mask: int, value: int) -> int:
        if len(self.cache) >= self.budget:
            raise BudgetExceededError("best greedy value", self.budget)
        self.cache[mask] = value
        return value

    def solve(self, mask: int) -> int:
        if mask == 0:
            return 0
        hit = self.cache.get(mask)
        if hit is not None:
            return hit

        adj = self.adj
        comps = _components(adj, mask)
        if len(comps) > 1:
            return self._remember(mask, sum(self.solve(c) for c in comps))

        comp = comps[0]
        degs = [(v, (adj[v] & comp).bit_count()) for v in _bits(comp)]
        mind = min(d for _, d in degs)
        best = 0
        for v, d in degs:
            if d == mind:
                value = 1 + self.solve(comp & ~((1 << v) | adj[v]))
                if value > best:
                    best = value
        return self._remember(mask, best)

    def best_trace(self, mask: int) -> tuple[int, ...]:
        picks = []
        cur = mask
        while cur:
            target = self.solve(cur)
            degs = [(v, (self.adj[v] & cur).bit_count()) for v in _bits(cur)]
            mind = min(d for _, d in degs)
            for v, d in degs:
                if d != mind:
                    continue
                rest = cur & ~((1 << v) | self.adj[v])
                if 1 + self.solve(rest) == target:
                    picks.append(v)
                    cur = rest
                    break
            else:  # pragma: no cover - solve() guarantees a trace exists
                raise AssertionError("trace reconstruction failed")
        return tuple(picks)


def independence_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact size of a maximum independent set."""
    return _MisSolver(g, budget).solve((1 << g.n) - 1)


def max_independent_set(g: Graph, budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    """One maximum independent set (a witness for independence_number)."""
    solver = _MisSolver(g, budget)
    return frozenset(_bits(solver.witness((1 << g.n) - 1)))


def clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact size of a maximum clique, via the complement graph."""
    return independence_number(g.complement(), budget)


def has_odd_clique_number(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the maximum clique size is odd. Rejects the empty graph."""
    if g.n == 0:
        raise ValueError("clique-size parity of the empty graph is undefined")
    return clique_number(g, budget) % 2 == 1


def min_degree_greedy(
    g: Graph, tie_break: Callable[[Sequence[int]], int] = min
) -> tuple[frozenset[int], GreedyTrace]:
    """One deterministic run of the minimum-degree greedy heuristic.

    Repeatedly selects a vertex of minimum residual degree (ties resolved
    by `tie_break` over the candidate ids), removes it and its neighbors,
    and stops when nothing is left.  The output set is a maximal
    independent set.
    """
    adj = g._adj
    mask = (1 << g.n) - 1
    picks = []
    while mask:
        degs = [(v, (adj[v] & mask).bit_count()) for v in _bits(mask)]
        mind = min(d for _, d in degs)
        v = tie_break([v for v, d in degs if d == mind])
        picks.append(v)
        mask &= ~((1 << v) | adj[v])
    return frozenset(picks), GreedyTrace(tuple(picks))


def replay_trace(g: Graph, trace: GreedyTrace) -> frozenset[int]:
    """Validate a greedy trace against its graph and return the picked set.

    Raises ValueError unless every pick had minimum residual degree at its
    turn and the run ends with an empty residual graph.
    """
    adj = g._adj
    mask = (1 << g.n) - 1
    for step, v in enumerate(trace.picks):
        if not mask >> v & 1:
            raise ValueError(f"step {step}: vertex {v} not in residual graph")
        d = (adj[v] & mask).bit_count()
        mind = min((adj[u] & mask).bit_count() for u in _bits(mask))
        if d != mind:
            raise ValueError(f"step {step}: vertex {v} has degree {d}, minimum is {mind}")
        mask &= ~((1 << v) | adj[v])
    if mask:
        raise ValueError("trace ends before the residual graph is empty")
    return frozenset(trace.picks)


def greedy_independence_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Largest output size of the minimum-degree greedy over all tie choices."""
    return _GreedySolver(g, budget).solve((1 << g.n) - 1)


def best_greedy_trace(g: Graph, budget: int = DEFAULT_BUDGET) -> GreedyTrace:
    """A greedy trace realizing greedy_independence_number."""
    solver = _GreedySolver(g, budget)
    return GreedyTrace(solver.best_trace((1 << g.n) - 1))


def greedy_reaches(g: Graph, size: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether some greedy tie-choice sequence collects at least `size` picks."""
    if size <= 0:
        return True
    if size > g.n:
        return False
    return greedy_independence_number(g, budget) >= size


def _check_ratio(r: Ratio) -> Fraction:
    r = Fraction(r)
    if r < 1:
        raise ValueError(f"approximation factor must be >= 1, got {r}")
    return r


def achieves_ratio(g: Graph, r: Ratio, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether best-case greedy is within factor r of the independence number.

    Exact integer test: alpha * denominator <= greedy * numerator.
    """
    r = _check_ratio(r)
    alpha = independence_number(g, budget)
    greedy = greedy_independence_number(g, budget)
    return alpha * r.denominator <= greedy * r.numerator


def misses_ratio(g: Graph, r: Ratio, budget: int = DEFAULT_BUDGET) -> bool:
    """Complement of achieves_ratio, evaluated through threshold queries.

    True iff some k in [1, n] has alpha >= k while greedy * numerator stays
    below k * denominator.
    """
    r = _check_ratio(r)
    alpha = independence_number(g, budget)
    greedy = greedy_independence_number(g, budget)
    return any(
        alpha >= k and greedy * r.numerator < k * r.denominator
        for k in range(1, g.n + 1)
    )
