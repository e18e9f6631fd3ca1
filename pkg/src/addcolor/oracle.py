"""Exact brute-force oracles: eta, chromatic number, group colorability, antimagic search.

These are deliberately independent of the constructive modules: they share
only the graph type and the neighbor-sum definition.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence

from .core import FiniteAbelianGroup, Graph, GraphError, Labeling


class BudgetExceeded(RuntimeError):
    """A search hit its configured budget before finishing."""


class TwinsPresent(GraphError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 12
    max_assignments: int = 2**24
    wall_clock: float | None = None

    def __post_init__(self) -> None:
        if self.max_vertices <= 0 or self.max_assignments <= 0:
            raise GraphError("budgets must be positive")
        if self.wall_clock is not None and self.wall_clock <= 0:
            raise GraphError("wall-clock cap must be positive")


DEFAULT_BUDGET = SearchBudget()


class _Meter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.count = 0
        self.deadline = None if budget.wall_clock is None else time.monotonic() + budget.wall_clock

    def tick(self) -> None:
        self.count += 1
        if self.count > self.budget.max_assignments:
            raise BudgetExceeded(f"more than {self.budget.max_assignments} assignments explored")
        if self.deadline is not None and not self.count & 0xFFF and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"wall-clock cap of {self.budget.wall_clock}s exceeded")


def bfs_order(G: Graph) -> list[int]:
    """BFS from the smallest unvisited vertex, neighbors ascending."""
    seen = [False] * G.n
    order = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in G.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def _additive_search(
    G: Graph,
    domain: Sequence[int],
    budget: SearchBudget,
    add: Callable[[int, int], int] | None = None,
    sub: Callable[[int, int], int] | None = None,
    order: Sequence[int] | None = None,
) -> list[int] | None:
    """First labeling over ``domain`` (in search order) with distinct sums on edges.

    Values are integers; ``add``/``sub`` default to ordinary arithmetic and are
    replaced by table lookups for groups.  An edge is tested once every vertex
    of ``N(u) | N(v)`` has a value.
    """
    n = G.n
    order = list(bfs_order(G) if order is None else order)
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v in G.edges:
        closing[max(pos[x] for x in G.adj[u] + G.adj[v])].append((u, v))
    meter = _Meter(budget)
    S = [0] * n
    f = [0] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        nbrs = G.adj[x]
        for a in domain:
            meter.tick()
            f[x] = a
            if add is None:
                for y in nbrs:
                    S[y] += a
            else:
                for y in nbrs:
                    S[y] = add(S[y], a)
            if all(S[u] != S[v] for u, v in closing[i]) and rec(i + 1):
                return True
            if sub is None:
                for y in nbrs:
                    S[y] -= a
            else:
                for y in nbrs:
                    S[y] = sub(S[y], a)
        return False

    return list(f) if rec(0) else None


def additive_labeling(G: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> Labeling | None:
    """An additive coloring with labels ``1..k``, or ``None``."""
    if G.n > budget.max_vertices:
        raise BudgetExceeded(f"{G.n} vertices exceeds the budget of {budget.max_vertices}")
    found = _additive_search(G, range(1, k + 1), budget)
    return None if found is None else Labeling.integers(found)


def eta_exact(G: Graph, k_max: int, budget: SearchBudget = DEFAULT_BUDGET) -> int | None:
    """Smallest ``k <= k_max`` admitting an additive coloring; ``None`` means ``> k_max``."""
    for k in range(1, k_max + 1):
        if additive_labeling(G, k, budget) is not None:
            return k
    return None


def proper_coloring_exact(G: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> list[int] | None:
    """A proper colouring with colours ``1..k`` or ``None``; new colours open in order."""
    n = G.n
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    order = bfs_from_order(G, order)
    colour = [0] * n
    meter = _Meter(budget)

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        x = order[i]
        taken = {colour[y] for y in G.adj[x]}
        for c in range(1, min(used + 1, k) + 1):
            if c in taken:
                continue
            meter.tick()
            colour[x] = c
            if rec(i + 1, max(used, c)):
                return True
            colour[x] = 0
        return False

    return list(colour) if rec(0, 0) else None


def bfs_from_order(G: Graph, seeds: Sequence[int]) -> list[int]:
    """BFS visiting components in ``seeds`` order, neighbors by descending degree."""
    seen = [False] * G.n
    out = []
    for s in seeds:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            out.append(x)
            for y in sorted(G.adj[x], key=lambda w: (-G.degree(w), w)):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return out


def chromatic_number_exact(G: Graph, k_max: int | None = None, budget: SearchBudget = DEFAULT_BUDGET) -> int | None:
    if G.n == 0:
        return 0
    top = G.n if k_max is None else k_max
    for k in range(1, top + 1):
        if proper_coloring_exact(G, k, budget) is not None:
            return k
    return None


def exact_partition(G: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> list[list[int]] | None:
    """Split into ``k`` independent sets (some possibly empty), or ``None``."""
    colour = proper_coloring_exact(G, k, budget)
    if colour is None:
        return None
    return [[v for v in range(G.n) if colour[v] == c] for c in range(1, k + 1)]


def _group_tables(group: FiniteAbelianGroup):
    elems = group.elements()
    index = {e: i for i, e in enumerate(elems)}
    add = [[index[group.add(a, b)] for b in elems] for a in elems]
    sub = [[index[group.sub(a, b)] for b in elems] for a in elems]
    return elems, add, sub


def group_additive_exists(
    G: Graph, group: FiniteAbelianGroup, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[bool, Labeling | None]:
    """Complete search for an additive coloring with labels in ``group``.

    The witness is the first in search order (BFS order, elements in
    lexicographic residue order).
    """
    space = group.order**G.n
    if space > budget.max_assignments:
        raise BudgetExceeded(f"search space |G|^n = {space} exceeds {budget.max_assignments}")
    elems, add_t, sub_t = _group_tables(group)
    found = _additive_search(
        G,
        range(len(elems)),
        budget,
        add=lambda s, a: add_t[s][a],
        sub=lambda s, a: sub_t[s][a],
    )
    if found is None:
        return False, None
    return True, Labeling.in_group(group, [elems[i] for i in found])


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


def enumerate_abelian_groups(order: int) -> list[FiniteAbelianGroup]:
    """One group per isomorphism class, as products of cyclic prime-power factors."""
    if order < 1:
        raise GraphError("group order must be positive")
    per_prime = [[tuple(p**e for e in part) for part in _partitions(exp)] for p, exp in _factorize(order)]
    return [FiniteAbelianGroup(sum(choice, ())) for choice in product(*per_prime)]


def find_twins(G: Graph) -> tuple[int, int] | None:
    seen: dict[tuple[int, ...], int] = {}
    for v in range(G.n):
        if not G.adj[v]:
            continue
        if G.adj[v] in seen:
            return seen[G.adj[v]], v
        seen[G.adj[v]] = v
    return None


def antimagic_vertex_search(G: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> tuple[int, ...] | None:
    """Bijection ``V -> {1..n}`` with all neighbor sums pairwise distinct, or ``None``.

    Raises :class:`TwinsPresent` when two vertices share a neighborhood.
    """
    twins = find_twins(G)
    if twins is not None:
        raise TwinsPresent(f"vertices {twins[0]} and {twins[1]} have the same neighborhood")
    n = G.n
    if n > budget.max_vertices:
        raise BudgetExceeded(f"{n} vertices exceeds the budget of {budget.max_vertices}")
    # vertices whose neighborhood is complete once position i is assigned
    finished: list[list[int]] = [[] for _ in range(n)]
    isolated = []
    for v in range(n):
        if G.adj[v]:
            finished[G.adj[v][-1]].append(v)
        else:
            isolated.append(v)
    if len(isolated) > 1:
        return None  # isolated vertices all have sum 0
    meter = _Meter(budget)
    S = [0] * n
    f = [0] * n
    used = [False] * (n + 1)
    final: set[int] = {0} if isolated else set()

    def rec(i: int) -> bool:
        if i == n:
            return True
        for a in range(1, n + 1):
            if used[a]:
                continue
            meter.tick()
            used[a] = True
            f[i] = a
            for y in G.adj[i]:
                S[y] += a
            done = [S[v] for v in finished[i]]
            if len(set(done)) == len(done) and not final.intersection(done):
                final.update(done)
                if rec(i + 1):
                    return True
                final.difference_update(done)
            for y in G.adj[i]:
                S[y] -= a
            used[a] = False
        return False

    return tuple(f) if rec(0) else None
