"""The G_r family, the pendant-vertex reduction, and the Z_2 decision procedure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import FiniteAbelianGroup, Graph, GraphError, Labeling, Value, build_graph, sum_profile
from .oracle import DEFAULT_BUDGET, SearchBudget, _Meter
from .verify import bipartition


@dataclass(frozen=True)
class GadgetCopy:
    a: int
    b: int
    c: int
    X: tuple[int, ...]
    Y: tuple[int, ...]

    @property
    def v(self) -> int:
        return self.X[0]


@dataclass(frozen=True)
class GadgetMetadata:
    r: int
    copies: tuple[GadgetCopy, ...]  # copies[i - 1] is copy i

    @property
    def hub(self) -> tuple[int, ...]:
        return tuple(cp.v for cp in self.copies)


def build_gr(r: int) -> tuple[Graph, GadgetMetadata]:
    """r copies of the path a-x-b-y-c with x and y blown up to K_{r-1}, the first
    vertex of each X-clique joined into a K_r.

    Per copy the ids run a, b, c, X (hub vertex first), Y.
    """
    if r < 2:
        raise GraphError("G_r needs r >= 2")
    edges: list[tuple[int, int]] = []
    copies = []
    base = 0
    for _ in range(r):
        a, b, c = base, base + 1, base + 2
        X = tuple(range(base + 3, base + 3 + r - 1))
        Y = tuple(range(base + 2 + r, base + 2 + r + r - 1))
        for x in X:
            edges += [(a, x), (x, b)]
        for y in Y:
            edges += [(b, y), (y, c)]
        for clique in (X, Y):
            edges += [(p, q) for i, p in enumerate(clique) for q in clique[i + 1 :]]
        copies.append(GadgetCopy(a, b, c, X, Y))
        base += 2 * r + 1
    hub = [cp.v for cp in copies]
    edges += [(p, q) for i, p in enumerate(hub) for q in hub[i + 1 :]]
    return build_graph(base, edges), GadgetMetadata(r, tuple(copies))


def gr_explicit_coloring(r: int) -> tuple[Graph, GadgetMetadata, Labeling]:
    """The explicit additive coloring of G_r over Z_{r+1}.

    For odd ``r + 1`` the Y-cliques receive ``{0} | ({1..r} - {i, -i})``: the
    set without 0 is one label short of the clique size, and 0 keeps the clique
    sum at zero.
    """
    G, meta = build_gr(r)
    m = r + 1
    f = [0] * G.n

    def fill(vertices: Sequence[int], labels: Sequence[int]) -> None:
        labels = sorted(labels)
        if len(labels) != len(vertices):
            raise AssertionError("label set does not match clique size")
        for x, lab in zip(vertices, labels):
            f[x] = lab

    if m % 2:
        for i, cp in enumerate(meta.copies, start=1):
            f[cp.v] = f[cp.b] = 0
            f[cp.a] = f[cp.c] = i
            rest = sorted(set(range(1, m)) - {i, (-i) % m})
            fill(cp.X[1:], rest)
            fill(cp.Y, [0] + rest)
    else:
        k = m // 2
        for i, cp in enumerate(meta.copies, start=1):
            if i == k:
                continue
            f[cp.v] = f[cp.b] = f[cp.c] = 0
            f[cp.a] = i
            fill(cp.X[1:], set(range(1, m)) - {i, (-i) % m})
            fill(cp.Y, set(range(1, m)) - {k})
        cp = meta.copies[k - 1]
        f[cp.v], f[cp.a], f[cp.b], f[cp.c] = 0, 1, k, k - 1
        fill(cp.X[1:], set(range(1, m)) - {k, k + 1})
        fill(cp.Y, set(range(m)) - {k, r})
    return G, meta, Labeling.in_group(FiniteAbelianGroup.cyclic(m), f)


def clique_sums(meta: GadgetMetadata, f: Labeling, modulus: int) -> list[tuple[int, int]]:
    """``(sum over X_i, sum over Y_i)`` mod ``modulus`` for each copy."""
    val = lambda x: f[x][0] if isinstance(f[x], tuple) else f[x]  # noqa: E731
    return [(sum(val(x) for x in cp.X) % modulus, sum(val(y) for y in cp.Y) % modulus) for cp in meta.copies]


@dataclass(frozen=True)
class NonexistenceReport:
    nonexistent: bool
    assignments: int
    method: str
    witness: Labeling | None = None

    def __bool__(self) -> bool:
        return self.nonexistent


def gr_nonexistence(
    r: int, group: FiniteAbelianGroup, budget: SearchBudget = DEFAULT_BUDGET
) -> NonexistenceReport:
    """Decide by complete search that G_r has no additive coloring over ``group``.

    When ``|group|^n`` fits the budget every assignment is enumerated and
    checked.  Otherwise the search exploits the gadget: given the hub labels,
    copies interact only through the hub sums, so each copy's achievable
    ``S(v_i)`` values are computed once per (own hub label, other hubs' total)
    and the hub clique is then checked for a choice of pairwise distinct sums.
    """
    if group.order != r:
        raise GraphError(f"group {group} has order {group.order}, expected {r}")
    G, meta = build_gr(r)
    elems = group.elements()
    space = len(elems) ** G.n
    if space <= budget.max_assignments:
        meter = _Meter(budget)
        for values in product(elems, repeat=G.n):
            meter.tick()
            f = Labeling(values, group)
            S = sum_profile(G, f)
            if all(S[u] != S[v] for u, v in G.edges):
                return NonexistenceReport(False, meter.count, "exhaustive", f)
        return NonexistenceReport(True, meter.count, "exhaustive")
    return _gr_structured(G, meta, group, budget)


def _gr_structured(G: Graph, meta: GadgetMetadata, group: FiniteAbelianGroup, budget: SearchBudget) -> NonexistenceReport:
    elems = group.elements()
    meter = _Meter(budget)
    cp0 = meta.copies[0]
    inner = [cp0.a, cp0.b, cp0.c, *cp0.X[1:], *cp0.Y]  # the hub vertex cp0.v is fixed
    local = [cp0.v] + inner
    lid = {x: i for i, x in enumerate(local)}
    local_edges = [(lid[u], lid[v]) for u, v in G.edges if u in lid and v in lid]
    nbrs = [[lid[y] for y in G.adj[x] if y in lid] for x in local]
    hub_edges = [(u, v) for u, v in local_edges if 0 in (u, v)]
    other_edges = [(u, v) for u, v in local_edges if 0 not in (u, v)]
    per_hub: dict = {}

    def internal_profiles(hub_value):
        """Labelings of one copy valid away from the hub, with the hub's own
        partial sum and the sums it must avoid."""
        if hub_value in per_hub:
            return per_hub[hub_value]
        out = []
        for values in product(elems, repeat=len(inner)):
            meter.tick()
            f = (hub_value,) + values
            S = []
            for i in range(len(local)):
                acc = group.zero
                for j in nbrs[i]:
                    acc = group.add(acc, f[j])
                S.append(acc)
            if all(S[u] != S[v] for u, v in other_edges):
                avoid = frozenset(S[v if u == 0 else u] for u, v in hub_edges)
                out.append((S[0], avoid, f))
        per_hub[hub_value] = out
        return out

    cache: dict[tuple, dict] = {}

    def copy_options(hub_value, others_total):
        """Map achievable S(v) -> one internal labeling, for one copy."""
        key = (hub_value, others_total)
        if key not in cache:
            found: dict = {}
            for s0, avoid, f in internal_profiles(hub_value):
                s = group.add(s0, others_total)
                if s not in avoid and s not in found:
                    found[s] = f
            cache[key] = found
        return cache[key]

    r = meta.r
    for hubs in product(elems, repeat=r):
        total = group.zero
        for h in hubs:
            total = group.add(total, h)
        options = [copy_options(h, group.sub(total, h)) for h in hubs]
        choice = _distinct_choice([sorted(o) for o in options])
        if choice is not None:
            f = [group.zero] * G.n
            for cp, h, s in zip(meta.copies, hubs, choice):
                internal = options[meta.copies.index(cp)][s]
                ids = [cp.v, cp.a, cp.b, cp.c, *cp.X[1:], *cp.Y]
                for x, val in zip(ids, internal):
                    f[x] = val
            return NonexistenceReport(False, meter.count, "structured", Labeling(tuple(f), group))
    return NonexistenceReport(True, meter.count, "structured")


def _distinct_choice(options: list[list]) -> list | None:
    chosen: list = []

    def rec(i: int) -> bool:
        if i == len(options):
            return True
        for s in options[i]:
            if s not in chosen:
                chosen.append(s)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return list(chosen) if rec(0) else None


def np_reduction(G: Graph) -> Graph:
    """Attach a pendant ``n + i`` to every vertex ``i``."""
    return build_graph(2 * G.n, list(G.edges) + [(i, G.n + i) for i in range(G.n)])


def lift_coloring(G: Graph, c: Sequence[Value], a: Value, group: FiniteAbelianGroup) -> Labeling:
    """Turn a proper colouring of ``G`` by group elements into an additive
    coloring of :func:`np_reduction` ``(G)`` over the same group.
    """
    cs = [group.element(x) for x in c]
    if len(cs) != G.n:
        raise GraphError(f"colouring has {len(cs)} entries for {G.n} vertices")
    a = group.element(a)
    if a == group.zero:
        raise GraphError("the lifting element must be nonzero")
    for u, v in G.edges:
        if cs[u] == cs[v]:
            raise GraphError(f"colouring is not proper on edge ({u}, {v})")
    f = [a if cs[v] == group.zero else group.zero for v in range(G.n)]
    pend = []
    for v in range(G.n):
        acc = cs[v]
        for x in G.adj[v]:
            acc = group.sub(acc, f[x])
        pend.append(acc)
    return Labeling(tuple(f + pend), group)


@dataclass(frozen=True)
class Z2Decision:
    colorable: bool
    witness: Labeling | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.colorable


def gf2_solve(rows: Sequence[int], rhs: Sequence[int], n_cols: int) -> list[int] | None:
    """Solve ``Mx = y`` over GF(2); rows are int bitsets (bit j = column j).

    Free variables are set to 0.
    """
    work = [(rows[i], rhs[i] & 1) for i in range(len(rows))]
    pivots: list[tuple[int, int, int]] = []
    for col in range(n_cols):
        bit = 1 << col
        idx = next((i for i, (row, _) in enumerate(work) if row & bit), None)
        if idx is None:
            continue
        prow, pval = work.pop(idx)
        work = [(row ^ prow, val ^ pval) if row & bit else (row, val) for row, val in work]
        pivots = [(c, row ^ prow, val ^ pval) if row & bit else (c, row, val) for c, row, val in pivots]
        pivots.append((col, prow, pval))
    if any(row == 0 and val for row, val in work):
        return None
    x = [0] * n_cols
    for col, _, val in pivots:
        x[col] = val
    return x


def z2_decide(G: Graph) -> Z2Decision:
    """Additive colorability over Z_2: bipartite, and ``Mx = y`` solvable for
    some proper 2-coloring ``y``.

    The adjacency matrix is block diagonal over components, so each component
    is solved on its own with its two possible targets.
    """
    sides = bipartition(G)
    if sides is None:
        return Z2Decision(False, None, "not bipartite")
    side_of = [0] * G.n
    for v in sides[1]:
        side_of[v] = 1
    x = [0] * G.n
    for comp in G.components():
        index = {v: i for i, v in enumerate(comp)}
        rows = [sum(1 << index[y] for y in G.adj[v]) for v in comp]
        first = side_of[comp[0]]
        for flip in (0, 1):
            target = [side_of[v] ^ first ^ flip for v in comp]
            sol = gf2_solve(rows, target, len(comp))
            if sol is not None:
                for v, bit in zip(comp, sol):
                    x[v] = bit
                break
        else:
            return Z2Decision(False, None, f"no solution for component containing {comp[0]}")
    return Z2Decision(True, Labeling.in_group(FiniteAbelianGroup.cyclic(2), x), "solved")

