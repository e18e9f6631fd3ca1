"""End-to-end constructions: labels <= 36, <= 468, <= prod(moduli), and <= 4.

Each pipeline returns a :class:`~addcolor.verify.Certificate`; the verifier,
not the construction, decides the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Graph, GraphError, Labeling, crt_compose
from .listcolor import ListAssignment, list_additive_solve, tree_list_solve
from .modular import norin_weights, zero_free_on
from .oracle import BudgetExceeded, SearchBudget, exact_partition
from .orderings import OrderingResult
from .verify import Certificate, check_decomposition, distances_from, verify_additive, verify_partition

PARTITION_SEARCH_LIMIT = 20


class PipelineError(GraphError):
    pass


def _normalize_parts(G: Graph, parts: Sequence[Sequence[int]] | None, k: int) -> list[list[int]]:
    if parts is None:
        if G.n > PARTITION_SEARCH_LIMIT:
            raise PipelineError(f"no partition supplied and {G.n} vertices is beyond exact search")
        found = exact_partition(G, k, SearchBudget(max_vertices=PARTITION_SEARCH_LIMIT))
        if found is None:
            raise PipelineError(f"graph has no partition into {k} independent sets")
        return found
    parts = [sorted(p) for p in parts]
    if len(parts) > k:
        raise PipelineError(f"expected at most {k} parts, got {len(parts)}")
    parts += [[] for _ in range(k - len(parts))]
    if not verify_partition(G, parts):
        raise PipelineError("parts are not a partition of the vertex set into independent sets")
    return parts


def _sums_into(G: Graph, values: dict[int, int], targets) -> dict[int, int]:
    return {u: sum(values[x] for x in G.adj[u] if x in values) for u in targets}


def _list_stage(G: Graph, AB: list[int], unit: int, q: dict[int, int]) -> dict[int, int]:
    """Labels ``unit * {1, 2, 3}`` on ``G[A u B]`` with offsets ``q``."""
    F, back = G.induced(AB)
    lists = [(unit, 2 * unit, 3 * unit)] * F.n
    offsets = [q[v] for v in back]
    f = list_additive_solve(F, ListAssignment.make(F.n, lists, offsets), k=2)
    return {back[i]: int(x) for i, x in enumerate(f.values)}


@dataclass(frozen=True)
class Planar3Stages:
    parts: list[list[int]]
    h: dict[int, int]
    s_h: dict[int, int]
    f: dict[int, int]
    labels: Labeling


def planar3_stages(G: Graph, parts: Sequence[Sequence[int]] | None = None) -> Planar3Stages:
    A, B, C = _normalize_parts(G, parts, 3)
    AB = sorted(A + B)
    h = {x: r if r else 12 for x, r in zero_free_on(G, C, AB, 12).items()}
    s_h = _sums_into(G, h, AB)
    f = _list_stage(G, AB, 12, s_h)
    g = [h[v] if v in h else f[v] for v in range(G.n)]
    return Planar3Stages([A, B, C], h, s_h, f, Labeling.integers(g))


def planar3_violations(G: Graph, stages: Planar3Stages) -> list[str]:
    """Per-vertex check of the mod-12 separation between A u B and C."""
    A, B, C = stages.parts
    cset = set(C)
    S = [sum(stages.labels[x] for x in G.adj[v]) for v in range(G.n)]
    bad = []
    for u in A + B:
        if any(x in cset for x in G.adj[u]):
            if stages.s_h[u] % 12 == 0:
                bad.append(f"S_h({u}) = 0 mod 12")
            if S[u] % 12 == 0:
                bad.append(f"S({u}) = 0 mod 12 although {u} has a C-neighbour")
        if (S[u] - stages.s_h[u]) % 12:
            bad.append(f"S_f({u}) not a multiple of 12")
    for v in C:
        if S[v] % 12:
            bad.append(f"S({v}) != 0 mod 12 for C-vertex {v}")
    return bad


def color_planar3(G: Graph, parts: Sequence[Sequence[int]] | None = None) -> Certificate:
    """Additive coloring with labels in 1..36 from a proper 3-partition (A, B, C)."""
    stages = planar3_stages(G, parts)
    cert = verify_additive(G, stages.labels, "planar3")
    bad = planar3_violations(G, stages)
    return _with_details(cert, {"partition": stages.parts, "stratification_violations": bad})


@dataclass(frozen=True)
class Planar4Stages:
    parts: list[list[int]]
    h1: dict[int, int]
    h2: dict[int, int]
    h: dict[int, int]
    s_h: dict[int, int]
    s_h1: dict[int, int]
    s_h2: dict[int, int]
    f: dict[int, int]
    labels: Labeling


def planar4_stages(G: Graph, parts: Sequence[Sequence[int]] | None = None) -> Planar4Stages:
    A, B, C, D = _normalize_parts(G, parts, 4)
    AB = sorted(A + B)
    h1 = zero_free_on(G, C, AB, 12)
    h2 = zero_free_on(G, D, sorted(AB + C), 13)
    h1.update({x: 0 for x in D})
    h2.update({x: 0 for x in C})
    h = {x: crt_compose((12, 13), (h1[x], h2[x])) for x in sorted(C + D)}
    s_h = _sums_into(G, h, range(G.n))
    s_h1 = {u: sum(h1[x] for x in G.adj[u] if x in h1) % 12 for u in range(G.n)}
    s_h2 = {u: sum(h2[x] for x in G.adj[u] if x in h2) % 13 for u in range(G.n)}
    f = _list_stage(G, AB, 156, {u: s_h[u] for u in AB})
    g = [h[v] if v in h else f[v] for v in range(G.n)]
    return Planar4Stages([A, B, C, D], h1, h2, h, s_h, s_h1, s_h2, f, Labeling.integers(g))


def planar4_violations(G: Graph, st: Planar4Stages) -> list[str]:
    """Vertex-by-vertex residue checks that make every edge class safe.

    A u B against C is separated mod 12, anything against D mod 13, and
    ``S_h`` agrees with the CRT image of ``(S_h1, S_h2)``.
    """
    A, B, C, D = (set(p) for p in st.parts)
    S = [sum(st.labels[x] for x in G.adj[v]) for v in range(G.n)]
    bad = []
    for u in range(G.n):
        if st.s_h[u] % 12 != st.s_h1[u] or st.s_h[u] % 13 != st.s_h2[u]:
            bad.append(f"S_h({u}) is not sigma(S_h1, S_h2)")
        nC = any(x in C for x in G.adj[u])
        nD = any(x in D for x in G.adj[u])
        if u in A or u in B:
            if (S[u] - st.s_h[u]) % 156:
                bad.append(f"S_f({u}) not a multiple of 156")
            if (nC or nD) and st.s_h[u] % 156 == 0:
                bad.append(f"S_h({u}) = 0 mod 156 although {u} has a (C u D)-neighbour")
            if nC and S[u] % 12 == 0:
                bad.append(f"S({u}) = 0 mod 12 although {u} has a C-neighbour")
            if nD and S[u] % 13 == 0:
                bad.append(f"S({u}) = 0 mod 13 although {u} has a D-neighbour")
        elif u in C:
            if S[u] % 12:
                bad.append(f"S({u}) != 0 mod 12 for C-vertex")
            if nD and (st.s_h1[u] != 0 or st.s_h2[u] == 0):
                bad.append(f"S_h({u}) is not sigma(0, nonzero) for C-vertex with a D-neighbour")
        else:
            if S[u] % 13:
                bad.append(f"S({u}) != 0 mod 13 for D-vertex")
            if st.s_h2[u] != 0:
                bad.append(f"S_h({u}) is not sigma(S_h1, 0) for D-vertex")
    return bad


def color_planar4(G: Graph, parts: Sequence[Sequence[int]] | None = None) -> Certificate:
    """Additive coloring with labels in 1..468 from a proper 4-partition (A, B, C, D)."""
    st = planar4_stages(G, parts)
    cert = verify_additive(G, st.labels, "planar4")
    return _with_details(cert, {"partition": st.parts, "stratification_violations": planar4_violations(G, st)})


def color_norin(
    G: Graph,
    coloring: Sequence[int],
    moduli: Sequence[int] = (7, 8, 9, 11),
    order: OrderingResult | Sequence[int] | None = None,
) -> Certificate:
    weights, labels = norin_weights(G, coloring, moduli, order)
    cert = verify_additive(G, labels, "norin")
    return _with_details(cert, {"weights": list(weights.weights), "moduli": list(weights.moduli)})


def find_decomposition(G: Graph, max_nodes: int = 200_000) -> tuple[list[int], list[int]] | None:
    """A two-independent ``I`` with ``G - I`` a forest, by complete branching.

    Any valid ``I`` meets every cycle of the current forest candidate, so it is
    enough to branch on the vertices of one shortest remaining cycle.
    """
    nodes = 0

    def blocked_by(I: set[int]) -> set[int]:
        out: set[int] = set()
        for s in I:
            out |= set(distances_from(G, s, limit=2))
        return out

    def rec(I: set[int]) -> set[int] | None:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceeded(f"decomposition search exceeded {max_nodes} nodes")
        cycle = _shortest_cycle(G, set(range(G.n)) - I)
        if cycle is None:
            return I
        blocked = blocked_by(I)
        for v in sorted(cycle):
            if v not in blocked:
                got = rec(I | {v})
                if got is not None:
                    return got
        return None

    I = rec(set())
    if I is None:
        return None
    return sorted(I), [v for v in range(G.n) if v not in I]


def _shortest_cycle(G: Graph, alive: set[int]) -> list[int] | None:
    best: list[int] | None = None
    for s in sorted(alive):
        parent = {s: -1}
        depth = {s: 0}
        queue = [s]
        for x in queue:
            if best is not None and 2 * depth[x] + 1 >= len(best):
                break
            for y in G.adj[x]:
                if y not in alive:
                    continue
                if y not in parent:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif parent[x] != y:
                    cyc = _join_paths(parent, x, y)
                    if best is None or len(cyc) < len(best):
                        best = cyc
    return best


def _join_paths(parent: dict[int, int], x: int, y: int) -> list[int]:
    px, py = [x], [y]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    common = set(px) & set(py)
    px = px[: next(i for i, v in enumerate(px) if v in common) + 1]
    py = py[: next(i for i, v in enumerate(py) if v in common)]
    return px + py[::-1]


def color_girth13(
    G: Graph, decomposition: tuple[Sequence[int], Sequence[int]] | None = None
) -> Certificate:
    """Labels 1 on a two-independent set ``I`` and {2, 4} on the forest ``G - I``."""
    if decomposition is None:
        decomposition = find_decomposition(G)
        if decomposition is None:
            raise PipelineError("graph has no decomposition into a two-independent set and a forest")
    I, F = (sorted(set(p)) for p in decomposition)
    if not check_decomposition(G, I, F):
        raise PipelineError("supplied (I, F) is not a two-independent set plus an induced forest")
    iset = set(I)
    labels = [1 if v in iset else 0 for v in range(G.n)]
    forest, back = G.induced(F)
    for comp in forest.components():
        tree, sub_back = forest.induced(comp)
        orig = [back[i] for i in sub_back]
        # each forest vertex already sees |N(u) & I| from the 1-labels
        q = [sum(1 for x in G.adj[u] if x in iset) for u in orig]
        f = tree_list_solve(tree, [(2, 4)] * tree.n, q)
        for i, u in enumerate(orig):
            labels[u] = int(f.values[i])
    cert = verify_additive(G, Labeling.integers(labels), "girth13")
    return _with_details(cert, {"I": I, "F": F})


def _with_details(cert: Certificate, details: dict) -> Certificate:
    return Certificate(cert.labeling, cert.sums, cert.verdict, cert.conflicts, cert.method, cert.max_label, details)

