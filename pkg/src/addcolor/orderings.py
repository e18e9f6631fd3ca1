"""Degeneracy orderings of graphs and hypergraphs, and bounded-indegree orientations."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import Graph, GraphError, Hypergraph
from .families import icosahedron


@dataclass(frozen=True)
class OrderingResult:
    """A vertex order with its width.

    ``backward_degrees[i]`` belongs to ``order[i]`` (aligned by position).
    """

    order: tuple[int, ...]
    width: int
    backward_degrees: tuple[int, ...]

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def backward_degree_of(self, v: int) -> int:
        return self.backward_degrees[self.order.index(v)]


def _peel(n: int, degree: list[int], remove) -> list[tuple[int, int]]:
    """Repeatedly delete a minimum-degree vertex (smallest id on ties).

    ``remove(x, alive)`` must return the vertices whose degree dropped, with
    multiplicity.  Returns ``(vertex, degree at deletion)`` in deletion order.
    """
    alive = [True] * n
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    deleted = []
    while heap:
        d, x = heapq.heappop(heap)
        if not alive[x] or d != degree[x]:
            continue
        alive[x] = False
        deleted.append((x, d))
        for y in remove(x, alive):
            degree[y] -= 1
            heapq.heappush(heap, (degree[y], y))
    return deleted


def degeneracy_order(G: Graph) -> OrderingResult:
    """Min-degree peeling, reversed; width is the coloring number col(G)."""
    degree = list(G.degrees())

    def remove(x, alive):
        return [y for y in G.adj[x] if alive[y]]

    deleted = _peel(G.n, degree, remove)
    deleted.reverse()
    backs = tuple(d for _, d in deleted)
    return OrderingResult(tuple(v for v, _ in deleted), 1 + max(backs, default=0), backs)


def backward_degrees(G: Graph, order: Iterable[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sum(1 for y in G.adj[v] if pos[y] < pos[v]) for v in pos)


def hyper_dedupe(H: Hypergraph) -> Hypergraph:
    """Collapse duplicate hyperedges and drop empty ones, keeping first-seen order."""
    seen: set[frozenset[int]] = set()
    kept = []
    for e in H.hyperedges:
        if e and e not in seen:
            seen.add(e)
            kept.append(e)
    return Hypergraph(H.n, tuple(kept))


def hyper_order(H: Hypergraph) -> OrderingResult:
    """Hypergraph analogue of degeneracy ordering.

    Deleting ``x`` removes ``x`` together with every hyperedge containing it,
    so in the reversed order the backward degree of ``v`` is the number of
    distinct hyperedges whose last vertex is ``v`` (singletons included).
    """
    H = hyper_dedupe(H)
    incident: list[list[int]] = [[] for _ in range(H.n)]
    for i, e in enumerate(H.hyperedges):
        for v in e:
            incident[v].append(i)
    edge_alive = [True] * len(H.hyperedges)
    degree = [len(a) for a in incident]

    def remove(x, alive):
        dropped = []
        for i in incident[x]:
            if edge_alive[i]:
                edge_alive[i] = False
                dropped.extend(y for y in H.hyperedges[i] if y != x and alive[y])
        return dropped

    deleted = _peel(H.n, degree, remove)
    deleted.reverse()
    backs = tuple(d for _, d in deleted)
    return OrderingResult(tuple(v for v, _ in deleted), 1 + max(backs, default=0), backs)


def hyper_backward_degrees(H: Hypergraph, order: Iterable[int]) -> tuple[int, ...]:
    """Backward degrees of an arbitrary order, aligned by position."""
    order = list(order)
    pos = {v: i for i, v in enumerate(order)}
    counts = [0] * len(order)
    for e in hyper_dedupe(H).hyperedges:
        counts[max(pos[v] for v in e)] += 1
    return tuple(counts)


def bipartite_hypergraph(G: Graph, X: Iterable[int], Y: Iterable[int]) -> tuple[Hypergraph, list[int]]:
    """Hypergraph on ``X`` whose incidence graph is ``G``.

    X is relabelled to ``0..|X|-1`` in ascending order; the returned list maps
    hypergraph vertices back to graph vertices.  Hyperedges are ``N(y)`` for
    non-isolated ``y`` in ascending ``y`` order, deduplicated.
    """
    X, Y = sorted(set(X)), sorted(set(Y))
    xs, ys = set(X), set(Y)
    if xs & ys or len(xs) + len(ys) != G.n or any(not 0 <= v < G.n for v in xs | ys):
        raise GraphError("X and Y must partition the vertex set")
    for u, v in G.edges:
        if (u in xs) == (v in xs):
            raise GraphError(f"edge ({u}, {v}) does not cross the bipartition")
    index = {x: i for i, x in enumerate(X)}
    edges = [frozenset(index[x] for x in G.adj[y]) for y in Y]
    return hyper_dedupe(Hypergraph(len(X), tuple(edges))), X


def tightness_witness() -> tuple[Graph, list[int], list[int]]:
    """Icosahedron with every edge and face subdivided and a pendant at each vertex.

    Vertex ids: ``0..11`` the icosahedron (X), then 30 edge vertices, 20 face
    vertices and 12 pendants (Y).  Every X-vertex has degree 11.
    """
    ico = icosahedron()
    faces = [t for t in combinations(range(12), 3) if all(ico.has_edge(a, b) for a, b in combinations(t, 2))]
    edges: list[tuple[int, int]] = []
    nxt = 12
    for u, v in ico.edges:
        edges += [(u, nxt), (v, nxt)]
        nxt += 1
    for face in faces:
        edges += [(x, nxt) for x in face]
        nxt += 1
    for x in range(12):
        edges.append((x, nxt))
        nxt += 1
    G = Graph(nxt, tuple(sorted(edges)))
    return G, list(range(12)), list(range(12, nxt))


@dataclass(frozen=True)
class Orientation:
    """``head[(u, v)]`` for every edge ``(u, v)`` of the graph (``u < v``)."""

    head: dict[tuple[int, int], int]

    def indegrees(self, n: int) -> list[int]:
        deg = [0] * n
        for h in self.head.values():
            deg[h] += 1
        return deg

    def arcs(self) -> list[tuple[int, int]]:
        return [(u if h == v else v, h) for (u, v), h in sorted(self.head.items())]


def bounded_indegree_orientation(G: Graph, k: int) -> Orientation | None:
    """Orientation with every indegree at most ``k``, or ``None`` if none exists.

    Exact: this is the flow problem source -> edge (capacity 1) -> endpoint ->
    sink (capacity ``k``), solved by augmenting paths.  Edges are inserted one
    at a time; a full endpoint hands one of its incoming edges to that edge's
    other end, along a BFS path to a vertex with spare capacity.
    """
    if k < 0:
        raise GraphError("indegree bound must be non-negative")
    head: dict[tuple[int, int], int] = {}
    incoming: list[set[tuple[int, int]]] = [set() for _ in range(G.n)]
    for e in G.edges:
        # BFS over vertices; parent[w] = (edge that would move into w, previous vertex)
        parent: dict[int, tuple[tuple[int, int], int | None]] = {}
        queue = deque()
        for w in e:
            if w not in parent:
                parent[w] = (e, None)
                queue.append(w)
        target = None
        while queue:
            w = queue.popleft()
            if len(incoming[w]) < k:
                target = w
                break
            for f in sorted(incoming[w]):
                other = f[0] if f[1] == w else f[1]
                if other not in parent:
                    parent[other] = (f, w)
                    queue.append(other)
        if target is None:
            return None
        w = target
        while True:
            f, prev = parent[w]
            if prev is not None:
                incoming[prev].discard(f)
            head[f] = w
            incoming[w].add(f)
            if prev is None:
                break
            w = prev
    return Orientation(head)
