"""Greedy modular labelings driven by (hyper)graph orderings."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .core import FiniteAbelianGroup, Graph, GraphError, Hypergraph, Labeling, check_coprime, crt_compose, positive_label
from .orderings import OrderingResult, backward_degrees, bipartite_hypergraph, degeneracy_order, hyper_backward_degrees, hyper_dedupe, hyper_order


class WidthOverflow(GraphError):
    """The ordering is too wide for the modulus; ``vertex`` is where it happens."""

    def __init__(self, message: str, vertex: int | None = None, width: int | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.width = width


def _residue_preference(k: int, positive_first: bool) -> list[int]:
    return list(range(1, k)) + [0] if positive_first else list(range(k))


def hyper_zero_free(
    H: Hypergraph,
    order: OrderingResult | Sequence[int] | None,
    k: int,
    positive_first: bool = False,
) -> Labeling:
    """Labels in Z_k so that no hyperedge sums to zero.

    Vertices are labelled along ``order``.  At ``v`` every hyperedge whose
    last vertex is ``v`` forbids the single residue that would close it at 0;
    the first allowed residue is taken, scanning ``0, 1, .., k-1`` (or
    ``1, .., k-1, 0`` with ``positive_first``, i.e. smallest label in 1..k).
    """
    H = hyper_dedupe(H)
    if order is None:
        order = hyper_order(H)
    seq = list(order.order) if isinstance(order, OrderingResult) else list(order)
    if sorted(seq) != list(range(H.n)):
        raise GraphError("order must be a permutation of the hypergraph's vertices")
    backs = hyper_backward_degrees(H, seq)
    worst = max(range(len(seq)), key=lambda i: backs[i], default=None)
    if worst is not None and backs[worst] + 1 > k:
        raise WidthOverflow(
            f"ordering width {backs[worst] + 1} exceeds modulus {k} at vertex {seq[worst]}",
            seq[worst],
            backs[worst] + 1,
        )
    pos = {v: i for i, v in enumerate(seq)}
    closing: list[list[frozenset[int]]] = [[] for _ in seq]
    for e in H.hyperedges:
        closing[max(pos[v] for v in e)].append(e)
    f = [0] * H.n
    prefs = _residue_preference(k, positive_first)
    for i, v in enumerate(seq):
        forbidden = {(-sum(f[x] for x in e if x != v)) % k for e in closing[i]}
        f[v] = next(r for r in prefs if r not in forbidden)
    return Labeling.in_group(FiniteAbelianGroup.cyclic(k), f)


def zero_free_on(
    G: Graph, X: Iterable[int], Y: Iterable[int], k: int, planar: bool = True
) -> dict[int, int]:
    """Residues on ``X`` with ``sum f(N(y) & X) != 0 (mod k)`` for every ``y`` in
    ``Y`` that has a neighbor in ``X``.

    Edges inside ``X`` or ``Y`` are ignored, so this runs directly on the
    cross-edge subgraph a pipeline cares about.  The ordering is the min-degree
    peeling; when ``planar`` is claimed its width must be at most 12, and a
    violation is reported as a :class:`WidthOverflow` naming the graph vertex
    where the peeling got stuck.
    """
    xs = sorted(set(X))
    index = {x: i for i, x in enumerate(xs)}
    edges = [frozenset(index[x] for x in G.adj[y] if x in index) for y in sorted(set(Y))]
    H = hyper_dedupe(Hypergraph(len(xs), tuple(edges)))
    ordering = hyper_order(H)
    limit = min(k, 12) if planar else k
    if ordering.width > limit:
        i = max(range(len(ordering.order)), key=lambda j: ordering.backward_degrees[j])
        stuck = xs[ordering.order[i]]
        note = " (input cannot be planar)" if planar and ordering.width > 12 else ""
        raise WidthOverflow(
            f"hypergraph ordering width {ordering.width} exceeds {limit} at vertex {stuck}{note}",
            stuck,
            ordering.width,
        )
    f = hyper_zero_free(H, ordering, k, positive_first=True)
    return {x: f.values[i][0] for i, x in enumerate(xs)}


def bipartite_residues(
    G: Graph, X: Iterable[int], Y: Iterable[int], k: int = 12, planar: bool = True
) -> dict[int, int]:
    """Residues on ``X`` with ``sum f(N(y)) != 0 (mod k)`` for non-isolated ``y``.

    ``(X, Y)`` must be a bipartition of ``G``.
    """
    X, Y = list(X), list(Y)
    bipartite_hypergraph(G, X, Y)  # validates the bipartition
    return zero_free_on(G, X, Y, k, planar)


def bipartite_mod12(G: Graph, X: Iterable[int], Y: Iterable[int], planar: bool = True) -> dict[int, int]:
    """Labels in ``{1..12}`` on ``X`` (12 stands for residue 0)."""
    return {x: positive_label(r, 12) for x, r in bipartite_residues(G, X, Y, 12, planar).items()}


@dataclass(frozen=True)
class WeightMap:
    weights: tuple[int, ...]
    color_of: tuple[int, ...]
    moduli: tuple[int, ...]

    def residue_vector(self, v: int) -> tuple[int, ...]:
        j = self.color_of[v] - 1
        return tuple(self.weights[v] if i == j else 0 for i in range(len(self.moduli)))


def check_proper_coloring(G: Graph, c: Sequence[int], r: int | None = None) -> None:
    if len(c) != G.n:
        raise GraphError(f"coloring has {len(c)} entries for {G.n} vertices")
    if r is not None:
        bad = [v for v in range(G.n) if not 1 <= c[v] <= r]
        if bad:
            raise GraphError(f"colours must lie in 1..{r}; vertex {bad[0]} has {c[bad[0]]}")
    for u, v in G.edges:
        if c[u] == c[v]:
            raise GraphError(f"coloring is not proper: edge ({u}, {v}) has colour {c[u]} twice")


def coloring_from_partition(n: int, parts: Sequence[Iterable[int]]) -> list[int]:
    """Colour ``i + 1`` for members of ``parts[i]``."""
    c = [0] * n
    for i, part in enumerate(parts):
        for v in part:
            c[v] = i + 1
    if 0 in c:
        raise GraphError(f"partition misses vertex {c.index(0)}")
    return c


def norin_weights(
    G: Graph,
    c: Sequence[int],
    moduli: Sequence[int] = (7, 8, 9, 11),
    order: OrderingResult | Sequence[int] | None = None,
) -> tuple[WeightMap, Labeling]:
    """Weights ``n(v)`` in ``Z_{n_c(v)}`` and their CRT-composed integer labels.

    ``c`` is a proper colouring with colours ``1..r`` where ``r = len(moduli)``.
    Each modulus must be at least the width of the ordering (degeneracy order
    by default).
    """
    moduli = tuple(int(m) for m in moduli)
    check_coprime(moduli)
    r = len(moduli)
    check_proper_coloring(G, c, r)
    if order is None:
        order = degeneracy_order(G)
    seq = list(order.order) if isinstance(order, OrderingResult) else list(order)
    if sorted(seq) != list(range(G.n)):
        raise GraphError("order must be a permutation of the vertices")
    width = 1 + max(backward_degrees(G, seq), default=0)
    small = [m for m in moduli if m < width]
    if small:
        raise GraphError(f"modulus {small[0]} is below the ordering width {width}")

    pos = {v: i for i, v in enumerate(seq)}
    weights = [0] * G.n
    # partial[u][j]: current sum of weights of u's colour-(j+1) neighbours already weighted
    partial = [[0] * r for _ in range(G.n)]
    for v in seq:
        j = c[v] - 1
        nj = moduli[j]
        # Every backward neighbour u gets S_j(u) != 0 re-enforced here; a later
        # colour-j neighbour of u re-enforces it again, the last one decides.
        forbidden = {(-partial[u][j]) % nj for u in G.adj[v] if pos[u] < pos[v]}
        w = next(x for x in range(nj) if x not in forbidden)
        weights[v] = w
        for u in G.adj[v]:
            partial[u][j] = (partial[u][j] + w) % nj
    wm = WeightMap(tuple(weights), tuple(c), moduli)
    labels = Labeling.integers(crt_compose(moduli, wm.residue_vector(v)) for v in range(G.n))
    return wm, labels


def norin_bound(moduli: Sequence[int]) -> int:
    return prod(moduli)
