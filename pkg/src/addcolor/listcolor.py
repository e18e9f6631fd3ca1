"""Polynomial-method guarantees and list-additive colorings of bipartite graphs.

The Combinatorial Nullstellensatz is used as a certificate that a search space
is non-empty; the searches themselves are exhaustive with pruning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .core import Graph, GraphError, Labeling
from .orderings import Orientation, bounded_indegree_orientation
from .verify import bipartition, is_forest

Number = int | Fraction
Exponent = tuple[int, ...]


class SearchExhausted(GraphError):
    """A complete search found nothing; ``status`` says which guarantees held."""

    def __init__(self, message: str, status: dict | None = None):
        super().__init__(message)
        self.status = status or {}


@dataclass(frozen=True)
class Polynomial:
    """Sparse multivariate polynomial with rational coefficients."""

    arity: int
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Exponent, Fraction] = {}
        for exp, coef in dict(self.terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.arity or any(e < 0 for e in exp):
                raise GraphError(f"bad exponent vector {exp} for arity {self.arity}")
            coef = Fraction(coef)
            if coef:
                clean[exp] = clean.get(exp, Fraction(0)) + coef
                if not clean[exp]:
                    del clean[exp]
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, arity: int, c: Number) -> "Polynomial":
        return cls(arity, {(0,) * arity: Fraction(c)})

    @classmethod
    def linear(cls, arity: int, coeffs: Mapping[int, Number] | Sequence[Number], const: Number = 0) -> "Polynomial":
        terms: dict[Exponent, Fraction] = {(0,) * arity: Fraction(const)}
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        for i, a in pairs:
            exp = [0] * arity
            exp[i] = 1
            terms[tuple(exp)] = terms.get(tuple(exp), Fraction(0)) + Fraction(a)
        return cls(arity, terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Polynomial(self.arity, terms)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.arity, terms)

    def __call__(self, point: Sequence[Number]) -> Fraction:
        total = Fraction(0)
        for exp, coef in self.terms.items():
            term = coef
            for x, e in zip(point, exp):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))


def certifying_monomial(P: Polynomial, sets: Sequence[Iterable[Number]]) -> Exponent | None:
    """A top-degree monomial ``x^k`` of ``P`` with ``|A_i| >= k_i + 1``, if any."""
    sizes = [len(set(A)) for A in sets]
    top = P.degree
    for exp in sorted(P.terms):
        if sum(exp) == top and all(k + 1 <= s for k, s in zip(exp, sizes)):
            return exp
    return None


@dataclass(frozen=True)
class NonvanishingPoint:
    point: tuple[Number, ...]
    value: Fraction
    certificate: Exponent | None


def cn_nonvanishing(P: Polynomial, sets: Sequence[Iterable[Number]]) -> NonvanishingPoint:
    """Lexicographically first grid point (sets sorted ascending) where ``P != 0``.

    When :func:`certifying_monomial` finds a witness the search cannot come up
    empty; without one it still runs and raises :class:`SearchExhausted` if
    the polynomial vanishes on the whole grid.
    """
    if len(sets) != P.arity:
        raise GraphError(f"need {P.arity} value sets, got {len(sets)}")
    grid = [sorted(set(Fraction(a) for a in A)) for A in sets]
    cert = certifying_monomial(P, grid)
    for point in product(*grid):
        value = P(point)
        if value:
            return NonvanishingPoint(tuple(_tidy(x) for x in point), value, cert)
    raise SearchExhausted(
        "polynomial vanishes on the whole grid",
        {"certifying_monomial": cert},
    )


def _tidy(x: Fraction) -> Number:
    return int(x) if x.denominator == 1 else x


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[tuple[Fraction, ...], ...]
    offsets: tuple[Fraction, ...]

    @classmethod
    def make(
        cls,
        n: int,
        lists: Sequence[Iterable[Number]] | Mapping[int, Iterable[Number]],
        offsets: Sequence[Number] | Mapping[int, Number] | None = None,
    ) -> "ListAssignment":
        if isinstance(lists, Mapping):
            missing = [v for v in range(n) if v not in lists]
            if missing:
                raise GraphError(f"no list for vertex {missing[0]}")
            lists = [lists[v] for v in range(n)]
        if len(lists) != n:
            raise GraphError(f"expected {n} lists, got {len(lists)}")
        clean = tuple(tuple(sorted(set(Fraction(x) for x in L))) for L in lists)
        for v, L in enumerate(clean):
            if not L:
                raise GraphError(f"list of vertex {v} is empty")
        if offsets is None:
            q = (Fraction(0),) * n
        elif isinstance(offsets, Mapping):
            q = tuple(Fraction(offsets.get(v, 0)) for v in range(n))
        else:
            if len(offsets) != n:
                raise GraphError(f"expected {n} offsets, got {len(offsets)}")
            q = tuple(Fraction(x) for x in offsets)
        return cls(clean, q)


def listbip_polynomial(G: Graph, q: Sequence[Number]) -> Polynomial:
    """Product over edges ``uv`` (``u < v``) of ``q(u) + S(u) - q(v) - S(v)``.

    One variable per vertex.  The sign convention per edge does not affect
    which monomials vanish.
    """
    P = Polynomial.constant(G.n, 1)
    for u, v in G.edges:
        coeffs: dict[int, Fraction] = {}
        for x in G.adj[u]:
            coeffs[x] = coeffs.get(x, Fraction(0)) + 1
        for x in G.adj[v]:
            coeffs[x] = coeffs.get(x, Fraction(0)) - 1
        P = P * Polynomial.linear(G.n, coeffs, Fraction(q[u]) - Fraction(q[v]))
    return P


def orientation_monomial(G: Graph, orientation: Orientation) -> Exponent:
    """Exponent vector picking each edge factor's head variable (its indegree)."""
    return tuple(orientation.indegrees(G.n))


def guarantee_status(G: Graph, assignment: ListAssignment, k: int | None) -> dict:
    sides = bipartition(G)
    status: dict = {"bipartite": sides is not None}
    if k is None:
        k = max(min((len(L) for L in assignment.lists), default=1) - 1, 0)
    status["indegree_bound"] = k
    status["lists_large_enough"] = all(len(L) >= k + 1 for L in assignment.lists)
    status["orientation_exists"] = bounded_indegree_orientation(G, k) is not None
    status["guaranteed"] = all(status[key] for key in ("bipartite", "lists_large_enough", "orientation_exists"))
    return status


def list_additive_solve(
    G: Graph,
    assignment: ListAssignment,
    k: int | None = None,
    max_nodes: int | None = None,
) -> Labeling:
    """First labeling (lexicographic in vertex order) from the lists with
    ``q(u) + S(u) != q(v) + S(v)`` on every edge.

    Vertices are assigned in id order with list values ascending; an edge is
    checked as soon as both endpoints have fully assigned neighborhoods.
    Success is guaranteed when ``G`` is bipartite, it has an orientation with
    indegrees at most ``k`` and every list has ``k + 1`` values.
    """
    n = G.n
    if len(assignment.lists) != n:
        raise GraphError(f"assignment covers {len(assignment.lists)} vertices, graph has {n}")
    closing: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v in G.edges:
        closing[max(max(G.adj[u]), max(G.adj[v]))].append((u, v))
    lists = assignment.lists
    q = assignment.offsets
    S = [Fraction(0)] * n
    f: list[Fraction | None] = [None] * n
    nodes = 0

    def place(i: int) -> bool:
        nonlocal nodes
        if i == n:
            return True
        nbrs = G.adj[i]
        for a in lists[i]:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise SearchExhausted(f"node budget {max_nodes} exceeded", {"budget": max_nodes})
            f[i] = a
            for x in nbrs:
                S[x] += a
            if all(q[u] + S[u] != q[v] + S[v] for u, v in closing[i]) and place(i + 1):
                return True
            for x in nbrs:
                S[x] -= a
        f[i] = None
        return False

    if not place(0):
        status = guarantee_status(G, assignment, k)
        raise SearchExhausted(f"no list-additive coloring exists (guarantees: {status})", status)
    return Labeling(tuple(_tidy(x) for x in f))


def list_edge_violations(G: Graph, values: Sequence[Number], offsets: Sequence[Number]) -> list[tuple[int, int]]:
    """Edges where ``q(u) + S(u) == q(v) + S(v)``, recomputed from scratch."""
    S = [sum((Fraction(values[x]) for x in G.adj[v]), Fraction(0)) for v in range(G.n)]
    return [(u, v) for u, v in G.edges if Fraction(offsets[u]) + S[u] == Fraction(offsets[v]) + S[v]]


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.m == G.n - 1 and is_forest(G)


def tree_list_solve(
    T: Graph,
    lists: Sequence[Iterable[Number]] | Mapping[int, Iterable[Number]],
    offsets: Sequence[Number] | Mapping[int, Number] | None = None,
) -> Labeling:
    """List-additive coloring of a tree from lists of size at least two."""
    if not is_tree(T):
        raise GraphError("input is not a tree")
    assignment = ListAssignment.make(T.n, lists, offsets)
    short = [v for v, L in enumerate(assignment.lists) if len(L) < 2]
    if short:
        raise GraphError(f"vertex {short[0]} has a list with fewer than two values")
    return list_additive_solve(T, assignment, k=1)
