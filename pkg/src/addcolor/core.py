"""Graphs, hypergraphs, finite Abelian groups and labelings.

Vertices are dense ids ``0..n-1``.  Group elements are tuples of canonical
residues; the ``{1..n}`` positive-label convention is applied only when labels
are emitted (see :func:`positive_label`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd, prod
from typing import Iterable, Sequence, Union

GroupElement = tuple[int, ...]
Value = Union[int, GroupElement]


class GraphError(ValueError):
    """Invalid graph, hypergraph or labeling input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``range(n)``.

    ``edges`` is stored normalized: each pair as ``(u, v)`` with ``u < v``,
    sorted.  Use :func:`build_graph` for validated construction from raw pairs.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if len(self.adj[u]) <= len(self.adj[v]) else (v, u)
        return b in self.adj[a]

    def vertices(self) -> range:
        return range(self.n)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` in ascending original order.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), tuple(sorted(sub))), keep

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate raw pairs and return a normalized :class:`Graph`.

    Raises :class:`GraphError` on out-of-range vertices, self-loops and
    duplicate edges (in either orientation).
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for idx, pair in enumerate(edge_list):
        if len(pair) != 2:
            raise GraphError(f"edge {idx}: expected a pair, got {list(pair)!r}")
        u, v = int(pair[0]), int(pair[1])
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphError(f"edge {idx}: vertex {w} out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {idx}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"edge {idx}: duplicate edge {key}")
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set ``range(n)`` plus a sequence of hyperedges (frozensets).

    Duplicates and empty hyperedges are representable so that
    :func:`addcolor.orderings.hyper_dedupe` has something to remove.
    """

    n: int
    hyperedges: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for e in self.hyperedges:
            for v in e:
                if not 0 <= v < self.n:
                    raise GraphError(f"hyperedge {sorted(e)} has vertex {v} outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(n, tuple(frozenset(e) for e in edges))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.hyperedges if v in e)

    def edge_set(self) -> set[frozenset[int]]:
        return set(self.hyperedges)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{n_1} x ... x Z_{n_r}; an empty ``moduli`` is the trivial group."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        for m in self.moduli:
            if m < 2:
                raise GraphError(f"group moduli must be >= 2, got {m}")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls((n,)) if n > 1 else cls(())

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        """Parse ``"2x2x3"`` (also accepts ``Z_2xZ_3`` style)."""
        parts = [p.strip().lstrip("Zz").lstrip("_") for p in text.replace("*", "x").split("x")]
        try:
            moduli = tuple(int(p) for p in parts if p)
        except ValueError:
            raise GraphError(f"cannot parse group {text!r}") from None
        if not moduli:
            raise GraphError(f"cannot parse group {text!r}")
        return cls(tuple(m for m in moduli if m != 1))

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def is_cyclic_presentation(self) -> bool:
        return len(self.moduli) == 1

    @property
    def zero(self) -> GroupElement:
        return (0,) * len(self.moduli)

    def element(self, x: Value) -> GroupElement:
        """Coerce an int (single-factor groups) or a residue sequence."""
        if isinstance(x, int):
            if len(self.moduli) != 1:
                if not self.moduli and x == 0:
                    return ()
                raise GraphError(f"integer {x} is not an element of {self}")
            return (x % self.moduli[0],)
        x = tuple(int(c) for c in x)
        if len(x) != len(self.moduli):
            raise GraphError(f"element {x} has wrong length for {self}")
        return tuple(c % m for c, m in zip(x, self.moduli))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: GroupElement) -> GroupElement:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x - y) % m for x, y, m in zip(a, b, self.moduli))

    def elements(self) -> list[GroupElement]:
        """All elements in lexicographic residue order (zero first)."""
        return list(product(*(range(m) for m in self.moduli)))

    def display(self, a: GroupElement) -> Union[int, list[int]]:
        return a[0] if len(a) == 1 else list(a)

    def __str__(self) -> str:
        if not self.moduli:
            return "Z_1"
        return "x".join(f"Z_{m}" for m in self.moduli)


@dataclass(frozen=True)
class Labeling:
    """A total vertex labeling; ``group is None`` means integer (or rational) labels."""

    values: tuple
    group: FiniteAbelianGroup | None = None

    @classmethod
    def integers(cls, values: Iterable[int]) -> "Labeling":
        return cls(tuple(int(v) for v in values))

    @classmethod
    def in_group(cls, group: FiniteAbelianGroup, values: Iterable[Value]) -> "Labeling":
        return cls(tuple(group.element(v) for v in values), group)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int):
        return self.values[v]

    @property
    def max_label(self) -> int | None:
        if self.group is not None or not self.values:
            return None
        return max(self.values)

    def is_positive(self) -> bool:
        return self.group is None and all(v >= 1 for v in self.values)

    def display_values(self) -> list:
        if self.group is None:
            return list(self.values)
        return [self.group.display(v) for v in self.values]


def sum_profile(G: Graph, f: Labeling) -> tuple:
    """Neighbor sums S(v) in the algebra of ``f``; isolated vertices get zero."""
    if len(f) != G.n:
        raise GraphError(f"labeling has {len(f)} values for a graph on {G.n} vertices")
    if f.group is None:
        for x in f.values:
            if isinstance(x, tuple):
                raise GraphError(f"numeric labeling contains group element {x!r}")
        return tuple(sum(f.values[x] for x in G.adj[v]) for v in range(G.n))
    grp = f.group
    for x in f.values:
        if not isinstance(x, tuple) or len(x) != len(grp.moduli):
            raise GraphError(f"label {x!r} is not an element of {grp}")
    sums = []
    for v in range(G.n):
        acc = list(grp.zero)
        for x in G.adj[v]:
            for i, c in enumerate(f.values[x]):
                acc[i] += c
        sums.append(tuple(c % m for c, m in zip(acc, grp.moduli)))
    return tuple(sums)


def positive_label(residue: int, modulus: int) -> int:
    """Map a residue mod ``modulus`` to ``{1..modulus}`` (0 becomes ``modulus``)."""
    r = residue % modulus
    return r if r else modulus


def check_coprime(moduli: Sequence[int]) -> None:
    for i, a in enumerate(moduli):
        if a < 1:
            raise GraphError(f"moduli must be positive, got {a}")
        for b in moduli[i + 1 :]:
            if gcd(a, b) != 1:
                raise GraphError(f"moduli {a} and {b} are not coprime")


def crt_compose(moduli: Sequence[int], residues: Sequence[int]) -> int:
    """The unique x in ``{1..N}`` with ``x = residues[i] (mod moduli[i])``.

    The all-zero residue vector maps to ``N`` rather than 0.
    """
    if len(moduli) != len(residues):
        raise GraphError("moduli and residues differ in length")
    check_coprime(moduli)
    N = prod(moduli)
    x = 0
    for m, r in zip(moduli, residues):
        if not 0 <= r < m:
            raise GraphError(f"residue {r} out of range for modulus {m}")
        partial = N // m
        x += r * partial * pow(partial, -1, m)
    return positive_label(x, N)


def crt_decompose(moduli: Sequence[int], x: int) -> tuple[int, ...]:
    return tuple(x % m for m in moduli)
