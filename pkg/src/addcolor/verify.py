"""Additive-coloring verification and structural checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import inf
from typing import Any, Iterable

from .core import FiniteAbelianGroup, Graph, Labeling, sum_profile


@dataclass(frozen=True)
class Certificate:
    labeling: Labeling
    sums: tuple
    verdict: bool
    conflicts: tuple[tuple[int, int], ...]
    method: str = "verify"
    max_label: int | None = None
    details: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_json(self) -> dict[str, Any]:
        grp = self.labeling.group
        show = (lambda x: x) if grp is None else grp.display
        doc: dict[str, Any] = {
            "method": self.method,
            "verdict": self.verdict,
            "labels": {str(v): show(x) for v, x in enumerate(self.labeling.values)},
            "sums": {str(v): show(x) for v, x in enumerate(self.sums)},
            "conflicts": [list(e) for e in self.conflicts],
            "max_label": self.max_label,
        }
        if grp is not None:
            doc["group"] = list(grp.moduli)
        return doc

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> "Certificate":
        n = len(doc["labels"])
        labels = [doc["labels"][str(v)] for v in range(n)]
        sums = [doc["sums"][str(v)] for v in range(n)]
        if "group" in doc:
            grp = FiniteAbelianGroup(tuple(doc["group"]))
            labeling = Labeling.in_group(grp, labels)
            sums_t = tuple(grp.element(s) for s in sums)
        else:
            labeling = Labeling.integers(labels)
            sums_t = tuple(sums)
        return cls(
            labeling,
            sums_t,
            bool(doc["verdict"]),
            tuple(tuple(e) for e in doc["conflicts"]),
            doc["method"],
            doc["max_label"],
        )


def verify_additive(G: Graph, f: Labeling, method: str = "verify") -> Certificate:
    """Check ``S(u) != S(v)`` on every edge; every conflicting edge is reported."""
    sums = sum_profile(G, f)
    conflicts = tuple((u, v) for u, v in G.edges if sums[u] == sums[v])
    return Certificate(f, sums, not conflicts, conflicts, method, f.max_label)


def verify_partition(G: Graph, parts: Iterable[Iterable[int]]) -> bool:
    seen: set[int] = set()
    for part in parts:
        part = list(part)
        members = set(part)
        if len(members) != len(part) or members & seen:
            return False
        if any(not 0 <= v < G.n for v in members):
            return False
        for v in members:
            if any(w in members for w in G.adj[v]):
                return False
        seen |= members
    return len(seen) == G.n


def bipartition(G: Graph) -> tuple[list[int], list[int]] | None:
    """Two-coloring by BFS (smallest vertex of each component on side 0)."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return [v for v in range(G.n) if side[v] == 0], [v for v in range(G.n) if side[v] == 1]


def girth(G: Graph) -> float:
    """Shortest cycle length by BFS from every vertex; ``inf`` for forests."""
    best = inf
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in G.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


@dataclass(frozen=True)
class Structure:
    bipartition: tuple[list[int], list[int]] | None
    girth: float
    components: int


def analyze_structure(G: Graph) -> Structure:
    return Structure(bipartition(G), girth(G), len(G.components()))


def is_forest(G: Graph, vertices: Iterable[int] | None = None) -> bool:
    sub = G if vertices is None else G.induced(vertices)[0]
    return sub.m == sub.n - len(sub.components())


def distances_from(G: Graph, s: int, limit: int | None = None) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in G.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_two_independent(G: Graph, I: Iterable[int]) -> bool:
    """Pairwise distance at least three between members of ``I``."""
    members = set(I)
    for s in members:
        near = distances_from(G, s, limit=2)
        if any(v != s and v in members for v in near):
            return False
    return True


def check_decomposition(G: Graph, I: Iterable[int], F: Iterable[int]) -> bool:
    I, F = set(I), set(F)
    if I & F or (I | F) != set(range(G.n)):
        return False
    return is_two_independent(G, I) and is_forest(G, F)
