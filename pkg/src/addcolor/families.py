"""Deterministic graph families for tests and the ``generate`` subcommand."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .core import Graph, GraphError, build_graph

DEFAULT_SEED = 20100414


@dataclass(frozen=True)
class Family:
    graph: Graph
    partition: list[list[int]] | None = None


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(rows: int, cols: int | None = None) -> Graph:
    cols = rows if cols is None else cols
    vid = lambda r, c: r * cols + c  # noqa: E731
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return build_graph(rows * cols, edges)


def triangular_grid(rows: int, cols: int | None = None) -> Family:
    """Grid plus one diagonal per square; 3-partition by ``(r + c) mod 3``."""
    cols = rows if cols is None else cols
    vid = lambda r, c: r * cols + c  # noqa: E731
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
            if r + 1 < rows and c + 1 < cols:
                edges.append((vid(r, c), vid(r + 1, c + 1)))
    parts: list[list[int]] = [[], [], []]
    for r in range(rows):
        for c in range(cols):
            parts[(r + c) % 3].append(vid(r, c))
    return Family(build_graph(rows * cols, edges), parts)


def ladder(n: int) -> Graph:
    return grid(2, n)


def wheel(spokes: int) -> Graph:
    edges = [(0, i) for i in range(1, spokes + 1)]
    edges += [(i, i % spokes + 1) for i in range(1, spokes + 1)]
    return build_graph(spokes + 1, edges)


def icosahedron() -> Graph:
    """Apex 0, upper ring 1..5, lower ring 6..10, apex 11."""
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        lo, lo_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (lo, lo_next), (11, lo), (up, lo), (up, lo_next)]
    return build_graph(12, edges)


def octahedron() -> Graph:
    return build_graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3])


def cube() -> Graph:
    return build_graph(8, [(i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)])


def dodecahedron() -> Graph:
    edges = []
    for i in range(5):
        edges += [(i, (i + 1) % 5), (i, 5 + i)]
        edges += [(5 + i, 10 + i), (5 + i, 10 + (i + 4) % 5)]
        edges += [(10 + i, 15 + i), (15 + i, 15 + (i + 1) % 5)]
    return build_graph(20, edges)


def apollonian(insertions: int, seed: int = DEFAULT_SEED) -> Family:
    """Stacked triangulation: start from a triangle, insert into random faces.

    The new vertex in face ``{a, b, c}`` takes the one colour of four missing
    from the face, which yields a proper 4-partition for free.
    """
    rng = random.Random(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    colour = [0, 1, 2]
    faces = [(0, 1, 2), (0, 1, 2)]
    for _ in range(insertions):
        face = faces.pop(rng.randrange(len(faces)))
        v = len(colour)
        a, b, c = face
        edges += [(a, v), (b, v), (c, v)]
        colour.append(({0, 1, 2, 3} - {colour[a], colour[b], colour[c]}).pop())
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    parts = [[v for v, col in enumerate(colour) if col == k] for k in range(4)]
    return Family(build_graph(len(colour), edges), parts)


def random_tree(n: int, seed: int = DEFAULT_SEED) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [(rng.randrange(v), v) for v in range(1, n)])


def subdivide(G: Graph, times: int = 1) -> Graph:
    """Replace every edge by a path with ``times`` internal vertices."""
    edges = []
    nxt = G.n
    for u, v in G.edges:
        prev = u
        for _ in range(times):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return build_graph(nxt, edges)


def subdivided_tree(n: int, seed: int = DEFAULT_SEED, times: int = 1) -> Graph:
    return subdivide(random_tree(n, seed), times)


_FAMILIES: dict[str, Callable[..., Graph | Family]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "grid": grid,
    "triangular": triangular_grid,
    "ladder": ladder,
    "wheel": wheel,
    "apollonian": apollonian,
    "random_tree": random_tree,
    "subdivided_tree": subdivided_tree,
    "icosahedron": lambda size=None: icosahedron(),
    "octahedron": lambda size=None: octahedron(),
    "cube": lambda size=None: cube(),
    "dodecahedron": lambda size=None: dodecahedron(),
}
_SEEDED = {"apollonian", "random_tree", "subdivided_tree"}

FAMILY_NAMES = tuple(sorted(_FAMILIES))


def generate_family(name: str, size: int | None = None, seed: int = DEFAULT_SEED) -> Family:
    """Build family ``name`` at ``size``; ``Family.partition`` is set where natural."""
    try:
        make = _FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}") from None
    if size is None and name not in {"icosahedron", "octahedron", "cube", "dodecahedron"}:
        raise GraphError(f"family {name!r} needs a size")
    out = make(size, seed=seed) if name in _SEEDED else make(size)
    return out if isinstance(out, Family) else Family(out)
