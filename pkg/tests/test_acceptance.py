"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (lines are printed even under
capture) or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from itertools import combinations, product

import pytest

from addcolor import families as fam
from addcolor.core import FiniteAbelianGroup, build_graph, crt_compose, crt_decompose
from addcolor.gadgets import clique_sums, gr_explicit_coloring, gr_nonexistence, lift_coloring, np_reduction, z2_decide
from addcolor.listcolor import ListAssignment, Polynomial, cn_nonvanishing, list_additive_solve, list_edge_violations
from addcolor.modular import coloring_from_partition
from addcolor.oracle import eta_exact, exact_partition, group_additive_exists, proper_coloring_exact
from addcolor.orderings import bipartite_hypergraph, bounded_indegree_orientation, hyper_order, tightness_witness
from addcolor.pipelines import color_girth13, color_norin, color_planar3, color_planar4
from addcolor.verify import bipartition, verify_additive, verify_partition

SEED = fam.DEFAULT_SEED

# pinned tolerances
ETA_TIME_LIMIT_S = 10.0
NORIN_MAX_LABEL = 5544
PLANAR4_MAX_LABEL = 468
PLANAR3_MAX_LABEL = 36
TIGHT_X_DEGREE = 11
TIGHT_WIDTH = 12
GIRTH13_LABELS = {1, 2, 4}
GR_RANGE = range(2, 11)
GR2_ASSIGNMENTS = 1024
MIN_FAMILY_GRAPHS = 10
Z2_MAX_VERTICES = 6
TREE_INSTANCES, BIP_INSTANCES, CN_INSTANCES = 100, 50, 50


def _line(number, ok, text):
    return f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}: {text}"


@pytest.fixture
def emit(report):
    return report


def check(emit, number, ok, text):
    emit(_line(number, ok, text))
    assert ok, text


def test_01_clique_ground_truth(emit):
    t = time.perf_counter()
    etas = [eta_exact(fam.complete(n), 6) for n in range(1, 6)]
    dt = time.perf_counter() - t
    ok = etas == [1, 2, 3, 4, 5] and dt < ETA_TIME_LIMIT_S
    check(emit, 1, ok, f"eta(K_1..K_5) = {etas} in {dt:.2f}s (limit {ETA_TIME_LIMIT_S}s)")


def _planar_four_coloured():
    """(name, graph, proper colouring 1..4) with exact partitions."""
    out = []
    for r, c in [(2, 2), (3, 3), (3, 5), (4, 4), (4, 6), (5, 5)]:
        G = fam.grid(r, c)
        out.append((f"grid{r}x{c}", G, exact_partition(G, 4)))
    out.append(("icosahedron", fam.icosahedron(), exact_partition(fam.icosahedron(), 4)))
    out.append(("octahedron", fam.octahedron(), exact_partition(fam.octahedron(), 4)))
    for k in (5, 10, 15, 19, 22):
        a = fam.apollonian(k, seed=SEED + k)
        out.append((f"apollonian{a.graph.n}", a.graph, a.partition))
    return out


def test_02_norin_bound(emit):
    rows = []
    for name, G, parts in _planar_four_coloured():
        assert verify_partition(G, parts)
        cert = color_norin(G, coloring_from_partition(G.n, parts), (7, 8, 9, 11))
        rows.append((name, cert.verdict and not cert.conflicts, cert.max_label))
    ok = len(rows) >= MIN_FAMILY_GRAPHS and all(v and m <= NORIN_MAX_LABEL for _, v, m in rows)
    worst = max(m for _, _, m in rows)
    check(emit, 2, ok, f"{len(rows)} graphs verified with zero conflicts, max label {worst} <= {NORIN_MAX_LABEL}")


def test_03_planar4_pipeline(emit):
    graphs = [(n, G, p) for n, G, p in _planar_four_coloured()]
    graphs += [("wheel7", fam.wheel(7), exact_partition(fam.wheel(7), 4)), ("K4", fam.complete(4), [[0], [1], [2], [3]])]
    bad = []
    worst = 0
    for name, G, parts in graphs:
        cert = color_planar4(G, parts)
        worst = max(worst, cert.max_label)
        if not cert.verdict or cert.max_label > PLANAR4_MAX_LABEL or cert.details["stratification_violations"]:
            bad.append(name)
    ok = len(graphs) >= MIN_FAMILY_GRAPHS and not bad
    check(emit, 3, ok, f"{len(graphs)} graphs, stratification clean, max label {worst} <= {PLANAR4_MAX_LABEL}; failures {bad}")


def test_04_planar3_pipeline(emit):
    graphs = [(f"C{n}", fam.cycle(n), [list(range(0, n - 1, 2)), list(range(1, n - 1, 2)), [n - 1]]) for n in (3, 5, 7, 9, 13, 21)]
    for r, c in [(2, 3), (3, 3), (4, 5), (6, 6), (7, 4)]:
        t = fam.triangular_grid(r, c)
        graphs.append((f"tri{r}x{c}", t.graph, t.partition))
    bad = []
    worst = 0
    for name, G, parts in graphs:
        cert = color_planar3(G, parts)
        worst = max(worst, cert.max_label)
        if not cert.verdict or cert.max_label > PLANAR3_MAX_LABEL or cert.details["stratification_violations"]:
            bad.append(name)
    ok = len(graphs) >= MIN_FAMILY_GRAPHS and not bad
    check(emit, 4, ok, f"{len(graphs)} graphs, max label {worst} <= {PLANAR3_MAX_LABEL}; failures {bad}")


def test_05_tightness_witness(emit):
    G, X, Y = tightness_witness()
    twin_free = len({G.adj[y] for y in Y}) == len(Y)
    degrees = {G.degree(x) for x in X}
    H, _ = bipartite_hypergraph(G, X, Y)
    width = hyper_order(H).width
    ok = bipartition(G) is not None and twin_free and degrees == {TIGHT_X_DEGREE} and width == TIGHT_WIDTH
    check(emit, 5, ok, f"twin-free={twin_free}, X-degrees={sorted(degrees)}, width={width} (want {TIGHT_WIDTH})")


def test_06_girth13_pipeline(emit):
    graphs = [fam.cycle(n) for n in (13, 20, 26)]
    rng = random.Random(SEED)
    graphs += [fam.subdivided_tree(rng.randint(4, 20), seed=rng.randrange(10**9), times=rng.randint(1, 3)) for _ in range(20)]
    bad = 0
    for G in graphs:
        cert = color_girth13(G)
        if not cert.verdict or not set(cert.labeling.values) <= GIRTH13_LABELS:
            bad += 1
    check(emit, 6, bad == 0, f"{len(graphs)} graphs (C13, C20, C26, 20 subdivided trees), {bad} failures, labels within {sorted(GIRTH13_LABELS)}")


def test_07_gadget_suite(emit):
    failures = []
    for r in GR_RANGE:
        G, meta, f = gr_explicit_coloring(r)
        m = r + 1
        sums = clique_sums(meta, f, m)
        if m % 2:
            want = [(0, 0)] * r
        else:
            k = m // 2
            want = [(k - 1, 1) if i == k else (k, 0) for i in range(1, r + 1)]
        if not verify_additive(G, f).verdict or sums != want:
            failures.append(r)
    rep = gr_nonexistence(2, FiniteAbelianGroup.cyclic(2))
    ok = not failures and rep.nonexistent and rep.assignments == GR2_ASSIGNMENTS
    check(emit, 7, ok, f"r=2..10 explicit colorings verified (failures {failures}); G_2 over Z_2: none in {rep.assignments} assignments")


def test_08_reduction_equivalence(emit):
    Z3 = FiniteAbelianGroup.cyclic(3)
    pairs = list(combinations(range(4), 2))
    mismatches, lifts, bad_lifts = 0, 0, 0
    for mask in range(1 << len(pairs)):
        G = build_graph(4, [p for i, p in enumerate(pairs) if mask >> i & 1])
        colourable = proper_coloring_exact(G, 3) is not None
        additive, _ = group_additive_exists(np_reduction(G), Z3)
        mismatches += colourable != additive
        for c in product(range(3), repeat=4):
            if all(c[u] != c[v] for u, v in G.edges):
                for a in (1, 2):
                    lifts += 1
                    bad_lifts += not verify_additive(np_reduction(G), lift_coloring(G, c, a, Z3)).verdict
    ok = mismatches == 0 and bad_lifts == 0 and lifts > 0
    check(emit, 8, ok, f"64 graphs, {mismatches} mismatches; {lifts} lifts, {bad_lifts} failed")


def test_09_z2_decision(emit):
    Z2 = FiniteAbelianGroup.cyclic(2)
    total = disagreements = 0
    for n in range(1, Z2_MAX_VERTICES + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            d = z2_decide(G)
            ok, _ = group_additive_exists(G, Z2)
            total += 1
            if d.colorable != ok or (d.colorable and not verify_additive(G, d.witness).verdict):
                disagreements += 1
    check(emit, 9, disagreements == 0, f"all {total} labeled graphs on <= {Z2_MAX_VERTICES} vertices, {disagreements} disagreements")


def _bipartite_pool(rng):
    pool = []
    while len(pool) < BIP_INSTANCES:
        kind = len(pool) % 5
        if kind == 0:
            G = fam.grid(rng.randint(2, 5), rng.randint(2, 5))
        elif kind == 1:
            G = fam.cycle(2 * rng.randint(2, 9))
        elif kind == 2:
            G = fam.subdivide(fam.apollonian(rng.randint(1, 4), seed=rng.randrange(10**6)).graph)
        elif kind == 3:
            G = fam.ladder(rng.randint(2, 8))
        else:
            G = fam.random_tree(rng.randint(2, 15), seed=rng.randrange(10**6))
        if bounded_indegree_orientation(G, 2) is not None:
            pool.append(G)
    return pool


def test_10_list_corollaries(emit):
    rng = random.Random(SEED)
    tree_fail = 0
    for i in range(TREE_INSTANCES):
        T = fam.random_tree(rng.randint(1, 15), seed=rng.randrange(10**9))
        if i % 2:
            lists = [rng.sample(range(-4, 6), 2) for _ in range(T.n)]
        else:
            pair = rng.sample(range(1, 6), 2)
            lists = [pair] * T.n
        f = list_additive_solve(T, ListAssignment.make(T.n, lists), k=1)
        tree_fail += bool(list_edge_violations(T, f.values, [0] * T.n))
    bip_fail = 0
    for G in _bipartite_pool(rng):
        lists = [[Fraction(x, rng.randint(1, 3)) for x in rng.sample(range(-6, 10), 3)] for _ in range(G.n)]
        f = list_additive_solve(G, ListAssignment.make(G.n, lists), k=2)
        bip_fail += bool(list_edge_violations(G, f.values, [0] * G.n))
    ok = tree_fail == 0 and bip_fail == 0
    check(emit, 10, ok, f"{TREE_INSTANCES} trees with 2-lists ({tree_fail} failed); {BIP_INSTANCES} bipartite graphs with 3-lists ({bip_fail} failed)")


def _random_certified_polynomial(rng):
    n = rng.randint(1, 3)
    exps = [rng.randint(0, 3) for _ in range(n)]
    if not sum(exps):
        exps[0] = 1
    d = sum(exps)
    terms = {tuple(exps): Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))}
    for _ in range(rng.randint(0, 6)):
        e = tuple(rng.randint(0, d) for _ in range(n))
        if sum(e) <= d and e != tuple(exps):
            terms[e] = Fraction(rng.randint(-5, 5))
    sets = [sorted(rng.sample(range(-5, 6), k + 1 + rng.randint(0, 1))) for k in exps]
    return Polynomial(n, terms), sets


def test_11_cn_utility(emit):
    rng = random.Random(SEED)
    bad = 0
    for _ in range(CN_INSTANCES):
        P, sets = _random_certified_polynomial(rng)
        found = cn_nonvanishing(P, sets)
        grid = list(product(*sets))
        first = next(pt for pt in grid if P(pt) != 0)
        if found.certificate is None or tuple(found.point) != first or P(found.point) == 0:
            bad += 1
    check(emit, 11, bad == 0, f"{CN_INSTANCES} certified polynomials, {bad} failures against full grid evaluation")


def test_12_crt(emit):
    failures = []
    for moduli in ((12, 13), (3, 4, 5)):
        N = 1
        for m in moduli:
            N *= m
        vecs = list(product(*(range(m) for m in moduli)))
        images = [crt_compose(moduli, r) for r in vecs]
        if sorted(images) != list(range(1, N + 1)):
            failures.append(f"{moduli} not a bijection")
        for r, s in product(vecs, repeat=2):
            rs = tuple((a + b) % m for a, b, m in zip(r, s, moduli))
            if (crt_compose(moduli, rs) - crt_compose(moduli, r) - crt_compose(moduli, s)) % N:
                failures.append(f"{moduli} homomorphism fails at {r}, {s}")
                break
        if any(crt_decompose(moduli, x) != r for x, r in zip(images, vecs)):
            failures.append(f"{moduli} decompose mismatch")
    scan = [x for x in range(1, 157) if x % 12 == 0 and x % 13 == 1]
    ok = not failures and scan == [144] and crt_compose((12, 13), (0, 1)) == 144
    check(emit, 12, ok, f"bijection and homomorphism for (12,13), (3,4,5); sigma(0,1) = {crt_compose((12, 13), (0, 1))}, scan {scan}; {failures}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
