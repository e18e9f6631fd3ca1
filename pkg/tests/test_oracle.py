from itertools import permutations, product

import networkx as nx
import pytest

from addcolor import families as fam
from addcolor.core import FiniteAbelianGroup, Labeling, build_graph, sum_profile
from addcolor.gadgets import build_gr
from addcolor.oracle import (
    BudgetExceeded,
    SearchBudget,
    TwinsPresent,
    additive_labeling,
    antimagic_vertex_search,
    chromatic_number_exact,
    enumerate_abelian_groups,
    eta_exact,
    exact_partition,
    group_additive_exists,
)
from addcolor.verify import verify_additive, verify_partition
from conftest import all_graphs, to_nx


def _naive_eta(G, k_max):
    for k in range(1, k_max + 1):
        for f in product(range(1, k + 1), repeat=G.n):
            S = sum_profile(G, Labeling.integers(f))
            if all(S[u] != S[v] for u, v in G.edges):
                return k
    return None


def test_eta_examples():
    assert [eta_exact(fam.complete(n), 6) for n in range(1, 6)] == [1, 2, 3, 4, 5]
    assert eta_exact(fam.path(3), 3) == 1
    assert eta_exact(fam.cycle(4), 3) == 2
    assert eta_exact(fam.complete(4), 3) is None


def test_eta_against_naive_enumeration():
    for G in all_graphs(4):
        assert eta_exact(G, 4) == _naive_eta(G, 4)
    for G in [fam.cycle(5), fam.cycle(6), fam.wheel(4), fam.path(6)]:
        assert eta_exact(G, 4) == _naive_eta(G, 4)


def test_additive_witness_verifies():
    f = additive_labeling(fam.octahedron(), 4)
    assert f is not None and verify_additive(fam.octahedron(), f).verdict


def test_budgets():
    with pytest.raises(BudgetExceeded):
        eta_exact(fam.path(13), 2)
    with pytest.raises(BudgetExceeded):
        additive_labeling(fam.complete(8), 7, SearchBudget(max_assignments=100))
    with pytest.raises(BudgetExceeded):
        group_additive_exists(fam.path(13), FiniteAbelianGroup.cyclic(4))


def test_chromatic_examples():
    assert chromatic_number_exact(fam.cycle(5)) == 3
    assert chromatic_number_exact(build_gr(4)[0]) == 4
    assert chromatic_number_exact(build_gr(3)[0]) == 3
    assert chromatic_number_exact(fam.grid(3, 4)) == 2
    assert chromatic_number_exact(fam.icosahedron()) == 4


def test_chromatic_against_networkx_bound():
    for G in all_graphs(5):
        chi = chromatic_number_exact(G)
        greedy = max(nx.greedy_color(to_nx(G)).values(), default=-1) + 1
        assert chi <= greedy
        parts = exact_partition(G, chi)
        assert verify_partition(G, parts)
        if chi > 1:
            assert exact_partition(G, chi - 1) is None


def test_group_examples():
    ok, f = group_additive_exists(fam.complete(2), FiniteAbelianGroup.cyclic(2))
    assert ok and f.display_values() == [0, 1]
    ok, f = group_additive_exists(build_gr(2)[0], FiniteAbelianGroup.cyclic(2))
    assert not ok and f is None
    ok, f = group_additive_exists(fam.complete(3), FiniteAbelianGroup.cyclic(3))
    assert ok and verify_additive(fam.complete(3), f).verdict


def test_group_search_against_product():
    grp = FiniteAbelianGroup.parse("2x2")
    for G in all_graphs(4):
        ok, f = group_additive_exists(G, grp)
        brute = any(
            verify_additive(G, Labeling.in_group(grp, vals)).verdict for vals in product(grp.elements(), repeat=4)
        )
        assert ok == brute
        if ok:
            assert verify_additive(G, f).verdict


def test_group_enumeration():
    assert [g.moduli for g in enumerate_abelian_groups(8)] == [(8,), (4, 2), (2, 2, 2)]
    assert [g.moduli for g in enumerate_abelian_groups(7)] == [(7,)]
    assert [g.moduli for g in enumerate_abelian_groups(12)] == [(4, 3), (2, 2, 3)]
    assert [g.moduli for g in enumerate_abelian_groups(1)] == [()]
    # number of classes is the product of partition numbers of the exponents
    assert len(enumerate_abelian_groups(16 * 9)) == 5 * 2


def _brute_antimagic(G):
    for perm in permutations(range(1, G.n + 1)):
        S = sum_profile(G, Labeling.integers(perm))
        if len(set(S)) == G.n:
            return True
    return False


def test_antimagic_examples():
    with pytest.raises(TwinsPresent):
        antimagic_vertex_search(fam.path(3))
    P4 = fam.path(4)
    assert sum_profile(P4, Labeling.integers([1, 2, 3, 4])) == (2, 4, 6, 3)
    f = antimagic_vertex_search(P4)
    assert f is not None and len(set(sum_profile(P4, Labeling.integers(f)))) == 4
    assert antimagic_vertex_search(fam.complete(3)) == (1, 2, 3)


def test_antimagic_against_permutations():
    checked = 0
    for G in all_graphs(5):
        try:
            f = antimagic_vertex_search(G)
        except TwinsPresent:
            continue
        checked += 1
        assert (f is not None) == _brute_antimagic(G)
        if f is not None:
            assert sorted(f) == [1, 2, 3, 4, 5]
            assert len(set(sum_profile(G, Labeling.integers(f)))) == 5
    assert checked > 100
