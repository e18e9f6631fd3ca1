import random
from fractions import Fraction
from itertools import product

import pytest

from addcolor import families as fam
from addcolor.core import GraphError, build_graph
from addcolor.listcolor import (
    ListAssignment,
    Polynomial,
    SearchExhausted,
    certifying_monomial,
    cn_nonvanishing,
    guarantee_status,
    list_additive_solve,
    list_edge_violations,
    listbip_polynomial,
    orientation_monomial,
    tree_list_solve,
)
from addcolor.orderings import bounded_indegree_orientation
from addcolor.verify import bipartition

X = Polynomial.linear(2, [1, 0])
Y = Polynomial.linear(2, [0, 1])


def test_polynomial_algebra():
    P = (X + Y) * (X + Polynomial.constant(2, -1) * Y)
    assert P.terms == {(2, 0): 1, (0, 2): -1}
    assert P.degree == 2 and P([3, 2]) == 5
    assert Polynomial(1, {(1,): 0}).is_zero()
    with pytest.raises(GraphError):
        Polynomial(2, {(1,): 1})


def test_cn_examples():
    assert cn_nonvanishing(X * Y, [[0, 1], [0, 1]]).point == (1, 1)
    pt = cn_nonvanishing(X + Polynomial.constant(2, -1) * Y, [[0, 1], [2]])
    assert pt.point == (0, 2) and pt.value == -2
    sq = Polynomial.linear(1, [1]) * Polynomial.linear(1, [1])
    pt = cn_nonvanishing(sq, [[1, 0, -1]])
    assert pt.point == (-1,) and pt.value == 1 and pt.certificate == (2,)


def test_cn_exhaustion_without_certificate():
    sq = Polynomial.linear(1, [1]) * Polynomial.linear(1, [1])
    assert certifying_monomial(sq, [[0, 5]]) is None
    assert cn_nonvanishing(sq, [[0, 5]]).point == (5,)
    with pytest.raises(SearchExhausted):
        cn_nonvanishing(sq, [[0]])


def test_list_solve_examples():
    C4 = build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert list_additive_solve(C4, ListAssignment.make(4, [[1, 2, 3]] * 4), k=2).values == (1, 1, 1, 2)
    K2 = fam.complete(2)
    assert list_additive_solve(K2, ListAssignment.make(2, [[1, 2]] * 2)).values == (1, 2)
    assert list_additive_solve(K2, ListAssignment.make(2, [[1, 2]] * 2, [0, 1])).values == (1, 1)


def test_tree_examples():
    assert tree_list_solve(fam.complete(2), [[2, 4]] * 2).values == (2, 4)
    # lexicographic enumeration: (2, 2, 2) gives S = (2, 4, 2), already valid
    assert tree_list_solve(fam.path(3), [[2, 4]] * 3).values == (2, 2, 2)
    f = tree_list_solve(fam.star(3), [[2, 4]] * 4)
    assert not list_edge_violations(fam.star(3), f.values, [0] * 4)
    with pytest.raises(GraphError):
        tree_list_solve(fam.cycle(4), [[1, 2]] * 4)
    with pytest.raises(GraphError):
        tree_list_solve(fam.path(3), [[1, 2], [1], [1, 2]])


def test_rational_lists():
    f = tree_list_solve(fam.path(4), [[Fraction(1, 2), Fraction(3, 2)]] * 4, [Fraction(1, 3)] * 4)
    assert all(isinstance(x, Fraction) for x in f.values)
    assert not list_edge_violations(fam.path(4), f.values, [Fraction(1, 3)] * 4)


def test_exhausted_reports_guarantees():
    K3 = fam.complete(3)
    with pytest.raises(SearchExhausted) as err:
        list_additive_solve(K3, ListAssignment.make(3, [[1, 2]] * 3))
    assert err.value.status["bipartite"] is False and not err.value.status["guaranteed"]
    with pytest.raises(SearchExhausted) as err:
        list_additive_solve(fam.grid(4, 4), ListAssignment.make(16, [[1, 2, 3]] * 16), max_nodes=3)
    assert err.value.status == {"budget": 3}


def _lex_first(G, lists, q):
    for values in product(*lists):
        if not list_edge_violations(G, values, q):
            return tuple(values)
    return None


def test_solver_is_lexicographically_first():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 6)
        G = fam.random_tree(n, seed=rng.randrange(10**6)) if rng.random() < 0.5 else fam.cycle(max(n, 3))
        n = G.n
        lists = [sorted(rng.sample(range(-3, 6), rng.randint(1, 3))) for _ in range(n)]
        q = [rng.randint(-2, 2) for _ in range(n)]
        expected = _lex_first(G, lists, q)
        if expected is None:
            with pytest.raises(SearchExhausted):
                list_additive_solve(G, ListAssignment.make(n, lists, q))
        else:
            assert list_additive_solve(G, ListAssignment.make(n, lists, q)).values == expected


@pytest.mark.parametrize("G", [fam.cycle(4), fam.cycle(6), fam.grid(2, 3), fam.random_tree(6, seed=2), fam.ladder(3)])
def test_orientation_monomial_survives(G):
    rng = random.Random(G.m)
    q = [rng.randint(-3, 3) for _ in range(G.n)]
    P = listbip_polynomial(G, q)
    assert P.degree == G.m
    for k in range(1, 4):
        o = bounded_indegree_orientation(G, k)
        if o is None:
            continue
        mono = orientation_monomial(G, o)
        assert max(mono) <= k and sum(mono) == G.m
        assert P.coefficient(mono) != 0
        assert certifying_monomial(P, [range(k + 1)] * G.n) is not None
        status = guarantee_status(G, ListAssignment.make(G.n, [range(k + 1)] * G.n), k)
        assert status["guaranteed"]
        break


def test_bipartite_three_lists():
    rng = random.Random(23)
    for G in [fam.grid(4, 5), fam.cycle(12), fam.subdivide(fam.octahedron()), fam.ladder(6)]:
        assert bipartition(G) is not None and bounded_indegree_orientation(G, 2) is not None
        lists = [rng.sample(range(1, 30), 3) for _ in range(G.n)]
        q = [rng.randint(0, 10) for _ in range(G.n)]
        f = list_additive_solve(G, ListAssignment.make(G.n, lists, q), k=2)
        assert not list_edge_violations(G, f.values, q)
        assert all(f[v] in lists[v] for v in range(G.n))
