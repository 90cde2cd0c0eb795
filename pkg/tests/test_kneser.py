import pytest

from knesergeom import (
    Graph,
    KneserParams,
    KSubset,
    bipartite_double_cover,
    construct_even_path,
    construct_odd_path,
    incidence_graph,
    kneser_graph,
    kneser_neighborhood_geometry,
    neighborhood_geometry,
    odd_girth,
    predicted_diameter,
    predicted_gonality,
    predicted_odd_girth,
    rank2_summary,
)
from knesergeom.subsets import GroundSet, enumerate_k_subsets


def ceil_div(a, b):
    return -(-a // b)


def test_params_validation():
    with pytest.raises(ValueError):
        KneserParams(4, 2)
    with pytest.raises(ValueError):
        KneserParams(5, 0)
    KneserParams(5, 2)


def test_kneser_graph_petersen(petersen):
    assert petersen.n == 10 and petersen.n_edges == 15
    assert all(petersen.degree(v) == 3 for v in range(10))


def test_kneser_graph_complete():
    for n in range(3, 8):
        g = kneser_graph(KneserParams(n, 1))
        assert g.n == n and g.n_edges == n * (n - 1) // 2


def test_kneser_graph_73():
    g = kneser_graph(KneserParams(7, 3))
    assert g.n == 35 and all(g.degree(v) == 4 for v in range(35))


def test_predictors():
    assert predicted_odd_girth(KneserParams(5, 2)) == 5
    assert predicted_odd_girth(KneserParams(7, 3)) == 7
    assert predicted_odd_girth(KneserParams(9, 3)) == 3
    assert predicted_gonality(KneserParams(5, 2)) == 3
    assert predicted_gonality(KneserParams(6, 2)) == 2
    assert predicted_diameter(KneserParams(5, 2)) == 5
    assert predicted_diameter(KneserParams(6, 2)) == 3
    assert predicted_diameter(KneserParams(7, 3)) == 7


def test_odd_girth_against_formula_small():
    for n, k in [(5, 2), (6, 2), (7, 3), (8, 3)]:
        p = KneserParams(n, k)
        assert odd_girth(kneser_graph(p)) == predicted_odd_girth(p)


def check_walk(p, walk, length):
    assert len(walk) - 1 == length
    for s in walk:
        assert s.k == p.k
    for a, b in zip(walk, walk[1:]):
        assert a.bits & b.bits == 0


def test_even_path_trivial():
    p = KneserParams(7, 3)
    a = KSubset.from_elements([0, 1, 2])
    assert construct_even_path(a, a, p) == [a]


def test_even_path_c2():
    p = KneserParams(7, 3)
    a = KSubset.from_elements([0, 1, 2])
    b = KSubset.from_elements([0, 1, 3])
    walk = construct_even_path(a, b, p)
    check_walk(p, walk, 2)
    assert walk[0] == a and walk[-1] == b


def test_even_path_disjoint_endpoints():
    p = KneserParams(7, 3)
    a = KSubset.from_elements([0, 1, 2])
    b = KSubset.from_elements([3, 4, 5])
    walk = construct_even_path(a, b, p)
    check_walk(p, walk, 6)


def test_odd_path_adjacent():
    p = KneserParams(7, 3)
    a = KSubset.from_elements([0, 1, 2])
    b = KSubset.from_elements([3, 4, 5])
    walk = construct_odd_path(a, b, p)
    check_walk(p, walk, 1)


def test_odd_closed_walk_petersen():
    p = KneserParams(5, 2)
    a = KSubset.from_elements([0, 1])
    walk = construct_odd_path(a, a, p)
    check_walk(p, walk, 5)
    assert walk[0] == walk[-1] == a


def test_odd_path_c1():
    p = KneserParams(7, 3)
    a = KSubset.from_elements([0, 1, 2])
    b = KSubset.from_elements([2, 3, 4])
    walk = construct_odd_path(a, b, p)
    check_walk(p, walk, 3)


def test_path_lengths_exhaustive_for_7_3():
    p = KneserParams(7, 3)
    subs = enumerate_k_subsets(GroundSet(7), 3)
    d = 1
    for a in subs[:12]:
        for b in subs:
            c = (a.bits & b.bits).bit_count()
            check_walk(p, construct_even_path(a, b, p), 2 * ceil_div(3 - c, d))
            check_walk(p, construct_odd_path(a, b, p), 2 * ceil_div(c, d) + 1)


def test_neighborhood_geometry_matches_double_cover(petersen):
    ng = neighborhood_geometry(petersen)
    assert incidence_graph(ng).graph == bipartite_double_cover(petersen)
    k2 = Graph(2, [(0, 1)])
    ng2 = neighborhood_geometry(k2)
    assert incidence_graph(ng2).graph == bipartite_double_cover(k2)


def test_neighborhood_geometry_kg62_counts():
    ng = kneser_neighborhood_geometry(KneserParams(6, 2))
    assert ng.n_elements == 30
    assert len(ng.elements_of_type(0)) == 15
    # each element incident to the C(4,2) = 6 disjoint pairs
    assert all(len(ng.adj[e]) == 6 for e in range(30))


def test_gonality_diameter_vs_oracle_small():
    for n, k in [(5, 2), (6, 2), (7, 2), (7, 3)]:
        p = KneserParams(n, k)
        s = rank2_summary(kneser_neighborhood_geometry(p))
        assert s.gonality == predicted_gonality(p)
        assert s.diameters == (predicted_diameter(p),) * 2


def test_path_endpoints_must_be_k_subsets():
    p = KneserParams(5, 2)
    with pytest.raises(ValueError):
        construct_even_path(KSubset.from_elements([0]), KSubset.from_elements([1, 2]), p)
