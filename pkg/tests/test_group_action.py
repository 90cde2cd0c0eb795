import math

import pytest

from knesergeom import (
    GeometryParams,
    KSubset,
    Permutation,
    act_on_element,
    adjacent_transpositions,
    build_geometry,
    chamber_orbit_size,
    enumerate_chambers,
    flag_orbit_count,
    is_type_preserving_automorphism,
    kneser_neighborhood_geometry,
    KneserParams,
    permutation_group_order,
    type_swap_map,
)


def test_permutation_validation():
    Permutation([1, 0, 2])
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([0, 2])


def test_apply_to_mask():
    pi = Permutation.transposition(5, 0, 1)
    assert pi.apply_to_mask(0b00101) == 0b00110


def test_act_on_element():
    geom = build_geometry(GeometryParams(5, 2, 3))
    ident = Permutation.identity(7)
    assert all(act_on_element(geom, ident, e) == e for e in range(63))
    swap = Permutation.transposition(7, 0, 1)
    e = geom.element_index(0, KSubset.from_elements([0, 2]))
    img = act_on_element(geom, swap, e)
    assert geom.type_of(img) == 0
    assert geom.subset_of(img) == KSubset.from_elements([1, 2])


def test_incidence_preserved_under_action():
    geom = build_geometry(GeometryParams(5, 2, 3))
    pi = Permutation.transposition(7, 2, 5)
    for x in range(0, 63, 5):
        for y in range(x + 1, 63, 7):
            assert geom.incident(x, y) == geom.incident(
                act_on_element(geom, pi, x), act_on_element(geom, pi, y)
            )


def test_generators_are_automorphisms():
    geom = build_geometry(GeometryParams(5, 2, 3))
    for pi in adjacent_transpositions(7):
        assert is_type_preserving_automorphism(geom, pi)


def test_chamber_orbit_sizes():
    geom = build_geometry(GeometryParams(5, 2, 3))
    gens = adjacent_transpositions(7)
    start = next(enumerate_chambers(geom))
    assert chamber_orbit_size(geom, gens, start) == 630

    geom2 = build_geometry(GeometryParams(5, 2, 2))
    start2 = next(enumerate_chambers(geom2))
    assert chamber_orbit_size(geom2, adjacent_transpositions(5), start2) == 30

    ident_only = [Permutation.identity(7)]
    assert chamber_orbit_size(geom, ident_only, start) == 1


def test_flag_orbit_counts():
    geom = build_geometry(GeometryParams(5, 2, 3))
    gens = adjacent_transpositions(7)
    count, reps = flag_orbit_count(geom, gens, ())
    assert count == 1 and reps == [()]
    for J in [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]:
        count, _ = flag_orbit_count(geom, gens, J)
        assert count == 1, J


def test_flag_orbits_detect_disjoint_copies():
    from knesergeom import IncidenceSystem

    two_digons = IncidenceSystem(
        (0, 1),
        [0, 1, 0, 1],
        [(0, 1), (2, 3)],
    )
    identity_map = tuple(range(4))
    count, reps = flag_orbit_count(two_digons, [identity_map], (0,))
    assert count == 2 and reps == [(0,), (2,)]
    swap_copies = (2, 3, 0, 1)
    count, _ = flag_orbit_count(two_digons, [swap_copies], (0, 1))
    assert count == 1


def test_type_swap_on_geometry():
    geom = build_geometry(GeometryParams(5, 2, 3))
    mapping, ok = type_swap_map(geom, (0, 1, 2))
    assert ok and mapping == tuple(range(63))
    mapping, ok = type_swap_map(geom, (1, 2, 0))
    assert ok
    per = geom.params.per_type
    assert mapping[0] == per  # type 0 -> type 1, same subset


def test_type_swap_unequal_sizes_invalid():
    sys_ = kneser_neighborhood_geometry(KneserParams(5, 2))
    mapping, ok = type_swap_map(sys_, (1, 0))
    assert ok  # both copies carry the same labels
    from knesergeom import vertex_edge_geometry, kneser_graph

    uneven = vertex_edge_geometry(kneser_graph(KneserParams(5, 2)))
    mapping, ok = type_swap_map(uneven, (1, 0))
    assert not ok and mapping is None


def test_group_order_by_orbit():
    for m in range(2, 9):
        assert permutation_group_order(adjacent_transpositions(m)) == math.factorial(m)
    assert permutation_group_order([Permutation.identity(4)]) == 1
