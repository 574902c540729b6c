"""Building sets, nested sets, spines, and serialization."""

import pytest

from tubings.bits import to_mask
from tubings.building import (BuildingSet, BuildingSetError, NestedSet,
                              NestedSetError, complete_maximal, compatible,
                              nested_from_lists, nested_to_lists, spine_of,
                              validate_building_set, validate_nested)
from tubings.graphs import path_graph, star_graph


def test_building_set_axioms():
    validate_building_set(3, [1, 2, 4, 3, 7])
    with pytest.raises(BuildingSetError):
        validate_building_set(3, [1, 2, 7])  # missing singleton {2}
    with pytest.raises(BuildingSetError):
        validate_building_set(3, [1, 2, 4, 3, 6])  # union {0,1,2} absent


def test_graphical_building_set():
    g = path_graph(3)
    B = BuildingSet.graphical(g)
    assert B.connected
    assert B.b_max == frozenset([7])
    assert to_mask([0, 2]) not in B.elements


def test_compatibility():
    B = BuildingSet.graphical(path_graph(4))
    assert compatible(B, to_mask([0, 1]), to_mask([0, 1, 2]))
    assert compatible(B, to_mask([0]), to_mask([2, 3]))
    assert not compatible(B, to_mask([0, 1]), to_mask([1, 2]))
    # disjoint with adjacent union
    assert not compatible(B, to_mask([0, 1]), to_mask([2]))


def test_validate_nested_rejects_disjoint_union():
    B = BuildingSet.graphical(star_graph(3))
    with pytest.raises(NestedSetError):
        validate_nested(B, [to_mask([1]), to_mask([0, 2])])
    ok = validate_nested(B, [to_mask([1]), to_mask([2])])
    assert ok.proper_elements == frozenset([to_mask([1]), to_mask([2])])


def test_loaded_form_is_canonical():
    B = BuildingSet.graphical(path_graph(3))
    n1 = NestedSet(B, frozenset([1]))
    assert B.full_mask in n1.elements
    assert n1.proper_elements == frozenset([1])


def test_spine_labels_partition_ground_set():
    B = BuildingSet.graphical(path_graph(4))
    n = validate_nested(B, [to_mask([0]), to_mask([0, 1]), to_mask([3])])
    spine = spine_of(n)
    covered = 0
    for b in spine.nodes:
        assert spine.label[b] & covered == 0
        covered |= spine.label[b]
    assert covered == B.full_mask
    assert spine.parent[to_mask([0])] == to_mask([0, 1])


def test_maximality():
    B = BuildingSet.graphical(path_graph(3))
    full = validate_nested(B, [1, 3])
    assert full.is_maximal()
    assert not validate_nested(B, [1]).is_maximal()


def test_complete_maximal_is_deterministic_and_contains_input():
    B = BuildingSet.graphical(path_graph(5))
    n = validate_nested(B, [to_mask([1, 2])])
    m1 = complete_maximal(n)
    m2 = complete_maximal(n)
    assert m1 == m2
    assert m1.is_maximal()
    assert n.elements <= m1.elements


def test_serialization_roundtrip():
    B = BuildingSet.graphical(path_graph(4))
    n = validate_nested(B, [to_mask([0]), to_mask([0, 1]), to_mask([3])])
    lists = nested_to_lists(n)
    assert lists == [[0], [0, 1], [3]]
    assert nested_from_lists(B, lists) == n
