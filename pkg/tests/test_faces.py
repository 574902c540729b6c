"""Faces of nested complexes: normalization and geodesic properties."""

import pytest

from tubings.bits import to_mask
from tubings.building import BuildingSet, NestedSet, validate_building_set
from tubings.faces import (FaceError, common_upper_set, face_building_set,
                           face_property, face_vertex_ids, is_upper_ideal,
                           normalize)
from tubings.flips import build_flip_graph, distance
from tubings.graphs import path_graph, star_graph


def _idx(g):
    return build_flip_graph(BuildingSet.graphical(g))


def test_upper_ideal_recognition():
    B = BuildingSet.graphical(path_graph(4))
    assert is_upper_ideal(NestedSet(B, frozenset([to_mask([0, 1, 2])])))
    # {0,1} sits under the full set whose label {2,3} is not a singleton
    assert not is_upper_ideal(NestedSet(B, frozenset([to_mask([0, 1])])))
    assert is_upper_ideal(NestedSet(
        B, frozenset([to_mask([0, 1]), to_mask([0, 1, 2])])))


def test_common_upper_set_is_upward_closed():
    t1 = frozenset([to_mask([0]), to_mask([0, 1]), to_mask([0, 1, 2, 3])])
    t2 = frozenset([to_mask([1]), to_mask([0, 1]), to_mask([0, 1, 2, 3])])
    got = common_upper_set(t1, t2)
    assert got == frozenset([to_mask([0, 1]), to_mask([0, 1, 2, 3])])


def test_face_building_set_collapses_above_the_generators():
    B = BuildingSet.graphical(path_graph(4))
    face = NestedSet(B, frozenset([to_mask([0, 1])]))
    Bf = face_building_set(face)
    assert to_mask([0, 1]) in Bf.elements
    assert to_mask([1, 2]) not in Bf.elements
    assert all(1 << v in Bf.elements for v in range(4))


def test_normalize_fixes_the_face_and_is_idempotent():
    g = path_graph(4)
    B = BuildingSet.graphical(g)
    idx = _idx(g)
    face = NestedSet(B, frozenset([to_mask([0, 1, 2])]))
    for T in idx.vertices:
        out = normalize(face, NestedSet(B, T))
        assert face.elements <= out.elements
        assert out.is_maximal()
        assert normalize(face, out) == out
        if face.elements <= T:
            assert out.elements == T


def test_normalize_requires_an_upper_ideal():
    B = BuildingSet.graphical(path_graph(4))
    face = NestedSet(B, frozenset([to_mask([0, 1])]))
    seed = NestedSet(B, frozenset([to_mask([0]), to_mask([0, 1]),
                                   to_mask([0, 1, 2])]))
    with pytest.raises(FaceError):
        normalize(face, seed)


def test_face_vertex_ids_match_containment():
    g = path_graph(4)
    idx = _idx(g)
    face = NestedSet(idx.building, frozenset([to_mask([0, 1, 2])]))
    ids = face_vertex_ids(idx, face)
    # facet of the pentagonized square: a 5-element sub-associahedron
    assert len(ids) == 5


def test_strong_property_holds_for_upper_ideal_faces_of_a_path():
    g = path_graph(4)
    idx = _idx(g)
    for gen in ([to_mask([0, 1, 2])], [to_mask([1, 2, 3])],
                [to_mask([0, 1]), to_mask([0, 1, 2])]):
        face = NestedSet(idx.building, frozenset(gen))
        assert is_upper_ideal(face)
        holds, witness = face_property(idx, face, "snlfp")
        assert holds, witness


def test_triangle_complex_fails_the_strong_property():
    # singletons plus the full ground set: the flip graph is a triangle
    B = validate_building_set(3, [1, 2, 4, 7])
    idx = build_flip_graph(B)
    assert len(idx) == 3
    face = NestedSet(B, frozenset([2]))
    holds, witness = face_property(idx, face, "snlfp")
    assert not holds
    assert witness == (0, 2, 1)
    # one flip out, one back in: exactly one extra step, never two
    v, u, w = witness
    assert distance(idx, v, u) + distance(idx, u, w) \
        == distance(idx, v, w) + 1


def test_star_hub_face_admits_a_leaving_geodesic():
    g = star_graph(5)
    idx = _idx(g)
    face = NestedSet(idx.building, frozenset([to_mask([0])]))
    holds, witness = face_property(idx, face, "nlfp")
    assert not holds
    assert witness == (0, 1, 325)
    v, u, w = witness
    assert distance(idx, v, w) == 10
    assert distance(idx, v, u) + distance(idx, u, w) == 10


def test_unknown_property_name_is_rejected():
    idx = _idx(path_graph(3))
    face = NestedSet(idx.building, frozenset([to_mask([0, 1])]))
    with pytest.raises(FaceError):
        face_property(idx, face, "bogus")
