"""Flip graphs: construction, regularity, metrics, exports."""

import json
from math import comb, factorial

import pytest

from tubings.bits import to_mask
from tubings.building import BuildingSet, NestedSet, validate_building_set
from tubings.flips import (FlipError, build_flip_graph, diameter, distance,
                           eccentricity, exchange_flip, fixed_root_subgraph,
                           geodesics, graphical_flip, index_to_dot,
                           index_to_json, seed_tubing)
from tubings.graphs import (complete_graph, cycle_graph, path_graph,
                            star_graph)


def _idx(g):
    return build_flip_graph(BuildingSet.graphical(g))


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_path_counts_are_catalan():
    for m in range(3, 9):
        assert len(_idx(path_graph(m))) == catalan(m)


def test_complete_counts_are_factorials():
    for m in (3, 4, 5):
        assert len(_idx(complete_graph(m))) == factorial(m)


def test_star_count():
    assert len(_idx(star_graph(5))) == 326


def test_regularity():
    for g in (path_graph(5), cycle_graph(5), complete_graph(4), star_graph(4)):
        idx = _idx(g)
        assert all(len(a) == g.n - 1 for a in idx.adj)


def test_flip_is_an_involution():
    g = path_graph(5)
    idx = _idx(g)
    for T in idx.vertices[:20]:
        for t in sorted(T - idx.building.b_max):
            T2, t2 = graphical_flip(g, T, t)
            back, t3 = graphical_flip(g, T2, t2)
            assert back == T and t3 == t


def test_exchange_flip_matches_graphical_flip():
    g = cycle_graph(4)
    B = BuildingSet.graphical(g)
    T = seed_tubing(g)
    for t in sorted(T - B.b_max):
        viaB, _ = exchange_flip(NestedSet(B, T), t)
        viaG, _ = graphical_flip(g, T, t)
        assert viaB.elements == viaG


def test_pentagon():
    idx = _idx(path_graph(3))
    assert len(idx) == 5
    assert all(len(a) == 2 for a in idx.adj)
    assert diameter(idx) == 2


def test_permutahedron_diameters():
    assert diameter(_idx(complete_graph(3))) == 3
    assert diameter(_idx(complete_graph(4))) == 6


def test_distance_and_eccentricity_agree():
    idx = _idx(path_graph(4))
    assert max(distance(idx, 0, b) for b in range(len(idx))) \
        == eccentricity(idx, 0)


def test_geodesics_enumeration():
    idx = _idx(path_graph(3))
    a = 0
    b = next(v for v in range(5) if distance(idx, a, v) == 2)
    res = geodesics(idx, a, b)
    assert not res.truncated
    assert all(len(p) == 3 and p[0] == a and p[-1] == b for p in res.paths)
    capped = geodesics(idx, a, b, limit=1) if len(res.paths) > 1 else res
    assert len(capped.paths) <= max(1, len(res.paths))


def test_nongraphical_building_set_flip_graph():
    B = validate_building_set(3, [1, 2, 4, 7])
    idx = build_flip_graph(B)
    assert len(idx) == 3
    assert all(len(a) == 2 for a in idx.adj)


def test_fixed_root_subgraph_is_a_smaller_flip_graph():
    g = path_graph(4)
    idx = _idx(g)
    sub, ids = fixed_root_subgraph(idx, 0)
    assert len(sub) == len(ids)
    assert len(sub) == catalan(3)


def test_json_export_parses_back():
    idx = _idx(path_graph(3))
    data = json.loads(index_to_json(idx))
    assert len(data["vertices"]) == 5
    assert len(data["edges"]) == 5


def test_dot_export_mentions_every_vertex():
    idx = _idx(path_graph(3))
    dot = index_to_dot(idx, cycle=list(range(5)))
    assert dot.count("--") == 5
    assert "color=red" in dot


def test_disconnected_query_raises():
    B = validate_building_set(2, [1, 2])
    idx = build_flip_graph(B)
    assert len(idx) == 1
    with pytest.raises(FlipError):
        idx.id_of(frozenset([to_mask([0, 1])]))
