"""Graph construction, tube enumeration, and serialization."""

import json

import pytest

from tubings.bits import members, to_mask
from tubings.graphs import (InputError, build_graph, components, family,
                            graph_to_json, is_connected, is_tube,
                            parse_graph_json, parse_graph_text, path_graph,
                            cycle_graph, complete_graph, star_graph, tubes)


def test_build_graph_rejects_bad_edges():
    with pytest.raises(InputError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InputError):
        build_graph(3, [(1, 1)])
    with pytest.raises(InputError):
        build_graph(0, [])


def test_components_and_connectivity():
    g = build_graph(5, [(0, 1), (2, 3)])
    assert sorted(components(g)) == sorted(
        [to_mask([0, 1]), to_mask([2, 3]), to_mask([4])])
    assert not is_connected(g, g.full_mask)
    assert is_connected(g, to_mask([0, 1]))


def test_tubes_of_a_path_are_intervals():
    g = path_graph(4)
    got = sorted(members(t) for t in tubes(g))
    intervals = sorted([list(range(a, b)) for a in range(4)
                        for b in range(a + 1, 5)])
    assert got == intervals


def test_tube_counts():
    assert len(tubes(complete_graph(4))) == 15
    assert len(tubes(star_graph(4))) == 20
    assert len(tubes(path_graph(6))) == 21


def test_is_tube():
    g = path_graph(4)
    assert is_tube(g, to_mask([1, 2]))
    assert not is_tube(g, to_mask([0, 2]))
    assert not is_tube(g, 0)


def test_families():
    assert len(cycle_graph(5).edges) == 5
    assert complete_graph(5).degree(0) == 4
    assert star_graph(6).degree(0) == 6
    assert family("path", 3).edges == path_graph(3).edges
    with pytest.raises(InputError):
        family("torus", 3)


def test_tk_family_sizes():
    g1 = family("tk", 1)
    assert g1.n == 4
    g2 = family("tk", 2)
    assert g2.n > g1.n
    assert is_connected(g2, g2.full_mask)


def test_text_format_roundtrip():
    g = parse_graph_text("n 4\n0 1\n1 2 # comment\n\n2 3\n")
    assert g.edges == path_graph(4).edges
    with pytest.raises(InputError):
        parse_graph_text("0 1\n")


def test_json_roundtrip():
    g = complete_graph(4)
    again = parse_graph_json(graph_to_json(g))
    assert again == g
    data = json.loads(graph_to_json(g))
    assert data["n"] == 4 and len(data["edges"]) == 6
