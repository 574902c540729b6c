"""Projection between nested complexes and diameter monotonicity."""

from math import comb

import pytest

from tubings.bits import to_mask
from tubings.building import BuildingSet, NestedSet
from tubings.flips import build_flip_graph
from tubings.graphs import build_graph, complete_graph, cycle_graph, path_graph
from tubings.projection import (ProjectionContext, ProjectionError,
                                check_monotonicity, check_sigma, preimages,
                                sigma, sigma_element)


def test_edge_deletion_context_validates_the_edge():
    g = path_graph(3)
    ProjectionContext.edge_deletion(g, (0, 1))
    with pytest.raises(ProjectionError):
        ProjectionContext.edge_deletion(g, (0, 2))


def test_sigma_element_splits_into_maximal_pieces():
    ctx = ProjectionContext.edge_deletion(path_graph(4), (1, 2))
    assert sigma_element(ctx, to_mask([0, 1, 2, 3])) \
        == sorted([to_mask([0, 1]), to_mask([2, 3])])
    assert sigma_element(ctx, to_mask([0, 1])) == [to_mask([0, 1])]


def test_sigma_image_is_a_nested_set_and_no_smaller():
    ctx = ProjectionContext.edge_deletion(cycle_graph(4), (3, 0))
    idx = build_flip_graph(ctx.fine)
    for T in idx.vertices:
        img = sigma(ctx, NestedSet(ctx.fine, T))
        assert len(img.elements) >= len(T)


def test_preimage_shuffles_cover_and_project_back():
    ctx = ProjectionContext.edge_deletion(path_graph(4), (1, 2))
    coarse_idx = build_flip_graph(ctx.coarse)
    fine_idx = build_flip_graph(ctx.fine)
    total = 0
    for T in coarse_idx.vertices:
        pre = preimages(ctx, NestedSet(ctx.coarse, T))
        total += len(pre)
        for p in pre:
            assert p.elements in fine_idx.index
    assert total == len(fine_idx)


def test_preimage_count_is_a_binomial_shuffle():
    # separate chains of lengths a and b interleave in C(a+b, a) ways
    ctx = ProjectionContext.edge_deletion(path_graph(4), (1, 2))
    nbar = NestedSet(ctx.coarse, frozenset([to_mask([1]), to_mask([2])]))
    # chains {1}<{0,1} and {2}<{2,3} around the deleted edge
    assert len(preimages(ctx, nbar)) == comb(4, 2)
    far = NestedSet(ctx.coarse, frozenset([to_mask([0]), to_mask([3])]))
    assert len(preimages(ctx, far)) == comb(2, 1)


def test_general_pair_produces_one_valid_preimage():
    fine = BuildingSet.graphical(complete_graph(4))
    coarse = BuildingSet.graphical(path_graph(4))
    ctx = ProjectionContext(fine, coarse)
    nbar = NestedSet(coarse, frozenset([to_mask([0]), to_mask([0, 1]),
                                        to_mask([0, 1, 2])]))
    pre = preimages(ctx, nbar)
    assert len(pre) == 1
    assert sigma(ctx, pre[0]).elements == nbar.elements


def test_check_sigma_on_all_small_edge_deletions():
    for g in (path_graph(4), cycle_graph(5), complete_graph(4)):
        for u, v in sorted(g.edges):
            report = check_sigma(ProjectionContext.edge_deletion(g, (u, v)))
            assert report.ok, report.witness


def test_monotonicity_under_edge_deletion():
    g = complete_graph(4)
    gbar = build_graph(4, g.edges - {(0, 1)})
    report = check_monotonicity(g, gbar)
    assert report.ok
    assert report.diameter_fine == 6
    with pytest.raises(ProjectionError):
        check_monotonicity(gbar, g)
