"""Projection between nested complexes of comparable building sets.

Given building sets B' <= B on the same ground set, every member b of B
splits uniquely into inclusion-maximal members of B' (they are pairwise
disjoint and cover b).  Applying this to every member of a nested set
and collecting the pieces projects the nested complex of B onto that of
B'.  On maximal nested sets the projection is surjective, and preimages
can be enumerated (for single edge deletions) or witnessed (in general).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bits import members, sets_to_lists
from .building import BuildingSet, NestedSet, complete_maximal
from .graphs import Graph, InputError, build_graph


class ProjectionError(InputError):
    pass


@dataclass(frozen=True)
class ProjectionContext:
    fine: BuildingSet
    coarse: BuildingSet
    deleted_edge: tuple[int, int] | None = None

    def __post_init__(self):
        if self.fine.n != self.coarse.n:
            raise ProjectionError("building sets live on different ground sets")
        if not self.coarse.elements <= self.fine.elements:
            extra = min(self.coarse.elements - self.fine.elements)
            raise ProjectionError(
                f"{members(extra)} is in the coarse building set only")

    @classmethod
    def edge_deletion(cls, g: Graph, edge: tuple[int, int]) -> "ProjectionContext":
        u, v = min(edge), max(edge)
        if (u, v) not in g.edges:
            raise ProjectionError(f"{(u, v)} is not an edge of the graph")
        gbar = build_graph(g.n, g.edges - {(u, v)})
        return cls(BuildingSet.graphical(g), BuildingSet.graphical(gbar), (u, v))


def sigma_element(ctx: ProjectionContext, b: int) -> list[int]:
    """The coarsest partition of b into coarse members: its
    inclusion-maximal coarse submembers."""
    if b not in ctx.fine.elements:
        raise ProjectionError(f"{members(b)} is not in the fine building set")
    inside = [c for c in ctx.coarse.elements if c & ~b == 0]
    return sorted(c for c in inside
                  if not any(c != d and c & d == c for d in inside))


def sigma(ctx: ProjectionContext, nested: NestedSet) -> NestedSet:
    if nested.building != ctx.fine:
        raise ProjectionError("nested set does not live over the fine building set")
    out = set()
    for b in nested.elements:
        out.update(sigma_element(ctx, b))
    return NestedSet(ctx.coarse, frozenset(out))


# ---------------------------------------------------------------------------
# preimages of maximal nested sets


def _shuffle_preimages(ctx: ProjectionContext, nbar: NestedSet) -> list[NestedSet]:
    u, v = ctx.deleted_edge
    bu, bv = 1 << u, 1 << v
    chain_u = sorted((t for t in nbar.elements if t & bu and not t & bv),
                     key=lambda t: t.bit_count())
    chain_v = sorted((t for t in nbar.elements if t & bv and not t & bu),
                     key=lambda t: t.bit_count())
    rest = nbar.elements - set(chain_u) - set(chain_v)
    results = set()
    for positions in combinations(range(len(chain_u) + len(chain_v)), len(chain_u)):
        iu = iter(chain_u)
        iv = iter(chain_v)
        pos = set(positions)
        acc = 0
        prefixes = []
        for i in range(len(chain_u) + len(chain_v)):
            acc |= next(iu) if i in pos else next(iv)
            prefixes.append(acc)
        results.add(rest | frozenset(prefixes))
    return [NestedSet(ctx.fine, r) for r in sorted(results, key=sorted)]


def _repair_preimage(ctx: ProjectionContext, nbar: NestedSet) -> NestedSet:
    """One preimage for a general pair of building sets.

    While some family of pairwise disjoint members has its union in the
    fine building set, merge a family whose union is inclusion-maximal;
    then complete to a maximal nested set.
    """
    elems = set(nbar.elements)
    while True:
        best = None
        elist = sorted(elems)

        def search(chosen, used, start):
            nonlocal best
            if len(chosen) >= 2 and used in ctx.fine.elements:
                key = (-used.bit_count(), tuple(chosen))
                if best is None or key < best[0]:
                    best = (key, list(chosen), used)
            for i in range(start, len(elist)):
                b = elist[i]
                if not b & used:
                    chosen.append(b)
                    search(chosen, used | b, i + 1)
                    chosen.pop()

        search([], 0, 0)
        if best is None:
            break
        _, fam, union = best
        elems.discard(fam[0])
        elems.add(union)
    return complete_maximal(NestedSet(ctx.fine, frozenset(elems)))


def preimages(ctx: ProjectionContext, nbar: NestedSet) -> list[NestedSet]:
    """Maximal preimages of a maximal coarse nested set.

    For a single edge deletion the enumeration is complete: it shuffles
    the two chains of members separating the deleted edge's endpoints
    and replaces them by prefix unions.  Otherwise a single preimage is
    produced by merge repairs followed by completion.
    """
    if nbar.building != ctx.coarse:
        raise ProjectionError("nested set does not live over the coarse building set")
    if not nbar.is_maximal():
        raise ProjectionError("preimages are computed for maximal nested sets only")
    if ctx.deleted_edge is not None:
        out = _shuffle_preimages(ctx, nbar)
    else:
        out = [_repair_preimage(ctx, nbar)]
    for n in out:
        if sigma(ctx, n).elements != nbar.elements:
            raise ProjectionError("internal error: preimage does not project back")
    return out


# ---------------------------------------------------------------------------
# diameter monotonicity


@dataclass
class MonotonicityReport:
    diameter_fine: int
    diameter_coarse: int

    @property
    def ok(self) -> bool:
        return self.diameter_coarse <= self.diameter_fine


def check_monotonicity(g: Graph, gbar: Graph) -> MonotonicityReport:
    """Compare flip graph diameters of a graph and a subgraph on the
    same vertices."""
    from .flips import build_flip_graph, diameter
    if gbar.n != g.n or not gbar.edges <= g.edges:
        raise ProjectionError("second graph must be a subgraph on the same vertices")
    d_fine = diameter(build_flip_graph(BuildingSet.graphical(g)))
    d_coarse = diameter(build_flip_graph(BuildingSet.graphical(gbar)))
    return MonotonicityReport(d_fine, d_coarse)


@dataclass
class SigmaReport:
    """Outcome of the projection checks on maximal nested sets."""
    checked: int
    surjective: bool
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.witness is None and self.surjective


def check_sigma(ctx: ProjectionContext) -> SigmaReport:
    """Verify the projection on every maximal fine nested set.

    Checks that the image is a maximal coarse nested set at least as
    large as its source, that the map hits every maximal coarse nested
    set, and that flip-graph edges map to edges or collapse to a point.
    """
    from .flips import build_flip_graph
    fine_idx = build_flip_graph(ctx.fine)
    coarse_idx = build_flip_graph(ctx.coarse)
    images: list[int] = []
    for T in fine_idx.vertices:
        img = sigma(ctx, NestedSet(ctx.fine, T))
        if img.elements not in coarse_idx.index:
            return SigmaReport(len(images), False,
                               f"image of {sets_to_lists(T)} is not maximal")
        if len(T) > len(img.elements):
            return SigmaReport(len(images), False,
                               f"image of {sets_to_lists(T)} is smaller")
        images.append(coarse_idx.index[img.elements])
    hit = set(images)
    surjective = len(hit) == len(coarse_idx.vertices)
    for i, nbrs in enumerate(fine_idx.adj):
        for j in nbrs:
            if i > j or images[i] == images[j]:
                continue
            if images[j] not in coarse_idx.adj[images[i]]:
                return SigmaReport(len(images), surjective,
                                   f"flip {i}-{j} maps to a non-edge")
    return SigmaReport(len(images), surjective,
                       None if surjective else "some maximal nested set "
                                               "has no preimage")
