"""Faces of nested complexes and their geodesic properties.

A nested set N0 spans the face consisting of all maximal nested sets
containing it.  Upper ideal faces (every non-minimal member of N0 has a
singleton label in the spine of N0) admit a normalization map onto the
face, and satisfy the strong non-leaving-face property: any flip path
between face vertices that steps outside is at least two flips longer
than a geodesic inside.
"""

from __future__ import annotations

from itertools import combinations

from .bits import is_singleton, members
from .building import (BuildingSet, NestedSet, spine_of, spine_of_elements)
from .flips import FlipGraphIndex, _bfs_dist
from .graphs import InputError
from .projection import ProjectionContext, sigma


class FaceError(InputError):
    pass


def is_upper_ideal(face: NestedSet) -> bool:
    """Whether every inclusion non-minimal member carries a singleton label."""
    spine = spine_of(face)
    return all(is_singleton(spine.label[b]) for b in spine.nodes
               if spine.children[b])


def common_upper_set(t1: frozenset[int], t2: frozenset[int]) -> frozenset[int]:
    """Members of both nested sets all of whose containers in either
    nested set are again shared.  Upward closed by construction."""
    common = t1 & t2
    out = set()
    for m in common:
        if all(c in common for c in (t1 | t2) if m & c == m):
            out.add(m)
    return frozenset(out)


def face_building_set(face: NestedSet) -> BuildingSet:
    """The coarse building set induced by a face generator: members
    contained in an inclusion-minimal generator element, plus the
    remaining singletons."""
    building = face.building
    spine = spine_of(face)
    minimal = [b for b in spine.nodes if not spine.children[b]]
    elems = {b for b in building.elements
             if any(b & m == b for m in minimal)}
    elems.update(1 << v for v in range(building.n))
    return BuildingSet(building.n, frozenset(elems))


def normalize(face: NestedSet, nested: NestedSet) -> NestedSet:
    """Project a maximal nested set onto an upper ideal face.

    Coarsen through the face's building set, drop the loaded coarse
    members, and adjoin the face generator.  Fixes the face pointwise
    and is idempotent.
    """
    if not is_upper_ideal(face):
        raise FaceError("normalization requires an upper ideal face")
    if nested.building != face.building:
        raise FaceError("nested set lives over a different building set")
    coarse = face_building_set(face)
    ctx = ProjectionContext(face.building, coarse)
    pieces = sigma(ctx, nested).elements - coarse.b_max
    out = NestedSet(face.building, frozenset(pieces) | face.elements)
    if not out.is_maximal():
        raise FaceError("internal error: normalization is not maximal")
    return out


def face_vertex_ids(idx: FlipGraphIndex, face: NestedSet) -> list[int]:
    gen = face.elements
    return [i for i, T in enumerate(idx.vertices) if gen <= T]


def face_property(idx: FlipGraphIndex, face: NestedSet, which: str):
    """Check a geodesic property of a face; returns (holds, witness).

    "nlfp": no geodesic between face vertices leaves the face.
    "snlfp": leaving the face costs at least two extra flips.
    "efp": from any outside neighbor u of a face vertex v, v lies on a
    geodesic from u to every face vertex.

    A witness is a tuple of vertex ids ((v, u, w)) violating the
    property, or None.
    """
    if which not in ("nlfp", "snlfp", "efp"):
        raise FaceError(f"unknown property {which!r}")
    ids = face_vertex_ids(idx, face)
    inside = set(ids)
    dist = {v: _bfs_dist(idx.adj, v) for v in ids}
    if which == "efp":
        for v in ids:
            for u in idx.adj[v]:
                if u in inside:
                    continue
                du = _bfs_dist(idx.adj, u)
                for w in ids:
                    if du[w] != dist[v][w] + 1:
                        return False, (v, u, w)
        return True, None
    slack = 1 if which == "nlfp" else 2
    outside = [u for u in range(len(idx.adj)) if u not in inside]
    for v, w in combinations(ids, 2):
        for u in outside:
            if dist[v][u] + dist[w][u] < dist[v][w] + slack:
                return False, (v, u, w)
    return True, None
