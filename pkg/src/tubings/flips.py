"""Flip graphs of maximal nested sets.

A maximal nested set has one flippable element per non-loaded member:
removing it leaves a ridge with exactly two completions, and the flip
swaps one for the other.  For graphical building sets the replacement
is computed directly from connectivity; for general building sets it is
found by exchange search.

Tubings are frozensets of bitmasks throughout.  Internal helpers work
on induced subgraphs (g, mask) without relabeling vertices, which keeps
recursion in the Hamiltonian constructions simple.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .bits import is_singleton, iter_bits, members, sets_to_lists
from .building import (BuildingSet, NestedSet, NestedSetError, complete_maximal,
                       spine_of_elements, validate_nested)
from .graphs import Graph, InputError, components, is_connected


class FlipError(InputError):
    """Raised when a flip or flip graph request is malformed."""


# ---------------------------------------------------------------------------
# graphical fast path


def _component_containing(adj, sub: int, v: int) -> int:
    comp = 1 << v
    while True:
        grow = 0
        m = comp
        while m:
            low = m & -m
            grow |= adj[low.bit_length() - 1]
            m ^= low
        grow &= sub & ~comp
        if not grow:
            return comp
        comp |= grow


def _spine_arrays(T: frozenset[int]):
    """Sorted members with parent pointers and labels, as parallel lists."""
    nodes = sorted(T, key=lambda b: (b.bit_count(), b))
    k = len(nodes)
    parent = [-1] * k
    label = list(nodes)
    for i in range(k):
        b = nodes[i]
        for j in range(i + 1, k):
            c = nodes[j]
            if b & c == b:
                parent[i] = j
                label[j] &= ~b
                break
    return nodes, parent, label


def graphical_flip(g: Graph, T: frozenset[int], t: int) -> tuple[frozenset[int], int]:
    """Flip member t of a maximal tubing; returns the new tubing and the
    replacement tube."""
    if t not in T:
        raise FlipError(f"{members(t)} is not a member of the tubing")
    nodes, parent, label = _spine_arrays(T)
    i = nodes.index(t)
    if parent[i] < 0:
        raise FlipError(f"{members(t)} is loaded and cannot flip")
    p = nodes[parent[i]]
    v = label[i]
    vp = label[parent[i]]
    if not (is_singleton(v) and is_singleton(vp)):
        raise FlipError("flips require a maximal tubing")
    t_new = _component_containing(g.adj, p & ~v, vp.bit_length() - 1)
    return (T - {t}) | {t_new}, t_new


def _all_graphical_flips(g: Graph, T: frozenset[int]) -> list[tuple[int, frozenset[int]]]:
    """(flipped member, resulting tubing) for every proper member of T."""
    adj = g.adj
    nodes, parent, label = _spine_arrays(T)
    out = []
    for i, t in enumerate(nodes):
        if parent[i] < 0:
            continue
        p = nodes[parent[i]]
        t_new = _component_containing(adj, p & ~label[i],
                                      label[parent[i]].bit_length() - 1)
        out.append((t, (T - {t}) | {t_new}))
    return out


def seed_tubing(g: Graph, mask: int | None = None) -> frozenset[int]:
    """A canonical maximal loaded tubing: per component, the chain of
    prefixes of a breadth-first vertex order."""
    if mask is None:
        mask = g.full_mask
    elems = []
    for comp in components(g, mask):
        start = comp & -comp
        order = [start.bit_length() - 1]
        seen = start
        i = 0
        while seen != comp:
            grow = g.adj[order[i]] & comp & ~seen
            i += 1
            for v in iter_bits(grow):
                order.append(v)
                seen |= 1 << v
        pref = 0
        for v in order:
            pref |= 1 << v
            elems.append(pref)
    return frozenset(elems)


@lru_cache(maxsize=None)
def flip_index(g: Graph, mask: int):
    """BFS enumeration of all maximal loaded tubings of G[mask].

    Returns (vertices, index, adj): tubings in discovery order, their
    ids, and sorted neighbor id lists.
    """
    seed = seed_tubing(g, mask)
    vertices = [seed]
    index = {seed: 0}
    adj: list[list[int]] = [[]]
    head = 0
    while head < len(vertices):
        T = vertices[head]
        nbrs = []
        for _, T2 in _all_graphical_flips(g, T):
            j = index.get(T2)
            if j is None:
                j = len(vertices)
                index[T2] = j
                vertices.append(T2)
                adj.append([])
            nbrs.append(j)
        adj[head] = sorted(nbrs)
        head += 1
    return vertices, index, adj


# ---------------------------------------------------------------------------
# general building sets


def exchange_flip(nested: NestedSet, t: int) -> tuple[NestedSet, int]:
    """Flip a member of a maximal nested set over a general building set."""
    building = nested.building
    if building.graph is not None:
        T2, t_new = graphical_flip(building.graph, nested.elements, t)
        return NestedSet(building, T2), t_new
    if t not in nested.elements or t in building.b_max:
        raise FlipError(f"{members(t)} is not a flippable member")
    ridge = nested.elements - {t}
    for cand in sorted(building.elements, key=lambda b: (b.bit_count(), b)):
        if cand == t or cand in ridge:
            continue
        try:
            res = validate_nested(building, ridge | {cand})
        except NestedSetError:
            continue
        if res.is_maximal():
            return res, cand
    raise FlipError(f"no exchange found for {members(t)}")


def flip(nested: NestedSet, t: int) -> tuple[NestedSet, int]:
    if not nested.is_maximal():
        raise FlipError("flips require a maximal nested set")
    return exchange_flip(nested, t)


# ---------------------------------------------------------------------------
# flip graph container


@dataclass
class FlipGraphIndex:
    building: BuildingSet
    vertices: list[frozenset[int]]
    index: dict[frozenset[int], int]
    adj: list[list[int]]

    def __len__(self) -> int:
        return len(self.vertices)

    def id_of(self, tubing: frozenset[int]) -> int:
        loaded = frozenset(tubing) | self.building.b_max
        try:
            return self.index[loaded]
        except KeyError:
            raise FlipError(f"{sets_to_lists(loaded)} is not a flip graph vertex")


def build_flip_graph(building: BuildingSet) -> FlipGraphIndex:
    if building.graph is not None:
        vertices, index, adj = flip_index(building.graph, building.full_mask)
        return FlipGraphIndex(building, list(vertices), dict(index),
                              [list(a) for a in adj])
    seed = complete_maximal(NestedSet(building, frozenset()))
    vertices = [seed.elements]
    index = {seed.elements: 0}
    adj: list[list[int]] = [[]]
    head = 0
    while head < len(vertices):
        T = NestedSet(building, vertices[head])
        nbrs = []
        for t in sorted(T.elements - building.b_max):
            T2, _ = exchange_flip(T, t)
            j = index.get(T2.elements)
            if j is None:
                j = len(vertices)
                index[T2.elements] = j
                vertices.append(T2.elements)
                adj.append([])
            nbrs.append(j)
        adj[head] = sorted(nbrs)
        head += 1
    return FlipGraphIndex(building, vertices, index, adj)


# ---------------------------------------------------------------------------
# metric queries


def _bfs_dist(adj: list[list[int]], src: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                q.append(w)
    return dist


def distance(idx: FlipGraphIndex, a: int, b: int) -> int:
    dist = _bfs_dist(idx.adj, a)
    if dist[b] < 0:
        raise FlipError("flip graph is disconnected; no path exists")
    return dist[b]


def eccentricity(idx: FlipGraphIndex, a: int) -> int:
    dist = _bfs_dist(idx.adj, a)
    if min(dist) < 0:
        raise FlipError("flip graph is disconnected")
    return max(dist)


def diameter(idx: FlipGraphIndex) -> int:
    return max(eccentricity(idx, a) for a in range(len(idx.adj)))


@dataclass
class GeodesicResult:
    paths: list[list[int]]
    truncated: bool


def geodesics(idx: FlipGraphIndex, a: int, b: int, limit: int = 10 ** 6) -> GeodesicResult:
    """All shortest paths from a to b as id sequences, capped at limit."""
    dist = _bfs_dist(idx.adj, b)
    if dist[a] < 0:
        raise FlipError("flip graph is disconnected; no path exists")
    paths: list[list[int]] = []
    truncated = False
    stack = [[a]]
    while stack:
        path = stack.pop()
        u = path[-1]
        if u == b:
            if len(paths) >= limit:
                truncated = True
                break
            paths.append(path)
            continue
        for w in sorted(idx.adj[u], reverse=True):
            if dist[w] == dist[u] - 1:
                stack.append(path + [w])
    return GeodesicResult(paths, truncated)


def root_label_vertex(building: BuildingSet, tubing: frozenset[int]) -> int:
    """For a connected building set, the vertex labeling the top member."""
    if not building.connected:
        raise FlipError("root labels need a connected building set")
    spine = spine_of_elements(frozenset(tubing))
    lab = spine.label[building.full_mask]
    if not is_singleton(lab):
        raise FlipError("root label is not a singleton")
    return lab.bit_length() - 1


def fixed_root_subgraph(idx: FlipGraphIndex, v: int) -> tuple[FlipGraphIndex, list[int]]:
    """Induced subgraph on tubings whose root label is {v}.

    Returns the sub-index together with the original ids of its
    vertices, in order.
    """
    keep = [i for i, T in enumerate(idx.vertices)
            if root_label_vertex(idx.building, T) == v]
    remap = {old: new for new, old in enumerate(keep)}
    vertices = [idx.vertices[i] for i in keep]
    adj = [[remap[w] for w in idx.adj[i] if w in remap] for i in keep]
    sub = FlipGraphIndex(idx.building, vertices,
                         {T: i for i, T in enumerate(vertices)}, adj)
    return sub, keep


# ---------------------------------------------------------------------------
# exports


def index_to_json(idx: FlipGraphIndex) -> str:
    import json
    return json.dumps({
        "vertices": [sets_to_lists(T) for T in idx.vertices],
        "edges": sorted([i, j] for i in range(len(idx.adj))
                        for j in idx.adj[i] if i < j),
    })


def index_to_dot(idx: FlipGraphIndex, cycle: list[int] | None = None) -> str:
    """GraphViz rendering; edges of the optional cycle are highlighted."""
    cyc_edges = set()
    if cycle:
        for i in range(len(cycle)):
            a, b = cycle[i], cycle[(i + 1) % len(cycle)]
            cyc_edges.add((min(a, b), max(a, b)))
    lines = ["graph flipgraph {"]
    for i, T in enumerate(idx.vertices):
        label = ";".join("".join(map(str, part))
                         for part in sets_to_lists(T - idx.building.b_max))
        lines.append(f'  v{i} [label="{label}"];')
    for i in range(len(idx.adj)):
        for j in idx.adj[i]:
            if i < j:
                style = ' [color=red,penwidth=2]' if (i, j) in cyc_edges else ''
                lines.append(f"  v{i} -- v{j}{style};")
    lines.append("}")
    return "\n".join(lines)
