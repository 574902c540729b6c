"""Simple graphs on a ground set {0, ..., n-1} and their tubes.

A tube is a vertex set inducing a connected subgraph.  Graphs are
immutable and hashable so they can key caches elsewhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bits import iter_bits, lowest_bit, members, to_mask


class InputError(ValueError):
    """Raised for malformed graphs, vertex sets, or parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges_within(self, mask: int) -> list[tuple[int, int]]:
        return [(u, v) for u, v in sorted(self.edges)
                if (1 << u) & mask and (1 << v) & mask]

    def neighborhood(self, mask: int) -> int:
        """Vertices outside mask adjacent to some vertex of mask."""
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out & ~mask


def build_graph(n: int, edges) -> Graph:
    if n < 1:
        raise InputError(f"graph needs at least one vertex, got n={n}")
    norm = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge {(u, v)} out of range for n={n}")
        if u == v:
            raise InputError(f"loop at vertex {u} not allowed")
        norm.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(norm))


def components(g: Graph, mask: int | None = None) -> list[int]:
    """Connected components of the induced subgraph, as masks, sorted."""
    if mask is None:
        mask = g.full_mask
    out = []
    rest = mask
    while rest:
        comp = rest & -rest
        while True:
            grow = 0
            for v in iter_bits(comp):
                grow |= g.adj[v]
            grow &= mask & ~comp
            if not grow:
                break
            comp |= grow
        out.append(comp)
        rest &= ~comp
    return sorted(out)


def is_connected(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    comp = mask & -mask
    while True:
        grow = 0
        for v in iter_bits(comp):
            grow |= g.adj[v]
        grow &= mask & ~comp
        if not grow:
            return comp == mask
        comp |= grow


def is_tube(g: Graph, mask: int) -> bool:
    """A tube is a nonempty vertex set inducing a connected subgraph."""
    if mask & ~g.full_mask:
        raise InputError(f"vertex set {members(mask)} not within the graph")
    return is_connected(g, mask)


def tubes(g: Graph, mask: int | None = None) -> list[int]:
    """All tubes contained in mask (default: all tubes of g), sorted.

    Small grounds are filtered exhaustively; larger ones are grown by
    repeatedly attaching boundary vertices so the cost tracks the number
    of tubes rather than the number of subsets.
    """
    if mask is None:
        mask = g.full_mask
    if g.n <= 20:
        universe = []
        sub = mask
        while True:
            if sub and is_connected(g, sub):
                universe.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & mask
        return sorted(universe)
    seen = set(1 << v for v in iter_bits(mask))
    frontier = list(seen)
    while frontier:
        t = frontier.pop()
        for v in iter_bits(g.neighborhood(t) & mask):
            t2 = t | (1 << v)
            if t2 not in seen:
                seen.add(t2)
                frontier.append(t2)
    return sorted(seen)


# ---------------------------------------------------------------------------
# named families


def path_graph(m: int) -> Graph:
    return build_graph(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return build_graph(m, [(i, (i + 1) % m) for i in range(m)])


def complete_graph(m: int) -> Graph:
    return build_graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def star_graph(k: int) -> Graph:
    """Star with center 0 and k leaves."""
    if k < 1:
        raise InputError("a star needs at least one leaf")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def starlike_graph(arms: list[int]) -> Graph:
    """Subdivided star: paths of the given lengths attached to center 0."""
    if not arms or any(a < 1 for a in arms):
        raise InputError("arm lengths must be positive")
    edges = []
    nxt = 1
    for a in arms:
        prev = 0
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def tk_graph(k: int) -> Graph:
    """Depth-k tree: the root has 3 children, other internal vertices 2.

    tk(1) is the star with 3 leaves; tk(2) has 10 vertices.  Vertices
    are labeled in breadth-first order from the root 0.
    """
    if k < 1:
        raise InputError("depth must be at least 1")
    edges = []
    layer = [0]
    nxt = 1
    for depth in range(k):
        new_layer = []
        for v in layer:
            for _ in range(3 if depth == 0 else 2):
                edges.append((v, nxt))
                new_layer.append(nxt)
                nxt += 1
        layer = new_layer
    return build_graph(nxt, edges)


FAMILIES = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "star": star_graph,
    "starlike": starlike_graph,
    "tk": tk_graph,
}


def family(kind: str, *args) -> Graph:
    try:
        fn = FAMILIES[kind]
    except KeyError:
        raise InputError(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}")
    return fn(*args)


# ---------------------------------------------------------------------------
# serialization


def parse_graph_text(text: str) -> Graph:
    """Parse the plain format: a line 'n <count>' then one 'u v' per edge."""
    n = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise InputError(f"line {line_no}: duplicate vertex count")
            n = int(parts[1])
        else:
            if len(parts) != 2:
                raise InputError(f"line {line_no}: expected 'u v', got {raw!r}")
            edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise InputError("missing 'n <count>' line")
    return build_graph(n, edges)


def parse_graph_json(text: str) -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data:
        raise InputError("graph JSON must be an object with 'n' and 'edges'")
    return build_graph(int(data["n"]), [tuple(e) for e in data.get("edges", [])])


def load_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": sorted(list(e) for e in g.edges)})
