"""Hamiltonian cycles of flip graphs through prescribed short flips.

The flip graph of any graph with at least two edges has a Hamiltonian
cycle, and the cycle can be routed through any two prescribed short
flips with distinct short roots.  The construction is inductive: the
flip graph decomposes into fixed-root subgraphs, one per vertex, each
isomorphic to the flip graph of the graph minus that vertex.  We order
the vertices, pick bridges (square faces with two short and two long
flips) between consecutive fixed-root subgraphs, build a Hamiltonian
cycle in each subgraph through the bridge flips recursively, and glue
by swapping each bridge's short flips for its long flips.

Stars need a separate induction (their central fixed-root subgraph is
a single spine), disconnected graphs reduce to Cartesian products of
cycles, and small graphs are solved by exhaustive search.

Ridges (maximal tubings minus one member) represent flips; bridges are
maximal tubings minus two members.  All tubings are loaded.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bits import is_singleton, iter_bits, members, sets_to_lists
from .flips import _component_containing, _spine_arrays, flip_index, seed_tubing
from .graphs import Graph, InputError, components

BASE_THRESHOLD = 6


class HamiltonianError(InputError):
    pass


class OrderingError(HamiltonianError):
    """No vertex ordering satisfies the conflict and disconnection rules."""


class BridgeSelectionError(HamiltonianError):
    """No bridge satisfies the required distinctness conditions."""


# ---------------------------------------------------------------------------
# ridges and their classification


@dataclass(frozen=True)
class FlipInfo:
    kind: str            # "short", "long", "both", or "middle"
    node: int            # the member carrying the doubleton label
    doubleton: int       # that label
    tree_root: int       # top member of the tree containing the node
    root_label: int      # its label
    short_child: int | None  # label of the root's child towards the node

    @property
    def root_vertex(self) -> int:
        if not is_singleton(self.root_label):
            raise HamiltonianError("flip root is not a single vertex")
        return self.root_label.bit_length() - 1


def classify_ridge(g: Graph, ridge: frozenset[int]) -> FlipInfo:
    """Classify the flip at a ridge by the position of its doubleton label.

    At a leaf the flip is short, at the top of its tree long, at a node
    which is both (an isolated edge) it counts as both, anywhere else
    it is a middle flip.
    """
    nodes, parent, label = _spine_arrays(ridge)
    doubles = [i for i, lab in enumerate(label) if lab.bit_count() == 2]
    if len(doubles) != 1 or any(
            lab.bit_count() not in (1, 2) for lab in label):
        raise HamiltonianError(
            f"{sets_to_lists(ridge)} is not a ridge of the flip graph")
    i = doubles[0]
    has_child = i in parent
    is_leaf = not any(parent[j] == i for j in range(len(nodes)))
    # climb to the root of the tree containing the doubleton
    path = [i]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    root = path[-1]
    if i == root:
        kind = "both" if is_leaf else "long"
    elif is_leaf:
        kind = "short"
    else:
        kind = "middle"
    short_child = label[path[-2]] if len(path) >= 2 else None
    return FlipInfo(kind, nodes[i], label[i], nodes[root], label[root],
                    short_child)


def _root_key(info: FlipInfo) -> int:
    """The short root of a flip, as a label mask.  For an isolated edge
    the root, child and leaf coincide and the key is the doubleton."""
    return info.root_label


def completions(g: Graph, ridge: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    """The two maximal tubings containing a ridge, sorted."""
    info = classify_ridge(g, ridge)
    t = info.node
    a, b = members(info.doubleton)
    ta = t & ~(1 << b)
    tb = t & ~(1 << a)
    one = ridge | {_component_containing(g.adj, ta, a)}
    two = ridge | {_component_containing(g.adj, tb, b)}
    return tuple(sorted((one, two), key=sorted))


def _edge_of(g: Graph, ridge: frozenset[int]) -> frozenset[frozenset[int]]:
    return frozenset(completions(g, ridge))


def _child_labels_of_root(ridge: frozenset[int], root: int) -> set[int]:
    nodes, parent, label = _spine_arrays(ridge)
    r = nodes.index(root)
    return {label[j] for j in range(len(nodes)) if parent[j] == r}


# ---------------------------------------------------------------------------
# counting and small searches


_count_cache: dict[tuple[Graph, int], int] = {}


def count_max_tubings(g: Graph, mask: int | None = None) -> int:
    """Number of maximal tubings, by the fixed-root recursion."""
    if mask is None:
        mask = g.full_mask
    key = (g, mask)
    got = _count_cache.get(key)
    if got is not None:
        return got
    comps = components(g, mask)
    if len(comps) > 1:
        n = 1
        for c in comps:
            n *= count_max_tubings(g, c)
    elif mask.bit_count() == 1:
        n = 1
    else:
        n = sum(count_max_tubings(g, mask & ~(1 << v)) for v in iter_bits(mask))
    _count_cache[key] = n
    return n


class _DeadEnd(Exception):
    pass


class _OutOfBudget(Exception):
    pass


class _EdgeSearch:
    """Edge-state Hamiltonian cycle search.

    Each edge is unknown, required, or excluded.  Propagation applies
    the degree rules (a vertex with two required edges excludes the
    rest, a vertex with only two available edges requires them) and
    rejects premature cycles via path tips.
    """

    UNKNOWN, REQUIRED, EXCLUDED = 0, 1, 2

    def __init__(self, nv, adj):
        self.nv = nv
        self.eids = {}
        self.ends = []
        self.incident = [[] for _ in range(nv)]
        for a in range(nv):
            for b in adj[a]:
                if a < b:
                    self.eids[frozenset((a, b))] = len(self.ends)
                    self.ends.append((a, b))
        for e, (a, b) in enumerate(self.ends):
            self.incident[a].append(e)
            self.incident[b].append(e)
        self.state = bytearray(len(self.ends))
        self.nbrm = [sum(1 << b for b in adj[a]) for a in range(nv)]
        self.full = (1 << nv) - 1
        self.req = bytearray(nv)
        self.avail = bytearray(len(self.incident[v]) for v in range(nv))
        self.tip = list(range(nv))
        self.nreq = 0
        self.queue = []

    def clone(self):
        other = object.__new__(_EdgeSearch)
        other.nv, other.eids = self.nv, self.eids
        other.ends, other.incident = self.ends, self.incident
        other.state = self.state[:]
        other.nbrm = self.nbrm[:]
        other.full = self.full
        other.req = self.req[:]
        other.avail = self.avail[:]
        other.tip = self.tip[:]
        other.nreq = self.nreq
        other.queue = []
        return other

    def require(self, e):
        state = self.state
        if state[e] == self.REQUIRED:
            return
        if state[e] == self.EXCLUDED:
            raise _DeadEnd
        a, b = self.ends[e]
        ta, tb = self.tip[a], self.tip[b]
        if ta == b:
            # closing edge: only legal when it completes the cycle
            if self.nreq + 1 != self.nv:
                raise _DeadEnd
        state[e] = self.REQUIRED
        self.nreq += 1
        for v in (a, b):
            self.req[v] += 1
            self.avail[v] -= 1
            if self.req[v] > 2:
                raise _DeadEnd
            self.queue.append(v)
        if ta != b:
            self.tip[ta], self.tip[tb] = tb, ta

    def exclude(self, e):
        state = self.state
        if state[e] == self.EXCLUDED:
            return
        if state[e] == self.REQUIRED:
            raise _DeadEnd
        state[e] = self.EXCLUDED
        a, b = self.ends[e]
        self.nbrm[a] &= ~(1 << b)
        self.nbrm[b] &= ~(1 << a)
        for v in (a, b):
            self.avail[v] -= 1
            self.queue.append(v)

    def drain(self):
        while self.queue:
            v = self.queue.pop()
            if self.req[v] + self.avail[v] < 2:
                raise _DeadEnd
            if self.req[v] == 2:
                for e in self.incident[v]:
                    if self.state[e] == self.UNKNOWN:
                        self.exclude(e)
            elif self.req[v] + self.avail[v] == 2:
                for e in self.incident[v]:
                    if self.state[e] == self.UNKNOWN:
                        self.require(e)

    def connected(self):
        nbrm = self.nbrm
        seen = frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= nbrm[low.bit_length() - 1]
                frontier &= frontier - 1
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full

    def extract(self):
        cyc = [0]
        prev = -1
        while True:
            x = cyc[-1]
            nxt = None
            for e in self.incident[x]:
                if self.state[e] == self.REQUIRED:
                    a, b = self.ends[e]
                    y = b if a == x else a
                    if y != prev:
                        nxt = y
                        break
            if nxt == 0:
                return cyc
            prev = x
            cyc.append(nxt)

    def branch_edge(self, rng):
        best, bkey = [], None
        for v in range(self.nv):
            if self.req[v] == 2 or not self.avail[v]:
                continue
            key = (-self.req[v], self.avail[v])
            if bkey is None or key < bkey:
                best, bkey = [v], key
            elif key == bkey:
                best.append(v)
        v = best[0] if rng is None else rng.choice(best)
        cands = [e for e in self.incident[v] if self.state[e] == self.UNKNOWN]
        return cands[0] if rng is None else rng.choice(cands)

    def search(self, budget, rng):
        if self.nreq == self.nv:
            return self.extract()
        if budget is not None:
            budget[0] -= 1
            if budget[0] < 0:
                raise _OutOfBudget
        if not self.connected():
            return None
        e = self.branch_edge(rng)
        for choice in (True, False):
            sub = self.clone()
            try:
                (sub.require if choice else sub.exclude)(e)
                sub.drain()
            except _DeadEnd:
                continue
            got = sub.search(budget, rng)
            if got is not None:
                return got
        return None


def ham_cycle_forced(nv: int, adj: list[list[int]], forced: list[tuple[int, int]]):
    """Hamiltonian cycle of the graph given by an adjacency list passing
    through all forced edges, or None when none exists."""
    if nv < 3:
        return None
    s = _EdgeSearch(nv, adj)
    try:
        for a, b in forced:
            e = s.eids.get(frozenset((a, b)))
            if e is None:
                return None
            s.require(e)
        s.drain()
    except _DeadEnd:
        return None
    import random as _random
    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, len(s.ends) + 100))
    try:
        # randomized restarts sidestep the rare orderings where the
        # search thrashes; many cheap restarts beat few expensive ones,
        # and only the last unbounded round may conclude that no cycle
        # exists
        rounds = [(1500, None)]
        seed = 0
        for budget in (1500, 6000, 25000, 100000, 400000):
            for _ in range(8):
                seed += 1
                rounds.append((budget, seed))
        rounds.append((None, seed + 1))
        for budget, seed in rounds:
            rng = None if seed is None else _random.Random(seed * 7919)
            try:
                return s.clone().search(None if budget is None else [budget],
                                        rng)
            except _OutOfBudget:
                continue
        return None
    finally:
        sys.setrecursionlimit(old)


_cycle_cache: dict = {}


def _base_cycle(g: Graph, mask: int, forced_ridges) -> list[frozenset[int]]:
    """Exhaustive search on the full flip graph of a small subgraph.

    Previously found cycles are cached and indexed by edge, so repeated
    queries with already-covered forced flips avoid a new search."""
    vertices, index, adj = flip_index(g, mask)
    fedges = []
    for r in forced_ridges:
        c1, c2 = completions(g, r)
        fedges.append(frozenset((index[c1], index[c2])))
    cycles, by_edge = _cycle_cache.setdefault((g, mask), ([], {}))
    if fedges:
        hits = set.intersection(*(by_edge.get(e, set()) for e in fedges))
        if hits:
            return [vertices[i] for i in cycles[min(hits)]]
    elif cycles:
        return [vertices[i] for i in cycles[0]]
    cyc = ham_cycle_forced(len(vertices), adj, [tuple(e) for e in fedges])
    if cyc is None:
        raise HamiltonianError("no Hamiltonian cycle through the forced flips")
    cid = len(cycles)
    cycles.append(cyc)
    for i in range(len(cyc)):
        e = frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))
        by_edge.setdefault(e, set()).add(cid)
    return [vertices[i] for i in cyc]


# ---------------------------------------------------------------------------
# edge-set plumbing for gluing


def _cycle_edge_set(cyc: list[frozenset[int]]) -> set:
    if len(cyc) == 2:
        return {frozenset(cyc)}
    out = set()
    for i in range(len(cyc)):
        e = frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))
        out.add(e)
    return out


def _reconstruct(edges) -> list[frozenset[int]]:
    """Rebuild an ordered cycle from its edge set, checking 2-regularity
    and that consecutive tubings differ by a single member.  A dict is
    treated as an edge multiset and all multiplicities must be one."""
    if isinstance(edges, dict):
        if any(c != 1 for c in edges.values()):
            raise HamiltonianError("internal error: repeated edge after gluing")
        edges = set(edges)
    nbrs: dict[frozenset[int], list] = {}
    for e in edges:
        a, b = tuple(e)
        if len(a ^ b) != 2:
            raise HamiltonianError("internal error: glued edge is not a flip")
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    if any(len(v) != 2 for v in nbrs.values()):
        raise HamiltonianError("internal error: glued graph is not 2-regular")
    startv = min(nbrs, key=sorted)
    cyc = [startv, min(nbrs[startv], key=sorted)]
    while True:
        a, b = nbrs[cyc[-1]]
        nxt = b if a == cyc[-2] else a
        if nxt == startv:
            break
        cyc.append(nxt)
    if len(cyc) != len(nbrs):
        raise HamiltonianError("internal error: glued edges form several cycles")
    return cyc


def _lift(cyc, member: int):
    return [T | {member} for T in cyc]


def _tail(ridge: frozenset[int], member: int) -> frozenset[int]:
    return ridge - {member}


# ---------------------------------------------------------------------------
# bridges


def bridge_info(g: Graph, bridge: frozenset[int]):
    """Root pair and leaf edge of a bridge (a loaded tubing two short of
    maximal, with doubletons at the root and at a leaf)."""
    nodes, parent, label = _spine_arrays(bridge)
    doubles = [i for i, lab in enumerate(label) if lab.bit_count() == 2]
    if len(doubles) != 2 or any(
            lab.bit_count() not in (1, 2) for lab in label):
        raise HamiltonianError(f"{sets_to_lists(bridge)} is not a bridge")
    tops = [i for i in doubles if parent[i] < 0]
    leaves = [i for i in doubles
              if not any(parent[j] == i for j in range(len(nodes)))]
    if len(tops) != 1 or len(leaves) != 1 or tops == leaves:
        raise HamiltonianError(f"{sets_to_lists(bridge)} is not a bridge")
    return label[tops[0]], nodes[leaves[0]]


def bridge_flip(g: Graph, bridge: frozenset[int], r: int,
                mask: int | None = None) -> frozenset[int]:
    """The short flip of the bridge lying in the fixed-root subgraph of r."""
    return _bridge_flip(g, g.full_mask if mask is None else mask, bridge, r)


def _bridge_flip(g: Graph, mask: int, bridge: frozenset[int], r: int) -> frozenset[int]:
    root_pair, _ = bridge_info(g, bridge)
    other = root_pair & ~(1 << r)
    if not (root_pair & (1 << r)) or not is_singleton(other):
        raise HamiltonianError(f"{r} is not in the bridge root pair")
    comp = _component_containing(g.adj, mask & ~(1 << r), other.bit_length() - 1)
    return bridge | {comp}


def _bridge_exchange(edges: dict, g: Graph, mask: int, bridge: frozenset[int],
                     r: int, s: int) -> None:
    """Replace the two short flips of a bridge by its two long flips.

    The edge collection is a multiset mapping edges to multiplicities;
    degenerate layers hold their unique edge with multiplicity two."""
    _, leaf = bridge_info(g, bridge)
    a, b = (1 << v for v in members(leaf))
    br = _bridge_flip(g, mask, bridge, r)
    bs = _bridge_flip(g, mask, bridge, s)
    xa, xb = br | {a}, br | {b}
    ya, yb = bs | {a}, bs | {b}
    for short in (frozenset((xa, xb)), frozenset((ya, yb))):
        if edges.get(short, 0) == 0:
            raise HamiltonianError("internal error: bridge short flip missing")
        edges[short] -= 1
        if not edges[short]:
            del edges[short]
    for longe in (frozenset((xa, ya)), frozenset((xb, yb))):
        edges[longe] = edges.get(longe, 0) + 1


def _short_ridges(g: Graph, cmask: int) -> list[frozenset[int]]:
    """All ridges of F(G[cmask]) whose doubleton sits at a leaf."""
    vertices, index, adj = flip_index(g, cmask)
    out = set()
    for T in vertices:
        nodes, parent, label = _spine_arrays(T)
        for i, t in enumerate(nodes):
            p = parent[i]
            if p < 0:
                continue
            if any(parent[j] == i for j in range(len(nodes))):
                continue  # t has children: doubleton would not be a leaf
            if sum(1 for j in range(len(nodes)) if parent[j] == p) != 1:
                continue  # parent keeps other children
            out.add(T - {t})
    return sorted(out, key=sorted)


def enumerate_bridges(g: Graph, root_pair: tuple[int, int],
                      mask: int | None = None) -> list[frozenset[int]]:
    """All bridges with the given root pair in G[mask] (must be connected)."""
    if mask is None:
        mask = g.full_mask
    r, s = root_pair
    rest = mask & ~(1 << r) & ~(1 << s)
    comps = components(g, rest)
    out = []
    tubing_lists = [flip_index(g, c)[0] for c in comps]
    for i, c in enumerate(comps):
        for short in _short_ridges(g, c):
            # cartesian product with maximal tubings of the other components
            acc = [frozenset({mask}) | short]
            for j, lst in enumerate(tubing_lists):
                if j == i:
                    continue
                acc = [base | T for base in acc for T in lst]
            out.extend(acc)
    return sorted(set(out), key=sorted)


# ---------------------------------------------------------------------------
# conflicts, orderings, bridge selection


def _edges_in(g: Graph, mask: int) -> list[tuple[int, int]]:
    return g.edges_within(mask)


def in_conflict(g: Graph, w: int, ridge: frozenset[int],
                mask: int | None = None) -> bool:
    """Whether vertex w blocks the short flip from being a bridge flip."""
    if mask is None:
        mask = g.full_mask
    info = classify_ridge(g, ridge)
    if info.kind != "short":
        raise HamiltonianError("conflicts are defined for short flips")
    v = info.root_vertex
    if w == v:
        raise HamiltonianError("conflict is with a vertex other than the root")
    if info.doubleton & (1 << w):
        return False
    vhat = mask & ~(1 << v)
    child_labels = _child_labels_of_root(ridge, mask)
    if info.short_child == 1 << w:
        others = [c for c in components(g, vhat)
                  if not c & info.node]
        if all(is_singleton(c) for c in others):
            return True
    rest_edges = _edges_in(g, mask & ~(1 << v) & ~(1 << w))
    if len(rest_edges) == 1:
        u1, u2 = rest_edges[0]
        if (1 << u1) | (1 << u2) == info.doubleton:
            ne = len(_edges_in(g, vhat))
            if ne >= 3:
                return True
            if ne == 2 and (1 << w) in child_labels:
                return True
    return False


def totally_disconnecting_pairs(g: Graph, mask: int | None = None) -> list[frozenset[int]]:
    """Vertex pairs whose removal leaves no edge."""
    if mask is None:
        mask = g.full_mask
    out = []
    for x, y in combinations(members(mask), 2):
        if not _edges_in(g, mask & ~(1 << x) & ~(1 << y)):
            out.append(frozenset((x, y)))
    return out


def _disconnected_count(g: Graph, mask: int, v: int) -> int:
    """Vertices cut off from the main body when v is removed."""
    comps = components(g, mask & ~(1 << v))
    if not comps:
        return 0
    sizes = sorted(c.bit_count() for c in comps)
    return sum(sizes[:-1])


def almost_leaves(g: Graph, mask: int | None = None,
                  excluded: tuple[int, ...] = ()) -> list[int]:
    """Vertices (outside excluded) disconnecting at most one vertex."""
    if mask is None:
        mask = g.full_mask
    return [v for v in members(mask)
            if v not in excluded and _disconnected_count(g, mask, v) <= 1]


def order_vertices(g: Graph, f: frozenset[int], f2: frozenset[int],
                   mask: int | None = None) -> list[int]:
    """An ordering starting at the roots of the forced flips such that
    no consecutive pair totally disconnects the graph and the second
    and second-to-last vertices avoid conflicts with the forced flips."""
    if mask is None:
        mask = g.full_mask
    v1 = classify_ridge(g, f).root_vertex
    vend = classify_ridge(g, f2).root_vertex
    if v1 == vend:
        raise HamiltonianError("forced short flips share their root")
    D = set(totally_disconnecting_pairs(g, mask))
    middle = [v for v in members(mask) if v not in (v1, vend)]

    def ok_pair(a, b):
        return frozenset((a, b)) not in D

    def extend(order):
        if len(order) == len(middle) + 1:
            v = vend
            if ok_pair(order[-1], v) and not in_conflict(g, order[-1], f2, mask):
                return order + [v]
            return None
        for v in middle:
            if v in order:
                continue
            if not ok_pair(order[-1], v):
                continue
            if len(order) == 1 and in_conflict(g, v, f, mask):
                continue
            got = extend(order + [v])
            if got:
                return got
        return None

    got = extend([v1])
    if got is None:
        raise OrderingError("no ordering avoids all conflicts and "
                            "totally disconnecting pairs")
    return got


def _sub_kind(g: Graph, submask: int) -> str:
    """Shape of the flip graph of a vertex-deleted subgraph."""
    ne = len(_edges_in(g, submask))
    if ne == 0:
        return "point"
    if ne == 1:
        return "single"
    if ne == 2:
        e1, e2 = _edges_in(g, submask)
        if not (set(e1) & set(e2)):
            return "square"
    return "big"


def select_bridge(g: Graph, mode: str, mask: int | None = None, **ctx) -> frozenset[int]:
    """Pick the canonical bridge satisfying the gluing conditions.

    mode "first": ctx has v1, v2, v3 (v3 may be None) and flip (the flip
    in the fixed-root subgraph of v1 that the cycle must keep).  mode
    "middle": ctx has v, w, flip_v, flip_w; the four hypotheses of the
    middle selection are validated and named on failure.
    """
    if mask is None:
        mask = g.full_mask
    if mode == "first":
        return _select_first(g, mask, ctx["v1"], ctx["v2"], ctx.get("v3"),
                             ctx["flip"])
    if mode == "middle":
        return _select_middle(g, mask, ctx["v"], ctx["w"], ctx["flip_v"],
                              ctx["flip_w"])
    raise HamiltonianError(f"unknown bridge selection mode {mode!r}")


def _side_ok(g: Graph, mask: int, v: int, bridge: frozenset[int],
             keep: frozenset[int]) -> bool:
    """Whether the bridge flip at v can coexist with the flip to keep."""
    kind = _sub_kind(g, mask & ~(1 << v))
    bv = _bridge_flip(g, mask, bridge, v)
    if kind == "single":
        return bv == keep
    if kind == "square":
        return bv != keep
    return (classify_ridge(g, bv).short_child
            != classify_ridge(g, keep).short_child)


def _select_first(g, mask, v1, v2, v3, flip) -> frozenset[int]:
    for bridge in enumerate_bridges(g, (v1, v2), mask):
        if not _side_ok(g, mask, v1, bridge, flip):
            continue
        bv2 = _bridge_flip(g, mask, bridge, v2)
        if v3 is not None:
            if in_conflict(g, v3, bv2, mask):
                continue
            if (1 << v3) in _child_labels_of_root(bv2, mask):
                if g.adj[v3] & mask & ~(1 << v1) & ~(1 << v2):
                    continue
        return bridge
    raise BridgeSelectionError(
        f"no bridge with root {{{v1},{v2}}} fits the selection rules")


def _select_middle(g, mask, v, w, flip_v, flip_w) -> frozenset[int]:
    if not _edges_in(g, mask & ~(1 << v) & ~(1 << w)):
        raise BridgeSelectionError("hypothesis (i) fails: the root pair "
                                   "totally disconnects the graph")
    if in_conflict(g, w, flip_v, mask) or in_conflict(g, v, flip_w, mask):
        raise BridgeSelectionError("hypothesis (ii) fails: a kept flip is "
                                   "in conflict with the other root")
    if (1 << v) in _child_labels_of_root(flip_w, mask):
        if g.adj[v] & mask & ~(1 << w):
            raise BridgeSelectionError("hypothesis (iii) fails: the pivot "
                                       "is a non-isolated child in the kept flip")
    cut = components(g, mask & ~(1 << v))
    sizes = sorted((c.bit_count(), c) for c in cut)
    stray = [c for _, c in sizes[:-1]]
    if sum(c.bit_count() for c in stray) > 1 or any(c & (1 << w) for c in stray):
        raise BridgeSelectionError("hypothesis (iv) fails: the pivot "
                                   "disconnects too much or disconnects "
                                   "the other root")
    for bridge in enumerate_bridges(g, (v, w), mask):
        if _side_ok(g, mask, v, bridge, flip_v) and \
           _side_ok(g, mask, w, bridge, flip_w):
            return bridge
    raise BridgeSelectionError(
        f"no bridge with root {{{v},{w}}} fits the selection rules")


# ---------------------------------------------------------------------------
# Cartesian products of cycles


def _snake_route(p: int, q: int) -> list[tuple[int, int]]:
    """Hamiltonian cycle of the product of a p-cycle with a q-cycle:
    full first column, then boustrophedon rows over the others."""
    route = [(0, j) for j in range(q)]
    for idx, j in enumerate(range(q - 1, -1, -1)):
        cols = range(1, p) if idx % 2 == 0 else range(p - 1, 0, -1)
        route.extend((i, j) for i in cols)
    return route


def _zigzag_route(p: int) -> list[tuple[int, int]]:
    """All-vertical Hamiltonian cycle of an even p-cycle times an edge."""
    route = []
    for i in range(p):
        rows = (0, 1) if i % 2 == 0 else (1, 0)
        route.extend((i, j) for j in rows)
    return route


def _route_edge_set(route) -> set:
    return {frozenset((route[i], route[(i + 1) % len(route)]))
            for i in range(len(route))}


def _product_route(p: int, q: int, forced) -> list[tuple[int, int]] | None:
    """A Hamiltonian cycle of the product of a p-cycle and a q-cycle
    (length 2 means a single edge) through the forced index edges.

    Tries rotations and reflections of the standard patterns; inverse
    mapping keeps each parameter check constant-time.
    """
    routes = [_snake_route(p, q)]
    if q == 2 and p % 2 == 0 and p > 2:
        routes.append(_zigzag_route(p))
    for route in routes:
        eset = _route_edge_set(route)
        for ra in range(p):
            for da in (1, -1) if p > 2 else (1,):
                for rb in range(q):
                    for db in (1, -1) if q > 2 else (1,):
                        def inv(pt):
                            return (da * (pt[0] - ra) % p, db * (pt[1] - rb) % q)
                        if all(frozenset(map(inv, e)) in eset for e in forced):
                            return [((ra + da * i) % p, (rb + db * j) % q)
                                    for i, j in route]
    return None


def _grid_exhaustive(p: int, q: int, forced) -> list[tuple[int, int]] | None:
    def vid(pt):
        return pt[0] * q + pt[1]

    adj = [[] for _ in range(p * q)]
    for i in range(p):
        for j in range(q):
            nbrs = set()
            for i2 in ((i + 1) % p, (i - 1) % p):
                if i2 != i:
                    nbrs.add((i2, j))
            for j2 in ((j + 1) % q, (j - 1) % q):
                if j2 != j:
                    nbrs.add((i, j2))
            adj[vid((i, j))] = sorted(vid(pt) for pt in nbrs)
    fidx = [tuple(vid(pt) for pt in e) for e in forced]
    cyc = ham_cycle_forced(p * q, adj, fidx)
    if cyc is None:
        return None
    return [divmod(v, q) for v in cyc]


def _cyclic_adjacent(i: int, j: int, n: int) -> bool:
    return (i - j) % n in (1, n - 1)


def _product_cycle_indexed(p: int, q: int, forced) -> list[tuple[int, int]]:
    """Dispatch between pattern families, exhaustive fallback, and the
    impossibility conditions for a cycle times a single edge."""
    forced = sorted(set(forced), key=sorted)
    if len(forced) == 2 and q == 2 and p > 2:
        dirs = []
        for e in forced:
            (i1, j1), (i2, j2) = sorted(e)
            dirs.append("B" if i1 == i2 else "A")
        if dirs == ["B", "B"]:
            cols = sorted(tuple(e)[0][0] for e in forced)
            if p % 2 == 1 and not _cyclic_adjacent(cols[0], cols[1], p) \
                    and cols[0] != cols[1]:
                raise HamiltonianError(
                    "no Hamiltonian cycle of an odd cycle times an edge "
                    "contains two non-adjacent rung edges")
    route = _product_route(p, q, forced)
    if route is None and q > 2:
        swapped = _product_route(q, p, [frozenset((pt[1], pt[0]) for pt in e)
                                        for e in forced])
        if swapped is not None:
            route = [(i, j) for j, i in swapped]
    if route is None and p * q <= 400:
        route = _grid_exhaustive(p, q, forced)
    if route is None:
        raise HamiltonianError("no product cycle pattern fits the forced edges")
    return route


def hamiltonian_product(cycle_a: list, cycle_b: list, e1=None, e2=None) -> list:
    """Hamiltonian cycle of the Cartesian product of two cycles through
    up to two forced edges.

    Cycles are vertex lists; length 2 means a single edge.  Forced
    edges are pairs of product vertices (a, b).  Raises when no cycle
    exists (two non-adjacent rungs of an odd prism).
    """
    p, q = len(cycle_a), len(cycle_b)
    if p < 2 or q < 2:
        raise HamiltonianError("factors need at least two vertices")
    forced = []
    for e in (e1, e2):
        if e is None:
            continue
        (xa, xb), (ya, yb) = e
        ia, ja = cycle_a.index(xa), cycle_b.index(xb)
        ib, jb = cycle_a.index(ya), cycle_b.index(yb)
        if (ia == ib) == (ja == jb):
            raise HamiltonianError(f"{e} is not an edge of the product")
        if ia != ib and p > 2 and not _cyclic_adjacent(ia, ib, p):
            raise HamiltonianError(f"{e} is not an edge of the product")
        if ja != jb and q > 2 and not _cyclic_adjacent(ja, jb, q):
            raise HamiltonianError(f"{e} is not an edge of the product")
        forced.append(frozenset(((ia, ja), (ib, jb))))
    route = _product_cycle_indexed(p, q, forced)
    return [(cycle_a[i], cycle_b[j]) for i, j in route]


# ---------------------------------------------------------------------------
# disconnected graphs: fold component cycles


def _restrict(T: frozenset[int], cmask: int) -> frozenset[int]:
    return frozenset(t for t in T if not t & ~cmask)


def _fold_pair(g, acyc, amask, bcyc, bmask, forced_pairs):
    p, q = len(acyc), len(bcyc)
    aidx = {T: i for i, T in enumerate(acyc)}
    bidx = {T: i for i, T in enumerate(bcyc)}
    forced = []
    for X, Y in forced_pairs:
        ia, ib = aidx[_restrict(X, amask)], aidx[_restrict(Y, amask)]
        ja, jb = bidx[_restrict(X, bmask)], bidx[_restrict(Y, bmask)]
        forced.append(frozenset(((ia, ja), (ib, jb))))
    route = _product_cycle_indexed(p, q, forced)
    return [acyc[i] | bcyc[j] for i, j in route]


def _short_flip_with_root(g: Graph, mask: int, t: int) -> frozenset[int] | None:
    """A canonical short flip of G[mask] whose tree root is the vertex t."""
    rest = mask & ~(1 << t)
    comps = [c for c in components(g, rest) if _edges_in(g, c)]
    if not comps:
        return None
    k = comps[0]
    s, s2 = min(_edges_in(g, k))
    order = [s, s2]
    seen = (1 << s) | (1 << s2)
    i = 0
    while seen != k:
        grow = g.adj[order[i]] & k & ~seen
        i += 1
        for v in iter_bits(grow):
            order.append(v)
            seen |= 1 << v
    elems = {mask}
    pref = 0
    for v in order:
        pref |= 1 << v
        if v != s:
            elems.add(pref)
    for c in components(g, rest & ~k):
        elems.update(seed_tubing(g, c))
    return frozenset(elems)


def _default_short_flips(g: Graph, mask: int, existing) -> tuple[frozenset[int], frozenset[int]]:
    """Complete a list of at most two short flips to a pair with
    distinct root labels."""
    flips = list(existing)
    keys = {_root_key(classify_ridge(g, f)) for f in flips}
    comps = components(g, mask)
    for v in members(mask):
        if len(flips) >= 2:
            break
        if (1 << v) in keys:
            continue
        cand = None
        if len(comps) == 1:
            cand = _short_flip_with_root(g, mask, v)
        else:
            c = next(c for c in comps if c & (1 << v))
            if _edges_in(g, c & ~(1 << v)):
                sub = _short_flip_with_root(g, c, v)
                if sub is not None:
                    cand = frozenset(sub)
                    for c2 in comps:
                        if c2 != c:
                            cand |= seed_tubing(g, c2)
        if cand is None:
            continue
        info = classify_ridge(g, cand)
        if _root_key(info) in keys:
            continue
        flips.append(cand)
        keys.add(_root_key(info))
    if len(flips) < 2:
        # fall back to flips at isolated edge components
        for c in comps:
            if len(flips) >= 2:
                break
            if c.bit_count() == 2 and _edges_in(g, c):
                base = frozenset().union(*(seed_tubing(g, c2) for c2 in comps))
                cand = base - {c & -c}
                if _root_key(classify_ridge(g, cand)) not in keys:
                    flips.append(cand)
                    keys.add(c)
    if len(flips) < 2:
        raise HamiltonianError("could not construct two short flips with "
                               "distinct roots")
    return flips[0], flips[1]


def _ham_disconnected(g: Graph, mask: int, f, f2) -> list[frozenset[int]]:
    comps = components(g, mask)
    points = [c for c in comps if not _edges_in(g, c)]
    factors = [c for c in comps if _edges_in(g, c)]
    forced_by_comp: dict[int, list] = {}
    global_edges = []
    for ridge in (f, f2):
        info = classify_ridge(g, ridge)
        c = next(c for c in factors if info.node & c)
        forced_by_comp.setdefault(c, []).append(_restrict(ridge, c))
        global_edges.append(completions(g, ridge))
    cycles = []
    for c in factors:
        fr = forced_by_comp.get(c, [])
        if len(_edges_in(g, c)) == 1:
            cycles.append((c, list(flip_index(g, c)[0])))
        else:
            fa, fb = _default_short_flips(g, c, fr)
            cycles.append((c, _ham(g, c, fa, fb)))
    amask, acyc = cycles[0]
    for bmask, bcyc in cycles[1:]:
        s = amask | bmask
        pairs = []
        for X, Y in global_edges:
            rx, ry = _restrict(X, s), _restrict(Y, s)
            if rx != ry and (rx, ry) not in pairs and (ry, rx) not in pairs:
                pairs.append((rx, ry))
        acyc = _fold_pair(g, acyc, amask, bcyc, bmask, pairs)
        amask = s
    if points:
        extra = frozenset(points)
        acyc = [T | extra for T in acyc]
    return acyc


# ---------------------------------------------------------------------------
# generic gluing driver


def _flips_compatible_at(g: Graph, mask: int, v: int, fl1, fl2) -> bool:
    """Whether two flips fixed at root v can lie on one layer cycle."""
    kind = _sub_kind(g, mask & ~(1 << v))
    if kind == "single":
        return fl1 == fl2
    if kind == "square":
        return fl1 != fl2
    return (classify_ridge(g, fl1).short_child
            != classify_ridge(g, fl2).short_child)


def _add_edge(E: dict, e) -> None:
    E[e] = E.get(e, 0) + 1


def _remove_edge(E: dict, e) -> None:
    if E.get(e, 0) == 0:
        raise HamiltonianError("internal error: glued edge missing")
    E[e] -= 1
    if not E[e]:
        del E[e]


def _assemble(g: Graph, mask: int, order, bridges, f, f2) -> list[frozenset[int]]:
    """Glue one layer cycle per root vertex along the chosen bridges."""
    n1 = len(order)
    E: dict = {}
    for k, v in enumerate(order):
        fl1 = f if k == 0 else _bridge_flip(g, mask, bridges[k - 1], v)
        fl2 = f2 if k == n1 - 1 else _bridge_flip(g, mask, bridges[k], v)
        if not _flips_compatible_at(g, mask, v, fl1, fl2):
            raise BridgeSelectionError(
                f"flips fixed at root {v} cannot share a layer cycle")
        sub = mask & ~(1 << v)
        kind = _sub_kind(g, sub)
        if kind == "single":
            # degenerate layer: its single edge is consumed once per
            # incident bridge exchange and kept when only one bridge
            # touches the layer
            e = frozenset(completions(g, fl1))
            _add_edge(E, e)
            _add_edge(E, e)
        elif kind == "square":
            cyc = _lift(_base_cycle(g, sub, [_tail(fl1, mask),
                                             _tail(fl2, mask)]), mask)
            for e in _cycle_edge_set(cyc):
                _add_edge(E, e)
        elif kind == "big":
            cyc = _lift(_ham(g, sub, _tail(fl1, mask), _tail(fl2, mask)), mask)
            for e in _cycle_edge_set(cyc):
                _add_edge(E, e)
        else:
            raise HamiltonianError("internal error: empty layer in a "
                                   "connected non-star graph")
    for k, bridge in enumerate(bridges):
        _bridge_exchange(E, g, mask, bridge, order[k], order[k + 1])
    return _reconstruct(E)


def _ham_generic(g: Graph, mask: int, f, f2) -> list[frozenset[int]]:
    """Layer-by-layer construction following the ordering and bridge
    selection rules; raises when some selection rule cannot be met."""
    order = order_vertices(g, f, f2, mask)
    n1 = len(order)
    pool = almost_leaves(g, mask, excluded=(order[0], order[-1]))
    if not pool:
        raise OrderingError("no almost leaf available as pivot")
    piv = min(pool, key=lambda v: (_disconnected_count(g, mask, v),
                                   order.index(v)))
    pos = order.index(piv)
    bridges: list = [None] * (n1 - 1)
    prev = f
    for j in range(pos):
        bridges[j] = _select_first(g, mask, order[j], order[j + 1],
                                   order[j + 2], prev)
        prev = _bridge_flip(g, mask, bridges[j], order[j + 1])
    flip_v = prev
    prev = f2
    for j in range(n1 - 2, pos, -1):
        bridges[j] = _select_first(g, mask, order[j + 1], order[j],
                                   order[j - 1], prev)
        prev = _bridge_flip(g, mask, bridges[j], order[j])
    flip_w = prev
    bridges[pos] = _select_middle(g, mask, order[pos], order[pos + 1],
                                  flip_v, flip_w)
    return _assemble(g, mask, order, bridges, f, f2)


def _ham_backtrack(g: Graph, mask: int, f, f2) -> list[frozenset[int]]:
    """Exhaustive search over orderings and bridge chains, used when the
    canonical selection rules fail."""
    v1 = classify_ridge(g, f).root_vertex
    vend = classify_ridge(g, f2).root_vertex
    D = set(totally_disconnecting_pairs(g, mask))
    middle = [v for v in members(mask) if v not in (v1, vend)]
    budget = [5000]

    def chain(order, bridges, prev):
        idx = len(bridges)
        if idx == len(order) - 1:
            if not _flips_compatible_at(g, mask, order[-1], prev, f2):
                return None
            budget[0] -= 1
            try:
                return _assemble(g, mask, order, bridges, f, f2)
            except HamiltonianError:
                return None
        v, w = order[idx], order[idx + 1]
        for br in enumerate_bridges(g, (v, w), mask):
            if budget[0] <= 0:
                return None
            bv = _bridge_flip(g, mask, br, v)
            if not _flips_compatible_at(g, mask, v, prev, bv):
                continue
            got = chain(order, bridges + [br], _bridge_flip(g, mask, br, w))
            if got:
                return got
        return None

    def orders(o):
        if len(o) == len(middle) + 1:
            if frozenset((o[-1], vend)) not in D:
                yield o + [vend]
            return
        for v in middle:
            if v not in o and frozenset((o[-1], v)) not in D:
                yield from orders(o + [v])

    for order in orders([v1]):
        got = chain(order, [], f)
        if got:
            return got
        if budget[0] <= 0:
            break
    raise HamiltonianError("no bridge chain found through the forced flips")


# ---------------------------------------------------------------------------
# stars


def _star_center(g: Graph, mask: int) -> int | None:
    """The vertex covering all edges of G[mask], when one exists."""
    es = _edges_in(g, mask)
    if len(es) < 2:
        return None
    common = set(es[0])
    for e in es[1:]:
        common &= set(e)
        if not common:
            return None
    return min(common)


def _star_chain(mask: int, c: int, tops) -> frozenset[int]:
    """Maximal tubing of a star: a chain peeling the listed leaves off
    the top, all remaining leaves as singletons."""
    elems = {mask}
    cur = mask
    for t in tops:
        cur &= ~(1 << t)
        elems.add(cur)
    for v in members(mask & ~(1 << c)):
        if v not in tops:
            elems.add(1 << v)
    return frozenset(elems)


def _star_long(mask: int, c: int, a: int) -> frozenset[int]:
    """Long ridge of a star with root pair {a, center}."""
    return frozenset({mask} | {1 << v for v in members(mask & ~(1 << c))
                               if v != a})


def _star_short(g: Graph, mask: int, c: int, root_v: int,
                child_v: int) -> frozenset[int]:
    """Short ridge of a star with the given root and short child."""
    others = [v for v in members(mask & ~(1 << c))
              if v not in (root_v, child_v)]
    pref = (1 << others[0]) | (1 << c)
    elems = {pref}
    for v in others[1:] + [child_v]:
        pref |= 1 << v
        elems.add(pref)
    elems.add(mask)
    return frozenset(elems)


def _star_free_short(g: Graph, mask: int, c: int, avoid: int) -> frozenset[int]:
    leaves = [v for v in members(mask) if v != c]
    root_v = min(v for v in leaves if v != avoid)
    child_v = min(v for v in leaves if v not in (root_v, avoid))
    return _star_short(g, mask, c, root_v, child_v)


def _splice_spine(E: dict, mask: int, c: int, x: int, y: int) -> None:
    """Insert the all-singleton spine between the layers of x and y."""
    spine = _star_chain(mask, c, [])
    ax, axy = _star_chain(mask, c, [x]), _star_chain(mask, c, [x, y])
    ay, ayx = _star_chain(mask, c, [y]), _star_chain(mask, c, [y, x])
    _remove_edge(E, frozenset((ax, axy)))
    _remove_edge(E, frozenset((ay, ayx)))
    _add_edge(E, frozenset((ax, spine)))
    _add_edge(E, frozenset((spine, ay)))
    _add_edge(E, frozenset((axy, ayx)))


def _ham_star(g: Graph, mask: int, c: int, f, f2, long_flip) -> list[frozenset[int]]:
    """Hamiltonian cycle of the flip graph of a star through two short
    flips with distinct roots and one long flip."""
    rootf = classify_ridge(g, f).root_vertex
    rootf2 = classify_ridge(g, f2).root_vertex
    if long_flip is None:
        long_flip = _star_long(mask, c, rootf)
    if mask.bit_count() <= 4:
        return _base_cycle(g, mask, [f, f2, long_flip])
    lpair = classify_ridge(g, long_flip).root_label
    if not lpair & (1 << c) or lpair.bit_count() != 2:
        raise HamiltonianError("long flip root must contain the star center")
    r2 = (lpair & ~(1 << c)).bit_length() - 1
    if r2 == rootf2:
        f, f2 = f2, f
        rootf, rootf2 = rootf2, rootf
    if r2 == rootf:
        return _star_case_shared(g, mask, c, f, f2, rootf, rootf2)
    return _star_case_separate(g, mask, c, f, f2, rootf, rootf2, r2)


def _star_layers(g, mask, c, chain, bridges, first_pair):
    """Lifted layer cycles along a bridge chain; first_pair gives the
    forced flips of the first layer."""
    E: dict = {}
    for i, v in enumerate(chain):
        sub = mask & ~(1 << v)
        if i == 0:
            fa, fb, fl = first_pair
        else:
            fa = _tail(_bridge_flip(g, mask, bridges[i - 1], v), mask)
            if i < len(bridges):
                fb = _tail(_bridge_flip(g, mask, bridges[i], v), mask)
            else:
                fb = _star_free_short(g, sub, c,
                                      classify_ridge(g, fa).root_vertex)
            fl = None
        cyc = _lift(_ham_star(g, sub, c, fa, fb, fl), mask)
        for e in _cycle_edge_set(cyc):
            _add_edge(E, e)
    return E


def _star_case_shared(g, mask, c, f, f2, r, rp):
    """Star induction when the long flip root meets the first short root."""
    wp = classify_ridge(g, f2).short_child.bit_length() - 1
    vs = sorted(v for v in members(mask) if v not in (c, r, rp))
    if vs[0] == wp:
        vs[0], vs[1] = vs[1], vs[0]
    chain = [rp] + vs
    bridges = [enumerate_bridges(g, (chain[i], chain[i + 1]), mask)[0]
               for i in range(len(vs))]
    first = (_tail(f2, mask),
             _tail(_bridge_flip(g, mask, bridges[0], rp), mask),
             _star_long(mask & ~(1 << rp), c, r))
    E = _star_layers(g, mask, c, chain, bridges, first)
    subr = mask & ~(1 << r)
    hr = _lift(_ham_star(g, subr, c, _tail(f, mask),
                         _star_free_short(g, subr, c,
                                          classify_ridge(g, _tail(f, mask))
                                          .root_vertex),
                         _star_long(subr, c, rp)), mask)
    for e in _cycle_edge_set(hr):
        _add_edge(E, e)
    _splice_spine(E, mask, c, r, rp)
    for i, bridge in enumerate(bridges):
        _bridge_exchange(E, g, mask, bridge, chain[i], chain[i + 1])
    return _reconstruct(E)


def _star_case_separate(g, mask, c, f, f2, r, rp, r2):
    """Star induction when the long flip root avoids both short roots."""
    wp = classify_ridge(g, f2).short_child.bit_length() - 1
    vs = sorted(v for v in members(mask) if v not in (c, r, rp, r2))
    chain = [r2] + vs
    bridges = [enumerate_bridges(g, (chain[i], chain[i + 1]), mask)[0]
               for i in range(len(vs))]
    h = _star_short(g, mask, c, r2, rp)
    k = _star_short(g, mask, c, vs[-1], rp)
    first = (_tail(h, mask),
             _tail(_bridge_flip(g, mask, bridges[0], r2), mask),
             _star_long(mask & ~(1 << r2), c, r))
    E = _star_layers_with_last(g, mask, c, chain, bridges, first,
                               _tail(k, mask))
    subr = mask & ~(1 << r)
    hr = _lift(_ham_star(g, subr, c, _tail(f, mask),
                         _star_free_short(g, subr, c,
                                          classify_ridge(g, _tail(f, mask))
                                          .root_vertex),
                         _star_long(subr, c, r2)), mask)
    for e in _cycle_edge_set(hr):
        _add_edge(E, e)
    # attach the layer of the second short root through a parallel flip
    attach = h if wp != r2 else k
    att_root = r2 if wp != r2 else chain[-1]
    batt = attach - {mask & ~(1 << att_root)}
    parallel = _bridge_flip(g, mask, batt, rp)
    subrp = mask & ~(1 << rp)
    hrp = _lift(_ham_star(g, subrp, c, _tail(f2, mask),
                          _tail(parallel, mask), None), mask)
    for e in _cycle_edge_set(hrp):
        _add_edge(E, e)
    _splice_spine(E, mask, c, r, r2)
    for i, bridge in enumerate(bridges):
        _bridge_exchange(E, g, mask, bridge, chain[i], chain[i + 1])
    _bridge_exchange(E, g, mask, batt, att_root, rp)
    return _reconstruct(E)


def _star_layers_with_last(g, mask, c, chain, bridges, first_pair, last_extra):
    """Like _star_layers but forcing an extra short flip on the last layer."""
    E: dict = {}
    for i, v in enumerate(chain):
        sub = mask & ~(1 << v)
        if i == 0:
            fa, fb, fl = first_pair
        else:
            fa = _tail(_bridge_flip(g, mask, bridges[i - 1], v), mask)
            fb = (_tail(_bridge_flip(g, mask, bridges[i], v), mask)
                  if i < len(bridges) else last_extra)
            fl = None
        cyc = _lift(_ham_star(g, sub, c, fa, fb, fl), mask)
        for e in _cycle_edge_set(cyc):
            _add_edge(E, e)
    return E


# ---------------------------------------------------------------------------
# dispatcher and public entry points


def _ham(g: Graph, mask: int, f, f2) -> list[frozenset[int]]:
    comps = components(g, mask)
    if len(comps) > 1:
        return _ham_disconnected(g, mask, f, f2)
    c = _star_center(g, mask)
    if c is not None:
        return _ham_star(g, mask, c, f, f2, None)
    if mask.bit_count() <= BASE_THRESHOLD:
        return _base_cycle(g, mask, [f, f2])
    try:
        return _ham_generic(g, mask, f, f2)
    except (OrderingError, BridgeSelectionError):
        return _ham_backtrack(g, mask, f, f2)


def _load_ridge(g: Graph, ridge) -> frozenset[int]:
    return frozenset(ridge) | {c for c in components(g, g.full_mask)}


def _rotate(cyc: list[frozenset[int]]) -> list[frozenset[int]]:
    i = min(range(len(cyc)), key=lambda j: sorted(cyc[j]))
    cyc = cyc[i:] + cyc[:i]
    if len(cyc) > 2 and sorted(cyc[-1]) < sorted(cyc[1]):
        cyc = [cyc[0]] + cyc[:0:-1]
    return cyc


def hamiltonian(g: Graph, f=None, f2=None) -> list[frozenset[int]]:
    """Hamiltonian cycle of the flip graph of g through up to two forced
    short flips with distinct roots.

    Flips are given as ridges (maximal tubings minus one member); they
    are loaded automatically.  Raises HamiltonianError when the graph
    has fewer than two edges or the forced flips are invalid.
    """
    mask = g.full_mask
    if len(_edges_in(g, mask)) < 2:
        raise HamiltonianError("the flip graph has no cycle: fewer than "
                               "two edges")
    given = []
    for ridge in (f, f2):
        if ridge is None:
            continue
        loaded = _load_ridge(g, ridge)
        info = classify_ridge(g, loaded)
        if info.kind not in ("short", "both"):
            raise HamiltonianError(f"{sets_to_lists(frozenset(ridge))} is "
                                   "not a short flip")
        given.append(loaded)
    if len(given) == 2:
        k1 = _root_key(classify_ridge(g, given[0]))
        k2 = _root_key(classify_ridge(g, given[1]))
        if k1 == k2:
            raise HamiltonianError("forced short flips share their root")
    fa, fb = _default_short_flips(g, mask, given)
    cyc = _rotate(_ham(g, mask, fa, fb))
    if len(cyc) != count_max_tubings(g, mask):
        raise HamiltonianError("internal error: cycle misses some tubings")
    return cyc


def hamiltonian_star(g: Graph, f, f2, long_flip=None) -> list[frozenset[int]]:
    """Hamiltonian cycle of the flip graph of a star through two short
    flips with distinct roots and one long flip whose root contains the
    center.  The long flip defaults to one rooted at the first short
    root."""
    mask = g.full_mask
    c = _star_center(g, mask)
    if c is None or g.adj[c] != mask & ~(1 << c):
        raise HamiltonianError("the graph is not a star with at least "
                               "two edges")
    fa, fb = (_load_ridge(g, r) for r in (f, f2))
    for r in (fa, fb):
        if classify_ridge(g, r).kind != "short":
            raise HamiltonianError(f"{sets_to_lists(r)} is not a short flip")
    if classify_ridge(g, fa).root_vertex == classify_ridge(g, fb).root_vertex:
        raise HamiltonianError("forced short flips share their root")
    ll = None
    if long_flip is not None:
        ll = _load_ridge(g, long_flip)
        info = classify_ridge(g, ll)
        if info.kind != "long" or not info.root_label & (1 << c) \
                or info.root_label.bit_count() != 2:
            raise HamiltonianError("the long flip root must be the center "
                                   "and one leaf")
    cyc = _rotate(_ham_star(g, mask, c, fa, fb, ll))
    if len(cyc) != count_max_tubings(g, mask):
        raise HamiltonianError("internal error: cycle misses some tubings")
    return cyc


def verify_cycle(g: Graph, cycle: list[frozenset[int]], required=()) -> bool:
    """Check that a cycle is a Hamiltonian cycle of the flip graph of g
    and passes through the required flips (given as ridges)."""
    mask = g.full_mask
    n = mask.bit_count()
    if len(set(cycle)) != len(cycle):
        raise HamiltonianError("cycle repeats a tubing")
    if len(cycle) != count_max_tubings(g, mask):
        raise HamiltonianError("cycle does not cover all maximal tubings")
    for T in cycle:
        if len(T) != n:
            raise HamiltonianError(f"{sets_to_lists(T)} is not maximal")
    edges = set()
    for i, T in enumerate(cycle):
        U = cycle[(i + 1) % len(cycle)]
        if len(T ^ U) != 2:
            raise HamiltonianError("consecutive tubings are not related "
                                   "by a flip")
        edges.add(frozenset((T, U)))
    for ridge in required:
        e = frozenset(completions(g, _load_ridge(g, ridge)))
        if e not in edges:
            raise HamiltonianError(f"required flip "
                                   f"{sets_to_lists(frozenset(ridge))} "
                                   "is missing")
    return True
