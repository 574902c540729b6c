"""Building sets, nested sets, and spines.

A building set B on the ground set {0, ..., n-1} is a family of
nonempty vertex sets containing every singleton and closed under union
of overlapping members.  A nested set is a subfamily whose members are
pairwise nested or disjoint and which contains no union of two or more
pairwise disjoint members.  The tubings of a graph are exactly the
nested sets of its building set of tubes.

Nested sets are kept in loaded form internally: the inclusion-maximal
members of B always belong.  Proper form (loaded members dropped) is
used for serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .bits import is_singleton, iter_bits, members, sets_to_lists, to_mask
from .graphs import Graph, InputError, tubes


class BuildingSetError(InputError):
    """A family fails one of the building set axioms."""


class NestedSetError(InputError):
    """A family fails one of the nested set axioms."""


@dataclass(frozen=True)
class BuildingSet:
    n: int
    elements: frozenset[int]
    graph: Graph | None = field(default=None, compare=False)
    b_max: frozenset[int] = field(init=False, compare=False)

    def __post_init__(self):
        maximal = frozenset(
            b for b in self.elements
            if not any(b != c and b & c == b for c in self.elements))
        object.__setattr__(self, "b_max", maximal)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def connected(self) -> bool:
        return self.full_mask in self.elements

    @classmethod
    def graphical(cls, g: Graph) -> "BuildingSet":
        return cls(g.n, frozenset(tubes(g)), graph=g)


def validate_building_set(n: int, elements) -> BuildingSet:
    """Check the axioms and return the building set, or raise with a witness."""
    elems = frozenset(elements)
    full = (1 << n) - 1
    for b in elems:
        if b == 0 or b & ~full:
            raise BuildingSetError(f"member {members(b)} not a nonempty subset "
                                   f"of the ground set of size {n}")
    for v in range(n):
        if (1 << v) not in elems:
            raise BuildingSetError(f"missing singleton {{{v}}}")
    for b, c in combinations(sorted(elems), 2):
        if b & c and (b | c) not in elems:
            raise BuildingSetError(
                f"members {members(b)} and {members(c)} overlap but their "
                f"union {members(b | c)} is absent")
    return BuildingSet(n, elems)


def compatible(building: BuildingSet, s: int, t: int) -> bool:
    """Whether {s, t} is a nested pair: nested, or disjoint with union absent."""
    if s & t:
        return s & t in (s, t)
    return (s | t) not in building.elements


@dataclass(frozen=True)
class NestedSet:
    building: BuildingSet
    elements: frozenset[int]

    def __post_init__(self):
        # canonical loaded form
        object.__setattr__(self, "elements", self.elements | self.building.b_max)

    @property
    def proper_elements(self) -> frozenset[int]:
        return self.elements - self.building.b_max

    def is_maximal(self) -> bool:
        return all(is_singleton(lab) for lab in spine_of(self).label.values())


def _disjoint_union_witness(building: BuildingSet, elems) -> list[int] | None:
    """A set of >= 2 pairwise disjoint members whose union is in B, or None."""
    elems = sorted(elems)

    def extend(chosen: list[int], used: int, start: int) -> list[int] | None:
        if len(chosen) >= 2 and used in building.elements:
            return chosen
        for i in range(start, len(elems)):
            b = elems[i]
            if b & used:
                continue
            got = extend(chosen + [b], used | b, i + 1)
            if got is not None:
                return got
        return None

    return extend([], 0, 0)


def validate_nested(building: BuildingSet, elements) -> NestedSet:
    """Check both nested set axioms, raising with a witness on failure."""
    elems = frozenset(elements) | building.b_max
    for b in elems:
        if b not in building.elements:
            raise NestedSetError(f"{members(b)} is not in the building set")
    for b, c in combinations(sorted(elems), 2):
        if not compatible(building, b, c):
            raise NestedSetError(
                f"members {members(b)} and {members(c)} are incompatible")
    witness = _disjoint_union_witness(building, elems - building.b_max)
    if witness is not None:
        raise NestedSetError(
            "pairwise disjoint members "
            + ", ".join(str(members(b)) for b in witness)
            + f" have their union {members(to_mask(v for b in witness for v in members(b)))} "
            "in the building set")
    return NestedSet(building, elems)


# ---------------------------------------------------------------------------
# spines


@dataclass
class Spine:
    """Hasse diagram of a loaded nested set ordered by inclusion.

    A forest: each root is an inclusion-maximal member of B.  The label
    of a node is the part of it not covered by its children; labels
    partition the ground set.
    """

    nodes: list[int]
    parent: dict[int, int | None]
    children: dict[int, list[int]]
    label: dict[int, int]
    roots: list[int]

    def ancestors(self, node: int) -> list[int]:
        out = []
        p = self.parent[node]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out


def spine_of(nested: NestedSet) -> Spine:
    return spine_of_elements(nested.elements)


def spine_of_elements(elems: frozenset[int]) -> Spine:
    """Build the spine directly from a loaded family of pairwise nested
    or disjoint masks."""
    nodes = sorted(elems, key=lambda b: (b.bit_count(), b))
    parent: dict[int, int | None] = {}
    children: dict[int, list[int]] = {b: [] for b in nodes}
    label: dict[int, int] = {}
    for b in nodes:
        best = None
        for c in nodes:
            if c != b and b & c == b:
                if best is None or c.bit_count() < best.bit_count():
                    best = c
        parent[b] = best
        if best is not None:
            children[best].append(b)
    for b in nodes:
        children[b].sort()
        covered = 0
        for c in children[b]:
            covered |= c
        label[b] = b & ~covered
    roots = sorted(b for b in nodes if parent[b] is None)
    return Spine(nodes, parent, children, label, roots)


def nested_of(building: BuildingSet, spine: Spine) -> NestedSet:
    return NestedSet(building, frozenset(spine.nodes))


def complete_maximal(nested: NestedSet) -> NestedSet:
    """A deterministic maximal nested set containing the given one.

    Greedily adds the smallest compatible member that splits some
    non-singleton label, until all labels are singletons.
    """
    building = nested.building
    elems = set(nested.elements)
    while True:
        spine = spine_of_elements(frozenset(elems))
        open_nodes = [b for b in spine.nodes if not is_singleton(spine.label[b])]
        if not open_nodes:
            return NestedSet(building, frozenset(elems))
        target = min(open_nodes, key=lambda b: (b.bit_count(), b))
        lab = spine.label[target]
        progressed = False
        for cand in sorted(building.elements, key=lambda b: (b.bit_count(), b)):
            if cand in elems or cand & ~target or not cand & lab:
                continue
            try:
                validate_nested(building, frozenset(elems) | {cand})
            except NestedSetError:
                continue
            elems.add(cand)
            progressed = True
            break
        if not progressed:
            raise NestedSetError(
                f"cannot refine label {members(lab)} of {members(target)}")


# ---------------------------------------------------------------------------
# serialization: proper form, sorted lists of sorted vertex lists


def nested_to_lists(nested: NestedSet) -> list[list[int]]:
    return sets_to_lists(nested.proper_elements)


def nested_to_json(nested: NestedSet) -> str:
    return json.dumps(nested_to_lists(nested))


def nested_from_lists(building: BuildingSet, lists) -> NestedSet:
    return validate_nested(building, [to_mask(part) for part in lists])
