"""Command line front end.

Subcommands cover enumeration (tubes, flipgraph, family), metric queries
(diameter, distance, geodesics), Hamiltonian cycle construction, a set
of verification suites, and a small timing experiment.  Graphs are read
from files in either the plain text format ('n <count>' plus one edge
per line) or JSON ({"n": ..., "edges": [[u, v], ...]}); tubings are
JSON lists of vertex lists in proper form.

Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import combinations

from .bits import sets_to_lists, to_mask
from .building import BuildingSet, NestedSet
from .faces import face_property, is_upper_ideal
from .flips import (FlipGraphIndex, build_flip_graph, diameter, distance,
                    geodesics, index_to_dot, index_to_json)
from .graphs import (Graph, InputError, build_graph, components, family,
                     graph_to_json, is_connected, load_graph, tubes)
from .hamiltonian import (HamiltonianError, count_max_tubings, hamiltonian,
                          verify_cycle)
from .projection import ProjectionContext, check_monotonicity, check_sigma


class VerificationFailure(Exception):
    """A checked property does not hold; the message is the witness."""


def _index_of(path: str) -> tuple[Graph, FlipGraphIndex]:
    g = load_graph(path)
    return g, build_flip_graph(BuildingSet.graphical(g))


def _load_tubing(path: str) -> frozenset[int]:
    with open(path) as fh:
        lists = json.load(fh)
    return frozenset(to_mask(part) for part in lists)


# ---------------------------------------------------------------------------
# plain subcommands


def cmd_tubes(args) -> int:
    g = load_graph(args.graph)
    for t in sorted(tubes(g), key=lambda m: (m.bit_count(), m)):
        print(json.dumps(sorted(v for v in range(g.n) if t >> v & 1)))
    return 0


def cmd_flipgraph(args) -> int:
    _, idx = _index_of(args.graph)
    if args.dot:
        print(index_to_dot(idx))
    elif args.json:
        print(index_to_json(idx))
    else:
        edges = sum(len(a) for a in idx.adj) // 2
        print(f"vertices {len(idx)}")
        print(f"edges {edges}")
    return 0


def cmd_diameter(args) -> int:
    _, idx = _index_of(args.graph)
    print(diameter(idx))
    return 0


def cmd_distance(args) -> int:
    _, idx = _index_of(args.graph)
    a = idx.id_of(_load_tubing(args.src))
    b = idx.id_of(_load_tubing(args.dst))
    print(distance(idx, a, b))
    return 0


def cmd_geodesics(args) -> int:
    _, idx = _index_of(args.graph)
    a = idx.id_of(_load_tubing(args.src))
    b = idx.id_of(_load_tubing(args.dst))
    res = geodesics(idx, a, b, args.limit)
    proper = [sets_to_lists(T - idx.building.b_max) for T in idx.vertices]
    print(json.dumps({
        "count": len(res.paths),
        "truncated": res.truncated,
        "paths": [[proper[v] for v in p] for p in res.paths],
    }))
    return 0


def cmd_hamiltonian(args) -> int:
    g = load_graph(args.graph)
    f = f2 = None
    if args.force:
        f, f2 = (_load_tubing(p) for p in args.force)
    cycle = hamiltonian(g, f, f2)
    if args.verify:
        required = [r for r in (f, f2) if r is not None]
        verify_cycle(g, cycle, required)
    comp_masks = frozenset(components(g))
    for T in cycle:
        print(json.dumps(sets_to_lists(T - comp_masks)))
    return 0


def cmd_family(args) -> int:
    if args.kind == "tk":
        if args.k is None:
            raise InputError("family tk needs --k")
        g = family("tk", args.k)
    else:
        if args.n is None:
            raise InputError(f"family {args.kind} needs --n")
        g = family(args.kind, args.n - 1 if args.kind == "star" else args.n)
    print(graph_to_json(g))
    return 0


def cmd_experiment(args) -> int:
    if args.name != "tk-diameter":
        raise InputError(f"unknown experiment {args.name!r}")
    rows = ["k,n_vertices,flip_vertices,diameter,seconds"]
    for k in range(1, args.max_k + 1):
        g = family("tk", k)
        t0 = time.perf_counter()
        idx = build_flip_graph(BuildingSet.graphical(g))
        d = diameter(idx)
        rows.append(f"{k},{g.n},{len(idx)},{d},{time.perf_counter() - t0:.3f}")
    text = "\n".join(rows) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _connected_graphs(n: int):
    all_edges = list(combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(all_edges)):
        edges = [all_edges[i] for i in range(len(all_edges)) if bits >> i & 1]
        g = build_graph(n, edges)
        if not is_connected(g, g.full_mask):
            continue
        cert = min(
            tuple(sorted(tuple(sorted((p[u], p[v])))
                         for u, v in edges))
            for p in _perms(n))
        if cert in seen:
            continue
        seen.add(cert)
        yield g


def _perms(n: int):
    from itertools import permutations
    return permutations(range(n))


def _bounds_one(g: Graph) -> None:
    idx = build_flip_graph(BuildingSet.graphical(g))
    d = diameter(idx)
    lo = max(len(g.edges), 2 * g.n - 18)
    hi = g.n * (g.n + 1) // 2
    if not lo <= d <= hi:
        raise VerificationFailure(
            f"diameter {d} outside [{lo}, {hi}] for {graph_to_json(g)}")


def verify_bounds(args) -> int:
    if args.graph:
        _bounds_one(load_graph(args.graph))
        count = 1
    elif args.max_n:
        count = 0
        for n in range(2, args.max_n + 1):
            for g in _connected_graphs(n):
                _bounds_one(g)
                count += 1
    else:
        raise InputError("verify bounds needs a graph file or --max-n")
    print(f"bounds hold ({count} graphs)")
    return 0


def verify_monotone(args) -> int:
    g = load_graph(args.graph)
    for u, v in sorted(g.edges):
        gbar = build_graph(g.n, g.edges - {(u, v)})
        report = check_monotonicity(g, gbar)
        if not report.ok:
            raise VerificationFailure(
                f"deleting {(u, v)} raises the diameter "
                f"{report.diameter_fine} -> {report.diameter_coarse}")
    print(f"monotone under all {len(g.edges)} edge deletions")
    return 0


def verify_sigma(args) -> int:
    g = load_graph(args.graph)
    for u, v in sorted(g.edges):
        report = check_sigma(ProjectionContext.edge_deletion(g, (u, v)))
        if not report.ok:
            raise VerificationFailure(
                f"projection fails for deleted edge {(u, v)}: {report.witness}")
    print(f"projection checks pass for all {len(g.edges)} edge deletions")
    return 0


def _all_faces(idx: FlipGraphIndex):
    seen = set()
    for T in idx.vertices:
        proper = sorted(T - idx.building.b_max)
        for r in range(len(proper) + 1):
            for sub in combinations(proper, r):
                face = frozenset(sub) | idx.building.b_max
                if face not in seen:
                    seen.add(face)
                    yield NestedSet(idx.building, face)


def verify_snlfp(args) -> int:
    _, idx = _index_of(args.graph)
    checked = 0
    for face in _all_faces(idx):
        if not is_upper_ideal(face):
            continue
        holds, witness = face_property(idx, face, "snlfp")
        if not holds:
            raise VerificationFailure(
                f"face {sets_to_lists(face.elements)} misses the strong "
                f"property at vertices {witness}")
        checked += 1
    print(f"strong no-leaving-facet property holds ({checked} faces)")
    return 0


def verify_regular(args) -> int:
    g, idx = _index_of(args.graph)
    expected = g.n - len(components(g))
    for i, nbrs in enumerate(idx.adj):
        if len(nbrs) != expected:
            raise VerificationFailure(
                f"vertex {i} has degree {len(nbrs)}, expected {expected}")
    print(f"flip graph is {expected}-regular ({len(idx)} vertices)")
    return 0


VERIFIERS = {
    "bounds": verify_bounds,
    "monotone": verify_monotone,
    "snlfp": verify_snlfp,
    "sigma": verify_sigma,
    "regular": verify_regular,
}


def cmd_verify(args) -> int:
    return VERIFIERS[args.check](args)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tubings",
        description="flip graphs of graph associahedra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tubes", help="list the tubes of a graph")
    p.add_argument("graph")
    p.set_defaults(run=cmd_tubes)

    p = sub.add_parser("flipgraph", help="build the flip graph")
    p.add_argument("graph")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_flipgraph)

    p = sub.add_parser("diameter", help="flip graph diameter")
    p.add_argument("graph")
    p.set_defaults(run=cmd_diameter)

    p = sub.add_parser("distance", help="flip distance between two tubings")
    p.add_argument("graph")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.set_defaults(run=cmd_distance)

    p = sub.add_parser("geodesics", help="all shortest flip sequences")
    p.add_argument("graph")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--limit", type=int, default=10 ** 6)
    p.set_defaults(run=cmd_geodesics)

    p = sub.add_parser("hamiltonian", help="Hamiltonian cycle of the flip graph")
    p.add_argument("graph")
    p.add_argument("--force", nargs=2, metavar=("F", "G"),
                   help="two ridge files the cycle must use")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(run=cmd_hamiltonian)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("check", choices=sorted(VERIFIERS))
    p.add_argument("graph", nargs="?")
    p.add_argument("--max-n", type=int)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("family", help="print a named graph as JSON")
    p.add_argument("kind", choices=["path", "cycle", "complete", "star", "tk"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(run=cmd_family)

    p = sub.add_parser("experiment", help="timing experiments, CSV output")
    p.add_argument("name")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(run=cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except HamiltonianError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InputError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
