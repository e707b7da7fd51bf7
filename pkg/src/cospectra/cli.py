"""Command-line interface.

Conventions:
* graph-producing commands print the edge list to stdout (pipeable into
  ``verify -``) and a short human summary to stderr; files are written only
  when ``--out``/``--provenance``/``--dot`` are given;
* ``--json`` switches stdout to a single JSON document;
* exit status 0 means the checked property holds, 1 means it does not,
  2 means the input was unusable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .construct import (
    A_KIND,
    AttachmentEdge,
    ConstructedGraph,
    CrossEdge,
    L_KIND,
    build_a_cospectral,
    build_l_cospectral,
    connect_orbits,
    random_instance,
)
from .fixtures import FIXTURE_NAMES, fixture_catalog, load_fixture
from .graph import CospectraError, Graph, format_edge_list, parse_edge_list, to_dot
from .orbits import automorphism_orbits
from .spectral import (
    STRONG,
    STRONG_CERTIFIED,
    Tolerances,
    attach_pendant_reduce,
    check_strong_cospectrality,
    eigendecompose_symmetric,
    strong_via_simplicity,
)
from .graph import adjacency_matrix
from .verify import verify_a_cospectral, verify_l_cospectral, verify_pair_full

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INPUT = 2


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    return parse_edge_list(Path(path).read_text())


def _read_json_arg(value: str):
    """A JSON literal (starts with '[' or '{') or a path to a JSON file."""
    text = value
    if not value.lstrip().startswith(("[", "{")):
        text = Path(value).read_text()
    return json.loads(text)


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'u,v', got {text!r}")
    return int(parts[0]), int(parts[1])


def _emit_graph(
    args, graph: Graph, summary: str, provenance: dict | None, pair=None, blocks=None
) -> None:
    text = format_edge_list(graph)
    if args.out:
        Path(args.out).write_text(text)
    if getattr(args, "provenance_out", None):
        if provenance is None:
            raise CospectraError("this graph has no construction provenance")
        Path(args.provenance_out).write_text(json.dumps(provenance, indent=2) + "\n")
    if args.dot:
        Path(args.dot).write_text(
            to_dot(graph, highlight=pair or (), blocks=blocks)
        )
    if args.json:
        doc: dict = {"edge_list": text}
        if pair is not None:
            doc["pair"] = list(pair)
        if provenance is not None:
            doc["provenance"] = provenance
        print(json.dumps(doc, indent=2))
    elif not args.out:
        sys.stdout.write(text)
    print(summary, file=sys.stderr)


def _constructed_from(args) -> ConstructedGraph:
    graph = _read_graph(args.graph)
    doc = _read_json_arg(args.provenance)
    return constructed_from_json(graph, doc)


def constructed_from_json(graph: Graph, doc: dict) -> ConstructedGraph:
    """Rebuild a ConstructedGraph from an edge list plus its provenance JSON."""
    from .orbits import OrbitPartition

    try:
        kind = doc["kind"]
        pair = tuple(doc["pair"])
        g1 = tuple(doc["g1_map"])
        g2 = tuple(doc["g2_map"])
        h = tuple(doc.get("h_map", []))
        orbits_doc = doc["orbits"]
        cross = bool(doc.get("cross_connected", False))
    except (KeyError, TypeError) as exc:
        raise CospectraError(f"provenance document is missing field {exc}") from None
    if kind not in (A_KIND, L_KIND):
        raise CospectraError(f"provenance kind must be {A_KIND!r} or {L_KIND!r}")
    ids = sorted((*g1, *g2, *h))
    if ids != list(range(graph.n)):
        raise CospectraError("provenance maps do not partition the vertex ids")
    if len(g1) != len(g2):
        raise CospectraError("copy maps have different lengths")
    orbits = tuple(tuple(o) for o in orbits_doc["orbits"])
    fixed = orbits_doc["fixed"]
    covered = sorted(v for o in orbits for v in o)
    if covered != list(range(len(g1))):
        raise CospectraError("provenance orbits do not partition the base vertices")
    orbit_of = [0] * len(g1)
    for idx, orbit in enumerate(orbits):
        for v in orbit:
            orbit_of[v] = idx
    partition = OrbitPartition(fixed=fixed, orbits=orbits, orbit_of=tuple(orbit_of))
    if fixed is None:
        raise CospectraError("provenance must name the distinguished base vertex")
    if pair != (g1[fixed], g2[fixed]):
        raise CospectraError("provenance pair does not match the distinguished vertex")
    return ConstructedGraph(
        graph=graph,
        kind=kind,
        g1_map=g1,
        g2_map=g2,
        h_map=h,
        pair=(pair[0], pair[1]),
        orbit_partition=partition,
        cross_connected=cross,
    )


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_construct(args) -> int:
    g = _read_graph(args.g)
    if args.which == "a":
        h = _read_graph(args.h)
        raw = _read_json_arg(args.attach)
        attachments = [AttachmentEdge(int(s), int(gv), int(hv)) for s, gv, hv in raw]
        cg = build_a_cospectral(g, args.fixed, h, attachments)
    else:
        raw = _read_json_arg(args.cross)
        cross = [CrossEdge(int(a), int(b)) for a, b in raw]
        cg = build_l_cospectral(g, args.fixed, cross)
    _emit_graph(
        args,
        cg.graph,
        f"built {cg.kind}-construction on {cg.graph.n} vertices; "
        f"certified pair {cg.pair}",
        cg.to_json(),
        pair=cg.pair,
        blocks=cg.dot_blocks(),
    )
    return EXIT_HOLDS


def _cmd_modify(args) -> int:
    cg = _constructed_from(args)
    if args.bijection is not None:
        pairs = [(int(a), int(b)) for a, b in _read_json_arg(args.bijection)]
    else:
        import random as _random

        orbit = cg.orbit_partition.orbits[args.orbit]
        side1 = [cg.g1_map[b] for b in orbit]
        side2 = [cg.g2_map[b] for b in orbit]
        _random.Random(args.seed).shuffle(side2)
        pairs = list(zip(side1, side2))
    out = connect_orbits(cg, args.orbit, pairs)
    _emit_graph(
        args,
        out.graph,
        f"cross-connected orbit {args.orbit} with {len(pairs)} edges; "
        f"pair {out.pair} preserved",
        out.to_json(),
        pair=out.pair,
        blocks=out.dot_blocks(),
    )
    return EXIT_HOLDS


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    u, v = _parse_pair(args.pair)
    tol = args.tol
    if args.matrix == "both":
        full = verify_pair_full(g, u, v, tol)
        holds = full.adjacency.cospectral and full.laplacian.cospectral
        if args.strong:
            holds = holds and full.strong.verdict == STRONG
        doc = full.to_json()
        lines = [
            f"adjacency cospectral: {full.adjacency.cospectral}",
            f"laplacian cospectral: {full.laplacian.cospectral}",
            f"strong cospectrality: {full.strong.verdict}",
        ]
    else:
        checker = verify_a_cospectral if args.matrix == "a" else verify_l_cospectral
        report = checker(g, u, v, tol)
        holds = report.cospectral
        doc = report.to_json()
        lines = [
            f"{report.matrix_kind} cospectral: {report.cospectral}",
            f"krylov orthogonal: {report.krylov_orthogonal}",
            f"projector diagonals equal (tol {tol:g}): {report.projection_equal}",
        ]
        if report.matrix_kind == "adjacency":
            lines.insert(1, f"deleted-vertex char polys equal: {report.char_polys_equal}")
            lines.insert(2, f"power diagonals equal: {report.power_diagonal_equal}")
        if report.note:
            lines.append(f"note: {report.note}")
        if args.strong:
            strong = check_strong_cospectrality(g, u, v, tol)
            holds = holds and strong.verdict == STRONG
            doc["strong"] = strong.to_json()
            lines.append(f"strong cospectrality: {strong.verdict}")
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_HOLDS if holds else EXIT_FAILS


def _cmd_orbits(args) -> int:
    g = _read_graph(args.graph)
    partition = automorphism_orbits(g, args.fixed)
    if args.json:
        print(json.dumps(partition.to_json(), indent=2))
    else:
        for orbit in partition.orbits:
            print(" ".join(str(v) for v in orbit))
    return EXIT_HOLDS


def _cmd_induced(args) -> int:
    cg = _constructed_from(args)
    verdict = strong_via_simplicity(cg, args.tol)
    if args.json:
        print(json.dumps(verdict.to_json(), indent=2))
    else:
        for p in verdict.induced:
            flag = "simple" if p.simple_in_big else f"multiplicity {p.multiplicity_in_big}"
            print(
                f"eigenvalue {p.eigenvalue!r}  coefficient {p.base_coefficient:.6f}  {flag}"
            )
        print(f"verdict: {verdict.verdict}")
        print(f"direct check: {verdict.direct.verdict}")
    return EXIT_HOLDS if verdict.verdict == STRONG_CERTIFIED else EXIT_FAILS


def _cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    dec = eigendecompose_symmetric(adjacency_matrix(g))
    cluster = dec.cluster_nearest(args.eigenvalue)
    if abs(cluster.value - args.eigenvalue) > 1e-6 * max(1.0, abs(args.eigenvalue)):
        raise CospectraError(
            f"no adjacency eigenvalue near {args.eigenvalue}; closest is {cluster.value!r}"
        )
    if cluster.multiplicity < 2:
        raise CospectraError(
            f"eigenvalue {cluster.value!r} is simple; nothing to reduce"
        )
    grown, report = attach_pendant_reduce(g, cluster)
    if args.json:
        print(
            json.dumps(
                {"edge_list": format_edge_list(grown), "report": report.to_json()},
                indent=2,
            )
        )
    else:
        if args.out:
            Path(args.out).write_text(format_edge_list(grown))
        else:
            sys.stdout.write(format_edge_list(grown))
        print(
            f"attached pendant at vertex {report.attach_vertex}; multiplicity of "
            f"{report.eigenvalue:.6f}: {report.old_multiplicity} -> {report.new_multiplicity}"
            f" (certified: {report.certified}; strict interlacing: {report.strict_interlacing})",
            file=sys.stderr,
        )
    return EXIT_HOLDS if report.certified else EXIT_FAILS


def _cmd_example(args) -> int:
    if args.list or args.name is None:
        for name in FIXTURE_NAMES:
            print(f"{name}: {fixture_catalog()[name]}")
        return EXIT_HOLDS
    fx = load_fixture(args.name)
    blocks = fx.constructed.dot_blocks() if fx.constructed else None
    _emit_graph(
        args,
        fx.graph,
        f"{fx.name}: {fx.description}",
        fx.constructed.to_json() if fx.constructed else None,
        pair=fx.pair,
        blocks=blocks,
    )
    return EXIT_HOLDS


def _cmd_random(args) -> int:
    kind = A_KIND if args.kind == "a" else L_KIND
    cg = random_instance(
        args.seed, max_g=args.max_g, max_h=args.max_h, density=args.density, kind=kind
    )
    _emit_graph(
        args,
        cg.graph,
        f"seed {args.seed}: {cg.kind}-construction on {cg.graph.n} vertices; "
        f"certified pair {cg.pair}",
        cg.to_json(),
        pair=cg.pair,
        blocks=cg.dot_blocks(),
    )
    return EXIT_HOLDS


# ---------------------------------------------------------------------------


def _add_output_flags(
    p: argparse.ArgumentParser, provenance_flag: str = "--provenance"
) -> None:
    p.add_argument("--out", help="write the edge list to this file")
    p.add_argument(
        provenance_flag,
        dest="provenance_out",
        help="write the construction provenance JSON to this file",
    )
    p.add_argument("--dot", help="write a DOT rendering to this file")
    p.add_argument("--json", action="store_true", help="print a JSON document instead")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cospectra",
        description="Construct and verify graphs with certified cospectral vertex pairs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build a certified construction")
    pcs = pc.add_subparsers(dest="which", required=True)
    pa = pcs.add_parser("a", help="adjacency construction: two copies of G glued to H")
    pa.add_argument("--g", required=True, help="base graph file ('-' for stdin)")
    pa.add_argument("--fixed", type=int, required=True, help="distinguished vertex of G")
    pa.add_argument("--h", required=True, help="glue graph file")
    pa.add_argument(
        "--attach",
        required=True,
        help="attachments as JSON [[side, g_vertex, h_vertex], ...] (literal or file)",
    )
    pa.set_defaults(func=_cmd_construct)
    _add_output_flags(pa)
    pl = pcs.add_parser("l", help="laplacian construction: two copies of G cross-joined")
    pl.add_argument("--g", required=True, help="base graph file ('-' for stdin)")
    pl.add_argument("--fixed", type=int, required=True, help="distinguished vertex of G")
    pl.add_argument(
        "--cross",
        required=True,
        help="cross edges as JSON [[g1_vertex, g2_vertex], ...] (literal or file)",
    )
    pl.set_defaults(func=_cmd_construct)
    _add_output_flags(pl)

    pm = sub.add_parser("modify", help="modify an existing construction")
    pms = pm.add_subparsers(dest="which", required=True)
    pco = pms.add_parser(
        "connect-orbits", help="join the two copies of one orbit by a perfect matching"
    )
    pco.add_argument("graph", help="constructed graph file ('-' for stdin)")
    pco.add_argument(
        "--provenance", required=True, help="provenance JSON (literal or file)"
    )
    pco.add_argument("--orbit", type=int, required=True, help="orbit index")
    pco.add_argument(
        "--bijection", help="matching as JSON [[copy1_id, copy2_id], ...] (literal or file)"
    )
    pco.add_argument(
        "--seed", type=int, default=0, help="seed for a random matching when --bijection is absent"
    )
    pco.set_defaults(func=_cmd_modify)
    _add_output_flags(pco, provenance_flag="--provenance-out")

    pv = sub.add_parser("verify", help="verify cospectrality of a vertex pair")
    pv.add_argument("graph", help="graph file ('-' for stdin)")
    pv.add_argument("--pair", required=True, help="vertex pair 'u,v'")
    pv.add_argument(
        "--matrix", choices=("a", "l", "both"), default="a", help="which matrix to test"
    )
    pv.add_argument("--strong", action="store_true", help="also require strong cospectrality")
    pv.add_argument("--tol", type=float, default=1e-8, help="numeric comparison tolerance")
    pv.add_argument("--json", action="store_true", help="print the report as JSON")
    pv.set_defaults(func=_cmd_verify)

    po = sub.add_parser("orbits", help="orbits of automorphisms fixing a vertex")
    po.add_argument("graph", help="graph file ('-' for stdin)")
    po.add_argument(
        "--fixed", type=int, default=None, help="distinguished vertex (omit for the full group)"
    )
    po.add_argument("--json", action="store_true")
    po.set_defaults(func=_cmd_orbits)

    pi = sub.add_parser(
        "induced", help="induced eigenvalues and the simplicity certificate"
    )
    pi.add_argument("graph", help="constructed graph file ('-' for stdin)")
    pi.add_argument("--provenance", required=True, help="provenance JSON (literal or file)")
    pi.add_argument("--tol", type=float, default=1e-8)
    pi.add_argument("--json", action="store_true")
    pi.set_defaults(func=_cmd_induced)

    pr = sub.add_parser(
        "reduce-multiplicity", help="attach a pendant to split off one eigenvalue copy"
    )
    pr.add_argument("graph", help="graph file ('-' for stdin)")
    pr.add_argument("--eigenvalue", type=float, required=True, help="repeated eigenvalue")
    pr.add_argument("--out", help="write the grown graph to this file")
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=_cmd_reduce)

    pe = sub.add_parser("example", help="emit a bundled example graph")
    pe.add_argument("name", nargs="?", choices=FIXTURE_NAMES, help="fixture name")
    pe.add_argument("--list", action="store_true", help="list available fixtures")
    pe.set_defaults(func=_cmd_example)
    _add_output_flags(pe)

    pg = sub.add_parser("random", help="seeded random certified construction")
    pg.add_argument("--seed", type=int, required=True)
    pg.add_argument("--kind", choices=("a", "l"), default="a")
    pg.add_argument("--max-g", type=int, default=6, help="max base graph size")
    pg.add_argument("--max-h", type=int, default=4, help="max glue graph size")
    pg.add_argument("--density", type=float, default=0.5, help="attachment density in [0,1]")
    pg.set_defaults(func=_cmd_random)
    _add_output_flags(pg)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CospectraError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
