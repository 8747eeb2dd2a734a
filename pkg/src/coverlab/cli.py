"""Command line front end.

Every command prints a JSON report on stdout (``--text`` for a plain
rendering).  Exit status: 0 for an affirmative answer, 1 for a negative
one (not equivalent, unsolvable, not a covering, ...), 2 for bad usage or
bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Tuple

from . import cover, finite_cover, spectra, unfold
from .fileformat import (
    DocumentError,
    GraphDocument,
    dumps,
    graph_to_json,
    load_graph,
    load_hom,
)
from .graphs import CoverlabError, GraphHom
from .treecanon import render_lines
from .weights import OMEGA

Result = Tuple[dict, int]


class UsageError(CoverlabError):
    pass


# -- report helpers ---------------------------------------------------------

def _hom(h: GraphHom) -> dict:
    return {
        "vertexMap": sorted([k, v] for k, v in h.vertex_map.items()),
        "edgeMap": sorted([k, v] for k, v in h.edge_map.items()),
    }


def _blocks(part) -> List[List[str]]:
    return [list(b) for b in part.blocks]


def _matrix(M) -> list:
    return [["omega" if w is OMEGA else w for w in row] for row in M]


def _poly(p: spectra.IntPolynomial) -> dict:
    return {"text": str(p), "coefficients": list(p.coeffs)}


def _graph_arg(path: str, want: str) -> GraphDocument:
    doc = load_graph(path)
    if want == "digraph" and doc.kind != "digraph":
        raise UsageError(f"{path}: expected a digraph document")
    if want == "graph" and doc.kind == "digraph":
        raise UsageError(f"{path}: expected a graph or multigraph document")
    return doc


def _vertex(g, v: Optional[str], what="vertex") -> Optional[str]:
    if v is not None and v not in g.vertices:
        raise UsageError(f"unknown {what} {v!r}")
    return v


def _depth(args, g) -> int:
    if args.depth is None:
        return max(len(g.vertices) - 1, 0)
    if args.depth < 0:
        raise UsageError("depth must be >= 0")
    return args.depth


def _tree_report(t) -> dict:
    n = t.node_count()
    return {"tree": render_lines(t), "nodes": "omega" if n is OMEGA else n}


# -- commands ---------------------------------------------------------------

def cmd_unfold(args) -> Result:
    D = _graph_arg(args.file, "digraph").graph
    root = _vertex(D, args.root) or D.root
    if root is None:
        raise UsageError("digraph has no root; pass --root")
    depth = _depth(args, D)
    rep = {"root": root, "depth": depth}
    rep.update(_tree_report(unfold.unfold_truncate(D, depth, root=root)))
    return rep, 0


def cmd_unf_equiv(args) -> Result:
    G = _graph_arg(args.file, "digraph").graph
    _vertex(G, args.x)
    if args.against:
        H = _graph_arg(args.against, "digraph").graph
        _vertex(H, args.y)
        same = unfold.unf_equivalent_across(G, args.x, H, args.y)
        rep = {"x": args.x, "y": args.y, "equivalent": same}
    else:
        _vertex(G, args.y)
        trace = unfold.refine(G.with_root(None))
        same = trace.final.same(args.x, args.y)
        rep = {
            "x": args.x,
            "y": args.y,
            "equivalent": same,
            "classes": _blocks(trace.final),
            "fixpointIndex": trace.fixpoint_index,
        }
    return rep, 0 if same else 1


def cmd_quotient(args) -> Result:
    D = _graph_arg(args.file, "digraph").graph
    if args.root:
        D = D.with_root(_vertex(D, args.root))
    Q, h = unfold.canonical_quotient(D)
    return {
        "quotient": graph_to_json(Q),
        "hom": _hom(h),
        "classes": _blocks(unfold.refine(D).final),
        "isUnfolding": unfold.is_unfolding(h, D, Q),
    }, 0


def cmd_common_unfolding(args) -> Result:
    G = _graph_arg(args.g, "digraph").graph
    H = _graph_arg(args.h, "digraph").graph
    res = unfold.common_unfolding(G, H)
    if res is None:
        return {"exists": False}, 1
    return {
        "exists": True,
        "digraph": graph_to_json(res.digraph),
        "toG": _hom(res.to_g),
        "toH": _hom(res.to_h),
        "vertices": len(res.digraph.vertices),
    }, 0


def cmd_uc(args) -> Result:
    H = _graph_arg(args.file, "graph").graph
    _vertex(H, args.vertex)
    depth = _depth(args, H)
    rep = {"root": args.vertex, "depth": depth}
    rep.update(_tree_report(cover.uc_truncate(H, args.vertex, depth)))
    return rep, 0


def cmd_cover_check(args) -> Result:
    G = _graph_arg(args.g, "graph").graph
    H = _graph_arg(args.h, "graph").graph
    h = load_hom(args.hom)
    ok = cover.is_covering(h, G, H)
    rep = {"covering": ok}
    if set(h.vertex_map) == set(G.vertices) and set(h.vertex_map.values()) == set(H.vertices):
        idx = {v: i for i, v in enumerate(H.vertices)}
        vmap = [idx[h.vertex_map[v]] for v in G.vertices]
        rep["matrixCheck"] = spectra.matrix_cover_check(
            spectra.weight_matrix(G), spectra.weight_matrix(H), vmap
        )
    return rep, 0 if ok else 1


def cmd_minimize(args) -> Result:
    H = _graph_arg(args.file, "graph").graph
    B, h = cover.minimize(H)
    return {
        "base": graph_to_json(B, "graph"),
        "hom": _hom(h),
        "classes": _blocks(cover.covering_equivalence(H)),
        "matrix": _matrix(spectra.weight_matrix(B)),
    }, 0


def cmd_same_uc(args) -> Result:
    G = _graph_arg(args.g, "graph").graph
    H = _graph_arg(args.h, "graph").graph
    same = cover.same_universal_cover(G, H)
    return {
        "sameUniversalCover": same,
        "baseG": graph_to_json(cover.minimize(G)[0], "graph"),
        "baseH": graph_to_json(cover.minimize(H)[0], "graph"),
    }, 0 if same else 1


def cmd_norris(args) -> Result:
    doc = load_graph(args.file)
    g = doc.graph
    _vertex(g, args.x)
    _vertex(g, args.y)
    if doc.kind == "digraph":
        r = unfold.norris_crosscheck(g, args.x, args.y)
    else:
        r = cover.norris_uc_crosscheck(g, args.x, args.y)
    rep = {
        "truncEqual": r.trunc_equal,
        "refineEqual": r.refine_equal,
        "depthUsed": r.depth_used,
        "agree": r.agree,
    }
    return rep, 0 if (r.agree and r.refine_equal) else 1


def cmd_degree_matrix(args) -> Result:
    G = _graph_arg(args.file, "graph").graph
    d = cover.degree_partition(G)
    return {
        "classes": _blocks(d.partition),
        "matrix": d.matrix,
        "base": graph_to_json(d.base, "graph"),
        "hom": _hom(d.hom),
    }, 0


def _parse_mult(text: str) -> List[int]:
    try:
        vals = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError("--mult expects comma-separated positive integers") from None
    return vals


def cmd_finite_cover(args) -> Result:
    H = _graph_arg(args.file, "graph").graph
    if args.mult:
        mult = _parse_mult(args.mult)
        if len(mult) != len(H.vertices):
            raise UsageError("--mult needs one value per vertex")
        mult_map = dict(zip(H.vertices, mult))
        ok = finite_cover.satisfies_balance(H, mult_map)
        rep = {"solvable": ok, "multiplicities": mult_map}
        if not ok:
            return rep, 1
    else:
        res = finite_cover.finite_cover_solve(H)
        if not res.solvable:
            return {
                "solvable": False,
                "failureCycle": res.failure_cycle,
                "failureRatio": str(res.failure_ratio),
            }, 1
        mult_map = res.multiplicities
        rep = {"solvable": True, "multiplicities": mult_map}
    if args.build or args.loop_free:
        G, h = finite_cover.build_finite_cover(H, mult_map, loop_free=args.loop_free)
        rep["cover"] = graph_to_json(G)
        rep["hom"] = _hom(h)
        rep["isCovering"] = cover.is_covering(h, G, H)
    return rep, 0


def cmd_common_cover(args) -> Result:
    G = _graph_arg(args.g, "graph").graph
    H = _graph_arg(args.h, "graph").graph
    M = _graph_arg(args.m, "graph").graph
    a, b = load_hom(args.a), load_hom(args.b)
    pb = finite_cover.common_cover_pullback(G, H, M, a, b)
    return {
        "cover": graph_to_json(pb.graph),
        "toG": _hom(pb.to_g),
        "toH": _hom(pb.to_h),
        "components": [list(c) for c in pb.components],
        "vertices": len(pb.graph.vertices),
    }, 0


def cmd_kronecker(args) -> Result:
    H = _graph_arg(args.file, "graph").graph
    K, h = cover.kronecker_k2(H)
    kind = "graph" if not H.is_unweighted or H.is_simple else None
    return {"product": graph_to_json(K, kind), "hom": _hom(h)}, 0


def _matrix_input(args):
    if args.matrix is not None:
        if args.file is not None:
            raise UsageError("give either a graph file or --matrix, not both")
        try:
            M = json.loads(args.matrix)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--matrix: {exc.msg}") from None
        if not isinstance(M, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in M
        ):
            raise UsageError("--matrix expects a JSON list of integer rows")
        return M
    if args.file is None:
        raise UsageError("a graph file or --matrix is required")
    return spectra.weight_matrix(_graph_arg(args.file, "graph").graph)


def cmd_charpoly(args) -> Result:
    M = _matrix_input(args)
    return {"matrix": _matrix(M), "charpoly": _poly(spectra.charpoly(M))}, 0


def cmd_charpoly_divides(args) -> Result:
    G = _graph_arg(args.g, "graph").graph
    H = _graph_arg(args.h, "graph").graph
    MG, MH = spectra.weight_matrix(G), spectra.weight_matrix(H)
    pg, ph = spectra.charpoly(MG), spectra.charpoly(MH)
    ok = spectra.poly_divides(ph, pg)
    rep = {"charpolyG": _poly(pg), "charpolyH": _poly(ph), "divides": ok}
    if ok:
        rep["quotient"] = _poly(spectra.poly_divmod(pg, ph)[0])
    if args.hom:
        h = load_hom(args.hom)
        idx = {v: i for i, v in enumerate(H.vertices)}
        try:
            vmap = [idx[h.vertex_map[v]] for v in G.vertices]
        except KeyError:
            raise UsageError("homomorphism must map every vertex of G into H") from None
        bf = spectra.block_triangularize(MG, MH, vmap)
        rep["blockForm"] = {
            "order": [G.vertices[i] for i in bf.order],
            "S": [[str(c) for c in row] for row in bf.S],
            "detS": _poly(bf.det_s),
            "check": bf.check,
        }
    return rep, 0 if ok else 1


def cmd_election(args) -> Result:
    N = _graph_arg(args.file, "graph").graph
    v = cover.election_check(N)
    return {"solvable": v.solvable, "ambiguousClasses": [list(b) for b in v.ambiguous_classes]}, 0 if v.solvable else 1


def cmd_validate(args) -> Result:
    try:
        doc = load_graph(args.file)
    except DocumentError as exc:
        return {"valid": False, "errors": exc.errors}, 1
    return {"valid": True, "kind": doc.kind, "vertices": len(doc.graph.vertices)}, 0


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--text", action="store_true", help="human-readable output instead of JSON")

    p = argparse.ArgumentParser(prog="coverlab", description="Unfoldings, coverings and universal covers of weighted graphs.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("unfold", cmd_unfold, "truncated complete unfolding of a rooted digraph")
    sp.add_argument("file")
    sp.add_argument("--root")
    sp.add_argument("--depth", type=int)

    sp = add("unf-equiv", cmd_unf_equiv, "do two vertices have isomorphic complete unfoldings")
    sp.add_argument("file")
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("--against", metavar="FILE", help="look up y in this second digraph")

    sp = add("quotient-digraph", cmd_quotient, "canonical minimal quotient of a rooted digraph")
    sp.add_argument("file")
    sp.add_argument("--root")

    sp = add("common-unfolding", cmd_common_unfolding, "finite common unfolding of two rooted digraphs")
    sp.add_argument("g")
    sp.add_argument("h")

    sp = add("uc", cmd_uc, "truncated universal cover of a weighted graph")
    sp.add_argument("file")
    sp.add_argument("vertex")
    sp.add_argument("--depth", type=int)

    sp = add("cover-check", cmd_cover_check, "is a homomorphism a covering")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("hom")

    sp = add("minimize", cmd_minimize, "minimal weighted base with the same universal cover")
    sp.add_argument("file")

    sp = add("same-uc", cmd_same_uc, "do two graphs have isomorphic universal covers")
    sp.add_argument("g")
    sp.add_argument("h")

    sp = add("norris", cmd_norris, "compare depth |V|-1 truncations with the refinement verdict")
    sp.add_argument("file")
    sp.add_argument("x")
    sp.add_argument("y")

    sp = add("degree-matrix", cmd_degree_matrix, "degree refinement partition and matrix")
    sp.add_argument("file")

    sp = add("finite-cover", cmd_finite_cover, "finite unweighted cover existence and construction")
    sp.add_argument("file")
    sp.add_argument("--mult", help="comma-separated fibre sizes in vertex id order")
    sp.add_argument("--build", action="store_true", help="also construct the cover")
    sp.add_argument("--loop-free", action="store_true", help="construct a loop-free cover (implies --build)")

    sp = add("common-cover", cmd_common_cover, "common cover of two coverings of the same multigraph")
    for name in ("g", "h", "m", "a", "b"):
        sp.add_argument(name)

    sp = add("kronecker", cmd_kronecker, "product with an edge (bipartite double)")
    sp.add_argument("file")

    sp = add("charpoly", cmd_charpoly, "characteristic polynomial det(M - xI)")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--matrix", help="JSON integer matrix instead of a graph file")

    sp = add("charpoly-divides", cmd_charpoly_divides, "does the polynomial of H divide that of G")
    sp.add_argument("g")
    sp.add_argument("h")
    sp.add_argument("--hom", help="covering G -> H; adds the block-triangular form")

    sp = add("election", cmd_election, "leader election feasibility in an anonymous network")
    sp.add_argument("file")

    sp = add("validate", cmd_validate, "check a graph document")
    sp.add_argument("file")
    return p


def render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "tree":
            lines.append("tree:")
            lines.extend("  " + ln for ln in value)
        elif isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        body, code = args.func(args)
    except (CoverlabError, OSError) as exc:
        print(f"coverlab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    report = {"command": args.command}
    report.update(body)
    sys.stdout.write(render_text(report) if args.text else dumps(report))
    return code
