"""JSON documents for graphs, digraphs, multigraphs and homomorphisms.

Graph files::

    {"kind": "graph", "vertices": ["x", "y"],
     "edges": [{"id": "e", "ends": ["x", "y"], "weights": {"x": 3, "y": 2}},
               {"id": "l", "ends": ["x"], "weights": {"x": 1}}]}

Digraphs use ``"arcs": [{"id", "tail", "head", "weight"}]`` and an
optional ``"root"``; multigraphs omit weights.  Infinite weights are
spelled ``"omega"``.  Serialization is canonical (sorted keys and ids), so
``serialize(parse(serialize(parse(x))))`` equals ``serialize(parse(x))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, List, Optional, Union

from .graphs import (
    Arc,
    CoverlabError,
    GraphHom,
    WeightedDigraph,
    WeightedGraph,
    make_edge,
    validate,
)
from .weights import OMEGA, parse_weight

KINDS = ("graph", "digraph", "multigraph")


class DocumentError(CoverlabError):
    """Raised with the full list of problems found in a document."""

    def __init__(self, errors: List[str]):
        super().__init__("; ".join(errors))
        self.errors = list(errors)


@dataclass(frozen=True)
class GraphDocument:
    kind: str
    graph: Union[WeightedGraph, WeightedDigraph]
    name: Optional[str] = None


def _load(data: Union[bytes, str]) -> Any:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError([f"not UTF-8: {exc}"]) from None
    try:
        return json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError([f"line {exc.lineno} column {exc.colno}: {exc.msg}"]) from None


def _weight(value, where: str, errors: List[str]):
    try:
        return parse_weight(value)
    except ValueError as exc:
        errors.append(f"{where}: {exc}")
        return None


def _str_list(value, where, errors) -> List[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        errors.append(f"{where}: expected a list of strings")
        return []
    return value


def parse_graph(data: Union[bytes, str]) -> GraphDocument:
    """Parse and validate a graph document; raises DocumentError."""
    doc = _load(data)
    errors: List[str] = []
    if not isinstance(doc, dict):
        raise DocumentError(["top level: expected an object"])
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentError([f"kind: expected one of {', '.join(KINDS)}"])
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        errors.append("name: expected a string")
        name = None
    vertices = _str_list(doc.get("vertices"), "vertices", errors)
    if kind == "digraph":
        allowed = {"kind", "vertices", "arcs", "root", "name"}
    else:
        allowed = {"kind", "vertices", "edges", "name"}
    for key in sorted(set(doc) - allowed):
        errors.append(f"{key}: unexpected field for kind {kind}")

    if kind == "digraph":
        arcs = []
        raw = doc.get("arcs", [])
        if not isinstance(raw, list):
            errors.append("arcs: expected a list")
            raw = []
        for i, a in enumerate(raw):
            where = f"arcs[{i}]"
            if not isinstance(a, dict) or not all(isinstance(a.get(k), str) for k in ("id", "tail", "head")):
                errors.append(f"{where}: needs string id, tail and head")
                continue
            for end in ("tail", "head"):
                if a[end] not in vertices:
                    errors.append(f"{where}.{end}: dangling reference to {a[end]}")
            w = _weight(a.get("weight", 1), f"{where}.weight", errors)
            if w is not None:
                arcs.append(Arc(a["id"], a["tail"], a["head"], w))
        root = doc.get("root")
        if root is not None and not isinstance(root, str):
            errors.append("root: expected a string")
            root = None
        if errors:
            raise DocumentError(errors)
        g = WeightedDigraph.build(vertices, arcs, root=root, name=name)
        errors.extend(validate(g))
    else:
        edges = []
        raw = doc.get("edges", [])
        if not isinstance(raw, list):
            errors.append("edges: expected a list")
            raw = []
        for i, e in enumerate(raw):
            where = f"edges[{i}]"
            if not isinstance(e, dict) or not isinstance(e.get("id"), str):
                errors.append(f"{where}: needs a string id")
                continue
            ends = e.get("ends")
            if not isinstance(ends, list) or len(ends) not in (1, 2) or not all(isinstance(v, str) for v in ends):
                errors.append(f"{where}.ends: expected one or two vertex ids")
                continue
            for v in ends:
                if v not in vertices:
                    errors.append(f"{where}.ends: dangling reference to {v}")
            if kind == "multigraph":
                if "weights" in e:
                    errors.append(f"{where}: multigraph edges carry no weights")
                edges.append(make_edge(e["id"], ends))
                continue
            ws = e.get("weights")
            if ws is None:
                edges.append(make_edge(e["id"], ends))
                continue
            if not isinstance(ws, dict) or set(ws) != set(ends):
                errors.append(f"{where}.weights: expected one weight per end")
                continue
            parsed = {v: _weight(w, f"{where}.weights.{v}", errors) for v, w in ws.items()}
            if None not in parsed.values():
                edges.append(make_edge(e["id"], ends, parsed))
        if errors:
            raise DocumentError(errors)
        g = WeightedGraph.build(vertices, edges, name=name)
        errors.extend(validate(g, multigraph=(kind == "multigraph")))
    if errors:
        raise DocumentError(errors)
    return GraphDocument(kind, g, name)


def load_graph(path: str) -> GraphDocument:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def _w(w):
    return "omega" if w is OMEGA else w


def graph_to_json(g: Union[WeightedGraph, WeightedDigraph], kind: Optional[str] = None) -> dict:
    if isinstance(g, WeightedDigraph):
        out = {
            "kind": "digraph",
            "vertices": sorted(g.vertices),
            "arcs": [
                {"id": a.id, "tail": a.tail, "head": a.head, "weight": _w(a.weight)}
                for a in sorted(g.arcs, key=lambda a: a.id)
            ],
        }
        if g.root is not None:
            out["root"] = g.root
    else:
        if kind is None:
            kind = "graph" if g.is_simple else "multigraph"
        edges = []
        for e in sorted(g.edges, key=lambda e: e.id):
            item = {"id": e.id, "ends": list(e.ends)}
            if kind == "graph":
                item["weights"] = {v: _w(w) for v, w in zip(e.ends, e.weights)}
            elif not all(w == 1 for w in e.weights):
                raise CoverlabError("a weighted graph cannot be written as a multigraph")
            edges.append(item)
        out = {"kind": kind, "vertices": sorted(g.vertices), "edges": edges}
    if g.name is not None:
        out["name"] = g.name
    return out


def dumps(obj) -> str:
    """Canonical JSON text used for every file and report."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def serialize(doc: GraphDocument) -> str:
    return dumps(graph_to_json(doc.graph, doc.kind))


def parse_hom(data: Union[bytes, str]) -> GraphHom:
    doc = _load(data)
    errors = []
    if not isinstance(doc, dict):
        raise DocumentError(["top level: expected an object"])
    maps = []
    for key in ("vertexMap", "edgeMap"):
        m = doc.get(key)
        if not isinstance(m, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in m.items()):
            errors.append(f"{key}: expected an object of string ids")
            m = {}
        maps.append(m)
    for key in sorted(set(doc) - {"vertexMap", "edgeMap"}):
        errors.append(f"{key}: unexpected field")
    if errors:
        raise DocumentError(errors)
    return GraphHom(dict(maps[0]), dict(maps[1]))


def load_hom(path: str) -> GraphHom:
    with open(path, "rb") as fh:
        return parse_hom(fh.read())


def hom_to_json(h: GraphHom) -> dict:
    return {"vertexMap": dict(sorted(h.vertex_map.items())), "edgeMap": dict(sorted(h.edge_map.items()))}
