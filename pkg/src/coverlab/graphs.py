"""Weighted digraphs, weighted graphs and homomorphisms between them.

Vertex, arc and edge ids are strings; every canonical order in the package
is the lexicographic order on ids.  Values are immutable once built.

A :class:`WeightedGraph` stores weights on half-edges.  A loop has a single
half-edge.  Parallel edges are representable so that unweighted multigraphs
(covers produced by constructions, inputs to :func:`coverlab.cover.fuse`) use
the same type; :func:`validate` flags them unless ``multigraph=True``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from .weights import OMEGA, Weight, is_weight, weight_sum


class CoverlabError(ValueError):
    """Raised when an operation's precondition does not hold."""


def pair_id(a: str, b: str) -> str:
    return f"({a},{b})"


class Arc(NamedTuple):
    id: str
    tail: str
    head: str
    weight: Weight = 1


class Edge(NamedTuple):
    """An edge with one end (a loop) or two ends, and a weight per end."""

    id: str
    ends: Tuple[str, ...]
    weights: Tuple[Weight, ...]

    @property
    def is_loop(self) -> bool:
        return len(self.ends) == 1

    def weight_at(self, v: str) -> Weight:
        return self.weights[self.ends.index(v)]

    def other(self, v: str) -> str:
        if self.is_loop:
            return v
        return self.ends[1] if self.ends[0] == v else self.ends[0]


def make_edge(id: str, ends: Iterable[str], weights=None) -> Edge:
    """Build an edge with sorted ends.

    ``weights`` may be a mapping end -> weight, a sequence aligned with
    ``ends`` or ``None`` (all ones).
    """
    ends = list(ends)
    if len(ends) == 2 and ends[0] == ends[1]:
        ends = ends[:1]
    if weights is None:
        wmap = {v: 1 for v in ends}
    elif isinstance(weights, Mapping):
        wmap = dict(weights)
    else:
        wmap = dict(zip(ends, weights))
    order = tuple(sorted(ends))
    return Edge(id, order, tuple(wmap[v] for v in order))


@dataclass(frozen=True)
class WeightedDigraph:
    vertices: Tuple[str, ...]
    arcs: Tuple[Arc, ...]
    root: Optional[str] = None
    name: Optional[str] = None

    @classmethod
    def build(cls, vertices, arcs, root=None, name=None) -> "WeightedDigraph":
        """Build from an iterable of vertex ids and of arcs.

        Arcs may be :class:`Arc` values or ``(id, tail, head[, weight])``
        tuples.
        """
        arcs = [a if isinstance(a, Arc) else Arc(*a) for a in arcs]
        vs = set(vertices)
        for a in arcs:
            vs.update((a.tail, a.head))
        return cls(tuple(sorted(vs)), tuple(sorted(arcs, key=lambda a: a.id)), root, name)

    def out_arcs(self, v: str) -> List[Arc]:
        return self._out.get(v, [])

    def out_weights(self, v: str) -> Dict[str, Weight]:
        """The weighted neighbourhood: head -> summed weight of arcs v -> head."""
        acc: Dict[str, list] = defaultdict(list)
        for a in self.out_arcs(v):
            acc[a.head].append(a.weight)
        return {h: weight_sum(ws) for h, ws in acc.items()}

    def arc(self, id: str) -> Arc:
        return self._arc_index[id]

    def reachable(self, start: str) -> List[str]:
        seen = {start}
        queue = deque([start])
        order = [start]
        while queue:
            v = queue.popleft()
            for a in self.out_arcs(v):
                if a.head not in seen:
                    seen.add(a.head)
                    order.append(a.head)
                    queue.append(a.head)
        return order

    def with_root(self, root: str) -> "WeightedDigraph":
        return WeightedDigraph(self.vertices, self.arcs, root, self.name)

    def restrict_to(self, keep: Iterable[str]) -> "WeightedDigraph":
        keep = set(keep)
        arcs = [a for a in self.arcs if a.tail in keep and a.head in keep]
        root = self.root if self.root in keep else None
        return WeightedDigraph(tuple(sorted(keep)), tuple(arcs), root, self.name)

    @property
    def _out(self) -> Dict[str, List[Arc]]:
        cache = self.__dict__.get("_out_cache")
        if cache is None:
            cache = defaultdict(list)
            for a in self.arcs:
                cache[a.tail].append(a)
            cache = dict(cache)
            object.__setattr__(self, "_out_cache", cache)
        return cache

    @property
    def _arc_index(self) -> Dict[str, Arc]:
        cache = self.__dict__.get("_arc_cache")
        if cache is None:
            cache = {a.id: a for a in self.arcs}
            object.__setattr__(self, "_arc_cache", cache)
        return cache


@dataclass(frozen=True)
class WeightedGraph:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    name: Optional[str] = None

    @classmethod
    def build(cls, vertices, edges, name=None) -> "WeightedGraph":
        """Build from vertex ids and edges.

        Edges may be :class:`Edge` values or ``(id, ends[, weights])``
        tuples, see :func:`make_edge`.
        """
        es = [e if isinstance(e, Edge) else make_edge(*e) for e in edges]
        vs = set(vertices)
        for e in es:
            vs.update(e.ends)
        return cls(tuple(sorted(vs)), tuple(sorted(es, key=lambda e: e.id)), name)

    def incident(self, v: str) -> List[Edge]:
        return self._inc.get(v, [])

    def edge(self, id: str) -> Edge:
        return self._edge_index[id]

    def half_edges(self) -> List[Tuple[str, str, Weight]]:
        """All (edge id, vertex, weight) incidences."""
        return [(e.id, v, w) for e in self.edges for v, w in zip(e.ends, e.weights)]

    @property
    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.ends in seen:
                return False
            seen.add(e.ends)
        return True

    @property
    def is_unweighted(self) -> bool:
        return all(w == 1 for e in self.edges for w in e.weights)

    @property
    def has_omega(self) -> bool:
        return any(w is OMEGA for e in self.edges for w in e.weights)

    @property
    def has_loops(self) -> bool:
        return any(e.is_loop for e in self.edges)

    def components(self) -> List[Tuple[str, ...]]:
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for e in self.incident(v):
                    u = e.other(v)
                    if u not in seen:
                        seen.add(u)
                        comp.append(u)
                        queue.append(u)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and len(self.components()) == 1

    def induced(self, keep: Iterable[str]) -> "WeightedGraph":
        keep = set(keep)
        es = [e for e in self.edges if set(e.ends) <= keep]
        return WeightedGraph(tuple(sorted(keep)), tuple(es), self.name)

    @property
    def _inc(self) -> Dict[str, List[Edge]]:
        cache = self.__dict__.get("_inc_cache")
        if cache is None:
            cache = defaultdict(list)
            for e in self.edges:
                for v in e.ends:
                    cache[v].append(e)
            cache = dict(cache)
            object.__setattr__(self, "_inc_cache", cache)
        return cache

    @property
    def _edge_index(self) -> Dict[str, Edge]:
        cache = self.__dict__.get("_edge_cache")
        if cache is None:
            cache = {e.id: e for e in self.edges}
            object.__setattr__(self, "_edge_cache", cache)
        return cache


@dataclass(frozen=True)
class GraphHom:
    """A homomorphism given by a vertex map and an edge (or arc) map."""

    vertex_map: Mapping[str, str] = field(default_factory=dict)
    edge_map: Mapping[str, str] = field(default_factory=dict)

    def __call__(self, x: str) -> str:
        return self.vertex_map[x]

    def then(self, other: "GraphHom") -> "GraphHom":
        """Composition ``other o self``."""
        return GraphHom(
            {v: other.vertex_map[w] for v, w in self.vertex_map.items()},
            {e: other.edge_map[f] for e, f in self.edge_map.items()},
        )

    @classmethod
    def identity(cls, g) -> "GraphHom":
        items = g.arcs if isinstance(g, WeightedDigraph) else g.edges
        return cls({v: v for v in g.vertices}, {e.id: e.id for e in items})


def validate(g, multigraph: bool = False) -> List[str]:
    """Return every invariant violation of ``g``; an empty list means valid."""
    errors = []
    vertices = set(g.vertices)
    if len(vertices) != len(g.vertices):
        errors.append("duplicate vertex id")
    if isinstance(g, WeightedDigraph):
        ids = [a.id for a in g.arcs]
        if len(set(ids)) != len(ids):
            errors.append("duplicate arc id")
        for a in g.arcs:
            if not is_weight(a.weight):
                errors.append(f"arc {a.id}: weight must be >= 1 or omega")
            for end in (a.tail, a.head):
                if end not in vertices:
                    errors.append(f"arc {a.id}: dangling reference to {end}")
        if g.root is not None:
            if g.root not in vertices:
                errors.append(f"root {g.root} is not a vertex")
            else:
                reached = set(g.reachable(g.root))
                missing = sorted(vertices - reached)
                if missing:
                    errors.append("unreachable from root: " + ", ".join(missing))
    else:
        ids = [e.id for e in g.edges]
        if len(set(ids)) != len(ids):
            errors.append("duplicate edge id")
        seen = {}
        for e in g.edges:
            if len(e.ends) not in (1, 2) or len(e.weights) != len(e.ends):
                errors.append(f"edge {e.id}: malformed ends")
                continue
            for v, w in zip(e.ends, e.weights):
                if v not in vertices:
                    errors.append(f"edge {e.id}: dangling reference to {v}")
                if not is_weight(w):
                    errors.append(f"edge {e.id}: weight at {v} must be >= 1 or omega")
            if not multigraph:
                if e.ends in seen:
                    what = "two loops at" if e.is_loop else "parallel edges between"
                    errors.append(
                        f"not simple: {what} {'-'.join(e.ends)} ({seen[e.ends]}, {e.id})"
                    )
                else:
                    seen[e.ends] = e.id
    return errors


def require_valid(g, multigraph: bool = False) -> None:
    errors = validate(g, multigraph=multigraph)
    if errors:
        raise CoverlabError("; ".join(errors))


def require_connected(g: WeightedGraph) -> None:
    if not g.is_connected():
        raise CoverlabError("graph must be connected")


def require_rooted(d: WeightedDigraph) -> None:
    if d.root is None:
        raise CoverlabError("digraph must be rooted")


def disjoint_union_digraphs(*digraphs: WeightedDigraph) -> Tuple[WeightedDigraph, List[Dict[str, str]]]:
    """Union with vertices and arcs renamed ``"<i>/<id>"``.

    Returns the union and, per input, the vertex renaming.
    """
    vertices, arcs, renames = [], [], []
    for i, d in enumerate(digraphs):
        ren = {v: f"{i}/{v}" for v in d.vertices}
        renames.append(ren)
        vertices.extend(ren.values())
        arcs.extend(Arc(f"{i}/{a.id}", ren[a.tail], ren[a.head], a.weight) for a in d.arcs)
    return WeightedDigraph(tuple(sorted(vertices)), tuple(sorted(arcs, key=lambda a: a.id))), renames


def disjoint_union_graphs(*graphs: WeightedGraph) -> Tuple[WeightedGraph, List[Dict[str, str]]]:
    vertices, edges, renames = [], [], []
    for i, g in enumerate(graphs):
        ren = {v: f"{i}/{v}" for v in g.vertices}
        renames.append(ren)
        vertices.extend(ren.values())
        edges.extend(make_edge(f"{i}/{e.id}", [ren[v] for v in e.ends], e.weights) for e in g.edges)
    return WeightedGraph(tuple(sorted(vertices)), tuple(sorted(edges, key=lambda e: e.id))), renames
