"""Finite covers of weighted graphs: existence, construction, pullbacks.

A finite unweighted cover of ``H`` assigning ``n_i`` vertices to vertex i
exists iff ``m_ij * n_i = m_ji * n_j`` for every non-loop edge, where
``m_ij`` is the half-edge weight at i.  Loops impose nothing.
"""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from .cover import is_covering, kronecker_k2, kronecker_lift
from .graphs import (
    CoverlabError,
    GraphHom,
    WeightedGraph,
    make_edge,
    pair_id,
    require_connected,
    require_valid,
)


class CoverSolveResult(NamedTuple):
    solvable: bool
    multiplicities: Optional[Dict[str, int]]
    failure_cycle: Optional[List[str]]
    failure_ratio: Optional[Fraction]

    def as_vector(self, H: WeightedGraph) -> Optional[Tuple[int, ...]]:
        if self.multiplicities is None:
            return None
        return tuple(self.multiplicities[v] for v in H.vertices)


def _require_finite(H: WeightedGraph) -> None:
    if H.has_omega:
        raise CoverlabError("requires finite weights")


def finite_cover_solve(H: WeightedGraph) -> CoverSolveResult:
    """Minimal fibre sizes of a finite unweighted cover of ``H``, if any.

    Ratios x_j / x_i = m_ij / m_ji are propagated along a BFS spanning tree;
    every non-tree edge closes a cycle whose ratios must multiply to 1.  On
    failure the result carries that cycle (edge ids) and its product.
    """
    require_valid(H)
    _require_finite(H)
    require_connected(H)
    start = H.vertices[0]
    value = {start: Fraction(1)}
    parent: Dict[str, Tuple[str, str]] = {}
    queue = deque([start])
    tree_edges = set()
    while queue:
        v = queue.popleft()
        for e in H.incident(v):
            if e.is_loop:
                continue
            u = e.other(v)
            if u not in value:
                value[u] = value[v] * e.weight_at(v) / e.weight_at(u)
                parent[u] = (v, e.id)
                tree_edges.add(e.id)
                queue.append(u)
    for e in H.edges:
        if e.is_loop or e.id in tree_edges:
            continue
        x, y = e.ends
        if value[x] * e.weight_at(x) != value[y] * e.weight_at(y):
            cycle = _tree_cycle(parent, x, y) + [e.id]
            ratio = (value[x] * e.weight_at(x)) / (value[y] * e.weight_at(y))
            return CoverSolveResult(False, None, cycle, ratio)
    lcm = 1
    for q in value.values():
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    ints = {v: int(q * lcm) for v, q in value.items()}
    g = 0
    for n in ints.values():
        g = math.gcd(g, n)
    return CoverSolveResult(True, {v: n // g for v, n in sorted(ints.items())}, None, None)


def _tree_cycle(parent, x, y) -> List[str]:
    def path_up(v):
        out = [v]
        while v in parent:
            v = parent[v][0]
            out.append(v)
        return out

    px, py = path_up(x), path_up(y)
    common = next(v for v in px if v in set(py))
    edges = []
    v = x
    while v != common:
        v, e = parent[v]
        edges.append(e)
    tail = []
    v = y
    while v != common:
        v, e = parent[v]
        tail.append(e)
    return edges + tail[::-1]


def satisfies_balance(H: WeightedGraph, mult: Dict[str, int]) -> bool:
    return all(
        e.is_loop or mult[e.ends[0]] * e.weights[0] == mult[e.ends[1]] * e.weights[1]
        for e in H.edges
    )


def _as_mapping(H: WeightedGraph, mult) -> Dict[str, int]:
    if isinstance(mult, dict):
        mult = dict(mult)
    else:
        mult = dict(zip(H.vertices, mult))
    if set(mult) != set(H.vertices) or any(not isinstance(n, int) or n < 1 for n in mult.values()):
        raise CoverlabError("multiplicities must give a positive integer per vertex")
    return mult


def build_finite_cover(H: WeightedGraph, mult, loop_free: bool = False) -> Tuple[WeightedGraph, GraphHom]:
    """An unweighted multigraph covering ``H`` with ``mult[i]`` vertices
    over each vertex i.

    Over i there are vertices ``(i,s)``, s = 1..mult[i].  For an edge e
    between i < j with m = m_ij * mult[i], edge ``e#k`` (k = 1..m) joins
    (i,s) and (j,s') where k lies in the s-th block of m_ij consecutive
    integers and in the s'-th block of m_ji.  A loop of weight q at i gives
    q loops ``e#s.t`` at every (i,s).  With ``loop_free`` the result is
    replaced by its product with an edge.
    """
    require_valid(H)
    _require_finite(H)
    mult = _as_mapping(H, mult)
    if not satisfies_balance(H, mult):
        bad = next(e.id for e in H.edges
                   if not e.is_loop and mult[e.ends[0]] * e.weights[0] != mult[e.ends[1]] * e.weights[1])
        raise CoverlabError(f"multiplicities violate the balance equation of edge {bad}")
    vertices = [pair_id(v, s) for v in H.vertices for s in range(1, mult[v] + 1)]
    edges, emap = [], {}
    for e in H.edges:
        if e.is_loop:
            i, q = e.ends[0], e.weights[0]
            for s in range(1, mult[i] + 1):
                for t in range(1, q + 1):
                    eid = f"{e.id}#{s}.{t}"
                    edges.append(make_edge(eid, [pair_id(i, s)]))
                    emap[eid] = e.id
            continue
        (i, j), (mij, mji) = e.ends, e.weights
        for k in range(1, mij * mult[i] + 1):
            s, s2 = (k - 1) // mij + 1, (k - 1) // mji + 1
            eid = f"{e.id}#{k}"
            edges.append(make_edge(eid, [pair_id(i, s), pair_id(j, s2)]))
            emap[eid] = e.id
    G = WeightedGraph.build(vertices, edges)
    hom = GraphHom({pair_id(v, s): v for v in H.vertices for s in range(1, mult[v] + 1)}, emap)
    if loop_free:
        G2, proj = kronecker_k2(G)
        return G2, proj.then(hom)
    return G, hom


class Pullback(NamedTuple):
    graph: WeightedGraph
    to_g: GraphHom
    to_h: GraphHom
    components: List[Tuple[str, ...]]


def _pullback_loop_free(G, H, a, b):
    vertices = [pair_id(x, y) for x in G.vertices for y in H.vertices if a.vertex_map[x] == b.vertex_map[y]]
    by_image: Dict[str, List] = {}
    for f in H.edges:
        by_image.setdefault(b.edge_map[f.id], []).append(f)
    edges, gmap, hmap = [], {}, {}
    for e in G.edges:
        x1, x2 = e.ends
        for f in by_image.get(a.edge_map[e.id], []):
            y1, y2 = f.ends
            # the end of f over a(x1); ends over distinct vertices since M has no loops
            if b.vertex_map[y1] != a.vertex_map[x1]:
                y1, y2 = y2, y1
            eid = pair_id(e.id, f.id)
            edges.append(make_edge(eid, [pair_id(x1, y1), pair_id(x2, y2)]))
            gmap[eid] = e.id
            hmap[eid] = f.id
    K = WeightedGraph.build(vertices, edges)
    pairs = [(x, y) for x in G.vertices for y in H.vertices if a.vertex_map[x] == b.vertex_map[y]]
    vg = {pair_id(x, y): x for x, y in pairs}
    vh = {pair_id(x, y): y for x, y in pairs}
    return K, GraphHom(vg, gmap), GraphHom(vh, hmap)


def common_cover_pullback(G: WeightedGraph, H: WeightedGraph, M: WeightedGraph,
                          a: GraphHom, b: GraphHom) -> Pullback:
    """Common cover of two graphs covering the same unweighted multigraph.

    For loop-free ``M`` the cover is the fibre product: pairs of vertices
    (and of edges) with the same image.  When ``M`` has loops all three
    graphs are first replaced by their products with an edge.
    """
    for g in (G, H, M):
        require_valid(g, multigraph=True)
        if not g.is_unweighted:
            raise CoverlabError(
                "common_cover_pullback needs unweighted graphs; for weighted bases "
                "compare universal covers with minimize / same_universal_cover"
            )
    if not is_covering(a, G, M):
        raise CoverlabError("first map is not a covering")
    if not is_covering(b, H, M):
        raise CoverlabError("second map is not a covering")
    if M.has_loops:
        G2, pg = kronecker_k2(G)
        H2, ph = kronecker_k2(H)
        K, kg, kh = _pullback_loop_free(G2, H2, kronecker_lift(a, G, M), kronecker_lift(b, H, M))
        to_g, to_h = kg.then(pg), kh.then(ph)
    else:
        K, to_g, to_h = _pullback_loop_free(G, H, a, b)
    return Pullback(K, to_g, to_h, K.components())
