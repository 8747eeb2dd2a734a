"""Brute-force isomorphism search for small weighted graphs and digraphs.

Backtracking over vertex bijections, pruned by a colour refinement run on
the disjoint union of both inputs (so colours are comparable across them).
Meant for minimized quotients and test fixtures, not for large inputs.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from typing import Dict, Iterator, List, Optional

from .graphs import WeightedDigraph, WeightedGraph
from .weights import weight_key


def _digraph_profile(D: WeightedDigraph):
    # (tail, head) -> sorted arc weights; parallel arcs compare as multisets
    pair = defaultdict(list)
    for a in D.arcs:
        pair[(a.tail, a.head)].append(weight_key(a.weight))
    return {k: tuple(sorted(v)) for k, v in pair.items()}


def _graph_profile(G: WeightedGraph):
    # ordered pair -> sorted (weight here, weight there) per edge, stored
    # under both orientations; loops under (v, v)
    pair = defaultdict(list)
    for e in G.edges:
        if e.is_loop:
            v = e.ends[0]
            pair[(v, v)].append((weight_key(e.weights[0]),))
        else:
            (x, y), (wx, wy) = e.ends, e.weights
            pair[(x, y)].append((weight_key(wx), weight_key(wy)))
            pair[(y, x)].append((weight_key(wy), weight_key(wx)))
    return {k: tuple(sorted(v)) for k, v in pair.items()}


def _joint_colours(va, pa, vb, pb, fixed):
    nodes = [("a", v) for v in va] + [("b", v) for v in vb]
    nbrs = defaultdict(list)
    for side, prof in (("a", pa), ("b", pb)):
        for (x, y), sig in prof.items():
            nbrs[(side, x)].append(((side, y), sig, 0))
            nbrs[(side, y)].append(((side, x), sig, 1))
    col = {n: 0 for n in nodes}
    for i, (x, y) in enumerate(sorted(fixed.items())):
        col[("a", x)] = col[("b", y)] = i + 1
    n_cols = len(set(col.values()))
    while True:
        keyed = {n: (col[n], tuple(sorted((col[u], s, d) for u, s, d in nbrs[n]))) for n in nodes}
        ranks = {k: i for i, k in enumerate(sorted(set(keyed.values())))}
        new = {n: ranks[keyed[n]] for n in nodes}
        if len(ranks) == n_cols:
            return new
        n_cols = len(ranks)
        col = new


def _bfs_order(vertices, profile, first):
    adj = defaultdict(set)
    for x, y in profile:
        adj[x].add(y)
        adj[y].add(x)
    seen, order = set(), []
    for s in list(first) + sorted(vertices, key=lambda v: (-len(adj[v]), v)):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(adj[v]):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


def _search(va: List[str], vb: List[str], pa, pb, fixed: Dict[str, str]) -> Iterator[Dict[str, str]]:
    if len(va) != len(vb) or Counter(pa.values()) != Counter(pb.values()):
        return
    if len(set(fixed.values())) != len(fixed):
        return
    col = _joint_colours(va, pa, vb, pb, fixed)
    if Counter(col[("a", v)] for v in va) != Counter(col[("b", v)] for v in vb):
        return
    cand = defaultdict(list)
    for v in vb:
        cand[col[("b", v)]].append(v)
    order = _bfs_order(va, pa, fixed)
    mapping: Dict[str, str] = {}
    used = set()

    def consistent(x):
        y = mapping[x]
        for u, v in mapping.items():
            if pa.get((x, u)) != pb.get((y, v)) or pa.get((u, x)) != pb.get((v, y)):
                return False
        return True

    def go(i):
        if i == len(order):
            yield dict(mapping)
            return
        x = order[i]
        options = [fixed[x]] if x in fixed else cand[col[("a", x)]]
        for y in options:
            if y in used:
                continue
            mapping[x] = y
            if consistent(x):
                used.add(y)
                yield from go(i + 1)
                used.discard(y)
            del mapping[x]

    yield from go(0)


def digraph_isomorphisms(A: WeightedDigraph, B: WeightedDigraph, rooted: bool = True):
    fixed = {}
    if rooted and (A.root is not None or B.root is not None):
        if A.root is None or B.root is None:
            return iter(())
        fixed = {A.root: B.root}
    return _search(list(A.vertices), list(B.vertices), _digraph_profile(A), _digraph_profile(B), fixed)


def digraph_isomorphism(A: WeightedDigraph, B: WeightedDigraph, rooted: bool = True) -> Optional[Dict[str, str]]:
    """A vertex bijection preserving arc weight multisets (and the roots)."""
    return next(iter(digraph_isomorphisms(A, B, rooted)), None)


def graph_isomorphisms(A: WeightedGraph, B: WeightedGraph, fixed: Optional[Dict[str, str]] = None):
    return _search(list(A.vertices), list(B.vertices), _graph_profile(A), _graph_profile(B), dict(fixed or {}))


def graph_isomorphism(A: WeightedGraph, B: WeightedGraph, fixed: Optional[Dict[str, str]] = None) -> Optional[Dict[str, str]]:
    """A vertex bijection preserving edges, loops and half-edge weights,
    optionally extending the partial map ``fixed``."""
    return next(iter(graph_isomorphisms(A, B, fixed)), None)
