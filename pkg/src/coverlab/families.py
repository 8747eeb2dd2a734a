"""Small graph families and random generators used by demos and tests."""

from __future__ import annotations

import random
from typing import List, Optional, Sequence

from .graphs import Arc, WeightedDigraph, WeightedGraph, make_edge
from .weights import OMEGA


def cycle(n: int, prefix: str = "v", name: Optional[str] = None) -> WeightedGraph:
    """C_n on vertices v0..v{n-1} (n >= 3), edges e0..e{n-1}."""
    vs = [f"{prefix}{i}" for i in range(n)]
    return WeightedGraph.build(vs, [make_edge(f"e{i}", [vs[i], vs[(i + 1) % n]]) for i in range(n)], name=name)


def path(n: int, prefix: str = "v", name: Optional[str] = None) -> WeightedGraph:
    vs = [f"{prefix}{i}" for i in range(n)]
    return WeightedGraph.build(vs, [make_edge(f"e{i}", [vs[i], vs[i + 1]]) for i in range(n - 1)], name=name)


def complete_bipartite(m: int, n: int, name: Optional[str] = None) -> WeightedGraph:
    left = [f"l{i}" for i in range(m)]
    right = [f"r{j}" for j in range(n)]
    edges = [make_edge(f"e{i}_{j}", [left[i], right[j]]) for i in range(m) for j in range(n)]
    return WeightedGraph.build(left + right, edges, name=name)


_RIM = "bcdefg"


def wheel6() -> WeightedGraph:
    """Hub a joined to every vertex of the 6-cycle b-c-d-e-f-g."""
    edges = [make_edge(f"s{v}", ["a", v]) for v in _RIM]
    edges += [make_edge(f"r{i}", [_RIM[i], _RIM[(i + 1) % 6]]) for i in range(6)]
    return WeightedGraph.build(["a", *_RIM], edges, name="wheel6")


def hub_triangles() -> WeightedGraph:
    """Hub a joined to the six vertices of the triangles b-c-d and e-f-g."""
    edges = [make_edge(f"s{v}", ["a", v]) for v in _RIM]
    for t, tri in enumerate(("bcd", "efg")):
        for i in range(3):
            edges.append(make_edge(f"t{t}{i}", [tri[i], tri[(i + 1) % 3]]))
    return WeightedGraph.build(["a", *_RIM], edges, name="hub_triangles")


def from_matrix(M: Sequence[Sequence], vertices: Optional[Sequence[str]] = None, name=None) -> WeightedGraph:
    """Weighted graph with weight matrix ``M`` (zero pattern must be symmetric)."""
    n = len(M)
    vs = list(vertices) if vertices is not None else [str(i + 1) for i in range(n)]
    edges = []
    for i in range(n):
        if M[i][i]:
            edges.append(make_edge(f"l{vs[i]}", [vs[i]], [M[i][i]]))
        for j in range(i + 1, n):
            if bool(M[i][j]) != bool(M[j][i]):
                raise ValueError("zero pattern of a weight matrix must be symmetric")
            if M[i][j]:
                edges.append(make_edge(f"e{vs[i]}{vs[j]}", [vs[i], vs[j]], {vs[i]: M[i][j], vs[j]: M[j][i]}))
    return WeightedGraph.build(vs, edges, name=name)


# -- random -----------------------------------------------------------------

def random_weight(rng: random.Random, weights: Sequence = (1, 2, 3, OMEGA)):
    return rng.choice(list(weights))


def random_digraph(rng: random.Random, max_vertices: int = 6, weights: Sequence = (1, 2, 3, OMEGA),
                   arc_prob: float = 0.3, parallel_prob: float = 0.1, rooted: bool = False) -> WeightedDigraph:
    n = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(n)]
    arcs: List[Arc] = []
    for x in vs:
        for y in vs:
            if rng.random() < arc_prob:
                arcs.append(Arc(f"a{len(arcs)}", x, y, random_weight(rng, weights)))
                if rng.random() < parallel_prob:
                    arcs.append(Arc(f"a{len(arcs)}", x, y, random_weight(rng, weights)))
    if rooted:
        # an arc into every vertex from an earlier one, so v0 reaches everything
        for i in range(1, n):
            arcs.append(Arc(f"a{len(arcs)}", vs[rng.randrange(i)], vs[i], random_weight(rng, weights)))
        return WeightedDigraph.build(vs, arcs, root="v0")
    return WeightedDigraph.build(vs, arcs)


def random_connected_graph(rng: random.Random, max_vertices: int = 6, weights: Sequence = (1, 2, 3, OMEGA),
                           extra_prob: float = 0.3, loop_prob: float = 0.2, min_vertices: int = 1) -> WeightedGraph:
    """Random spanning tree plus extra edges and loops, weights drawn per half-edge."""
    n = rng.randint(min_vertices, max_vertices)
    vs = [f"v{i}" for i in range(n)]
    pairs = set()
    for i in range(1, n):
        pairs.add((rng.randrange(i), i))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < extra_prob:
                pairs.add((i, j))
    edges = []
    for k, (i, j) in enumerate(sorted(pairs)):
        edges.append(make_edge(f"e{k}", [vs[i], vs[j]], [random_weight(rng, weights), random_weight(rng, weights)]))
    for i in range(n):
        if rng.random() < loop_prob:
            edges.append(make_edge(f"l{i}", [vs[i]], [random_weight(rng, weights)]))
    return WeightedGraph.build(vs, edges)


def random_simple_graph(rng: random.Random, max_vertices: int = 8, edge_prob: float = 0.4,
                        connected: bool = True) -> WeightedGraph:
    if connected:
        return random_connected_graph(rng, max_vertices, (1,), extra_prob=edge_prob, loop_prob=0.0)
    n = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(n)]
    edges = [make_edge(f"e{i}_{j}", [vs[i], vs[j]]) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_prob]
    return WeightedGraph.build(vs, edges)
