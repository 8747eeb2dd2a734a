"""Random constructions shared by several test modules."""

from __future__ import annotations

import random

from coverlab.graphs import Arc, GraphHom, WeightedDigraph, WeightedGraph, make_edge
from coverlab.weights import OMEGA


def split_weight(rng, w):
    """Two weights summing (omega-wise) to w, or None if w cannot split."""
    if w is OMEGA:
        return rng.choice([(OMEGA, OMEGA), (OMEGA, rng.randint(1, 3)), (rng.randint(1, 3), OMEGA)])
    if w < 2:
        return None
    a = rng.randint(1, w - 1)
    return a, w - a


def random_expansion(rng: random.Random, D: WeightedDigraph, steps: int = 3) -> WeightedDigraph:
    """A random finite unfolding of the rooted digraph D, so both have the
    same complete unfolding.

    Each step either clones a non-root vertex (the clone copies its out-arcs
    and takes over some of its incoming arcs, possibly only part of an arc's
    weight) or splits an arc into two parallel arcs with the same total.
    The result is cut down to the part reachable from the root.
    """
    vertices = list(D.vertices)
    arcs = list(D.arcs)
    for step in range(steps):
        if rng.random() < 0.5 and len(vertices) > 1:
            v = rng.choice([u for u in vertices if u != D.root])
            clone = f"{v}'{step}"
            vertices.append(clone)
            arcs += [Arc(f"{a.id}@{step}", clone, a.head, a.weight) for a in arcs if a.tail == v]
            for a in [a for a in arcs if a.head == v]:
                r = rng.random()
                if r < 0.4:
                    arcs.remove(a)
                    arcs.append(a._replace(head=clone))
                elif r < 0.6:
                    s = split_weight(rng, a.weight)
                    if s is not None:
                        arcs.remove(a)
                        arcs.append(Arc(f"{a.id}^{step}a", a.tail, v, s[0]))
                        arcs.append(Arc(f"{a.id}^{step}b", a.tail, clone, s[1]))
        elif arcs:
            a = rng.choice(arcs)
            s = split_weight(rng, a.weight)
            if s is not None:
                arcs.remove(a)
                arcs.append(Arc(f"{a.id}^{step}a", a.tail, a.head, s[0]))
                arcs.append(Arc(f"{a.id}^{step}b", a.tail, a.head, s[1]))
    out = WeightedDigraph.build(vertices, arcs)
    keep = out.reachable(D.root)
    return out.restrict_to(keep).with_root(D.root)


def random_involution(rng, n):
    items = list(range(n))
    rng.shuffle(items)
    sigma = list(range(n))
    while len(items) >= 2 and rng.random() < 0.7:
        a, b = items.pop(), items.pop()
        sigma[a], sigma[b] = b, a
    return sigma


def random_lift(rng: random.Random, M: WeightedGraph, n: int, tag: str = ""):
    """An n-fold unweighted cover of the unweighted multigraph M, built from
    a random permutation per edge (a random involution per loop)."""
    vertices = [f"{v}.{i}{tag}" for v in M.vertices for i in range(n)]
    edges, vmap, emap = [], {}, {}
    for v in M.vertices:
        for i in range(n):
            vmap[f"{v}.{i}{tag}"] = v
    for e in M.edges:
        if e.is_loop:
            x = e.ends[0]
            sigma = random_involution(rng, n)
            for i in range(n):
                if sigma[i] < i:
                    continue
                eid = f"{e.id}.{i}{tag}"
                edges.append(make_edge(eid, [f"{x}.{i}{tag}", f"{x}.{sigma[i]}{tag}"]))
                emap[eid] = e.id
        else:
            x, y = e.ends
            sigma = list(range(n))
            rng.shuffle(sigma)
            for i in range(n):
                eid = f"{e.id}.{i}{tag}"
                edges.append(make_edge(eid, [f"{x}.{i}{tag}", f"{y}.{sigma[i]}{tag}"]))
                emap[eid] = e.id
    return WeightedGraph.build(vertices, edges), GraphHom(vmap, emap)


def random_multigraph(rng: random.Random, max_vertices: int = 4, loops: bool = True) -> WeightedGraph:
    """Connected unweighted multigraph with possible parallel edges and loops."""
    n = rng.randint(1, max_vertices)
    vs = [f"m{i}" for i in range(n)]
    edges = []
    for i in range(1, n):
        edges.append(make_edge(f"t{i}", [vs[rng.randrange(i)], vs[i]]))
    for k in range(rng.randint(0, 3)):
        a, b = rng.choice(vs), rng.choice(vs)
        if a == b and not loops:
            continue
        edges.append(make_edge(f"x{k}", [a, b]))
    if n == 1 and not edges and loops:
        edges.append(make_edge("x", [vs[0]]))
    return WeightedGraph.build(vs, edges)
