import random

from coverlab.families import complete_bipartite, cycle, hub_triangles, random_simple_graph, wheel6
from coverlab.graphs import Arc, WeightedDigraph, WeightedGraph, make_edge
from coverlab.isomorphism import digraph_isomorphism, graph_isomorphism, graph_isomorphisms

from oracles import has_isomorphism_brute


def relabel(g, rng):
    names = list(g.vertices)
    rng.shuffle(names)
    ren = {v: f"q{n}" for v, n in zip(g.vertices, names)}
    return WeightedGraph.build(
        list(ren.values()),
        [make_edge(e.id, [ren[v] for v in e.ends], {ren[v]: w for v, w in zip(e.ends, e.weights)}) for e in g.edges],
    )


def pairs(g):
    return [e.ends for e in g.edges]


def test_small_examples():
    assert graph_isomorphism(cycle(6), complete_bipartite(3, 3)) is None
    assert graph_isomorphism(wheel6(), hub_triangles()) is None
    assert graph_isomorphism(cycle(5), cycle(5, prefix="w")) is not None


def test_fixed_pairs_respected():
    C = cycle(4)
    m = graph_isomorphism(C, C, fixed={"v0": "v2"})
    assert m is not None and m["v0"] == "v2"
    # six-cycle automorphisms: 12
    assert sum(1 for _ in graph_isomorphisms(cycle(6), cycle(6))) == 12


def test_weights_distinguish():
    a = WeightedGraph.build(["x", "y"], [make_edge("e", ["x", "y"], {"x": 2, "y": 1})])
    b = WeightedGraph.build(["x", "y"], [make_edge("e", ["x", "y"], {"x": 3, "y": 1})])
    assert graph_isomorphism(a, b) is None
    m = graph_isomorphism(a, relabel(a, random.Random(0)))
    assert m is not None


def test_digraph_root_respected():
    D = WeightedDigraph.build(["x", "y"], [Arc("a", "x", "y", 1)], root="x")
    E = WeightedDigraph.build(["x", "y"], [Arc("a", "y", "x", 1)], root="x")
    assert digraph_isomorphism(D, E) is None
    assert digraph_isomorphism(D, E, rooted=False) is not None


def test_agrees_with_brute_force():
    rng = random.Random(51)
    for _ in range(150):
        a = random_simple_graph(rng, 6, connected=False)
        b = relabel(a, rng) if rng.random() < 0.5 else random_simple_graph(rng, 6, connected=False)
        if len(a.vertices) != len(b.vertices):
            continue
        got = graph_isomorphism(a, b)
        assert (got is not None) == has_isomorphism_brute(a.vertices, pairs(a), b.vertices, pairs(b))
        if got is not None:
            assert {frozenset(got[v] for v in p) for p in pairs(a)} == {frozenset(p) for p in pairs(b)}
