"""Regenerate the JSON fixtures in this directory.

    python3 fixtures/make_fixtures.py
"""

import os

from coverlab.families import complete_bipartite, cycle, from_matrix, hub_triangles, wheel6
from coverlab.fileformat import dumps, graph_to_json, hom_to_json
from coverlab.graphs import Arc, GraphHom, WeightedDigraph, WeightedGraph, make_edge
from coverlab.weights import OMEGA

HERE = os.path.dirname(os.path.abspath(__file__))


def write(name, obj):
    with open(os.path.join(HERE, name), "w") as fh:
        fh.write(dumps(obj))


def graph(name, g, kind=None):
    write(name + ".json", graph_to_json(g, kind))


def main():
    # weighted base with matrix [[1,3],[2,0]] and a 5-vertex graph covering it
    H = WeightedGraph.build(["1", "2"], [make_edge("e", ["1", "2"], {"1": 3, "2": 2}),
                                         make_edge("l", ["1"], [1])], name="edge_3_2_loop")
    graph("edge_3_2_loop", H)
    G_edges = [("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("2", "3"), ("2", "4"), ("2", "5")]
    G = WeightedGraph.build(list("12345"), [make_edge(f"e{a}{b}", [a, b]) for a, b in G_edges], name="five_cover")
    graph("five_cover", G, "graph")
    side = {"1": "1", "2": "1", "3": "2", "4": "2", "5": "2"}
    write("five_cover_hom.json", hom_to_json(GraphHom(side, {f"e{a}{b}": ("l" if b == "2" else "e") for a, b in G_edges})))

    graph("triangle_no_cover", from_matrix([[0, 2, 5], [3, 0, 4], [1, 3, 0]], name="triangle_no_cover"))
    graph("wheel6", wheel6(), "graph")
    graph("hub_triangles", hub_triangles(), "graph")
    graph("c5", cycle(5, name="c5"), "graph")
    graph("c4", cycle(4, name="c4"), "graph")
    graph("c6", cycle(6, name="c6"), "graph")
    graph("k34", complete_bipartite(3, 4, name="k34"), "graph")
    graph("edge_4_3", WeightedGraph.build(["x", "y"], [make_edge("e", ["x", "y"], {"x": 4, "y": 3})], name="edge_4_3"))
    graph("single_edge", WeightedGraph.build(["x", "y"], [make_edge("e", ["x", "y"])], name="single_edge"), "graph")
    graph("loop_path", WeightedGraph.build(["x", "y", "z"], [make_edge("l", ["x"]), make_edge("e1", ["x", "y"]),
                                                             make_edge("e2", ["y", "z"])], name="loop_path"), "graph")
    graph("star_omega", WeightedGraph.build(["x", "y"], [make_edge("e", ["x", "y"], {"x": OMEGA, "y": 1})],
                                            name="star_omega"))
    graph("loop7", WeightedGraph.build(["o"], [make_edge("l", ["o"], [7])], name="loop7"))
    two = WeightedGraph.build(["x", "y"], [make_edge("e", ["x", "y"], {"x": 3, "y": 2}), make_edge("f", ["x"], [4]),
                                           make_edge("g", ["y"], [5])], name="loop_pair")
    graph("loop_pair", two)
    write("loop_pair_hom.json", hom_to_json(GraphHom({"x": "o", "y": "o"}, {"e": "l", "f": "l", "g": "l"})))

    # two parallel edges and alternating maps from even cycles
    M = WeightedGraph.build(["u", "v"], [make_edge("p", ["u", "v"]), make_edge("q", ["u", "v"])], name="bond2")
    graph("bond2", M, "multigraph")
    for n in (4, 6):
        write(f"c{n}_to_bond2.json", hom_to_json(GraphHom(
            {f"v{i}": "uv"[i % 2] for i in range(n)}, {f"e{i}": "pq"[i % 2] for i in range(n)})))

    # digraphs
    def dg(name, vs, arcs, root=None):
        write(name + ".json", graph_to_json(WeightedDigraph.build(vs, [Arc(*a) for a in arcs], root=root, name=name)))

    dg("dloop1", ["x"], [("a", "x", "x", 1)], root="x")
    dg("dloop2", ["x"], [("a", "x", "x", 2)], root="x")
    dg("dcycle2", ["1", "2"], [("a", "1", "2", 1), ("b", "2", "1", 1)], root="1")
    dg("dcycle3", ["1", "2", "3"], [("a", "1", "2", 1), ("b", "2", "3", 1), ("c", "3", "1", 1)], root="1")
    dg("dstar_omega", ["x", "y"], [("a", "x", "y", OMEGA)], root="x")
    dg("dparallel", ["x", "y"], [("a", "x", "y", 1), ("b", "x", "y", 1), ("c", "y", "y", 1)], root="x")
    dg("dloops12", ["a", "b"], [("la", "a", "a", 1), ("lb", "b", "b", 2)])

    write("bad_weight.json", {"kind": "graph", "vertices": ["x", "y"],
                              "edges": [{"id": "e", "ends": ["x", "y"], "weights": {"x": 0, "y": 1}}]})


if __name__ == "__main__":
    main()
