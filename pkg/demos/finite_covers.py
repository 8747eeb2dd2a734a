# Which weighted graphs are covered by a finite ordinary graph?
#
# A cover with n[x] vertices over each vertex x needs, for every edge x-y,
# (weight at x) * n[x] == (weight at y) * n[y].  The solver propagates ratios over a spanning tree and
# reports a cycle whose ratios do not multiply to 1 when there is no solution.
from coverlab.cover import fuse, is_covering, same_universal_cover
from coverlab.families import complete_bipartite, cycle, from_matrix
from coverlab.finite_cover import build_finite_cover, common_cover_pullback, finite_cover_solve
from coverlab.graphs import GraphHom, WeightedGraph, make_edge

# an edge with half-weights 3 and 2 plus a loop at the first end
H = from_matrix([[1, 3], [2, 0]])
res = finite_cover_solve(H)
print("multiplicities", res.multiplicities)
G, h = build_finite_cover(H, res.multiplicities)
print("cover:", len(G.vertices), "vertices,", len(G.edges), "edges; covering?", is_covering(h, G, H))
G2, h2 = build_finite_cover(H, res.multiplicities, loop_free=True)
print("loop-free version:", len(G2.vertices), "vertices; covering?", is_covering(h2, G2, H))

# a weighted triangle with no finite cover
bad = from_matrix([[0, 2, 5], [3, 0, 4], [1, 3, 0]])
res = finite_cover_solve(bad)
print("solvable?", res.solvable, "cycle", res.failure_cycle, "ratio product", res.failure_ratio)

# weight 4 on one side and 3 on the other.  The built cover has 3 + 4
# vertices but bundles parallel edges, so it is not K(3,4) itself; it
# still has the same universal cover.
E = WeightedGraph.build(["x", "y"], [make_edge("e", ["x", "y"], {"x": 4, "y": 3})])
K, _ = build_finite_cover(E, finite_cover_solve(E).multiplicities)
print("fused cover edges:", [(e.ends, e.weights) for e in fuse(K)[0].edges][:3], "...")
print("same universal cover as K(3,4)?", same_universal_cover(K, complete_bipartite(3, 4)))

# two cycles over the 2-vertex bond: their fibre product is a 12-cycle
bond = WeightedGraph.build(["u", "v"], [make_edge("p", ["u", "v"]), make_edge("q", ["u", "v"])])


def to_bond(n):
    C = cycle(n)
    vmap = {f"v{i}": "uv"[i % 2] for i in range(n)}
    emap = {f"e{i}": "pq"[i % 2] for i in range(n)}
    return C, GraphHom(vmap, emap)


(C4, a), (C6, b) = to_bond(4), to_bond(6)
P = common_cover_pullback(C4, C6, bond, a, b)
print("pullback:", len(P.graph.vertices), "vertices in", len(P.components), "component(s)")
print("covers both?", is_covering(P.to_g, P.graph, C4), is_covering(P.to_h, P.graph, C6))
