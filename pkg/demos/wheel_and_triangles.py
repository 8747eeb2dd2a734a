# Two different 7-vertex graphs with the same universal cover.
#
# The wheel joins a hub to a 6-cycle; the other graph joins a hub to two
# triangles.  Every rim vertex has one hub neighbour and two rim
# neighbours in both, so both graphs cover the same 2-vertex weighted base.
from coverlab.cover import covering_equivalence, degree_partition, minimize, same_universal_cover, uc_truncate
from coverlab.families import hub_triangles, wheel6
from coverlab.graphs import WeightedGraph, make_edge
from coverlab.isomorphism import graph_isomorphism
from coverlab.spectra import weight_matrix
from coverlab.treecanon import render_lines

W, T = wheel6(), hub_triangles()
print("isomorphic?", graph_isomorphism(W, T) is not None)

# minimize quotients each graph by covering equivalence
for g in (W, T):
    base, h = minimize(g)
    print(g.name, "base vertices", base.vertices, "matrix", weight_matrix(base))
    print("  hub and rim map to", h.vertex_map["a"], h.vertex_map["b"])

print("same universal cover?", same_universal_cover(W, T))

# for unweighted graphs the degree partition gives the same classes
d = degree_partition(T)
print("degree partition", d.partition.blocks, "degree matrix", d.matrix)

# the first levels of the common universal cover, seen from the hub
for line in render_lines(uc_truncate(W, "a", 3)):
    print("  ", line)

# Join the two hubs by an edge.  The hubs stay covering-equivalent but no
# automorphism can swap them: one sits on a 6-cycle, the other on triangles.
vs = [f"W{v}" for v in W.vertices] + [f"T{v}" for v in T.vertices]
edges = [make_edge(f"W{e.id}", [f"W{v}" for v in e.ends]) for e in W.edges]
edges += [make_edge(f"T{e.id}", [f"T{v}" for v in e.ends]) for e in T.edges]
edges.append(make_edge("bridge", ["Wa", "Ta"]))
U = WeightedGraph.build(vs, edges)
print("joined graph classes:", covering_equivalence(U).blocks)
print("automorphism swapping hubs:", graph_isomorphism(U, U, fixed={"Wa": "Ta"}))
