# Weighted digraphs with the same complete unfolding.
#
# A weight k on an arc stands for k parallel copies, omega for infinitely
# many.  Partition refinement on summed out-weights finds the vertices whose
# unfoldings agree; depth |V|-1 truncations agree exactly on those pairs.
from coverlab.graphs import Arc, WeightedDigraph
from coverlab.treecanon import render_lines
from coverlab.unfold import (
    canonical_quotient,
    common_unfolding,
    norris_crosscheck,
    refine,
    unfold_truncate,
)
from coverlab.weights import OMEGA

# a 3-cycle and a 2-cycle unfold to the same infinite path
C3 = WeightedDigraph.build(["1", "2", "3"], [Arc("a", "1", "2", 1), Arc("b", "2", "3", 1), Arc("c", "3", "1", 1)], root="1")
C2 = WeightedDigraph.build(["p", "q"], [Arc("a", "p", "q", 1), Arc("b", "q", "p", 1)], root="p")
Q, h = canonical_quotient(C3)
print("quotient of the 3-cycle:", [(a.tail, a.head, a.weight) for a in Q.arcs])
res = common_unfolding(C2, C3)
print("common unfolding has", len(res.digraph.vertices), "vertices")

# parallel arcs fuse into weights, and omega absorbs finite weights
D = WeightedDigraph.build(
    ["r", "s", "t"],
    [Arc("x1", "r", "s", 1), Arc("x2", "r", "s", 1), Arc("y", "r", "t", 2), Arc("z", "s", "s", OMEGA), Arc("w", "t", "t", OMEGA)],
    root="r",
)
trace = refine(D)
print("refinement rounds:", [p.blocks for p in trace.rounds])
Q, _ = canonical_quotient(D)
print("quotient arcs:", sorted((a.tail, a.head, str(a.weight)) for a in Q.arcs))
for line in render_lines(unfold_truncate(D, 2)):
    print("  ", line)
print(norris_crosscheck(D, "s", "t"))
