# Characteristic polynomials of a weighted graph divide those of its covers.
#
# A covering with vertex map vmap makes the weight matrices commute with the
# 0/1 matrix of vmap.  Column and row operations then split the cover's
# shifted matrix into block triangular form with the base's in the corner.
from coverlab.cover import kronecker_k2
from coverlab.families import complete_bipartite, from_matrix
from coverlab.spectra import (
    block_triangularize,
    charpoly,
    cover_products,
    graph_charpoly,
    matrix_cover_check,
    poly_divides,
)

MH = [[1, 3], [2, 0]]
# vertices 1,2 over the first base vertex, 3,4,5 over the second
MG = [
    [0, 1, 1, 1, 1],
    [1, 0, 1, 1, 1],
    [1, 1, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 1, 0, 0, 0],
]
vmap = [0, 0, 1, 1, 1]
print("covering?", matrix_cover_check(MG, MH, vmap))
print("both products:", cover_products(MG, MH, vmap)[0])

pH, pG = charpoly(MH), charpoly(MG)
print("base polynomial: ", pH)
print("cover polynomial:", pG)
bf = block_triangularize(MG, MH, vmap)
print("det S =", bf.det_s, "| factorization checks:", bf.check)
print("base divides cover?", poly_divides(pH, pG))

# doubling a graph with an edge: P(x) * P(-x) up to sign
H = from_matrix([[1, 2], [3, 2]])
K, _ = kronecker_k2(H)
P = graph_charpoly(H)
print("double:", graph_charpoly(K), "==", P * P.negate_variable())

# K(3,4) covers the weighted edge (4,3)
print("K(3,4):", graph_charpoly(complete_bipartite(3, 4)))
print("edge (4,3):", charpoly([[0, 4], [3, 0]]))
print("divides?", poly_divides(charpoly([[0, 4], [3, 0]]), graph_charpoly(complete_bipartite(3, 4))))
