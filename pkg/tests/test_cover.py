import random

import pytest

from coverlab.cover import (
    LOOP,
    MINUS,
    PLUS,
    covering_equivalence,
    degree_partition,
    election_check,
    fuse,
    is_covering,
    kronecker_k2,
    minimize,
    norris_uc_crosscheck,
    same_universal_cover,
    sym,
    uc_truncate,
)
from coverlab.families import (
    complete_bipartite,
    cycle,
    hub_triangles,
    path,
    random_connected_graph,
    random_simple_graph,
    wheel6,
)
from coverlab.graphs import CoverlabError, GraphHom, WeightedGraph, make_edge
from coverlab.isomorphism import digraph_isomorphism, graph_isomorphism
from coverlab.spectra import weight_matrix
from coverlab.treecanon import LEAF, from_nested, normalize, tree_equal
from coverlab.unfold import unfold_truncate
from coverlab.weights import OMEGA

from helpers import random_lift, random_multigraph
from oracles import ahu, expand_canonical, nonbacktracking_tree


def G(vertices, edges):
    return WeightedGraph.build(vertices, [make_edge(*e) for e in edges])


# -- fuse -------------------------------------------------------------------

def test_fuse_parallel_edges():
    M = G(["x", "y"], [("a", ["x", "y"]), ("b", ["x", "y"]), ("c", ["x", "y"])])
    W, h = fuse(M)
    assert [(e.ends, e.weights) for e in W.edges] == [(("x", "y"), (3, 3))]
    assert is_covering(h, M, W)


def test_fuse_simple_is_identity():
    C = cycle(5)
    W, h = fuse(C)
    assert W == C and is_covering(h, C, W)


def test_fuse_loops():
    M = G(["x"], [("a", ["x"]), ("b", ["x"])])
    W, h = fuse(M)
    assert [(e.ends, e.weights) for e in W.edges] == [(("x",), (2,))]
    assert is_covering(h, M, W)


# -- sym --------------------------------------------------------------------

def test_sym_edge_and_loop():
    H = G(["x", "y"], [("e", ["x", "y"], {"x": 3, "y": 2}), ("l", ["x"], [5])])
    S = sym(H)
    arcs = {a.id: (a.tail, a.head, a.weight) for a in S.digraph.arcs}
    assert arcs == {"e+": ("x", "y", 3), "e-": ("y", "x", 2), "l~": ("x", "x", 5)}
    assert S.arc_tag["e+"] == ("e", PLUS) and S.arc_tag["e-"] == ("e", MINUS) and S.arc_tag["l~"] == ("l", LOOP)


def test_sym_relabel_invariance():
    rng = random.Random(2)
    for _ in range(50):
        H = random_connected_graph(rng, 5)
        perm = list(H.vertices)
        rng.shuffle(perm)
        ren = dict(zip(H.vertices, [f"z{p}" for p in perm]))
        H2 = WeightedGraph.build(
            [ren[v] for v in H.vertices],
            [make_edge(e.id, [ren[v] for v in e.ends], {ren[v]: w for v, w in zip(e.ends, e.weights)}) for e in H.edges],
        )
        assert digraph_isomorphism(sym(H).digraph, sym(H2).digraph, rooted=False) is not None


# -- universal cover truncations --------------------------------------------

def test_uc_loop_weight_two():
    H = G(["v"], [("l", ["v"], [2])])
    t = uc_truncate(H, "v", 3)
    # root: 2 children, below that a single path
    assert ahu(expand_canonical(t)) == ahu([[[[]]], [[[]]]])


def test_uc_omega_star():
    H = G(["x", "y"], [("e", ["x", "y"], {"x": OMEGA, "y": 1})])
    assert uc_truncate(H, "x", 2) is normalize([(LEAF, OMEGA)])


def test_uc_edge_four_three():
    H = G(["x", "y"], [("e", ["x", "y"], {"x": 4, "y": 3})])
    t = uc_truncate(H, "x", 2)
    assert t is normalize([(normalize([(LEAF, 2)]), 4)])


def test_uc_requires_connected():
    H = G(["x", "y"], [("l", ["x"])])
    with pytest.raises(CoverlabError, match="connected"):
        uc_truncate(H, "x", 1)
    with pytest.raises(CoverlabError):
        uc_truncate(cycle(3), "nope", 1)


def test_uc_matches_nonbacktracking_walks():
    rng = random.Random(8)
    for _ in range(80):
        H = random_connected_graph(rng, 5, weights=(1,), loop_prob=0.2)
        for v in H.vertices:
            got = expand_canonical(uc_truncate(H, v, 4))
            assert ahu(got) == ahu(nonbacktracking_tree(H, v, 4))


def test_uc_of_fused_multigraph_matches_walks():
    # parallel edges become weights; the walk tree of the multigraph must agree
    rng = random.Random(12)
    for _ in range(40):
        M = random_multigraph(rng, 4)
        W, _ = fuse(M)
        for v in M.vertices:
            assert ahu(expand_canonical(uc_truncate(W, v, 3))) == ahu(nonbacktracking_tree(M, v, 3))


def test_pruned_unfolding_consistency():
    """Unfolding the symmetric digraph of an explicit universal-cover
    truncation equals the unfolding of the symmetric digraph of H."""
    rng = random.Random(10)
    for _ in range(40):
        H = random_connected_graph(rng, 4, weights=(1, 2, 3), extra_prob=0.3)
        for x in H.vertices:
            d = 3
            explicit = expand_canonical(uc_truncate(H, x, d))
            verts, edges = ["r"], []

            def add(node, name):
                for i, child in enumerate(node):
                    cname = f"{name}.{i}"
                    verts.append(cname)
                    edges.append(make_edge("e" + cname, [name, cname]))
                    add(child, cname)

            add(explicit, "r")
            T = WeightedGraph.build(verts, edges)
            lhs = unfold_truncate(sym(T).digraph, d, root="r")
            rhs = unfold_truncate(sym(H).digraph, d, root=x)
            assert tree_equal(lhs, rhs)


# -- coverings --------------------------------------------------------------

def test_covering_onto_loop_seven():
    src = G(["x", "y"], [("e", ["x", "y"], {"x": 3, "y": 2}), ("f", ["x"], [4]), ("g", ["y"], [5])])
    dst = G(["o"], [("l", ["o"], [7])])
    h = GraphHom({"x": "o", "y": "o"}, {"e": "l", "f": "l", "g": "l"})
    assert is_covering(h, src, dst)


def test_identity_covering():
    C = cycle(4)
    assert is_covering(GraphHom.identity(C), C, C)


def test_k34_covers_weighted_edge():
    K = complete_bipartite(3, 4)
    E = G(["x", "y"], [("e", ["x", "y"], {"x": 4, "y": 3})])
    h = GraphHom({v: ("x" if v.startswith("l") else "y") for v in K.vertices}, {e.id: "e" for e in K.edges})
    assert is_covering(h, K, E)
    bad = GraphHom({v: ("y" if v.startswith("l") else "x") for v in K.vertices}, {e.id: "e" for e in K.edges})
    assert not is_covering(bad, K, E)


def test_malformed_hom():
    C = cycle(3)
    with pytest.raises(CoverlabError):
        is_covering(GraphHom({}, {}), C, C)


def test_covering_composition():
    rng = random.Random(14)
    for _ in range(40):
        M = random_multigraph(rng, 3)
        H, b = random_lift(rng, M, rng.randint(1, 3), "h")
        Gr, a = random_lift(rng, H, rng.randint(1, 2), "g")
        assert is_covering(b, H, M) and is_covering(a, Gr, H)
        assert is_covering(a.then(b), Gr, M)


# -- equivalence and minimization -------------------------------------------

def test_cycle_single_class():
    for n in (3, 4, 5, 6):
        C = cycle(n)
        assert len(covering_equivalence(C).blocks) == 1
        t = {uc_truncate(C, v, n - 1) for v in C.vertices}
        assert len(t) == 1


def test_path_classes():
    P = G(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])
    assert covering_equivalence(P).blocks == (("a", "c"), ("b",))


def test_single_vertex_loop_class():
    assert covering_equivalence(G(["v"], [("l", ["v"], [2])])).blocks == (("v",),)


def test_minimize_examples():
    for g in (wheel6(), hub_triangles()):
        B, h = minimize(g)
        assert weight_matrix(B) == [[0, 6], [1, 2]]
        assert is_covering(h, g, B)
    B, h = minimize(cycle(6))
    assert [(e.ends, e.weights) for e in B.edges] == [(("v0",), (2,))]


def test_minimize_requires_connected():
    with pytest.raises(CoverlabError):
        minimize(G(["a", "b"], [("l", ["a"])]))


def test_minimize_idempotent_and_covering():
    rng = random.Random(6)
    for _ in range(80):
        H = random_connected_graph(rng, 6)
        B, h = minimize(H)
        assert is_covering(h, H, B)
        B2, _ = minimize(B)
        assert graph_isomorphism(B, B2) is not None
        assert len(B2.vertices) == len(B.vertices)


def test_same_universal_cover_examples():
    assert same_universal_cover(wheel6(), hub_triangles())
    assert same_universal_cover(cycle(4), cycle(6))
    assert not same_universal_cover(cycle(6), complete_bipartite(3, 4))


def test_same_universal_cover_routes_agree_random():
    # same_universal_cover raises if its two computations disagree
    rng = random.Random(15)
    for _ in range(60):
        A = random_connected_graph(rng, 4, weights=(1, 2))
        B = random_connected_graph(rng, 4, weights=(1, 2))
        same_universal_cover(A, B)
        M = random_multigraph(rng, 3)
        L1, _ = random_lift(rng, M, 2, "a")
        L2, _ = random_lift(rng, M, 3, "b")
        if L1.is_connected() and L2.is_connected():
            assert same_universal_cover(L1, L2)


def test_norris_uc_examples():
    C = cycle(3)
    assert tuple(norris_uc_crosscheck(C, "v0", "v1")) == (True, True, 2)
    P = G(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])])
    assert tuple(norris_uc_crosscheck(P, "a", "b")) == (False, False, 2)


# -- kronecker --------------------------------------------------------------

def test_kronecker_loop():
    H = G(["o"], [("l", ["o"], [5])])
    K, h = kronecker_k2(H)
    assert [(e.ends, e.weights) for e in K.edges] == [(("(o,1)", "(o,2)"), (5, 5))]
    assert is_covering(h, K, H)


def test_kronecker_triangle_is_hexagon():
    K, h = kronecker_k2(cycle(3))
    assert K.is_connected() and is_covering(h, K, cycle(3))
    assert graph_isomorphism(K, cycle(6)) is not None


def test_kronecker_bipartite_splits():
    P = path(3)
    K, h = kronecker_k2(P)
    comps = K.components()
    assert len(comps) == 2
    for comp in comps:
        sub = K.induced(comp)
        hh = GraphHom({v: h.vertex_map[v] for v in sub.vertices}, {e.id: h.edge_map[e.id] for e in sub.edges})
        assert is_covering(hh, sub, P)


# -- degree partition -------------------------------------------------------

def test_degree_partition_wheel():
    d = degree_partition(wheel6())
    assert d.partition.blocks == (("a",), tuple("bcdefg"))
    assert d.matrix == [[0, 6], [1, 2]]
    assert is_covering(d.hom, wheel6(), d.base)


def test_degree_partition_regular():
    d = degree_partition(complete_bipartite(3, 3))
    assert len(d.partition.blocks) == 1 and d.matrix == [[3]]


def test_degree_partition_path():
    d = degree_partition(G(["a", "b", "c"], [("e1", ["a", "b"]), ("e2", ["b", "c"])]))
    assert d.partition.blocks == (("a", "c"), ("b",))
    assert d.matrix == [[0, 1], [2, 0]]


def test_degree_partition_rejects_weights():
    with pytest.raises(CoverlabError):
        degree_partition(G(["x", "y"], [("e", ["x", "y"], {"x": 2, "y": 1})]))


def test_degree_partition_equals_covering_equivalence():
    rng = random.Random(16)
    for _ in range(150):
        g = random_simple_graph(rng, 8, connected=rng.random() < 0.7)
        d = degree_partition(g)
        assert d.partition == covering_equivalence(g)
        assert is_covering(d.hom, g, d.base)
        assert weight_matrix(d.base, [b[0] for b in d.partition.blocks]) == d.matrix


# -- election ---------------------------------------------------------------

def test_election_examples():
    v = election_check(cycle(5))
    assert not v.solvable and v.ambiguous_classes == [tuple(f"v{i}" for i in range(5))]
    lp = G(["x", "y", "z"], [("l", ["x"]), ("e1", ["x", "y"]), ("e2", ["y", "z"])])
    assert election_check(lp).solvable
    se = election_check(G(["x", "y"], [("e", ["x", "y"])]))
    assert not se.solvable and se.ambiguous_classes == [("x", "y")]


def test_election_errors():
    with pytest.raises(CoverlabError):
        election_check(G(["x", "y", "z"], [("e", ["x", "y"])]))
    with pytest.raises(CoverlabError):
        election_check(G(["x", "y"], [("e", ["x", "y"], {"x": 2, "y": 1})]))


def test_from_nested_used_for_cover_trees():
    # path x-y-z with a loop at x: its cover is a 6-vertex path, arms of length 3 and 2 from x
    lp = G(["x", "y", "z"], [("l", ["x"]), ("e1", ["x", "y"]), ("e2", ["y", "z"])])
    assert uc_truncate(lp, "x", 5) is from_nested([[[[]]], [[]]])
