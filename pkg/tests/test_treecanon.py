import random
import threading

from hypothesis import given, settings, strategies as st

from coverlab.graphs import Arc, WeightedDigraph
from coverlab.treecanon import (
    LEAF,
    from_nested,
    normalize,
    render_lines,
    tree_equal,
    tree_order,
    truncate,
)
from coverlab.unfold import unfold_truncate
from coverlab.weights import OMEGA

from oracles import ahu, expand_canonical, tree_size


def test_merge_identical_children():
    t = normalize([(LEAF, 2), (LEAF, 3)])
    assert t.children == ((LEAF, 5),)


def test_omega_absorbs():
    t = normalize([(LEAF, OMEGA), (LEAF, 1)])
    assert t.children == ((LEAF, OMEGA),)


def test_order_insensitive():
    a = normalize([(LEAF, 1)])
    b = normalize([(LEAF, 2)])
    assert normalize([(a, 1), (b, 3), (LEAF, 2)]) is normalize([(LEAF, 2), (b, 3), (a, 1)])


def test_equal_examples():
    assert tree_equal(LEAF, normalize([]))
    assert not tree_equal(normalize([(LEAF, 2)]), normalize([(LEAF, 3)]))


def test_unary_paths_from_two_loops_agree():
    D = WeightedDigraph.build(["p", "q"], [Arc("a", "p", "p", 1), Arc("b", "q", "q", 1)])
    tp = unfold_truncate(D, 3, root="p")
    tq = unfold_truncate(D, 3, root="q")
    assert tree_equal(tp, tq)
    # oracle: the unary chain of length 3 written out by hand
    assert ahu(expand_canonical(tp)) == ahu([[[[]]]])


def test_order_examples():
    t = normalize([(LEAF, 1)])
    assert tree_order(LEAF, t) == -1 and tree_order(t, LEAF) == 1
    assert tree_order(t, t) == 0
    # finite multiplicity sorts below omega
    assert tree_order(normalize([(LEAF, 10 ** 9)]), normalize([(LEAF, OMEGA)])) == -1


def random_tree(rng, depth, omega=True):
    if depth == 0 or rng.random() < 0.25:
        return LEAF
    kids = []
    for _ in range(rng.randint(1, 3)):
        m = OMEGA if omega and rng.random() < 0.1 else rng.randint(1, 3)
        kids.append((random_tree(rng, depth - 1, omega), m))
    return normalize(kids)


def test_total_order_on_random_pairs():
    rng = random.Random(7)
    trees = [random_tree(rng, 4) for _ in range(200)]
    pairs = [(rng.choice(trees), rng.choice(trees)) for _ in range(1000)]
    for a, b in pairs:
        assert tree_order(a, b) == -tree_order(b, a)
        assert (tree_order(a, b) == 0) == tree_equal(a, b)
    # transitivity on a sample of triples
    for _ in range(1000):
        a, b, c = rng.choice(trees), rng.choice(trees), rng.choice(trees)
        if tree_order(a, b) <= 0 and tree_order(b, c) <= 0:
            assert tree_order(a, c) <= 0


def test_normalize_idempotent():
    rng = random.Random(3)
    for _ in range(100):
        t = random_tree(rng, 4)
        assert normalize(t.children, t.label) is t


def test_equality_matches_expanded_isomorphism():
    rng = random.Random(11)
    trees = []
    while len(trees) < 150:
        t = random_tree(rng, 4, omega=False)
        if t.node_count() <= 500:
            trees.append(t)
    for _ in range(600):
        a, b = rng.choice(trees), rng.choice(trees)
        assert tree_equal(a, b) == (ahu(expand_canonical(a)) == ahu(expand_canonical(b)))


@settings(max_examples=150, deadline=None)
@given(st.recursive(st.just([]), lambda kids: st.lists(kids, max_size=3), max_leaves=25))
def test_from_nested_is_isomorphism_invariant(tree):
    rng = random.Random(len(str(tree)))

    def shuffled(t):
        out = [shuffled(c) for c in t]
        rng.shuffle(out)
        return out

    a, b = from_nested(tree), from_nested(shuffled(tree))
    assert a is b
    assert ahu(expand_canonical(a)) == ahu(tree)
    assert a.node_count() == tree_size(tree)


def test_truncate_and_render():
    chain = from_nested([[[[]]]])
    assert truncate(chain, 1) is from_nested([[]])
    assert truncate(chain, 10) is chain
    t = normalize([(normalize([(LEAF, OMEGA)]), 2)])
    assert render_lines(t) == ["*", "  2x", "    wx"]
    assert t.node_count() is OMEGA


def test_concurrent_interning():
    results = []

    def work():
        results.append(from_nested([[[], []], [[]], []]))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(r is results[0] for r in results)
