"""Coverings of weighted graphs and their universal covers.

Universal-cover questions are reduced to unfoldings: a weighted graph ``H``
is turned into its symmetric weighted digraph (one arc per half-edge), and
the universal cover from ``x`` is the unfolding from ``x`` with immediate
backtracking along the same edge removed once.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Mapping, NamedTuple, Optional, Tuple

from . import unfold
from .graphs import (
    Arc,
    CoverlabError,
    GraphHom,
    WeightedDigraph,
    WeightedGraph,
    disjoint_union_graphs,
    make_edge,
    pair_id,
    require_connected,
    require_valid,
)
from .isomorphism import graph_isomorphism
from .treecanon import CanonicalTree, normalize, tree_equal
from .weights import weight_sub, weight_sum
from .witness import Partition

PLUS, MINUS, LOOP = "plus", "minus", "loop"
_SUFFIX = {PLUS: "+", MINUS: "-", LOOP: "~"}


@dataclass(frozen=True)
class SymDigraph:
    digraph: WeightedDigraph
    arc_tag: Mapping[str, Tuple[str, str]]

    def reverse_tag(self, tag: Tuple[str, str]) -> Tuple[str, str]:
        edge, kind = tag
        return (edge, {PLUS: MINUS, MINUS: PLUS, LOOP: LOOP}[kind])


def fuse(G: WeightedGraph) -> Tuple[WeightedGraph, GraphHom]:
    """Fuse parallel edges (and parallel loops) of an unweighted multigraph.

    Each fused edge gets, at both ends, the number of edges it replaces.
    Fused edges are named after the smallest id in their group.  The
    returned homomorphism is a covering of the fused graph by ``G``.
    """
    require_valid(G, multigraph=True)
    if not G.is_unweighted:
        raise CoverlabError("fuse expects an unweighted multigraph")
    groups: Dict[Tuple[str, ...], List[str]] = defaultdict(list)
    for e in G.edges:
        groups[e.ends].append(e.id)
    edges, emap = [], {}
    for ends, ids in groups.items():
        name = min(ids)
        edges.append(make_edge(name, ends, [len(ids)] * len(ends)))
        for i in ids:
            emap[i] = name
    W = WeightedGraph.build(G.vertices, edges, name=G.name)
    return W, GraphHom({v: v for v in G.vertices}, emap)


def sym(H: WeightedGraph) -> SymDigraph:
    """Symmetric weighted digraph: for an edge e between x < y, an arc
    ``e+`` x->y weighted by the half at x and ``e-`` y->x weighted by the
    half at y; a loop gives a single arc ``e~``."""
    require_valid(H, multigraph=True)
    arcs, tags = [], {}
    for e in H.edges:
        if e.is_loop:
            v = e.ends[0]
            halves = [(LOOP, v, v, e.weights[0])]
        else:
            (x, y), (wx, wy) = e.ends, e.weights
            halves = [(PLUS, x, y, wx), (MINUS, y, x, wy)]
        for kind, t, h, w in halves:
            aid = e.id + _SUFFIX[kind]
            arcs.append(Arc(aid, t, h, w))
            tags[aid] = (e.id, kind)
    D = WeightedDigraph.build(H.vertices, arcs, name=H.name)
    return SymDigraph(D, tags)


def uc_truncate(H: WeightedGraph, x: str, depth: int) -> CanonicalTree:
    """Canonical form of the universal cover of ``H`` rooted at ``x``,
    truncated at ``depth``.

    Walk the symmetric digraph remembering the arc used to arrive; the arc
    reversing it (same edge, other direction; a loop reverses to itself)
    loses one unit of multiplicity, and omega - 1 = omega.
    """
    require_valid(H, multigraph=True)
    if x not in H.vertices:
        raise CoverlabError(f"unknown vertex {x!r}")
    require_connected(H)
    if depth < 0:
        raise CoverlabError("depth must be >= 0")
    S = sym(H)
    D = S.digraph
    memo: Dict[tuple, CanonicalTree] = {}

    def go(v: str, came: Optional[Tuple[str, str]], d: int) -> CanonicalTree:
        key = (v, came, d)
        t = memo.get(key)
        if t is not None:
            return t
        if d == 0:
            t = normalize(())
        else:
            back = S.reverse_tag(came) if came is not None else None
            kids = []
            for a in D.out_arcs(v):
                tag = S.arc_tag[a.id]
                m = weight_sub(a.weight, 1) if tag == back else a.weight
                if m == 0:
                    continue
                kids.append((go(a.head, tag, d - 1), m))
            t = normalize(kids)
        memo[key] = t
        return t

    states = [(None, v) for v in H.vertices] + [(t, a.head) for a in D.arcs for t in [S.arc_tag[a.id]]]
    for d in range(depth):
        for came, v in states:
            go(v, came, d)
    return go(x, None, depth)


def _check_graph_hom(h: GraphHom, G: WeightedGraph, H: WeightedGraph) -> None:
    if set(h.vertex_map) != set(G.vertices):
        raise CoverlabError("homomorphism vertex map must cover exactly the source vertices")
    if set(h.edge_map) != {e.id for e in G.edges}:
        raise CoverlabError("homomorphism edge map must cover exactly the source edges")
    hv, he = set(H.vertices), {e.id for e in H.edges}
    for v, w in h.vertex_map.items():
        if w not in hv:
            raise CoverlabError(f"vertex {v} mapped to unknown vertex {w}")
    for e, f in h.edge_map.items():
        if f not in he:
            raise CoverlabError(f"edge {e} mapped to unknown edge {f}")


def is_graph_homomorphism(h: GraphHom, G: WeightedGraph, H: WeightedGraph) -> bool:
    """Incidence preservation; a non-loop may map onto a loop."""
    _check_graph_hom(h, G, H)
    for e in G.edges:
        f = H.edge(h.edge_map[e.id])
        img = sorted(h.vertex_map[v] for v in e.ends)
        if f.is_loop:
            if set(img) != {f.ends[0]}:
                return False
        elif e.is_loop or tuple(img) != f.ends:
            return False
    return True


def is_covering(h: GraphHom, G: WeightedGraph, H: WeightedGraph) -> bool:
    """Surjective homomorphism such that at every vertex x of G and every
    half-edge (e, h(x)) of H, the weight of that half-edge is the omega-sum
    of the weights of the half-edges at x mapped to e."""
    if not is_graph_homomorphism(h, G, H):
        return False
    if set(h.vertex_map.values()) != set(H.vertices):
        return False
    if set(h.edge_map.values()) != {e.id for e in H.edges}:
        return False
    for x in G.vertices:
        y = h.vertex_map[x]
        pre: Dict[str, list] = defaultdict(list)
        for e in G.incident(x):
            pre[h.edge_map[e.id]].append(e.weight_at(x))
        for f in H.incident(y):
            if weight_sum(pre.pop(f.id, [])) != f.weight_at(y):
                return False
        if pre:
            return False
    return True


def covering_equivalence(H: WeightedGraph) -> Partition:
    """x ~ y iff the universal covers rooted at x and y are isomorphic."""
    require_valid(H, multigraph=True)
    return unfold.refine(sym(H).digraph).final


def _quotient(H: WeightedGraph, part: Partition) -> Tuple[WeightedGraph, GraphHom]:
    """Quotient by a partition whose classes have class-constant weighted
    neighbourhoods; half-edge weight at [x] toward [y] sums the half-edges
    at the representative x on edges into [y]."""
    toward: Dict[Tuple[str, str], list] = defaultdict(list)
    for e in H.edges:
        for v in e.ends:
            rv = part.rep(v)
            if v == rv:
                toward[(rv, part.rep(e.other(v)))].append(e.weight_at(v))
    weights = {k: weight_sum(ws) for k, ws in toward.items()}

    def edge_name(a, b):
        return f"{a}~" if a == b else f"{a}-{b}"

    edges = []
    for (a, b), w in weights.items():
        if a == b:
            edges.append(make_edge(edge_name(a, a), [a], [w]))
        elif a < b:
            edges.append(make_edge(edge_name(a, b), [a, b], {a: w, b: weights[(b, a)]}))
    reps = [b[0] for b in part.blocks]
    Q = WeightedGraph.build(reps, edges, name=H.name)
    emap = {}
    for e in H.edges:
        ra, rb = sorted(part.rep(v) for v in (e.ends * 2)[:2])
        emap[e.id] = edge_name(ra, rb)
    return Q, GraphHom({v: part.rep(v) for v in H.vertices}, emap)


def minimize(H: WeightedGraph) -> Tuple[WeightedGraph, GraphHom]:
    """The unique minimal weighted graph with the same universal cover as
    ``H``, and the covering ``H`` -> minimal base."""
    require_valid(H, multigraph=True)
    require_connected(H)
    return _quotient(H, covering_equivalence(H))


def same_universal_cover(G: WeightedGraph, H: WeightedGraph) -> bool:
    """Decide whether two connected weighted graphs have isomorphic
    universal covers.

    Computed twice: by joint refinement of the disjoint union, and by
    comparing minimized bases up to isomorphism.  The routes must agree.
    """
    require_connected(G)
    require_connected(H)
    U, (rg, rh) = disjoint_union_graphs(G, H)
    part = covering_equivalence(U)
    by_refine = any(part.same(rg[x], rh[y]) for x in G.vertices for y in H.vertices)
    by_bases = graph_isomorphism(minimize(G)[0], minimize(H)[0]) is not None
    if by_refine != by_bases:
        raise AssertionError("joint refinement and minimized bases disagree")
    return by_refine


def norris_uc_crosscheck(H: WeightedGraph, x: str, y: str) -> unfold.NorrisReport:
    depth = max(len(H.vertices) - 1, 0)
    tx = uc_truncate(H, x, depth)
    ty = uc_truncate(H, y, depth)
    return unfold.NorrisReport(tree_equal(tx, ty), covering_equivalence(H).same(x, y), depth)


def kronecker_k2(H: WeightedGraph) -> Tuple[WeightedGraph, GraphHom]:
    """Product with an edge: vertices ``(x,1)``, ``(x,2)``; each edge e
    between x and y gives ``e:x`` joining (x,1)-(y,2) and ``e:y`` joining
    (y,1)-(x,2); a loop at x gives the single edge ``e:x`` joining
    (x,1)-(x,2).  Weights are copied from the half-edge at the projected
    end.  Also returns the projection, a covering."""
    require_valid(H, multigraph=True)
    vertices = [pair_id(v, i) for v in H.vertices for i in (1, 2)]
    edges, emap = [], {}
    for e in H.edges:
        if e.is_loop:
            x, w = e.ends[0], e.weights[0]
            pairs = [(x, x, w, w)]
        else:
            (x, y), (wx, wy) = e.ends, e.weights
            pairs = [(x, y, wx, wy), (y, x, wy, wx)]
        for a, b, wa, wb in pairs:
            eid = f"{e.id}:{a}"
            edges.append(make_edge(eid, [pair_id(a, 1), pair_id(b, 2)], {pair_id(a, 1): wa, pair_id(b, 2): wb}))
            emap[eid] = e.id
    K = WeightedGraph.build(vertices, edges)
    vmap = {pair_id(v, i): v for v in H.vertices for i in (1, 2)}
    return K, GraphHom(vmap, emap)


def kronecker_lift(h: GraphHom, G: WeightedGraph, H: WeightedGraph) -> GraphHom:
    """From a covering G -> H, the covering G x K2 -> H x K2."""
    vmap = {pair_id(v, i): pair_id(h.vertex_map[v], i) for v in G.vertices for i in (1, 2)}
    emap = {}
    for e in G.edges:
        for a in e.ends if not e.is_loop else e.ends[:1]:
            emap[f"{e.id}:{a}"] = f"{h.edge_map[e.id]}:{h.vertex_map[a]}"
    return GraphHom(vmap, emap)


class DegreePartition(NamedTuple):
    partition: Partition
    matrix: List[List[int]]
    base: WeightedGraph
    hom: GraphHom


def degree_partition(G: WeightedGraph) -> DegreePartition:
    """Coarsest partition with class-constant neighbour counts between
    classes (a loop counts once), its count matrix, the weighted base graph
    with that weight matrix, and the covering onto it.  Classes are ordered
    by their smallest vertex id."""
    require_valid(G, multigraph=True)
    if not G.is_unweighted:
        raise CoverlabError("degree_partition expects an unweighted graph")
    nbrs: Dict[str, List[str]] = defaultdict(list)
    for e in G.edges:
        if e.is_loop:
            nbrs[e.ends[0]].append(e.ends[0])
        else:
            x, y = e.ends
            nbrs[x].append(y)
            nbrs[y].append(x)
    col = {v: 0 for v in G.vertices}
    n = 1 if G.vertices else 0
    while True:
        keyed = {v: (col[v], tuple(sorted(col[u] for u in nbrs[v]))) for v in G.vertices}
        ranks = {k: i for i, k in enumerate(sorted(set(keyed.values())))}
        if len(ranks) == n:
            break
        n = len(ranks)
        col = {v: ranks[keyed[v]] for v in G.vertices}
    part = Partition.from_labels(col)
    idx = {v: part.block_index(v) for v in G.vertices}
    p = len(part)
    matrix = [[0] * p for _ in range(p)]
    for i, block in enumerate(part.blocks):
        rep = block[0]
        for u in nbrs[rep]:
            matrix[i][idx[u]] += 1
    base, hom = _quotient(G, part)
    return DegreePartition(part, matrix, base, hom)


class ElectionVerdict(NamedTuple):
    solvable: bool
    ambiguous_classes: List[Tuple[str, ...]]


def election_check(N: WeightedGraph) -> ElectionVerdict:
    """A leader can be elected in the anonymous network ``N`` iff no two
    nodes have isomorphic universal-cover views."""
    require_valid(N, multigraph=True)
    if not N.is_unweighted:
        raise CoverlabError("election_check expects an unweighted network")
    require_connected(N)
    part = covering_equivalence(N)
    ambiguous = [b for b in part.blocks if len(b) > 1]
    return ElectionVerdict(not ambiguous, ambiguous)
