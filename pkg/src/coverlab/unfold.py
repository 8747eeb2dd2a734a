"""Unfoldings of rooted weighted digraphs.

The central routine is :func:`refine`, the partition refinement that
computes the relation "the complete unfoldings from x and from y are
isomorphic" on a finite weighted digraph.  Out-neighbourhoods are compared
as weighted sets (weights summed over parallel arcs to the same head)
modulo the current partition, starting from the one-block partition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Hashable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .graphs import (
    Arc,
    CoverlabError,
    GraphHom,
    WeightedDigraph,
    disjoint_union_digraphs,
    pair_id,
    require_rooted,
    require_valid,
)
from .treecanon import CanonicalTree, normalize, tree_equal
from .weights import Weight, weight_key, weight_sum
from .witness import Partition, build_witness


@dataclass(frozen=True)
class RefinementTrace:
    """Rounds R_0, R_1, ... of the refinement.  The last two rounds are
    equal; ``fixpoint_index`` is the first i with R_{i+1} = R_i."""

    rounds: Tuple[Partition, ...]
    fixpoint_index: int

    @property
    def final(self) -> Partition:
        return self.rounds[-1]


def refine_labels(vertices: Sequence[Hashable], out: Mapping[Hashable, Mapping[Hashable, Weight]]):
    """Refinement over plain adjacency data.

    ``out[v]`` maps each head to the summed weight of the arcs from ``v``.
    Returns the list of label dicts, one per round, ending with two equal
    partitions.  Labels are small ints numbered by first occurrence in
    ``vertices`` order.
    """
    labels = {v: 0 for v in vertices}
    rounds = [labels]
    n_blocks = 1 if vertices else 0
    while True:
        sigs = {}
        new = {}
        for v in vertices:
            acc: Dict[int, list] = {}
            for h, w in out.get(v, {}).items():
                acc.setdefault(labels[h], []).append(w)
            sig = (labels[v], tuple(sorted(((c, weight_key(weight_sum(ws))) for c, ws in acc.items()))))
            new[v] = sigs.setdefault(sig, len(sigs))
        rounds.append(new)
        if len(sigs) == n_blocks:
            return rounds
        n_blocks = len(sigs)
        labels = new


def refine(D: WeightedDigraph) -> RefinementTrace:
    """Partition refinement deciding isomorphism of complete unfoldings.

    The digraph need not be rooted nor connected.  The final partition puts
    x and y together iff the complete unfoldings from x and from y are isomorphic.
    """
    require_valid(D.with_root(None))
    out = {v: D.out_weights(v) for v in D.vertices}
    rounds = refine_labels(D.vertices, out)
    parts = tuple(Partition.from_labels(r) for r in rounds)
    return RefinementTrace(parts, len(parts) - 2)


def unf_equivalent(D: WeightedDigraph, x: str, y: str) -> bool:
    for v in (x, y):
        if v not in D.vertices:
            raise CoverlabError(f"unknown vertex {v!r}")
    return refine(D).final.same(x, y)


def joint_refine(G: WeightedDigraph, H: WeightedDigraph):
    """Refine the disjoint union of ``G`` and ``H``.

    Returns the final partition of the union and the two vertex renamings.
    """
    U, (rg, rh) = disjoint_union_digraphs(G.with_root(None), H.with_root(None))
    return refine(U).final, rg, rh


def unf_equivalent_across(G: WeightedDigraph, x: str, H: WeightedDigraph, y: str) -> bool:
    """Whether the unfolding of G from x and that of H from y are isomorphic."""
    if x not in G.vertices or y not in H.vertices:
        raise CoverlabError("unknown vertex")
    final, rg, rh = joint_refine(G, H)
    return final.same(rg[x], rh[y])


def canonical_quotient(D: WeightedDigraph) -> Tuple[WeightedDigraph, GraphHom]:
    """The minimal rooted weighted digraph of which ``D`` is an unfolding.

    Quotient vertices are named by block representatives; there is one arc
    per pair of classes ``([x], [y])`` named ``"[x]->[y]"``, weighted by the
    summed weight of the arcs from the representative of ``[x]`` into
    ``[y]``.
    """
    require_rooted(D)
    require_valid(D)
    part = refine(D).final
    arcs: Dict[Tuple[str, str], list] = {}
    for a in D.arcs:
        rt, rh = part.rep(a.tail), part.rep(a.head)
        if a.tail == rt:
            arcs.setdefault((rt, rh), []).append(a.weight)
    q_arcs = [Arc(f"{t}->{h}", t, h, weight_sum(ws)) for (t, h), ws in arcs.items()]
    reps = sorted(b[0] for b in part.blocks)
    Q = WeightedDigraph.build(reps, q_arcs, root=part.rep(D.root), name=D.name)
    hom = GraphHom(
        {v: part.rep(v) for v in D.vertices},
        {a.id: f"{part.rep(a.tail)}->{part.rep(a.head)}" for a in D.arcs},
    )
    return Q, hom


def unfold_truncate(D: WeightedDigraph, depth: int, root: Optional[str] = None) -> CanonicalTree:
    """Canonical form of the unfolding of D from ``root``, truncated at ``depth``.

    ``root`` defaults to the root of ``D``.
    """
    start = D.root if root is None else root
    if start is None:
        raise CoverlabError("digraph must be rooted or a start vertex given")
    if start not in D.vertices:
        raise CoverlabError(f"unknown vertex {start!r}")
    if depth < 0:
        raise CoverlabError("depth must be >= 0")
    memo: Dict[Tuple[str, int], CanonicalTree] = {}

    def go(v: str, d: int) -> CanonicalTree:
        key = (v, d)
        t = memo.get(key)
        if t is None:
            if d == 0:
                t = normalize(())
            else:
                t = normalize((go(a.head, d - 1), a.weight) for a in D.out_arcs(v))
            memo[key] = t
        return t

    # iterate depths bottom-up to keep recursion shallow
    for d in range(depth):
        for v in D.vertices:
            go(v, d)
    return go(start, depth)


def _check_hom_shape(h: GraphHom, G: WeightedDigraph, H: WeightedDigraph) -> None:
    if set(h.vertex_map) != set(G.vertices):
        raise CoverlabError("homomorphism vertex map must cover exactly the source vertices")
    if set(h.edge_map) != {a.id for a in G.arcs}:
        raise CoverlabError("homomorphism arc map must cover exactly the source arcs")
    hv = set(H.vertices)
    ha = {a.id for a in H.arcs}
    for v, w in h.vertex_map.items():
        if w not in hv:
            raise CoverlabError(f"vertex {v} mapped to unknown vertex {w}")
    for a, b in h.edge_map.items():
        if b not in ha:
            raise CoverlabError(f"arc {a} mapped to unknown arc {b}")


def is_homomorphism(h: GraphHom, G: WeightedDigraph, H: WeightedDigraph) -> bool:
    _check_hom_shape(h, G, H)
    for a in G.arcs:
        b = H.arc(h.edge_map[a.id])
        if h.vertex_map[a.tail] != b.tail or h.vertex_map[a.head] != b.head:
            return False
    return True


def is_unfolding(h: GraphHom, G: WeightedDigraph, H: WeightedDigraph) -> bool:
    """Surjective root-preserving homomorphism inducing a weighted
    surjection of out-arcs at every vertex."""
    if not is_homomorphism(h, G, H):
        return False
    if set(h.vertex_map.values()) != set(H.vertices):
        return False
    if set(h.edge_map.values()) != {a.id for a in H.arcs}:
        return False
    if G.root is not None and H.root is not None and h.vertex_map[G.root] != H.root:
        return False
    for u in G.vertices:
        x = h.vertex_map[u]
        pre: Dict[str, list] = {}
        for a in G.out_arcs(u):
            pre.setdefault(h.edge_map[a.id], []).append(a.weight)
        for b in H.out_arcs(x):
            if weight_sum(pre.pop(b.id, [])) != b.weight:
                return False
        if pre:
            return False
    return True


class CommonUnfolding(NamedTuple):
    digraph: WeightedDigraph
    to_g: GraphHom
    to_h: GraphHom


def common_unfolding(G: WeightedDigraph, H: WeightedDigraph) -> Optional[CommonUnfolding]:
    """A finite rooted digraph unfolding into both ``G`` and ``H``, or None
    when their complete unfoldings differ.

    Vertices are pairs ``(x,y)`` of equivalent vertices reachable from the
    pair of roots; the out-arcs of ``(x,y)`` come from a witness pairing the
    out-arcs of ``x`` with those of ``y`` class by class (class of an arc =
    class of its head).
    """
    require_rooted(G)
    require_rooted(H)
    require_valid(G)
    require_valid(H)
    final, rg, rh = joint_refine(G, H)
    if not final.same(rg[G.root], rh[H.root]):
        return None

    def arc_class_partition(x: str, y: str) -> Tuple[dict, dict, Partition]:
        X = {"g/" + a.id: a.weight for a in G.out_arcs(x)}
        Y = {"h/" + b.id: b.weight for b in H.out_arcs(y)}
        labels = {"g/" + a.id: final.block_index(rg[a.head]) for a in G.out_arcs(x)}
        labels.update({"h/" + b.id: final.block_index(rh[b.head]) for b in H.out_arcs(y)})
        return X, Y, Partition.from_labels(labels)

    start = (G.root, H.root)
    seen = {start}
    queue = deque([start])
    arcs: List[Arc] = []
    to_g_arcs, to_h_arcs = {}, {}
    while queue:
        x, y = queue.popleft()
        X, Y, R = arc_class_partition(x, y)
        for ga, hb, mu in build_witness(X, Y, R).entries:
            a, b = G.arc(ga[2:]), H.arc(hb[2:])
            nxt = (a.head, b.head)
            aid = pair_id(a.id, b.id)
            arcs.append(Arc(aid, pair_id(x, y), pair_id(*nxt), mu))
            to_g_arcs[aid] = a.id
            to_h_arcs[aid] = b.id
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    K = WeightedDigraph.build([pair_id(*p) for p in seen], arcs, root=pair_id(*start))
    to_g = GraphHom({pair_id(x, y): x for x, y in seen}, to_g_arcs)
    to_h = GraphHom({pair_id(x, y): y for x, y in seen}, to_h_arcs)
    return CommonUnfolding(K, to_g, to_h)


def regularity_index(D: WeightedDigraph, x: str) -> int:
    """Number of pairwise non-isomorphic subtrees of the unfolding of D from x."""
    if x not in D.vertices:
        raise CoverlabError(f"unknown vertex {x!r}")
    part = refine(D).final
    return len({part.block_index(v) for v in D.reachable(x)})


class NorrisReport(NamedTuple):
    trunc_equal: bool
    refine_equal: bool
    depth_used: int

    @property
    def agree(self) -> bool:
        return self.trunc_equal == self.refine_equal


def norris_crosscheck(D: WeightedDigraph, x: str, y: str) -> NorrisReport:
    """Compare truncations at depth |V|-1 with the refinement verdict."""
    depth = max(len(D.vertices) - 1, 0)
    tx = unfold_truncate(D, depth, root=x)
    ty = unfold_truncate(D, depth, root=y)
    return NorrisReport(tree_equal(tx, ty), unf_equivalent(D, x, y), depth)
