"""Canonical forms for depth-bounded truncations of rooted trees.

A node is stored as a sorted tuple of ``(subtree, multiplicity)`` entries
with identical subtrees merged, so that a node with countably many sons
(multiplicity ``OMEGA``) still has a finite representation and two
truncations are isomorphic exactly when their canonical forms are equal.

Nodes are hash-consed in a process-wide table guarded by a lock, so
structurally equal trees are the same object and equality is an identity
check.
"""

from __future__ import annotations

import threading
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .weights import OMEGA, Weight, format_weight, weight_add, weight_key, weight_mul

_TABLE: Dict[tuple, "CanonicalTree"] = {}
_LOCK = threading.Lock()


class CanonicalTree:
    __slots__ = ("children", "label", "height", "_key", "__weakref__")

    children: Tuple[Tuple["CanonicalTree", Weight], ...]
    label: Optional[str]
    height: int

    @classmethod
    def _make(cls, children, label):
        node = object.__new__(cls)
        node.children = children
        node.label = label
        node.height = 1 + max((c.height for c, _ in children), default=-1)
        node._key = (
            node.height,
            len(children),
            tuple((c._key, weight_key(m)) for c, m in children),
            (0, "") if label is None else (1, label),
        )
        return node

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        if self.is_leaf:
            return "leaf" if self.label is None else f"leaf[{self.label}]"
        return f"<CanonicalTree height={self.height} entries={len(self.children)}>"

    def node_count(self) -> Weight:
        """Number of nodes in the represented tree (omega if infinite)."""
        total: Weight = 1
        for c, m in self.children:
            total = weight_add(total, weight_mul(m, c.node_count()))
        return total

    def render(self, indent: str = "  ") -> str:
        return "\n".join(render_lines(self, indent))


def normalize(raw: Iterable[Tuple[CanonicalTree, Weight]], label: Optional[str] = None) -> CanonicalTree:
    """Merge equal subtrees (omega-summing multiplicities), sort, intern."""
    merged: Dict[CanonicalTree, Weight] = {}
    for sub, m in raw:
        if m == 0:
            continue
        merged[sub] = weight_add(merged.get(sub, 0), m)
    children = tuple(sorted(merged.items(), key=lambda cm: (cm[0]._key, weight_key(cm[1]))))
    sig = (tuple((id(c), m) for c, m in children), label)
    with _LOCK:
        node = _TABLE.get(sig)
        if node is None:
            node = CanonicalTree._make(children, label)
            _TABLE[sig] = node
    return node


LEAF = normalize(())


def leaf(label: Optional[str] = None) -> CanonicalTree:
    return normalize((), label)


def tree_equal(a: CanonicalTree, b: CanonicalTree) -> bool:
    return a is b


def tree_order(a: CanonicalTree, b: CanonicalTree) -> int:
    """-1, 0 or 1.  Height first, then number of child entries, then the
    child entries lexicographically (subtree, then multiplicity with every
    finite value below omega)."""
    if a is b:
        return 0
    return -1 if a._key < b._key else 1


def truncate(t: CanonicalTree, depth: int) -> CanonicalTree:
    """The truncation keeping nodes at distance <= depth from the root."""
    memo: Dict[Tuple[int, int], CanonicalTree] = {}

    def go(node, d):
        if d >= node.height:
            return node
        k = (id(node), d)
        if k not in memo:
            if d == 0:
                memo[k] = leaf(node.label)
            else:
                memo[k] = normalize(((go(c, d - 1), m) for c, m in node.children), node.label)
        return memo[k]

    return go(t, depth)


def render_lines(t: CanonicalTree, indent: str = "  ") -> List[str]:
    """One line per child entry: ``<multiplicity>x`` with ``w`` for omega."""
    lines = ["*" if t.label is None else f"* [{t.label}]"]

    def go(node, level):
        for c, m in node.children:
            tag = f"{format_weight(m)}x" + ("" if c.label is None else f" [{c.label}]")
            lines.append(indent * level + tag)
            go(c, level + 1)

    go(t, 1)
    return lines


def expand(t: CanonicalTree, limit: int = 100_000):
    """Explicit nested-list tree: each node is the list of its sons.

    Only for finite multiplicities; raises ValueError past ``limit`` nodes.
    """
    count = [0]

    def go(node):
        count[0] += 1
        if count[0] > limit:
            raise ValueError("expanded tree too large")
        out = []
        for c, m in node.children:
            if m is OMEGA:
                raise ValueError("cannot expand an omega multiplicity")
            for _ in range(m):
                out.append(go(c))
        return out

    return go(t)


def from_nested(children: Sequence) -> CanonicalTree:
    """Canonical form of an explicit tree given as nested lists of sons."""
    return normalize((from_nested(c), 1) for c in children)
