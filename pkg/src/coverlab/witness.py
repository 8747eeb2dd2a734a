"""Partitions, classwise equivalence of weighted sets, and witnesses."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Mapping, Tuple

from .graphs import CoverlabError
from .weights import OMEGA, Weight, weight_sub, weight_sum


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks covering a ground set; each block is sorted and the
    blocks are ordered by their minimal element (the representative)."""

    blocks: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if any(not b for b in blocks):
            raise CoverlabError("empty block in partition")
        object.__setattr__(self, "blocks", blocks)
        index = {}
        for i, b in enumerate(blocks):
            for x in b:
                if x in index:
                    raise CoverlabError(f"{x!r} occurs in two blocks")
                index[x] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_labels(cls, labels: Mapping[str, Hashable]) -> "Partition":
        groups = defaultdict(list)
        for x, lab in labels.items():
            groups[lab].append(x)
        return cls(tuple(tuple(g) for g in groups.values()))

    @classmethod
    def discrete(cls, ground: Iterable[str]) -> "Partition":
        return cls(tuple((x,) for x in ground))

    @classmethod
    def single(cls, ground: Iterable[str]) -> "Partition":
        ground = tuple(ground)
        return cls((ground,) if ground else ())

    @property
    def ground(self) -> List[str]:
        return sorted(self._index)

    def __len__(self):
        return len(self.blocks)

    def __contains__(self, x):
        return x in self._index

    def block_index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise CoverlabError(f"unknown id {x!r}") from None

    def block_of(self, x: str) -> Tuple[str, ...]:
        return self.blocks[self.block_index(x)]

    def rep(self, x: str) -> str:
        return self.block_of(x)[0]

    def same(self, x: str, y: str) -> bool:
        return self.block_index(x) == self.block_index(y)

    def refines(self, other: "Partition") -> bool:
        """True when every block of self lies inside a block of ``other``."""
        return all(len({other.block_index(x) for x in b}) == 1 for b in self.blocks)

    def restrict(self, keep: Iterable[str]) -> "Partition":
        keep = set(keep)
        return Partition(tuple(tuple(x for x in b if x in keep) for b in self.blocks
                               if any(x in keep for x in b)))


@dataclass(frozen=True)
class WitnessSet:
    """Weighted pairs (x, y, mu) certifying classwise equality of two
    weighted sets."""

    entries: Tuple[Tuple[str, str, Weight], ...]

    def left_marginals(self) -> Dict[str, Weight]:
        acc = defaultdict(list)
        for x, _, mu in self.entries:
            acc[x].append(mu)
        return {x: weight_sum(ws) for x, ws in acc.items()}

    def right_marginals(self) -> Dict[str, Weight]:
        acc = defaultdict(list)
        for _, y, mu in self.entries:
            acc[y].append(mu)
        return {y: weight_sum(ws) for y, ws in acc.items()}


def _class_sums(X: Mapping[str, Weight], R: Partition) -> Dict[int, Weight]:
    acc = defaultdict(list)
    for x, w in X.items():
        acc[R.block_index(x)].append(w)
    return {c: weight_sum(ws) for c, ws in acc.items()}


def _first_failing_block(X, Y, R):
    sx, sy = _class_sums(X, R), _class_sums(Y, R)
    for c in sorted(set(sx) | set(sy)):
        if sx.get(c, 0) != sy.get(c, 0):
            return c, sx.get(c, 0), sy.get(c, 0)
    return None


def weighted_class_equiv(X: Mapping[str, Weight], Y: Mapping[str, Weight], R: Partition) -> bool:
    """True iff every block of ``R`` carries the same omega-sum of weights
    in ``X`` as in ``Y``."""
    return _first_failing_block(X, Y, R) is None


def _pair_block(xs, ys):
    # finite ids first then omega ids; the last omega on each side is kept
    # alive until the other side is exhausted
    def order(items):
        fin = sorted((i, w) for i, w in items if w is not OMEGA)
        inf = sorted((i, w) for i, w in items if w is OMEGA)
        return [[i, w] for i, w in fin + inf]

    left, right = order(xs), order(ys)
    n_omega_left = sum(1 for _, w in left if w is OMEGA)
    n_omega_right = sum(1 for _, w in right if w is OMEGA)
    out = []
    i = j = 0
    while i < len(left) and j < len(right):
        (x, wx), (y, wy) = left[i], right[j]
        if wx is OMEGA and wy is OMEGA:
            out.append((x, y, OMEGA))
            if n_omega_left > 1:
                n_omega_left -= 1
                i += 1
            elif n_omega_right > 1:
                n_omega_right -= 1
                j += 1
            else:
                i += 1
                j += 1
            continue
        mu = min(wx, wy)
        out.append((x, y, mu))
        left[i][1] = weight_sub(wx, mu)
        right[j][1] = weight_sub(wy, mu)
        if left[i][1] == 0:
            i += 1
        if right[j][1] == 0:
            j += 1
    if i < len(left) or j < len(right):
        raise AssertionError("witness pairing left elements unmatched")
    return out


def build_witness(X: Mapping[str, Weight], Y: Mapping[str, Weight], R: Partition) -> WitnessSet:
    """A witness of ``X ~ Y (mod R)``: entries only pair R-equivalent ids
    and their marginals reproduce both weight functions.

    Within each block both sides are walked in ascending id order, finite
    weights before omega ones, pairing the current heads with the smaller
    remaining weight.
    """
    bad = _first_failing_block(X, Y, R)
    if bad is not None:
        c, sx, sy = bad
        raise CoverlabError(
            f"no witness: block {list(R.blocks[c])} sums to {sx} on the left and {sy} on the right"
        )
    bx, by = defaultdict(list), defaultdict(list)
    for x, w in X.items():
        bx[R.block_index(x)].append((x, w))
    for y, w in Y.items():
        by[R.block_index(y)].append((y, w))
    entries = []
    for c in sorted(bx):
        entries.extend(_pair_block(bx[c], by[c]))
    return WitnessSet(tuple(entries))
