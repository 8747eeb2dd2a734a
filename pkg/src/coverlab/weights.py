"""Weights in N+ u {omega} with absorbing arithmetic.

Finite weights are plain Python ints (arbitrary precision).  The countable
infinity is the singleton ``OMEGA``.  Zero only shows up as the value of an
empty sum; it is never a legal stored weight.
"""

from __future__ import annotations

import functools
from typing import Iterable, Union


@functools.total_ordering
class _Omega:
    """Countable infinity.  Larger than every int, equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OMEGA"

    def __str__(self):
        return "w"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("coverlab.omega")

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

Weight = Union[int, _Omega]


def is_omega(w) -> bool:
    return w is OMEGA


def is_weight(w) -> bool:
    """True for a legal stored weight: a positive int or OMEGA."""
    if w is OMEGA:
        return True
    return isinstance(w, int) and not isinstance(w, bool) and w >= 1


def weight_add(a: Weight, b: Weight) -> Weight:
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a + b


def weight_mul(a: Weight, b: Weight) -> Weight:
    # omega * 0 = 0, omega * x = omega for x > 0
    if a is OMEGA:
        return 0 if b == 0 else OMEGA
    if b is OMEGA:
        return 0 if a == 0 else OMEGA
    return a * b


def weight_sum(ws: Iterable[Weight]) -> Weight:
    total: Weight = 0
    for w in ws:
        total = weight_add(total, w)
        if total is OMEGA:
            return OMEGA
    return total


def weight_sub(a: Weight, b: int) -> Weight:
    """``a - b`` for finite ``b``; omega minus anything finite stays omega."""
    if a is OMEGA:
        return OMEGA
    if a < b:
        raise ValueError(f"weight underflow: {a} - {b}")
    return a - b


def weight_key(w: Weight):
    """Sort key placing every finite value before omega."""
    return (1, 0) if w is OMEGA else (0, w)


def format_weight(w: Weight, omega: str = "w") -> str:
    return omega if w is OMEGA else str(w)


def parse_weight(value) -> Weight:
    """Read a weight from its file spelling: an int >= 1 or ``"omega"``."""
    if value == "omega" or value is OMEGA:
        return OMEGA
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError("weight must be >= 1 or omega")
    return value
