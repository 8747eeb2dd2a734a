"""Unfoldings of weighted digraphs and coverings of weighted graphs."""

from .weights import OMEGA, weight_add, weight_mul
from .graphs import (
    Arc,
    CoverlabError,
    Edge,
    GraphHom,
    WeightedDigraph,
    WeightedGraph,
    make_edge,
    validate,
)
from .witness import Partition, WitnessSet, build_witness, weighted_class_equiv

__version__ = "0.1.0"

__all__ = [
    "OMEGA",
    "weight_add",
    "weight_mul",
    "Arc",
    "CoverlabError",
    "Edge",
    "GraphHom",
    "WeightedDigraph",
    "WeightedGraph",
    "make_edge",
    "validate",
    "Partition",
    "WitnessSet",
    "build_witness",
    "weighted_class_equiv",
]
