"""Tamari lattice intervals, interval-posets, noncrossing trees and
noncrossing partitions, with classifiers and exhaustive cross-checks."""

from .trees import BinaryTree, TamariInterval
from .posets import IntervalPoset, RangeRelation
from .noncrossing import NoncrossingPartition, NoncrossingTree

__all__ = [
    "BinaryTree",
    "TamariInterval",
    "IntervalPoset",
    "RangeRelation",
    "NoncrossingTree",
    "NoncrossingPartition",
]
