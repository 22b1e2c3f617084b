"""Fully dynamic data structures for parameterized graph problems."""

from .chromatic import DynamicChromaticNumber, Partition, enumerate_partitions
from .cvd_exact import DynamicClusterDeletionExact
from .cvd_kernel import DynamicClusterDeletion
from .errors import *  # noqa: F401,F403
from .fvs import DynamicFeedbackVertexSet, ReducedGraph
from .graph import EdgeOp, Graph, MultiGraph, OpKind
from .lct import LinkCutForest
from .pset import EMPTY, PSet
from .vc import DynamicVertexCover

__all__ = [
    "DynamicChromaticNumber",
    "DynamicClusterDeletion",
    "DynamicClusterDeletionExact",
    "DynamicFeedbackVertexSet",
    "DynamicVertexCover",
    "EMPTY",
    "EdgeOp",
    "Graph",
    "LinkCutForest",
    "MultiGraph",
    "OpKind",
    "PSet",
    "Partition",
    "ReducedGraph",
    "enumerate_partitions",
]
