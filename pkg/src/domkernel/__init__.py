"""Kernelization for Dominating Set: neighborhood reduction rules, exact oracles, planar benchmarks."""

from .graph import Color, Graph, GraphError, Origin
from .partition import TriPartition, partition_pair, partition_single
from .plangen import GenSpec, paper_sample_sets, random_planar
from .reduction import (
    Mode,
    ModeKind,
    ReductionResult,
    Rule,
    RuleEvent,
    is_reduced,
    reduce,
    try_rule1,
    try_rule2,
    try_white_rules,
)
from .solver import SolveResult, branch_and_reduce, brute_force_gamma, verify_certificate

__all__ = [
    "Color", "Graph", "GraphError", "Origin",
    "TriPartition", "partition_pair", "partition_single",
    "GenSpec", "paper_sample_sets", "random_planar",
    "Mode", "ModeKind", "ReductionResult", "Rule", "RuleEvent",
    "is_reduced", "reduce", "try_rule1", "try_rule2", "try_white_rules",
    "SolveResult", "branch_and_reduce", "brute_force_gamma", "verify_certificate",
]
