"""Degree sequence realization: graphicality under star constraints,
exhaustive enumeration, exact counting and sampling of labeled graphs."""

from ._graphreal import (
    GraphrealError,
    LabeledGraph,
    all_adjacency_sets,
    cg_test,
    count_realizations,
    enumerate_all,
    erdos_gallai,
    estimate_count,
    havel_hakimi_construct,
    havel_hakimi_reduce,
    is_graphical,
    leftmost_restricted,
    molloy_reed_sample,
    oracle_enumerate,
    rightmost_adjacency_set,
    sample_weighted,
    validate,
)

__all__ = [
    "GraphrealError",
    "LabeledGraph",
    "all_adjacency_sets",
    "cg_test",
    "count_realizations",
    "enumerate_all",
    "erdos_gallai",
    "estimate_count",
    "havel_hakimi_construct",
    "havel_hakimi_reduce",
    "is_graphical",
    "leftmost_restricted",
    "molloy_reed_sample",
    "oracle_enumerate",
    "rightmost_adjacency_set",
    "sample_weighted",
    "validate",
]
