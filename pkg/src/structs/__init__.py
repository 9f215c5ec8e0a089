from ._ballots import Ballot, Profile, TieRule
from ._constants import (
    ALGORITHM_NAMES,
    BRUTEFORCE_MAX_N,
    DP_MAX_N,
    FLOAT_REL_TOL,
    HEURISTIC_NAMES,
    INSERTION_ORACLE_MAX_N,
    MERGE_ORACLE_MAX_GROUP,
)
from ._experiment import AlgorithmStats, ExperimentConfig, Model, SummaryStats
from ._results import ExactResult, HeuristicResult, PivotRule
from ._tournament import (
    Cost,
    Ordering,
    Tournament,
    VertexId,
    adjacent_swap_sequence,
    backward_count,
    backward_edges,
    is_locally_minimal,
    pair_index,
)

__all__ = [
    "Tournament",
    "Ordering",
    "VertexId",
    "Cost",
    "pair_index",
    "backward_count",
    "backward_edges",
    "is_locally_minimal",
    "adjacent_swap_sequence",
    "HeuristicResult",
    "ExactResult",
    "PivotRule",
    "Ballot",
    "Profile",
    "TieRule",
    "Model",
    "ExperimentConfig",
    "AlgorithmStats",
    "SummaryStats",
    "ALGORITHM_NAMES",
    "HEURISTIC_NAMES",
    "BRUTEFORCE_MAX_N",
    "DP_MAX_N",
    "INSERTION_ORACLE_MAX_N",
    "MERGE_ORACLE_MAX_GROUP",
    "FLOAT_REL_TOL",
]
