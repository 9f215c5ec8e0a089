from dataclasses import dataclass
from enum import Enum

from ._tournament import Cost, Ordering


class PivotRule(Enum):
    """How the quick sort heuristic picks the pivot of a group"""

    RANDOM = "random"
    MIN_IMBALANCE = "min-imbalance"


@dataclass(frozen=True)
class HeuristicResult:
    """Output of a heuristic. `work` counts the algorithm-specific elementary steps:
    swaps for insertion and bubble sort, head comparisons for merge sort, degree
    evaluations for selection sort and partition comparisons for quick sort."""

    ordering: Ordering
    cost: Cost
    work: int


@dataclass(frozen=True)
class ExactResult:
    """An optimal ordering and its cost"""

    optimal_ordering: Ordering
    optimal_cost: Cost
