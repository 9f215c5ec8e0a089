from ._aggregation import aggregate, kendall_tau, majority_tournament, total_kendall_tau
from ._exact import solve_bruteforce, solve_dp, solve_exact
from ._heuristics import (
    HEURISTICS,
    bubble_sort_from,
    insertion_sort_from,
    insertion_stage_costs,
    merge_groups,
    partition_around,
    pseudo_bubble_sort,
    pseudo_insertion_sort,
    pseudo_merge_sort,
    pseudo_quick_sort,
    pseudo_selection_sort,
    run_heuristic,
)

__all__ = [
    "pseudo_insertion_sort",
    "pseudo_merge_sort",
    "pseudo_selection_sort",
    "pseudo_bubble_sort",
    "pseudo_quick_sort",
    "insertion_sort_from",
    "bubble_sort_from",
    "insertion_stage_costs",
    "merge_groups",
    "partition_around",
    "HEURISTICS",
    "run_heuristic",
    "solve_bruteforce",
    "solve_dp",
    "solve_exact",
    "majority_tournament",
    "kendall_tau",
    "total_kendall_tau",
    "aggregate",
]
