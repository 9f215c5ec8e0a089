import itertools
import logging
import math

import numpy as np

from src.structs import (
    BRUTEFORCE_MAX_N,
    DP_MAX_N,
    ExactResult,
    Ordering,
    Tournament,
)
from src.utils import SolverLimitError

logger = logging.getLogger(__name__)


def solve_bruteforce(t: Tournament) -> ExactResult:
    """Score all n! orderings and return the cheapest. Permutations are generated in
    lexicographic order and the first minimum wins, so ties resolve to the
    lexicographically smallest optimal ordering."""
    if t.n > BRUTEFORCE_MAX_N:
        raise SolverLimitError(
            f"Brute force is limited to n <= {BRUTEFORCE_MAX_N}, got n={t.n}"
        )
    n = t.n
    count = math.factorial(n)
    permutations = np.fromiter(
        itertools.chain.from_iterable(itertools.permutations(range(n))),
        dtype=np.int8,
        count=count * n,
    ).reshape(count, n)

    adjacency = t.adjacency()
    costs = np.zeros(count, dtype=np.int16)
    for j in range(1, n):
        for i in range(j):
            # the vertex at position j beating the one at position i is a backward edge
            costs += adjacency[permutations[:, j], permutations[:, i]]

    best = int(np.argmin(costs))
    logger.debug("Brute force over %d orderings: optimum %d", count, costs[best])
    return ExactResult(Ordering.of(permutations[best].tolist()), int(costs[best]))


def solve_dp(t: Tournament) -> ExactResult:
    """Dynamic program over vertex subsets. best[S] is the minimum number of backward edges
    inside the vertices of S when they form a contiguous block; placing v first in the block
    makes every edge from S \\ {v} into v backward, hence

        best[S] = min over v in S of |in(v) & S| + best[S \\ {v}]

    Subsets are processed in layers of equal size. The table `first[S]` stores the smallest
    v reaching the minimum, and reading it from the full set forwards rebuilds the
    lexicographically smallest optimal ordering."""
    if t.n > DP_MAX_N:
        raise SolverLimitError(f"The subset DP is limited to n <= {DP_MAX_N}, got n={t.n}")
    n = t.n
    size = 1 << n
    best = np.zeros(size, dtype=np.int16)
    first = np.full(size, -1, dtype=np.int8)

    subsets = np.arange(size, dtype=np.int64)
    layer_of = np.bitwise_count(subsets)
    by_layer = np.argsort(layer_of, kind="stable")
    bounds = np.concatenate(([0], np.cumsum(np.bincount(layer_of, minlength=n + 1))))

    for k in range(1, n + 1):
        layer = by_layer[bounds[k] : bounds[k + 1]]
        layer_best = np.full(len(layer), np.iinfo(np.int16).max, dtype=np.int16)
        layer_first = np.full(len(layer), -1, dtype=np.int8)
        for v in range(n):
            contains = (layer >> v) & 1 == 1
            members = layer[contains]
            candidate = best[members ^ (1 << v)] + np.bitwise_count(
                members & t.in_mask(v)
            ).astype(np.int16)
            improved = candidate < layer_best[contains]
            indices = np.flatnonzero(contains)[improved]
            layer_best[indices] = candidate[improved]
            layer_first[indices] = v
        best[layer] = layer_best
        first[layer] = layer_first

    vertices: list[int] = []
    remaining = size - 1
    while remaining:
        v = int(first[remaining])
        vertices.append(v)
        remaining ^= 1 << v
    logger.debug("Subset DP over %d subsets: optimum %d", size, best[size - 1])
    return ExactResult(Ordering.of(vertices), int(best[size - 1]))


def solve_exact(t: Tournament) -> ExactResult:
    return solve_dp(t)
