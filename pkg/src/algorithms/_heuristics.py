import logging
from typing import Callable, Sequence

import numpy as np

from src.structs import (
    HeuristicResult,
    Ordering,
    PivotRule,
    Tournament,
    VertexId,
    backward_count,
)
from src.utils import ConfigError, OrderingError, make_rng

logger = logging.getLogger(__name__)


def _result(t: Tournament, vertices: Sequence[VertexId], work: int) -> HeuristicResult:
    ordering = Ordering(tuple(vertices))
    return HeuristicResult(ordering, backward_count(t, ordering), work)


def _start_order(t: Tournament, order: Sequence[VertexId]) -> list[VertexId]:
    if len(order) != t.n:
        raise OrderingError(f"Start order has {len(order)} vertices but the tournament has {t.n}")
    return list(Ordering(tuple(order)))


def _random_order(t: Tournament, rng: np.random.Generator) -> list[VertexId]:
    return [int(v) for v in rng.permutation(t.n)]


def _pick(candidates: list[VertexId], rng: np.random.Generator) -> VertexId:
    """Uniformly random element; the stream is only consumed when there is a choice"""
    if len(candidates) == 1:
        return candidates[0]
    return candidates[int(rng.integers(len(candidates)))]


#########################################
# Insertion sort
#########################################
def insertion_sort_from(t: Tournament, order: Sequence[VertexId]) -> HeuristicResult:
    """Insert the vertices one by one in the given order. A new vertex moves left past its
    predecessor while it beats it, and stops at the head of the list."""
    vertices = _start_order(t, order)
    swaps = 0
    for i in range(1, len(vertices)):
        j = i
        while j > 0 and t.beats(vertices[j], vertices[j - 1]):
            vertices[j], vertices[j - 1] = vertices[j - 1], vertices[j]
            swaps += 1
            j -= 1
    return _result(t, vertices, swaps)


def pseudo_insertion_sort(t: Tournament, seed: int) -> HeuristicResult:
    """Randomly permute the vertices, then run insertion sort on the edges. The output is a
    local minimum: every adjacent pair is joined by a forward edge."""
    return insertion_sort_from(t, _random_order(t, make_rng(seed)))


def insertion_stage_costs(t: Tournament, order: Sequence[VertexId]) -> list[int]:
    """Backward edges contributed by each insertion stage. Entry k-1 counts the backward edges,
    measured in the final order, between the vertex inserted at stage k and the vertices
    inserted before it. Later insertions never change the relative order of vertices already
    placed, so the entries sum to the cost of the output."""
    start = _start_order(t, order)
    final = insertion_sort_from(t, start).ordering
    position = final.positions
    stages: list[int] = []
    for k, vertex in enumerate(start):
        count = 0
        for earlier in start[:k]:
            first, last = (
                (vertex, earlier) if position[vertex] < position[earlier] else (earlier, vertex)
            )
            if t.beats(last, first):
                count += 1
        stages.append(count)
    return stages


#########################################
# Merge sort
#########################################
def merge_groups(
    first: Sequence[VertexId],
    second: Sequence[VertexId],
    precedes: Callable[[VertexId, VertexId], bool],
) -> tuple[list[VertexId], int]:
    """Merge two groups by repeatedly comparing their heads. `precedes(u, v)` tells whether
    u goes before v; it is called with the head of the first group and the head of the second.
    Once a group runs out, the rest of the other is appended in its order.

    Returns:
        The merged list and the number of head comparisons"""
    merged: list[VertexId] = []
    kf, ks = 0, 0
    comparisons = 0
    while kf < len(first) and ks < len(second):
        comparisons += 1
        if precedes(first[kf], second[ks]):
            merged.append(first[kf])
            kf += 1
        else:
            merged.append(second[ks])
            ks += 1
    merged.extend(first[kf:])
    merged.extend(second[ks:])
    return merged, comparisons


def _merge_sort(
    t: Tournament, group: list[VertexId], rng: np.random.Generator
) -> tuple[list[VertexId], int]:
    if len(group) <= 1:
        return group, 0
    half = len(group) // 2
    shuffled = [group[int(k)] for k in rng.permutation(len(group))]
    first, first_work = _merge_sort(t, shuffled[:half], rng)
    second, second_work = _merge_sort(t, shuffled[half:], rng)
    merged, comparisons = merge_groups(first, second, t.beats)
    return merged, first_work + second_work + comparisons


def pseudo_merge_sort(t: Tournament, seed: int) -> HeuristicResult:
    """Split the vertices into a random group of floor(n/2) and the remaining ceil(n/2),
    sort both recursively and merge them on the edges between the group heads."""
    vertices, comparisons = _merge_sort(t, list(range(t.n)), make_rng(seed))
    return _result(t, vertices, comparisons)


#########################################
# Selection sort
#########################################
def pseudo_selection_sort(t: Tournament, seed: int) -> HeuristicResult:
    """Repeatedly take a vertex of maximum out-degree in the subtournament of the vertices
    not taken yet. Ties are broken uniformly at random."""
    rng = make_rng(seed)
    remaining = (1 << t.n) - 1
    vertices: list[VertexId] = []
    scans = 0
    while remaining:
        candidates = [v for v in range(t.n) if remaining >> v & 1]
        degrees = [t.out_degree(v, remaining) for v in candidates]
        scans += len(candidates)
        best = max(degrees)
        chosen = _pick(
            [v for v, degree in zip(candidates, degrees) if degree == best], rng
        )
        vertices.append(chosen)
        remaining &= ~(1 << chosen)
    return _result(t, vertices, scans)


#########################################
# Bubble sort
#########################################
def bubble_sort_from(t: Tournament, order: Sequence[VertexId]) -> HeuristicResult:
    """Sweep the list swapping every adjacent pair joined by a backward edge, until a sweep
    makes no swap. Each swap removes exactly one backward edge, so there are at most
    n(n-1)/2 swaps."""
    vertices = _start_order(t, order)
    swaps = 0
    swapped = True
    while swapped:
        swapped = False
        for i in range(len(vertices) - 1):
            if t.beats(vertices[i + 1], vertices[i]):
                vertices[i], vertices[i + 1] = vertices[i + 1], vertices[i]
                swaps += 1
                swapped = True
    return _result(t, vertices, swaps)


def pseudo_bubble_sort(t: Tournament, seed: int) -> HeuristicResult:
    return bubble_sort_from(t, _random_order(t, make_rng(seed)))


#########################################
# Quick sort
#########################################
def partition_around(
    t: Tournament, group: Sequence[VertexId], pivot: VertexId
) -> tuple[list[VertexId], list[VertexId]]:
    """Split a group into the vertices that beat the pivot and the ones the pivot beats,
    keeping their relative order"""
    before: list[VertexId] = []
    after: list[VertexId] = []
    for v in group:
        if v == pivot:
            continue
        if t.beats(v, pivot):
            before.append(v)
        else:
            after.append(v)
    return before, after


def _choose_pivot(
    t: Tournament, group: list[VertexId], rng: np.random.Generator, rule: PivotRule
) -> VertexId:
    match rule:
        case PivotRule.RANDOM:
            return group[int(rng.integers(len(group)))]
        case PivotRule.MIN_IMBALANCE:
            within = 0
            for v in group:
                within |= 1 << v
            imbalance = [
                abs(t.out_degree(v, within) - t.in_degree(v, within)) for v in group
            ]
            best = min(imbalance)
            return _pick([v for v, i in zip(group, imbalance) if i == best], rng)


def _quick_sort(
    t: Tournament, group: list[VertexId], rng: np.random.Generator, rule: PivotRule
) -> tuple[list[VertexId], int]:
    if len(group) <= 1:
        return group, 0
    pivot = _choose_pivot(t, group, rng, rule)
    before, after = partition_around(t, group, pivot)
    sorted_before, before_work = _quick_sort(t, before, rng, rule)
    sorted_after, after_work = _quick_sort(t, after, rng, rule)
    work = len(group) - 1 + before_work + after_work
    return sorted_before + [pivot] + sorted_after, work


def pseudo_quick_sort(
    t: Tournament, seed: int, pivot_rule: PivotRule = PivotRule.RANDOM
) -> HeuristicResult:
    """Pick a pivot, put the vertices that beat it before it and the ones it beats after
    it, and recurse on both sides. The pivot is uniformly random by default; the
    min-imbalance rule picks a vertex minimizing |out-degree - in-degree| in its group."""
    vertices, comparisons = _quick_sort(t, list(range(t.n)), make_rng(seed), pivot_rule)
    return _result(t, vertices, comparisons)


HEURISTICS: dict[str, Callable[[Tournament, int], HeuristicResult]] = {
    "insertion": pseudo_insertion_sort,
    "merge": pseudo_merge_sort,
    "selection": pseudo_selection_sort,
    "bubble": pseudo_bubble_sort,
    "quick": pseudo_quick_sort,
}


def run_heuristic(
    name: str, t: Tournament, seed: int, pivot_rule: PivotRule = PivotRule.RANDOM
) -> HeuristicResult:
    """Run a heuristic by name. The pivot rule only applies to quick sort."""
    if name == "quick":
        result = pseudo_quick_sort(t, seed, pivot_rule)
    elif name in HEURISTICS:
        result = HEURISTICS[name](t, seed)
    else:
        raise ConfigError(f"Unknown heuristic {name!r}, expected one of {list(HEURISTICS)}")
    logger.debug("%s on n=%d seed=%d: cost %d", name, t.n, seed, result.cost)
    return result
