import pytest

from src.algorithms import (
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
from src.data import gen_transitive, gen_uniform, read_tournament
from src.structs import (
    HEURISTIC_NAMES,
    Ordering,
    PivotRule,
    Tournament,
    backward_count,
    is_locally_minimal,
)
from src.utils import ConfigError, OrderingError, make_rng, mix_seed


def three_cycle() -> Tournament:
    return read_tournament("data/tournaments/three_cycle.txt")


def all_heuristics(t: Tournament, seed: int):
    for name in HEURISTIC_NAMES:
        yield name, run_heuristic(name, t, seed)
    yield "quick-min-imbalance", pseudo_quick_sort(t, seed, PivotRule.MIN_IMBALANCE)


def test_registry_covers_every_heuristic():
    assert set(HEURISTICS) == set(HEURISTIC_NAMES)
    with pytest.raises(ConfigError):
        run_heuristic("heap", three_cycle(), 0)


def test_insertion_sort_examples():
    result = insertion_sort_from(three_cycle(), [0, 1, 2])
    assert result.ordering == Ordering((0, 1, 2))
    assert result.cost == 1
    assert result.work == 0
    for seed in range(10):
        assert pseudo_insertion_sort(gen_transitive(7), seed).ordering == Ordering.identity(7)
        assert pseudo_insertion_sort(gen_uniform(2, seed), seed).cost == 0


def test_insertion_sort_counts_swaps():
    result = insertion_sort_from(gen_transitive(5), [4, 3, 2, 1, 0])
    assert result.ordering == Ordering.identity(5)
    assert result.work == 10


def test_insertion_stage_costs_sum_to_cost():
    for seed in range(50):
        t = gen_uniform(9, seed)
        order = [int(v) for v in make_rng(seed).permutation(9)]
        stages = insertion_stage_costs(t, order)
        assert len(stages) == 9
        assert stages[0] == 0 and stages[1] == 0
        assert sum(stages) == insertion_sort_from(t, order).cost


def test_merge_example_from_split():
    t = three_cycle()
    merged, comparisons = merge_groups([0, 1], [2], t.beats)
    assert merged == [2, 0, 1]
    assert comparisons == 1
    assert backward_count(t, Ordering.of(merged)) == 1


def test_merge_appends_the_remainder_in_order():
    t = gen_transitive(6)
    merged, comparisons = merge_groups([0, 1, 2], [3, 4, 5], t.beats)
    assert merged == [0, 1, 2, 3, 4, 5]
    assert comparisons == 3


def test_merge_sort_examples():
    assert pseudo_merge_sort(Tournament(1), 3).ordering == Ordering((0,))
    assert pseudo_merge_sort(three_cycle(), 3).cost == 1
    for seed in range(10):
        assert pseudo_merge_sort(gen_transitive(11), seed).cost == 0


def test_selection_sort_examples():
    assert pseudo_selection_sort(Tournament(1), 0).ordering == Ordering((0,))
    for seed in range(10):
        assert pseudo_selection_sort(three_cycle(), seed).cost == 1
        result = pseudo_selection_sort(gen_transitive(8), seed)
        assert result.ordering == Ordering.identity(8)
        assert result.work == 8 * 9 // 2


def test_selection_sort_picks_maximum_out_degree():
    t = read_tournament("data/tournaments/five_players.txt")
    degrees = [t.out_degree(v) for v in range(5)]
    for seed in range(20):
        first = pseudo_selection_sort(t, seed).ordering[0]
        assert degrees[first] == max(degrees)


def test_bubble_sort_examples():
    result = bubble_sort_from(three_cycle(), [0, 1, 2])
    assert result.cost == 1
    assert result.work == 0
    assert result.ordering == Ordering((0, 1, 2))

    result = bubble_sort_from(gen_transitive(3), [2, 1, 0])
    assert result.ordering == Ordering.identity(3)
    assert result.work == 3


def test_bubble_sort_fixed_point():
    t = gen_uniform(10, 4)
    local = pseudo_insertion_sort(t, 4).ordering
    result = bubble_sort_from(t, list(local))
    assert result.work == 0
    assert result.ordering == local


def test_quick_sort_examples():
    for seed in range(10):
        for rule in PivotRule:
            assert pseudo_quick_sort(three_cycle(), seed, rule).cost == 1
            assert pseudo_quick_sort(gen_transitive(12), seed, rule).cost == 0
            two = Tournament(2, seed % 2)
            assert pseudo_quick_sort(two, seed, rule).cost == 0


def test_partition_invariant():
    t = gen_uniform(15, 21)
    group = list(range(15))
    for pivot in group:
        before, after = partition_around(t, group, pivot)
        assert sorted(before + after + [pivot]) == group
        assert all(t.beats(v, pivot) for v in before)
        assert all(t.beats(pivot, v) for v in after)


def test_min_imbalance_pivot_comes_from_a_balanced_vertex():
    # in a regular tournament every vertex is balanced, so any pivot is allowed
    t = read_tournament("data/tournaments/three_cycle.txt")
    assert pseudo_quick_sort(t, 1, PivotRule.MIN_IMBALANCE).ordering in {
        Ordering((0, 1, 2)),
        Ordering((1, 2, 0)),
        Ordering((2, 0, 1)),
    }
    # on a transitive tournament the median vertex is the only balanced one
    t = gen_transitive(5)
    result = pseudo_quick_sort(t, 0, PivotRule.MIN_IMBALANCE)
    assert result.ordering == Ordering.identity(5)
    assert result.work == 4 + 1 + 1


def test_start_order_must_be_a_permutation():
    with pytest.raises(OrderingError):
        insertion_sort_from(three_cycle(), [0, 1])
    with pytest.raises(OrderingError):
        bubble_sort_from(three_cycle(), [0, 1, 1])


def test_heuristics_are_deterministic_permutations():
    for seed in range(30):
        t = gen_uniform(13, mix_seed(5, seed))
        for name, result in all_heuristics(t, seed):
            assert sorted(result.ordering) == list(range(13)), name
            assert result.cost == backward_count(t, result.ordering), name
        first = [result.ordering for _, result in all_heuristics(t, seed)]
        second = [result.ordering for _, result in all_heuristics(t, seed)]
        assert first == second


def test_insertion_and_bubble_outputs_are_local_minima():
    rng = make_rng(77)
    for trial in range(1000):
        n = int(rng.integers(1, 13))
        t = gen_uniform(n, mix_seed(77, trial))
        seed = int(rng.integers(1 << 32))
        assert is_locally_minimal(t, pseudo_insertion_sort(t, seed).ordering)
        bubble = pseudo_bubble_sort(t, seed)
        assert is_locally_minimal(t, bubble.ordering)
        assert bubble.work <= n * (n - 1) // 2


def test_bubble_swaps_remove_one_backward_edge_each():
    for seed in range(100):
        t = gen_uniform(10, seed)
        start = [int(v) for v in make_rng(seed).permutation(10)]
        result = bubble_sort_from(t, start)
        assert backward_count(t, Ordering.of(start)) - result.cost == result.work


def test_transitive_recovery():
    for n in range(2, 51):
        t = gen_transitive(n)
        for seed in range(10):
            for name, result in all_heuristics(t, seed):
                assert result.cost == 0, f"{name} n={n} seed={seed}"
