import pytest

from src.algorithms import run_heuristic, solve_bruteforce, solve_dp, solve_exact
from src.data import gen_transitive, gen_uniform, read_tournament
from src.structs import (
    HEURISTIC_NAMES,
    Ordering,
    Tournament,
    backward_count,
    is_locally_minimal,
)
from src.utils import SolverLimitError, make_rng, mix_seed


def test_three_cycle():
    t = read_tournament("data/tournaments/three_cycle.txt")
    for solve in (solve_bruteforce, solve_dp):
        result = solve(t)
        assert result.optimal_cost == 1
        assert result.optimal_ordering == Ordering((0, 1, 2))


def test_small_examples():
    for solve in (solve_bruteforce, solve_dp):
        assert solve(Tournament(1)).optimal_ordering == Ordering((0,))
        assert solve(Tournament(1)).optimal_cost == 0
        assert solve(Tournament(2, 0)).optimal_ordering == Ordering((1, 0))
        assert solve(gen_transitive(7)).optimal_ordering == Ordering.identity(7)
        assert solve(read_tournament("data/tournaments/five_players.txt")).optimal_cost == 2


def test_dp_matches_bruteforce():
    rng = make_rng(2718)
    for trial in range(100):
        n = int(rng.integers(1, 9))
        t = gen_uniform(n, mix_seed(2718, trial))
        brute = solve_bruteforce(t)
        dp = solve_dp(t)
        assert dp.optimal_cost == brute.optimal_cost
        assert dp.optimal_ordering == brute.optimal_ordering
        assert backward_count(t, dp.optimal_ordering) == dp.optimal_cost
        assert is_locally_minimal(t, dp.optimal_ordering)
        for name in HEURISTIC_NAMES:
            assert run_heuristic(name, t, trial).cost >= dp.optimal_cost


def test_fixed_instance():
    t = gen_uniform(6, 42)
    assert solve_bruteforce(t) == solve_dp(t)


def test_optimum_is_locally_minimal():
    for seed in range(50):
        t = gen_uniform(9, seed)
        assert is_locally_minimal(t, solve_exact(t).optimal_ordering)


def test_heuristics_never_beat_the_optimum():
    for seed in range(30):
        t = gen_uniform(11, mix_seed(9, seed))
        best = solve_exact(t).optimal_cost
        for name in HEURISTIC_NAMES:
            assert run_heuristic(name, t, seed).cost >= best


def test_dp_on_larger_transitive():
    result = solve_dp(gen_transitive(15))
    assert result.optimal_cost == 0
    assert result.optimal_ordering == Ordering.identity(15)


def test_size_guards():
    with pytest.raises(SolverLimitError):
        solve_bruteforce(gen_uniform(11, 1))
    with pytest.raises(SolverLimitError):
        solve_dp(gen_uniform(25, 1))
