import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.stats import kendalltau

from src.algorithms import (
    aggregate,
    kendall_tau,
    majority_tournament,
    run_heuristic,
    total_kendall_tau,
)
from src.data import read_ballots
from src.structs import (
    ALGORITHM_NAMES,
    Ballot,
    Ordering,
    Profile,
    TieRule,
    Tournament,
    backward_count,
)
from src.utils import BallotError, ConfigError, TieError, mix_seed

NAMES = ["ada", "ben", "cy", "dot", "eve", "fay", "gus"]


@st.composite
def odd_profiles(draw: st.DrawFn) -> Profile:
    k = draw(st.integers(min_value=1, max_value=len(NAMES)))
    m = draw(st.sampled_from([1, 3, 5, 7]))
    names = NAMES[:k]
    return Profile.from_rankings([draw(st.permutations(names)) for _ in range(m)])


def test_condorcet_cycle():
    profile = read_ballots("data/ballots/condorcet.txt")
    t = majority_tournament(profile)
    assert t == Tournament(3, 0b101)
    assert t.beats(0, 1) and t.beats(1, 2) and t.beats(2, 0)


def test_single_ballot_gives_its_transitive_tournament():
    profile = read_ballots("data/ballots/single.txt")
    t = majority_tournament(profile)
    assert backward_count(t, Ordering.identity(4)) == 0
    for algorithm in ALGORITHM_NAMES:
        ranking, distance = aggregate(profile, algorithm, seed=3)
        assert ranking == Ballot.of("alice", "bob", "carol", "dave")
        assert distance == 0


def test_tie_rules():
    profile = read_ballots("data/ballots/tie.txt")
    with pytest.raises(TieError):
        majority_tournament(profile)
    with pytest.raises(BallotError):
        aggregate(profile, "quick")
    assert majority_tournament(profile, TieRule.LEXICOGRAPHIC) == Tournament(2, 1)
    assert majority_tournament(profile, TieRule.RANDOM, seed=4) == majority_tournament(
        profile, TieRule.RANDOM, seed=4
    )
    outcomes = {majority_tournament(profile, TieRule.RANDOM, seed=s).bits for s in range(20)}
    assert outcomes == {0, 1}


def test_kendall_tau_examples():
    ballot = Ballot.of("a", "b", "c")
    assert kendall_tau(Ordering((0, 1, 2)), ballot) == 0
    assert kendall_tau(Ordering((0, 2, 1)), ballot) == 1
    assert kendall_tau(Ordering((2, 1, 0)), ballot) == 3
    assert kendall_tau(Ordering((1, 0, 2)), Ballot.of("b", "a", "c")) == 0
    with pytest.raises(BallotError):
        kendall_tau(Ordering((0, 1)), ballot)


def test_total_kendall_tau_of_condorcet_cycle():
    profile = read_ballots("data/ballots/condorcet.txt")
    assert total_kendall_tau(Ordering((0, 1, 2)), profile) == 4
    assert total_kendall_tau(Ordering((0, 2, 1)), profile) == 5


@given(
    st.integers(min_value=2, max_value=len(NAMES)).flatmap(
        lambda k: st.tuples(st.permutations(NAMES[:k]), st.permutations(list(range(k))))
    )
)
def test_kendall_tau_matches_scipy(case: tuple[list[str], list[int]]):
    names, order = case
    ballot = Ballot(tuple(names))
    o = Ordering.of(order)
    k = len(names)
    candidates = sorted(names)
    ballot_rank = [names.index(candidate) for candidate in candidates]
    order_rank = [order.index(v) for v in range(k)]
    tau = kendalltau(ballot_rank, order_rank).statistic
    assert kendall_tau(o, ballot) == round((1 - tau) * k * (k - 1) / 4)


@given(odd_profiles(), st.data())
def test_kendall_total_bounds_backward_count(profile: Profile, data: st.DataObject):
    t = majority_tournament(profile)
    order = data.draw(st.permutations(list(range(profile.num_candidates))))
    o = Ordering.of(order)
    assert total_kendall_tau(o, profile) >= backward_count(t, o)


def test_aggregate_judges():
    profile = read_ballots("data/ballots/judges.txt")
    for algorithm in ALGORITHM_NAMES:
        ranking, distance = aggregate(profile, algorithm, seed=1)
        assert sorted(ranking.ranking) == list(profile.candidates)
        assert distance == total_kendall_tau(profile.to_ordering(ranking), profile)
    ranking, _ = aggregate(profile, "exact")
    assert ranking.ranking[0] == "anna"
    assert ranking.ranking[-1] == "fabio"


def test_aggregate_draws_ties_and_heuristic_from_separate_streams():
    judges = read_ballots("data/ballots/judges.txt")
    t = majority_tournament(judges)
    for seed in range(10):
        ranking, _ = aggregate(judges, "quick", seed=seed)
        expected = run_heuristic("quick", t, mix_seed(seed, 1)).ordering
        assert ranking == judges.to_ballot(expected)

    tie = read_ballots("data/ballots/tie.txt")
    for seed in range(10):
        ranking, _ = aggregate(tie, "insertion", seed=seed, tie_rule=TieRule.RANDOM)
        coin = majority_tournament(tie, TieRule.RANDOM, seed=mix_seed(seed, 0))
        assert ranking.ranking[0] == ("a" if coin.beats(0, 1) else "b")


def test_aggregate_rejects_unknown_algorithm():
    with pytest.raises(ConfigError):
        aggregate(read_ballots("data/ballots/single.txt"), "heap")
