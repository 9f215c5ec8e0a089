import logging

from src.structs import (
    Ballot,
    Cost,
    Ordering,
    PivotRule,
    Profile,
    TieRule,
    Tournament,
    pair_index,
)
from src.utils import BallotError, TieError, make_rng, mix_seed

from ._exact import solve_exact
from ._heuristics import run_heuristic

logger = logging.getLogger(__name__)


def majority_tournament(
    profile: Profile, tie_rule: TieRule = TieRule.ERROR, seed: int = 0
) -> Tournament:
    """Tournament on the candidates with u -> v iff strictly more ballots rank u above v.
    Vertex ids follow the lexicographic order of the candidate names.

    Ties are resolved by `tie_rule`: ERROR raises, LEXICOGRAPHIC orients the edge from the
    alphabetically smaller name, RANDOM flips a coin from the stream of `seed`."""
    n = profile.num_candidates
    margins = [[0] * n for _ in range(n)]
    for ballot in profile.ballots:
        ordering = profile.to_ordering(ballot)
        for i in range(n):
            for j in range(i + 1, n):
                margins[ordering[i]][ordering[j]] += 1

    rng = make_rng(seed)
    bits = 0
    for u in range(n):
        for v in range(u + 1, n):
            if margins[u][v] > margins[v][u]:
                forward = True
            elif margins[u][v] < margins[v][u]:
                forward = False
            else:
                match tie_rule:
                    case TieRule.ERROR:
                        raise TieError(
                            f"Candidates {profile.name(u)!r} and {profile.name(v)!r} tie "
                            f"{margins[u][v]} to {margins[v][u]}"
                        )
                    case TieRule.LEXICOGRAPHIC:
                        forward = True
                    case TieRule.RANDOM:
                        forward = bool(rng.integers(2))
                logger.info(
                    "Tie between %s and %s resolved by %s rule",
                    profile.name(u),
                    profile.name(v),
                    tie_rule.value,
                )
            if forward:
                bits |= 1 << pair_index(n, u, v)
    return Tournament(n, bits)


def kendall_tau(o: Ordering, ballot: Ballot) -> Cost:
    """Number of candidate pairs ordered differently by the vertex ordering `o` and the
    ballot. Vertex ids map to candidate names in lexicographic order, as in a profile."""
    if len(o) != len(ballot):
        raise BallotError(
            f"Ordering has {len(o)} vertices but the ballot ranks {len(ballot)} candidates"
        )
    ballot_position = Profile((ballot,)).to_ordering(ballot).positions
    disagreements = 0
    for j in range(1, len(o)):
        for i in range(j):
            if ballot_position[o[i]] > ballot_position[o[j]]:
                disagreements += 1
    return disagreements


def total_kendall_tau(o: Ordering, profile: Profile) -> Cost:
    return sum(kendall_tau(o, ballot) for ballot in profile.ballots)


def aggregate(
    profile: Profile,
    algorithm: str,
    seed: int = 0,
    tie_rule: TieRule = TieRule.ERROR,
    pivot_rule: PivotRule = PivotRule.RANDOM,
) -> tuple[Ballot, Cost]:
    """Aggregate the ballots into one ranking by ordering their majority tournament. Tie
    coins use the stream mix(seed, 0) and the heuristic mix(seed, 1).

    Returns:
        The aggregated ranking and its total Kendall tau distance to the ballots"""
    tournament = majority_tournament(profile, tie_rule, mix_seed(seed, 0))
    if algorithm == "exact":
        ordering = solve_exact(tournament).optimal_ordering
    else:
        ordering = run_heuristic(algorithm, tournament, mix_seed(seed, 1), pivot_rule).ordering
    return profile.to_ballot(ordering), total_kendall_tau(ordering, profile)
