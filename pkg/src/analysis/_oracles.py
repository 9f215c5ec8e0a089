import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

from src.algorithms import insertion_sort_from, insertion_stage_costs, merge_groups
from src.data import gen_uniform
from src.structs import INSERTION_ORACLE_MAX_N, MERGE_ORACLE_MAX_GROUP, Tournament
from src.utils import SolverLimitError, VerificationError, mix_seed

from ._formulas import b_k, backward_prob, expected_total_backward, h_prob

logger = logging.getLogger(__name__)


#########################################
# Insertion sort oracles
#########################################
def _check_insertion_size(n: int) -> None:
    if not 2 <= n <= INSERTION_ORACLE_MAX_N:
        raise SolverLimitError(
            f"Tournament enumeration supports 2 <= n <= {INSERTION_ORACLE_MAX_N}, got n={n}"
        )


def oracle_expected_insertion_cost(n: int) -> Fraction:
    """Exact average cost of insertion sort over all 2^(n(n-1)/2) tournaments on n vertices.
    Relabelling vertices maps the uniform ensemble onto itself, so a fixed insertion order
    0, 1, ..., n-1 averages the same as a random one."""
    _check_insertion_size(n)
    identity = list(range(n))
    num_tournaments = 1 << (n * (n - 1) // 2)
    total = 0
    for bits in range(num_tournaments):
        total += insertion_sort_from(Tournament(n, bits), identity).cost
    logger.debug("Enumerated %d tournaments on %d vertices", num_tournaments, n)
    return Fraction(total, num_tournaments)


def oracle_stage_backward(k: int) -> Fraction:
    """Exact expected number of backward edges contributed by the vertex inserted at stage k,
    averaged over all tournaments on k vertices (later stages never change it)."""
    if k == 1:
        return Fraction(0)
    _check_insertion_size(k)
    identity = list(range(k))
    num_tournaments = 1 << (k * (k - 1) // 2)
    total = 0
    for bits in range(num_tournaments):
        total += insertion_stage_costs(Tournament(k, bits), identity)[k - 1]
    return Fraction(total, num_tournaments)


#########################################
# Merge oracles
#########################################
def _check_merge_indices(i: int, j: int, groups_of: int) -> None:
    if not 1 <= groups_of <= MERGE_ORACLE_MAX_GROUP:
        raise SolverLimitError(
            f"Merge enumeration supports groups of 1..{MERGE_ORACLE_MAX_GROUP}, got {groups_of}"
        )
    if not (1 <= i <= groups_of and 1 <= j <= groups_of):
        raise SolverLimitError(
            f"Positions ({i}, {j}) must lie in 1..{groups_of} for groups of {groups_of}"
        )


@dataclass
class _CoinComparator:
    """Answers the k-th head comparison of a merge with bit k of `coins`: a set bit puts the
    head of the first group first. Remembers every comparison and its answer."""

    coins: int
    answers: dict[tuple[int, int], bool] = field(default_factory=dict)

    def __call__(self, u: int, v: int) -> bool:
        answer = bool(self.coins >> len(self.answers) & 1)
        self.answers[(u, v)] = answer
        return answer


def _merge_paths(groups_of: int) -> Iterator[tuple[list[int], dict[tuple[int, int], bool]]]:
    """Run one merge of two groups of `groups_of` vertices for every vector of 2g-1 coins.
    A merge makes at most 2g-1 comparisons and ignores the coins it doesn't use, so every
    comparison path is seen with weight proportional to its probability."""
    first = list(range(groups_of))
    second = list(range(groups_of, 2 * groups_of))
    for coins in range(1 << (2 * groups_of - 1)):
        comparator = _CoinComparator(coins)
        merged, _ = merge_groups(first, second, comparator)
        yield merged, comparator.answers


def oracle_merge_comparison(i: int, j: int, groups_of: int) -> Fraction:
    """Exact probability that the i-th vertex of the first group and the j-th vertex of the
    second group are compared when merging two groups of `groups_of` vertices, every head
    comparison being an independent fair coin"""
    _check_merge_indices(i, j, groups_of)
    pair = (i - 1, groups_of + j - 1)
    hits = 0
    paths = 0
    for _, answers in _merge_paths(groups_of):
        paths += 1
        if pair in answers:
            hits += 1
    return Fraction(hits, paths)


def oracle_backward_prob(i: int, j: int, groups_of: int) -> Fraction:
    """Exact probability that the edge between the i-th vertex of the first group and the
    j-th vertex of the second group is backward after one merge. A compared pair takes the
    direction of the comparison; the edge of a pair never compared is unexamined and so
    enumerated as one more fair coin. Backwardness is read off the merged output."""
    _check_merge_indices(i, j, groups_of)
    a, b = i - 1, groups_of + j - 1
    backward_halves = 0
    paths = 0
    for merged, answers in _merge_paths(groups_of):
        paths += 1
        a_first = merged.index(a) < merged.index(b)
        if (a, b) in answers:
            directions = [answers[(a, b)]]
            weight = 2
        else:
            directions = [True, False]
            weight = 1
        for a_beats_b in directions:
            if a_first != a_beats_b:
                backward_halves += weight
    return Fraction(backward_halves, 2 * paths)


def simulate_merge(groups_of: int, trials: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Monte Carlo counterpart of the merge oracles on uniformly random tournaments.

    Returns:
        Two (groups_of x groups_of) arrays with the empirical comparison rate and backward
        rate of the pair (i+1, j+1) at index [i, j]"""
    if groups_of < 1 or trials < 1:
        raise SolverLimitError("Merge simulation needs a positive group size and trial count")
    first = list(range(groups_of))
    second = list(range(groups_of, 2 * groups_of))
    compared = np.zeros((groups_of, groups_of))
    backward = np.zeros((groups_of, groups_of))
    for trial in range(trials):
        t = gen_uniform(2 * groups_of, mix_seed(seed, trial))
        pairs: set[tuple[int, int]] = set()

        def precedes(u: int, v: int) -> bool:
            pairs.add((u, v))
            return t.beats(u, v)

        merged, _ = merge_groups(first, second, precedes)
        position = {v: index for index, v in enumerate(merged)}
        for a in first:
            for b in second:
                if (a, b) in pairs:
                    compared[a, b - groups_of] += 1
                later, earlier = (b, a) if position[a] < position[b] else (a, b)
                if t.beats(later, earlier):
                    backward[a, b - groups_of] += 1
    return compared / trials, backward / trials


#########################################
# Verification reports
#########################################
@dataclass(frozen=True)
class VerificationRow:
    label: str
    formula: Fraction
    oracle: Fraction

    @property
    def ok(self) -> bool:
        return self.formula == self.oracle

    def __str__(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        return (
            f"{self.label}: formula {float(self.formula)} ({self.formula}) "
            f"oracle {float(self.oracle)} ({self.oracle}) {status}"
        )


@dataclass(frozen=True)
class VerificationReport:
    theorem: int
    rows: tuple[VerificationRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def mismatches(self) -> list[VerificationRow]:
        return [row for row in self.rows if not row.ok]

    def raise_for_mismatch(self) -> None:
        if not self.ok:
            raise VerificationError(
                f"Theorem {self.theorem}: "
                + "; ".join(str(row) for row in self.mismatches)
            )


DEFAULT_VERIFY_MAX = {1: 5, 2: 5, 3: 4}
IDENTITY_MAX_INDEX = 12


def verify_theorem(theorem: int, nmax: int | None = None) -> VerificationReport:
    """Compare a closed form with its enumeration oracle.

    - 1: expected insertion sort cost for 2 <= n <= nmax and the per-stage B(k), k <= nmax
    - 2: comparison probability H(i, j) for all i, j <= nmax, groups of nmax
    - 3: backward probability for all i, j <= nmax, groups of nmax, plus the identity
      P(i, j) = (1 - H(i, j)) / 2 for all i, j <= 12"""
    if theorem not in DEFAULT_VERIFY_MAX:
        raise VerificationError(f"Unknown theorem {theorem}, expected 1, 2 or 3")
    limit = DEFAULT_VERIFY_MAX[theorem] if nmax is None else nmax
    if theorem == 1:
        _check_insertion_size(limit)
    else:
        _check_merge_indices(1, 1, limit)
    rows: list[VerificationRow] = []
    match theorem:
        case 1:
            for n in range(2, limit + 1):
                rows.append(
                    VerificationRow(
                        f"n={n}", expected_total_backward(n), oracle_expected_insertion_cost(n)
                    )
                )
            for k in range(1, limit + 1):
                rows.append(VerificationRow(f"B({k})", b_k(k), oracle_stage_backward(k)))
        case 2:
            for i in range(1, limit + 1):
                for j in range(1, limit + 1):
                    rows.append(
                        VerificationRow(
                            f"H({i},{j})", h_prob(i, j), oracle_merge_comparison(i, j, limit)
                        )
                    )
        case 3:
            for i in range(1, limit + 1):
                for j in range(1, limit + 1):
                    rows.append(
                        VerificationRow(
                            f"P({i},{j})",
                            backward_prob(i, j),
                            oracle_backward_prob(i, j, limit),
                        )
                    )
            for i in range(1, IDENTITY_MAX_INDEX + 1):
                for j in range(1, IDENTITY_MAX_INDEX + 1):
                    rows.append(
                        VerificationRow(
                            f"P({i},{j}) = (1 - H({i},{j}))/2",
                            backward_prob(i, j),
                            (1 - h_prob(i, j)) / 2,
                        )
                    )
    report = VerificationReport(theorem, tuple(rows))
    for row in report.mismatches:
        logger.warning("Theorem %d %s", theorem, row)
    return report
