import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.algorithms import run_heuristic, solve_exact
from src.data import generate_tournament
from src.structs import (
    DP_MAX_N,
    AlgorithmStats,
    ExperimentConfig,
    SummaryStats,
)
from src.utils import SolverLimitError, mix_seed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _ChunkCosts:
    """Costs of a contiguous range of trials, one list per algorithm in config order, plus
    the optimal cost of each trial when the exact solver ran"""

    costs: tuple[tuple[int, ...], ...]
    optimal: tuple[int, ...] | None


def _run_chunk(
    config: ExperimentConfig, start: int, stop: int, with_optimum: bool
) -> _ChunkCosts:
    costs: list[list[int]] = [[] for _ in config.algorithms]
    optimal: list[int] = []
    for trial in range(start, stop):
        t = generate_tournament(
            config.model, config.n, mix_seed(config.seed, trial), config.p
        )
        best = solve_exact(t).optimal_cost if with_optimum else None
        if best is not None:
            optimal.append(best)
        for index, algorithm in enumerate(config.algorithms):
            if algorithm == "exact":
                cost = best if best is not None else solve_exact(t).optimal_cost
            else:
                seed = mix_seed(config.seed, trial, index)
                cost = run_heuristic(algorithm, t, seed, config.pivot_rule).cost
            costs[index].append(cost)
    return _ChunkCosts(
        tuple(tuple(c) for c in costs), tuple(optimal) if with_optimum else None
    )


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size = math.ceil(trials / workers)
    return [(start, min(start + size, trials)) for start in range(0, trials, size)]


def _collect(config: ExperimentConfig, with_optimum: bool) -> _ChunkCosts:
    """Run every trial and concatenate the chunks in trial order, so the result does not
    depend on how the trials were scheduled"""
    bounds = _chunks(config.trials, config.workers)
    if config.workers == 1:
        parts = [_run_chunk(config, start, stop, with_optimum) for start, stop in bounds]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            parts = list(
                executor.map(
                    _run_chunk,
                    [config] * len(bounds),
                    [start for start, _ in bounds],
                    [stop for _, stop in bounds],
                    [with_optimum] * len(bounds),
                )
            )
    costs = tuple(
        tuple(cost for part in parts for cost in part.costs[index])
        for index in range(len(config.algorithms))
    )
    optimal = (
        tuple(cost for part in parts for cost in part.optimal or ())
        if with_optimum
        else None
    )
    return _ChunkCosts(costs, optimal)


def _describe(algorithm: str, costs: np.ndarray) -> AlgorithmStats:
    trials = len(costs)
    stderr = float(costs.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return AlgorithmStats(
        algorithm=algorithm,
        trials=trials,
        mean_cost=float(costs.mean()),
        stderr=stderr,
        min_cost=int(costs.min()),
        max_cost=int(costs.max()),
    )


def run_trials(config: ExperimentConfig) -> SummaryStats:
    """Run every selected algorithm on `config.trials` random tournaments. Trial t uses the
    tournament seeded by mix(seed, t) and runs the algorithm at index a with mix(seed, t, a)."""
    logger.info(
        "Running %d trials of %s on n=%d (%s)",
        config.trials,
        ",".join(config.algorithms),
        config.n,
        config.model.value,
    )
    collected = _collect(config, with_optimum=False)
    stats = tuple(
        _describe(algorithm, np.array(collected.costs[index], dtype=np.float64))
        for index, algorithm in enumerate(config.algorithms)
    )
    return SummaryStats(config, stats)


def approximation_report(config: ExperimentConfig) -> SummaryStats:
    """Like run_trials, and also solve every trial exactly to report, per algorithm, the
    mean and maximum of cost / max(1, optimal cost) and the mean excess cost over the
    optimum. The max(1, .) guard makes the ratio 0 on acyclic instances."""
    if config.n > DP_MAX_N:
        raise SolverLimitError(
            f"The approximation report needs the exact solver, limited to n <= {DP_MAX_N}"
        )
    logger.info(
        "Measuring approximation ratios over %d trials on n=%d", config.trials, config.n
    )
    collected = _collect(config, with_optimum=True)
    assert collected.optimal is not None
    optimal = np.array(collected.optimal, dtype=np.float64)
    stats: list[AlgorithmStats] = []
    for index, algorithm in enumerate(config.algorithms):
        costs = np.array(collected.costs[index], dtype=np.float64)
        ratios = costs / np.maximum(1.0, optimal)
        base = _describe(algorithm, costs)
        stats.append(
            AlgorithmStats(
                algorithm=base.algorithm,
                trials=base.trials,
                mean_cost=base.mean_cost,
                stderr=base.stderr,
                min_cost=base.min_cost,
                max_cost=base.max_cost,
                mean_ratio=float(ratios.mean()),
                max_ratio=float(ratios.max()),
                mean_excess=float((costs - optimal).mean()),
            )
        )
    return SummaryStats(config, tuple(stats))
