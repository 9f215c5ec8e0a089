import logging

import numpy as np

from src.structs import Model, Tournament
from src.utils import TournamentError, make_rng

logger = logging.getLogger(__name__)


def _check_size(n: int) -> None:
    if n < 1:
        raise TournamentError(f"A tournament needs at least one vertex, got n={n}")


def _bits_from_flags(flags: np.ndarray) -> int:
    """Pack a boolean array into an int whose bit k is flags[k]"""
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def gen_uniform(n: int, seed: int) -> Tournament:
    """Generate a uniformly random tournament: every pair is oriented by an independent fair
    coin drawn from the stream of `seed`. The same (n, seed) always gives the same tournament.

    Params:
    - n - The number of vertices
    - seed - The seed of the random stream"""
    _check_size(n)
    num_pairs = n * (n - 1) // 2
    rng = make_rng(seed)
    coins = rng.integers(0, 2, size=num_pairs, dtype=np.uint8).astype(bool)
    return Tournament(n, _bits_from_flags(coins))


def gen_transitive(n: int) -> Tournament:
    """Generate the transitive tournament where i -> j iff i < j"""
    _check_size(n)
    return Tournament(n, (1 << (n * (n - 1) // 2)) - 1)


def gen_noisy_transitive(n: int, p: float, seed: int) -> Tournament:
    """Generate a transitive tournament and reverse each edge independently with probability p.

    Params:
    - n - The number of vertices
    - p - The flip probability, in [0, 1]
    - seed - The seed of the random stream"""
    _check_size(n)
    if not 0.0 <= p <= 1.0:
        raise TournamentError(f"Flip probability must lie in [0, 1], got {p}")
    transitive = gen_transitive(n)
    rng = make_rng(seed)
    flips = rng.random(transitive.num_pairs) < p
    return Tournament(n, transitive.bits ^ _bits_from_flags(flips))


def generate_tournament(model: Model, n: int, seed: int, p: float = 0.0) -> Tournament:
    """Generate a tournament from one of the experiment ensembles"""
    logger.debug("Generating %s tournament with n=%d p=%s seed=%d", model.value, n, p, seed)
    match model:
        case Model.UNIFORM:
            return gen_uniform(n, seed)
        case Model.TRANSITIVE:
            return gen_transitive(n)
        case Model.NOISY:
            return gen_noisy_transitive(n, p, seed)
