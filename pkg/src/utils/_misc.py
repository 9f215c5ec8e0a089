import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    """SplitMix64 finaliser: a bijective 64-bit mixing function."""
    x = (x + _GOLDEN_GAMMA) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def mix_seed(*parts: int) -> int:
    """Derive a 64-bit seed from a master seed and any number of stream indices.
    The result only depends on the values of the parts, so sub-streams can be derived
    independently of the order in which they're used.

    Params:
    - parts - The master seed followed by the stream indices"""
    state = 0
    for part in parts:
        state = _splitmix64(state ^ (part & _MASK64))
    return state


def make_rng(seed: int) -> np.random.Generator:
    """Create the random generator used by every randomized operation"""
    return np.random.default_rng(seed & _MASK64)


def popcount(mask: int) -> int:
    return mask.bit_count()
