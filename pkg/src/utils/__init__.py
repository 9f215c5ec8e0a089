from ._errors import (
    BallotError,
    ConfigError,
    FastError,
    IndexRangeError,
    OrderingError,
    SolverLimitError,
    TieError,
    TournamentError,
    VerificationError,
)
from ._misc import make_rng, mix_seed, popcount

__all__ = [
    "FastError",
    "TournamentError",
    "OrderingError",
    "SolverLimitError",
    "BallotError",
    "TieError",
    "ConfigError",
    "IndexRangeError",
    "VerificationError",
    "make_rng",
    "mix_seed",
    "popcount",
]
