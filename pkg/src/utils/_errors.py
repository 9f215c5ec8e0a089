class FastError(Exception):
    def __init__(self, message: str = "Invalid feedback arc set input"):
        self.message = message
        super().__init__(self.message)

    def __str__(self) -> str:
        return self.message


class TournamentError(FastError):
    def __init__(self, message: str = "The tournament is not valid"):
        super().__init__(message)


class OrderingError(FastError):
    def __init__(self, message: str = "The ordering is not a permutation of the vertices"):
        super().__init__(message)


class SolverLimitError(FastError):
    def __init__(self, message: str = "The instance is too large for this solver"):
        super().__init__(message)


class BallotError(FastError):
    def __init__(self, message: str = "The ballots are not valid"):
        super().__init__(message)


class TieError(BallotError):
    def __init__(self, message: str = "The ballots tie on a pair of candidates"):
        super().__init__(message)


class ConfigError(FastError):
    def __init__(self, message: str = "The experiment configuration is not valid"):
        super().__init__(message)


class IndexRangeError(FastError):
    def __init__(self, message: str = "The index is out of range"):
        super().__init__(message)


class VerificationError(FastError):
    def __init__(self, message: str = "The oracle does not match the formula"):
        super().__init__(message)
