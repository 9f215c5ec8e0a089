from dataclasses import dataclass, field
from enum import Enum
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from src.utils import BallotError

from ._tournament import Ordering, VertexId


class TieRule(Enum):
    """What to do when as many ballots rank u above v as v above u"""

    ERROR = "error"
    RANDOM = "random"
    LEXICOGRAPHIC = "lex"


@dataclass(frozen=True)
class Ballot:
    """A total order over candidate names, best first."""

    ranking: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.ranking) == 0:
            raise BallotError("A ballot must rank at least one candidate")
        if len(set(self.ranking)) != len(self.ranking):
            raise BallotError(f"Ballot {' '.join(self.ranking)} ranks a candidate twice")

    def __len__(self) -> int:
        return len(self.ranking)

    def __str__(self) -> str:
        return " ".join(self.ranking)

    @classmethod
    def of(cls, *names: str) -> Self:
        return cls(tuple(names))


@dataclass(frozen=True)
class Profile:
    """A non-empty list of ballots over the same candidates. Candidates are mapped to
    vertex ids in lexicographic order of their names."""

    ballots: tuple[Ballot, ...]
    candidates: tuple[str, ...] = field(init=False)

    def __post_init__(self) -> None:
        if len(self.ballots) == 0:
            raise BallotError("A profile needs at least one ballot")
        names = set(self.ballots[0].ranking)
        for index, ballot in enumerate(self.ballots[1:], start=2):
            if set(ballot.ranking) != names:
                raise BallotError(
                    f"Ballot {index} ranks {sorted(ballot.ranking)} but ballot 1 ranks {sorted(names)}"
                )
        object.__setattr__(self, "candidates", tuple(sorted(names)))

    def __len__(self) -> int:
        return len(self.ballots)

    @classmethod
    def from_rankings(cls, rankings: list[list[str]]) -> Self:
        return cls(tuple(Ballot(tuple(ranking)) for ranking in rankings))

    @property
    def num_candidates(self) -> int:
        return len(self.candidates)

    @property
    def _ids(self) -> dict[str, VertexId]:
        return {name: index for index, name in enumerate(self.candidates)}

    def vertex(self, name: str) -> VertexId:
        try:
            return self._ids[name]
        except KeyError:
            raise BallotError(f"Unknown candidate {name!r}") from None

    def name(self, vertex: VertexId) -> str:
        return self.candidates[vertex]

    def to_ordering(self, ballot: Ballot) -> Ordering:
        """The vertex ordering corresponding to a ballot over this profile's candidates"""
        if set(ballot.ranking) != set(self.candidates):
            raise BallotError(f"Ballot {ballot} does not rank the profile's candidates")
        ids = self._ids
        return Ordering(tuple(ids[name] for name in ballot.ranking))

    def to_ballot(self, ordering: Ordering) -> Ballot:
        """The ranking of candidate names corresponding to a vertex ordering"""
        if len(ordering) != self.num_candidates:
            raise BallotError(
                f"Ordering has {len(ordering)} vertices but there are {self.num_candidates} candidates"
            )
        return Ballot(tuple(self.candidates[v] for v in ordering))
