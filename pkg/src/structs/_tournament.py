from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, TypeAlias
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np

from src.utils import OrderingError, TournamentError, popcount

VertexId: TypeAlias = int
Cost: TypeAlias = int


def pair_index(n: int, u: VertexId, v: VertexId) -> int:
    """Position of the unordered pair {u, v} (u < v) in the upper-triangular bitset of a
    tournament on n vertices. Pairs are numbered row by row: (0,1), (0,2), ..., (1,2), ..."""
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class Tournament:
    """A tournament on the vertices 0..n-1. The orientation of every unordered pair {u, v}
    with u < v is one bit of `bits`, at position `pair_index(n, u, v)`: a set bit means the
    edge goes u -> v, a clear bit means v -> u. Exactly one edge per pair and no self-loops
    are therefore guaranteed by construction."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise TournamentError(f"A tournament needs at least one vertex, got n={self.n}")
        if self.bits < 0 or self.bits >> self.num_pairs:
            raise TournamentError(
                f"Orientation bits out of range for a tournament on {self.n} vertices"
            )

    def __repr__(self) -> str:
        return f"Tournament(n={self.n}, edges={self.edges()})"

    @property
    def num_pairs(self) -> int:
        return self.n * (self.n - 1) // 2

    @classmethod
    def from_edges(cls, n: int, edges: list[tuple[VertexId, VertexId]]) -> Self:
        """Build a tournament from its directed edges. Every unordered pair must appear
        exactly once and self-loops are rejected."""
        if n < 1:
            raise TournamentError(f"A tournament needs at least one vertex, got n={n}")
        bits = 0
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TournamentError(f"Edge {u} -> {v} references a vertex outside [0, {n})")
            if u == v:
                raise TournamentError(f"Self-loop on vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise TournamentError(f"Duplicate edge between {key[0]} and {key[1]}")
            seen.add(key)
            if u < v:
                bits |= 1 << pair_index(n, u, v)
        if len(seen) != n * (n - 1) // 2:
            missing = [
                (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in seen
            ]
            raise TournamentError(f"Missing edges for pairs {missing[:5]}")
        return cls(n, bits)

    def beats(self, u: VertexId, v: VertexId) -> bool:
        """Check if the edge between u and v goes u -> v"""
        if u == v:
            raise TournamentError(f"No edge between vertex {u} and itself")
        if u < v:
            return bool(self.bits >> pair_index(self.n, u, v) & 1)
        return not self.bits >> pair_index(self.n, v, u) & 1

    @cached_property
    def _masks(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        out_masks = [0] * self.n
        in_masks = [0] * self.n
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.bits >> pair_index(self.n, u, v) & 1:
                    out_masks[u] |= 1 << v
                    in_masks[v] |= 1 << u
                else:
                    out_masks[v] |= 1 << u
                    in_masks[u] |= 1 << v
        return tuple(out_masks), tuple(in_masks)

    def out_mask(self, v: VertexId) -> int:
        """Bitmask of the vertices that v beats"""
        return self._masks[0][v]

    def in_mask(self, v: VertexId) -> int:
        """Bitmask of the vertices that beat v"""
        return self._masks[1][v]

    def out_degree(self, v: VertexId, within: int | None = None) -> int:
        """Out-degree of v, optionally restricted to the subtournament induced by the
        vertices in the bitmask `within`"""
        mask = self.out_mask(v)
        return popcount(mask if within is None else mask & within)

    def in_degree(self, v: VertexId, within: int | None = None) -> int:
        mask = self.in_mask(v)
        return popcount(mask if within is None else mask & within)

    def edges(self) -> list[tuple[VertexId, VertexId]]:
        """The directed edges, one per unordered pair in pair order"""
        return [
            (u, v) if self.bits >> pair_index(self.n, u, v) & 1 else (v, u)
            for u in range(self.n)
            for v in range(u + 1, self.n)
        ]

    def adjacency(self) -> np.ndarray:
        """0/1 matrix where entry [u, v] is 1 iff u -> v"""
        matrix = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            matrix[u, v] = 1
        return matrix

    def reversed(self) -> Self:
        """The tournament with every edge flipped"""
        return self.__class__(self.n, self.bits ^ ((1 << self.num_pairs) - 1))


@dataclass(frozen=True)
class Ordering:
    """A permutation of the vertex ids 0..n-1, listed from first to last."""

    vertices: tuple[VertexId, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) == 0:
            raise OrderingError("An ordering needs at least one vertex")
        if sorted(self.vertices) != list(range(len(self.vertices))):
            raise OrderingError(
                f"{list(self.vertices)} is not a permutation of 0..{len(self.vertices) - 1}"
            )

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self.vertices)

    def __getitem__(self, index: int) -> VertexId:
        return self.vertices[index]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.vertices)

    @classmethod
    def of(cls, vertices: list[int] | tuple[int, ...]) -> Self:
        return cls(tuple(int(v) for v in vertices))

    @classmethod
    def identity(cls, n: int) -> Self:
        return cls(tuple(range(n)))

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse a comma-separated list of vertex ids such as "0,2,1" """
        try:
            vertices = tuple(int(token) for token in text.split(","))
        except ValueError:
            raise OrderingError(f"Cannot parse ordering {text!r}") from None
        return cls(vertices)

    def reversed(self) -> Self:
        return self.__class__(self.vertices[::-1])

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """positions[v] is the index of vertex v in the ordering"""
        positions = [0] * len(self.vertices)
        for index, v in enumerate(self.vertices):
            positions[v] = index
        return tuple(positions)


def _check_dimensions(t: Tournament, o: Ordering) -> None:
    if len(o) != t.n:
        raise OrderingError(
            f"Ordering has {len(o)} vertices but the tournament has {t.n}"
        )


def backward_count(t: Tournament, o: Ordering) -> Cost:
    """Number of edges pointing from a later vertex to an earlier one in the ordering"""
    _check_dimensions(t, o)
    cost = 0
    placed = 0
    for v in o:
        cost += popcount(t.out_mask(v) & placed)
        placed |= 1 << v
    return cost


def backward_edges(t: Tournament, o: Ordering) -> list[tuple[VertexId, VertexId]]:
    """The backward edges of the ordering as (later, earlier) pairs, grouped by the later
    endpoint in ordering order"""
    _check_dimensions(t, o)
    edges: list[tuple[VertexId, VertexId]] = []
    for j in range(1, len(o)):
        for i in range(j):
            if t.beats(o[j], o[i]):
                edges.append((o[j], o[i]))
    return edges


def is_locally_minimal(t: Tournament, o: Ordering) -> bool:
    """Check that no swap of two adjacent vertices lowers the cost, i.e. every adjacent
    pair is joined by a forward edge"""
    _check_dimensions(t, o)
    return all(t.beats(o[i], o[i + 1]) for i in range(len(o) - 1))


def adjacent_swap_sequence(source: Ordering, target: Ordering) -> list[int]:
    """Turn `source` into `target` using adjacent swaps only. Target vertices are pulled
    to the front one by one; each returned index i means "swap positions i and i+1".
    The number of swaps equals the number of pairs the two orderings disagree on."""
    if len(source) != len(target):
        raise OrderingError(
            f"Cannot compare orderings of {len(source)} and {len(target)} vertices"
        )
    current = list(source)
    swaps: list[int] = []
    for position, vertex in enumerate(target):
        index = current.index(vertex, position)
        while index > position:
            current[index - 1], current[index] = current[index], current[index - 1]
            swaps.append(index - 1)
            index -= 1
    return swaps
