import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.data import gen_transitive, read_tournament
from src.structs import (
    Ordering,
    Tournament,
    adjacent_swap_sequence,
    backward_count,
    backward_edges,
    is_locally_minimal,
)
from src.utils import OrderingError, TournamentError


@st.composite
def tournaments_with_orderings(draw: st.DrawFn, max_n: int = 9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bits = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    order = draw(st.permutations(list(range(n))))
    return Tournament(n, bits), Ordering.of(order)


def three_cycle() -> Tournament:
    return read_tournament("data/tournaments/three_cycle.txt")


def test_transitive_identity_and_reversal():
    for n in range(1, 12):
        t = gen_transitive(n)
        assert backward_count(t, Ordering.identity(n)) == 0
        assert backward_count(t, Ordering.identity(n).reversed()) == n * (n - 1) // 2


def test_three_cycle_costs():
    t = three_cycle()
    # rotations of the cycle break it once, the reversed rotations twice
    for order in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
        assert backward_count(t, Ordering(order)) == 1
    for order in [(0, 2, 1), (1, 0, 2), (2, 1, 0)]:
        assert backward_count(t, Ordering(order)) == 2
    assert backward_edges(t, Ordering((0, 2, 1))) == [(2, 0), (1, 2)]


def test_backward_edges_of_three_cycle():
    t = three_cycle()
    assert backward_edges(t, Ordering((0, 1, 2))) == [(2, 0)]
    assert backward_edges(t, Ordering((1, 2, 0))) == [(0, 1)]
    assert backward_edges(gen_transitive(5), Ordering.identity(5)) == []


def test_is_locally_minimal():
    assert is_locally_minimal(gen_transitive(6), Ordering.identity(6))
    assert not is_locally_minimal(gen_transitive(6), Ordering.identity(6).reversed())
    assert is_locally_minimal(three_cycle(), Ordering((0, 1, 2)))
    assert not is_locally_minimal(three_cycle(), Ordering((0, 2, 1)))


def test_dimension_mismatch():
    t = three_cycle()
    with pytest.raises(OrderingError):
        backward_count(t, Ordering.identity(4))
    with pytest.raises(OrderingError):
        backward_edges(t, Ordering.identity(2))
    with pytest.raises(OrderingError):
        is_locally_minimal(t, Ordering.identity(1))


def test_ordering_validation():
    with pytest.raises(OrderingError):
        Ordering((0, 0, 1))
    with pytest.raises(OrderingError):
        Ordering((1, 2, 3))
    with pytest.raises(OrderingError):
        Ordering(())
    with pytest.raises(OrderingError):
        Ordering.parse("0,x,2")
    for text in ["0,,1,2", "0,1,2,", ""]:
        with pytest.raises(OrderingError):
            Ordering.parse(text)
    assert Ordering.parse("2, 0,1") == Ordering((2, 0, 1))
    assert str(Ordering((2, 0, 1))) == "2,0,1"


def test_tournament_validation():
    with pytest.raises(TournamentError):
        Tournament(0)
    with pytest.raises(TournamentError):
        Tournament(3, 1 << 3)
    with pytest.raises(TournamentError):
        Tournament.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    with pytest.raises(TournamentError):
        Tournament.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(TournamentError):
        Tournament.from_edges(2, [(0, 0)])
    with pytest.raises(TournamentError):
        three_cycle().beats(1, 1)


def test_single_vertex_tournament():
    t = Tournament(1)
    assert t.num_pairs == 0
    assert t.edges() == []
    assert backward_count(t, Ordering((0,))) == 0
    assert is_locally_minimal(t, Ordering((0,)))


def test_edges_and_degrees():
    t = three_cycle()
    assert t.edges() == [(0, 1), (2, 0), (1, 2)]
    assert t.beats(2, 0) and not t.beats(0, 2)
    assert [t.out_degree(v) for v in range(3)] == [1, 1, 1]
    assert t.out_degree(0, within=0b011) == 1
    assert t.in_degree(0, within=0b011) == 0
    assert t.adjacency().sum() == 3
    assert t.reversed().edges() == [(1, 0), (0, 2), (2, 1)]


@given(tournaments_with_orderings())
def test_cost_bounds_and_reversal(case: tuple[Tournament, Ordering]):
    t, o = case
    cost = backward_count(t, o)
    assert 0 <= cost <= t.num_pairs
    assert cost + backward_count(t, o.reversed()) == t.num_pairs
    assert len(backward_edges(t, o)) == cost
    position = o.positions
    for later, earlier in backward_edges(t, o):
        assert position[later] > position[earlier]
        assert t.beats(later, earlier)


@given(tournaments_with_orderings())
def test_locally_minimal_means_no_improving_adjacent_swap(case: tuple[Tournament, Ordering]):
    t, o = case
    cost = backward_count(t, o)
    improving = False
    for i in range(len(o) - 1):
        swapped = list(o)
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        if backward_count(t, Ordering.of(swapped)) < cost:
            improving = True
    assert is_locally_minimal(t, o) == (not improving)


@given(st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.tuples(st.permutations(list(range(n))), st.permutations(list(range(n))))
))
def test_adjacent_swaps_reach_any_ordering(orders: tuple[list[int], list[int]]):
    source, target = Ordering.of(orders[0]), Ordering.of(orders[1])
    current = list(source)
    swaps = adjacent_swap_sequence(source, target)
    for i in swaps:
        current[i], current[i + 1] = current[i + 1], current[i]
    assert current == list(target)
    # one swap per pair ordered differently, i.e. the cost of source on target's order
    n = len(source)
    transitive_on_target = Tournament.from_edges(
        n, [(target[a], target[b]) for a in range(n) for b in range(a + 1, n)]
    )
    assert len(swaps) == backward_count(transitive_on_target, source)
