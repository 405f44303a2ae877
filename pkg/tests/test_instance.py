import pytest
from hypothesis import given, settings, strategies as st

from osmulticut.errors import DegeneratePair, DuplicatePair, NotBiconnected, TerminalNotOnBoundary
from osmulticut.generators import cycle, grid
from osmulticut.instance import boundary_split, validate_os_instance
from osmulticut.planar import build_graph

from conftest import AB, BC, CD, DA, A, B, C, cycle_graph, k4_graph


def test_four_cycle_pair_ac(cycle4):
    assert cycle4.boundary == (0, 1, 2, 3)
    assert len(cycle4.boundary) == 4
    assert boundary_split(cycle4, 1) == ((AB, BC), (CD, DA))


def test_adjacent_pair():
    inst = validate_os_instance(cycle_graph(), (0, 1), [(A, B)])
    assert boundary_split(inst, 1) == ((AB,), (BC, CD, DA))


def test_interior_terminal_rejected():
    with pytest.raises(TerminalNotOnBoundary) as err:
        validate_os_instance(k4_graph(), (0, 1), [(0, 3)])
    assert err.value.index == 1 and err.value.vertex == 3


def test_degenerate_and_duplicate_pairs():
    with pytest.raises(DegeneratePair):
        validate_os_instance(cycle_graph(), (0, 1), [(A, A)])
    with pytest.raises(DuplicatePair):
        validate_os_instance(cycle_graph(), (0, 1), [(A, C), (C, A)])


def test_shared_terminals_allowed():
    inst = validate_os_instance(cycle_graph(), (0, 1), [(A, C), (A, B)])
    assert inst.k == 2


def test_not_biconnected_rejected():
    path = build_graph(3, [(0, 1, 1), (1, 2, 1)], [[(0, 0)], [(0, 1), (1, 0)], [(1, 1)]])
    with pytest.raises(NotBiconnected):
        validate_os_instance(path, (0, 0), [(0, 2)])


def test_antipodal_pair_on_eight_boundary():
    f = grid(2, 2, pairs=[(0, 8)])
    inst = f.to_instance()
    assert inst.boundary == (0, 1, 2, 5, 8, 7, 6, 3)
    split = boundary_split(inst, 1)
    assert len(split.side_u) == len(split.side_v) == 4


@settings(max_examples=80, deadline=None)
@given(length=st.integers(3, 12), seed=st.integers(0, 10_000), data=st.data())
def test_split_partitions_boundary_and_swaps(length, seed, data):
    s, t = data.draw(st.lists(st.integers(0, length - 1), min_size=2, max_size=2, unique=True))
    fwd = cycle(length, (1, 5), [(s, t)], seed).to_instance()
    back = cycle(length, (1, 5), [(t, s)], seed).to_instance()
    split = boundary_split(fwd, 1)
    assert split.side_u and split.side_v
    assert len(split.side_u) + len(split.side_v) == len(fwd.boundary)
    assert sorted(split.side_u + split.side_v) == sorted(fwd.boundary_edges)
    swapped = boundary_split(back, 1)
    assert set(swapped.side_u) == set(split.side_v)
    assert set(swapped.side_v) == set(split.side_u)
