from pathlib import Path

import pytest

from osmulticut.generators import rotation_from_positions
from osmulticut.io import load_instance_file
from osmulticut.instance import validate_os_instance
from osmulticut.planar import build_graph

FIXTURES = Path(__file__).parent / "fixtures"

# 4-cycle naming used throughout: a=0 b=1 c=2 d=3, edges ab=0 bc=1 cd=2 da=3
A, B, C, D = 0, 1, 2, 3
AB, BC, CD, DA = 0, 1, 2, 3

# K4: outer triangle a, b, c with centre z
K4_POS = [(0.0, 0.0), (2.0, 0.0), (1.0, 2.0), (1.0, 0.7)]
K4_EDGES = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]


def cycle_graph(length=4, cost=1):
    ends = [(i, (i + 1) % length) for i in range(length)]
    rot = [[(i, 0), ((i - 1) % length, 1)] for i in range(length)]
    return build_graph(length, [(u, v, cost) for u, v in ends], rot)


def k4_graph(costs=(1,) * 6):
    rot = rotation_from_positions(4, K4_EDGES, K4_POS)
    return build_graph(4, [(u, v, c) for (u, v), c in zip(K4_EDGES, costs)], rot)


@pytest.fixture
def fixture_text():
    return lambda name: (FIXTURES / name).read_text()


@pytest.fixture
def cycle4():
    return load_instance_file((FIXTURES / "cycle4.json").read_text()).to_instance()


@pytest.fixture
def cycle4_two_pairs():
    return validate_os_instance(cycle_graph(), (0, 1), [(A, C), (B, D)])


@pytest.fixture
def k4_ab():
    # the reverse of a->b has the outside on its left
    return validate_os_instance(k4_graph(), (0, 1), [(0, 1)])


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
