import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from osmulticut.errors import Disconnected, EulerViolation, MalformedRotation, ParallelEdge, SelfLoop
from osmulticut.generators import cycle, grid, random_os, rotation_from_positions
from osmulticut.planar import (
    Dart,
    EdgeRecord,
    boundary_darts,
    build_graph,
    check_biconnected,
    enumerate_faces,
    face_vertices,
    outer_face,
)

from conftest import cycle_graph, k4_graph


def test_four_cycle_builds():
    g = cycle_graph()
    assert (g.n, g.m) == (4, 4)


def test_accepts_edge_records():
    edges = [EdgeRecord(i, i, (i + 1) % 3, 2) for i in range(3)]
    rot = [[(i, 0), ((i - 1) % 3, 1)] for i in range(3)]
    assert build_graph(3, edges, rot).total_cost() == 6


def test_missing_dart_rejected():
    rot = [[(0, 0), (3, 1)], [(1, 0)], [(2, 0), (1, 1)], [(3, 0), (2, 1)]]
    with pytest.raises(MalformedRotation):
        build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], rot)


def test_duplicated_dart_rejected():
    rot = [[(0, 0), (3, 1), (0, 0)], [(1, 0), (0, 1)], [(2, 0), (1, 1)], [(3, 0), (2, 1)]]
    with pytest.raises(MalformedRotation):
        build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], rot)


def test_dart_at_wrong_vertex_rejected():
    rot = [[(0, 1), (3, 1)], [(1, 0), (0, 0)], [(2, 0), (1, 1)], [(3, 0), (2, 1)]]
    with pytest.raises(MalformedRotation):
        build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], rot)


def test_self_loop_parallel_disconnected():
    with pytest.raises(SelfLoop):
        build_graph(2, [(0, 0, 1)], [[(0, 0), (0, 1)], []])
    with pytest.raises(ParallelEdge):
        build_graph(2, [(0, 1, 1), (1, 0, 1)], [[(0, 0), (1, 1)], [(0, 1), (1, 0)]])
    with pytest.raises(Disconnected):
        build_graph(4, [(0, 1, 1), (2, 3, 1)], [[(0, 0)], [(0, 1)], [(1, 0)], [(1, 1)]])


def test_k4_faces():
    g = k4_graph()
    assert g.m == 6
    faces = enumerate_faces(g)
    assert len(faces) == 4
    assert sorted(len(f.darts) for f in faces) == [3, 3, 3, 3]


def test_four_cycle_faces():
    faces = enumerate_faces(cycle_graph())
    assert len(faces) == 2


def test_k5_violates_euler():
    pos = [(math.cos(2 * math.pi * i / 5), math.sin(2 * math.pi * i / 5)) for i in range(5)]
    ends = list(itertools.combinations(range(5), 2))
    g = build_graph(5, [(u, v, 1) for u, v in ends], rotation_from_positions(5, ends, pos))
    with pytest.raises(EulerViolation):
        enumerate_faces(g)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_k5_every_rotation_violates_euler(data):
    ends = list(itertools.combinations(range(5), 2))
    rot = [[(e, 0 if u == v else 1) for e, (u, w) in enumerate(ends) if v in (u, w)] for v in range(5)]
    rot = [data.draw(st.permutations(row)) for row in rot]
    g = build_graph(5, [(u, v, 1) for u, v in ends], rot)
    with pytest.raises(EulerViolation):
        enumerate_faces(g)


def test_outer_face_by_marker():
    g = cycle_graph()
    faces = enumerate_faces(g)
    for marker in [(0, 0), (0, 1)]:
        assert Dart(*marker) in outer_face(g, faces, marker).darts


def test_k4_outer_triangle():
    g = k4_graph()
    faces = enumerate_faces(g)
    outer = outer_face(g, faces, (0, 1))
    assert sorted(face_vertices(g, outer)) == [0, 1, 2]
    ring = boundary_darts(g, outer, (0, 1))
    assert [g.tail(d) for d in ring] == [0, 1, 2]


def test_grid_perimeter_has_eight_edges():
    f = grid(2, 2)
    g = build_graph(f.n, f.edges, f.rotation)
    outer = outer_face(g, enumerate_faces(g), f.outer_dart)
    assert len(outer.darts) == 8


def test_biconnectivity():
    assert check_biconnected(cycle_graph())
    bowtie = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]
    pos = [(0, 0), (1, 0), (1.5, 1), (2, 0), (3, 0)]
    g = build_graph(5, [(u, v, 1) for u, v in bowtie], rotation_from_positions(5, bowtie, pos))
    assert not check_biconnected(g)
    path = build_graph(3, [(0, 1, 1), (1, 2, 1)], [[(0, 0)], [(0, 1), (1, 0)], [(1, 1)]])
    assert not check_biconnected(path)


@settings(max_examples=60, deadline=None)
@given(kind=st.sampled_from(["cycle", "grid", "random"]), size=st.integers(1, 4),
       seed=st.integers(0, 10_000))
def test_euler_and_dart_partition_on_generated(kind, size, seed):
    if kind == "cycle":
        f = cycle(size + 2, (1, 9), 1, seed)
    elif kind == "grid":
        f = grid(size, 5 - size, (1, 9), 1, seed)
    else:
        f = random_os(costs=(1, 9), pairs=1, seed=seed)
    g = build_graph(f.n, f.edges, f.rotation)
    faces = enumerate_faces(g)
    assert g.n - g.m + len(faces) == 2
    seen = [d for face in faces for d in face.darts]
    assert len(seen) == 2 * g.m and set(seen) == set(g.darts())
    outer = outer_face(g, faces, f.outer_dart)
    ring = face_vertices(g, outer)
    assert len(set(ring)) == len(ring)
    assert check_biconnected(g)
