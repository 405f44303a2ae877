"""Okamura-Seymour instances: an embedded graph with all terminals on the outer boundary."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import DegeneratePair, DuplicatePair, NotBiconnected, TerminalNotOnBoundary
from .planar import (
    Dart,
    EmbeddedGraph,
    Face,
    boundary_darts,
    check_biconnected,
    enumerate_faces,
    outer_face,
)


class TerminalPair(NamedTuple):
    index: int  # 1-based
    s: int
    t: int


class BoundarySplit(NamedTuple):
    side_u: tuple[int, ...]  # edges met walking anticlockwise from s to t
    side_v: tuple[int, ...]  # edges met walking anticlockwise from t back to s


@dataclass(frozen=True)
class OSInstance:
    graph: EmbeddedGraph
    faces: tuple[Face, ...]
    outer: Face
    marker: Dart
    boundary: tuple[int, ...]
    boundary_edges: tuple[int, ...]
    pairs: tuple[TerminalPair, ...]

    @property
    def k(self) -> int:
        return len(self.pairs)

    @cached_property
    def finite_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.id != self.outer.id)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.boundary)}

    def pair(self, i: int) -> TerminalPair:
        return self.pairs[i - 1]


def validate_os_instance(graph: EmbeddedGraph, marker, pairs: Sequence) -> OSInstance:
    """Check the Okamura-Seymour property and fix the anticlockwise boundary.

    ``pairs`` holds ``(s, t)`` tuples; they are numbered from 1 in the
    order given. The boundary is listed anticlockwise starting at the tail
    of the reversed marker dart.
    """
    if not check_biconnected(graph):
        raise NotBiconnected("graph must be biconnected so that its outer boundary is a cycle")
    faces = enumerate_faces(graph)
    marker = Dart(*marker)
    outer = outer_face(graph, faces, marker)
    ring = boundary_darts(graph, outer, marker)
    boundary = tuple(graph.tail(d) for d in ring)
    if len(set(boundary)) != len(boundary):
        raise NotBiconnected("outer boundary repeats a vertex")
    on_boundary = set(boundary)

    result = []
    first_seen: dict[frozenset[int], int] = {}
    for i, (s, t) in enumerate(pairs, start=1):
        if s == t:
            raise DegeneratePair(i)
        for x in (s, t):
            if x not in on_boundary:
                raise TerminalNotOnBoundary(i, x)
        key = frozenset((s, t))
        if key in first_seen:
            raise DuplicatePair(i, first_seen[key])
        first_seen[key] = i
        result.append(TerminalPair(i, s, t))

    return OSInstance(
        graph=graph,
        faces=faces,
        outer=outer,
        marker=marker,
        boundary=boundary,
        boundary_edges=tuple(d.edge for d in ring),
        pairs=tuple(result),
    )


def boundary_split(inst: OSInstance, i: int) -> BoundarySplit:
    pair = inst.pair(i)
    size = len(inst.boundary)
    p, q = inst.position[pair.s], inst.position[pair.t]
    span = (q - p) % size
    walk = [inst.boundary_edges[(p + j) % size] for j in range(size)]
    return BoundarySplit(tuple(walk[:span]), tuple(walk[span:]))
