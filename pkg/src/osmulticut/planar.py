"""Combinatorial embeddings of planar graphs.

A graph is embedded by a rotation system: for every vertex, the
anticlockwise cyclic order of the darts (half-edges) leaving it. Faces
fall out of the permutation ``next(d) = rot_cw(reverse(d))``, which walks
each face keeping it on the left. Bounded faces are walked anticlockwise,
the outer face clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import networkx as nx

from .errors import (
    Disconnected,
    EulerViolation,
    InvalidMarker,
    MalformedRotation,
    ParallelEdge,
    SelfLoop,
    ValidationError,
)


class EdgeRecord(NamedTuple):
    id: int
    u: int
    v: int
    cost: int

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset((self.u, self.v))


class Dart(NamedTuple):
    """Half-edge. Direction 0 runs ``u -> v`` of the edge, direction 1 ``v -> u``."""

    edge: int
    direction: int

    def reverse(self) -> Dart:
        return Dart(self.edge, 1 - self.direction)


class Face(NamedTuple):
    id: int
    darts: tuple[Dart, ...]


@dataclass(frozen=True)
class EmbeddedGraph:
    n: int
    edges: tuple[EdgeRecord, ...]
    rotation: tuple[tuple[Dart, ...], ...]
    _slot: dict[Dart, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        slot = {}
        for darts in self.rotation:
            for i, d in enumerate(darts):
                slot[d] = i
        object.__setattr__(self, "_slot", slot)

    @property
    def m(self) -> int:
        return len(self.edges)

    def tail(self, d: Dart) -> int:
        e = self.edges[d.edge]
        return e.u if d.direction == 0 else e.v

    def head(self, d: Dart) -> int:
        e = self.edges[d.edge]
        return e.v if d.direction == 0 else e.u

    def darts(self) -> list[Dart]:
        return [Dart(e, s) for e in range(self.m) for s in (0, 1)]

    def face_successor(self, d: Dart) -> Dart:
        back = d.reverse()
        around = self.rotation[self.head(d)]
        return around[self._slot[back] - 1]

    def total_cost(self) -> int:
        return sum(e.cost for e in self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return adj

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from((e.u, e.v, {"id": e.id, "cost": e.cost}) for e in self.edges)
        return g


def _as_edge(i: int, e) -> EdgeRecord:
    if isinstance(e, EdgeRecord):
        if e.id != i:
            raise ValidationError(f"edge at position {i} carries id {e.id}")
        return e
    u, v, cost = e
    return EdgeRecord(i, u, v, cost)


def build_graph(n: int, edges: Sequence, rotation: Sequence[Sequence]) -> EmbeddedGraph:
    """Validate and assemble an embedded graph.

    ``edges`` holds :class:`EdgeRecord` values or plain ``(u, v, cost)``
    triples; ``rotation[v]`` lists the darts leaving ``v`` anticlockwise,
    each as a :class:`Dart` or an ``(edge, direction)`` pair.
    """
    if n < 1:
        raise ValidationError("graph needs at least one vertex")
    recs = tuple(_as_edge(i, e) for i, e in enumerate(edges))
    seen: dict[frozenset[int], int] = {}
    for e in recs:
        for x in (e.u, e.v):
            if not (isinstance(x, int) and 0 <= x < n):
                raise ValidationError(f"edge {e.id}: vertex {x!r} out of range")
        if not isinstance(e.cost, int) or isinstance(e.cost, bool) or e.cost < 0:
            raise ValidationError(f"edge {e.id}: cost must be a nonnegative integer")
        if e.u == e.v:
            raise SelfLoop(f"edge {e.id} is a loop at vertex {e.u}")
        if e.endpoints in seen:
            raise ParallelEdge(f"edges {seen[e.endpoints]} and {e.id} join the same vertices")
        seen[e.endpoints] = e.id

    if len(rotation) != n:
        raise MalformedRotation(f"rotation lists {len(rotation)} vertices, expected {n}")
    rot = []
    placed: set[Dart] = set()
    for v, darts in enumerate(rotation):
        row = []
        for raw in darts:
            d = Dart(*raw)
            if not (0 <= d.edge < len(recs) and d.direction in (0, 1)):
                raise MalformedRotation(f"vertex {v}: no such dart {tuple(raw)}")
            e = recs[d.edge]
            if (e.u if d.direction == 0 else e.v) != v:
                raise MalformedRotation(f"vertex {v}: dart {tuple(d)} does not leave {v}")
            if d in placed:
                raise MalformedRotation(f"dart {tuple(d)} listed twice")
            placed.add(d)
            row.append(d)
        rot.append(tuple(row))
    if len(placed) != 2 * len(recs):
        missing = sorted({Dart(e, s) for e in range(len(recs)) for s in (0, 1)} - placed)
        raise MalformedRotation(f"darts missing from rotation: {[tuple(d) for d in missing]}")

    g = EmbeddedGraph(n, recs, tuple(rot))
    if not nx.is_connected(g.to_networkx()):
        raise Disconnected("graph is not connected")
    return g


def enumerate_faces(g: EmbeddedGraph) -> tuple[Face, ...]:
    """Trace every face of the embedding; raise EulerViolation if it is not planar."""
    face_of: dict[Dart, int] = {}
    faces = []
    for start in g.darts():
        if start in face_of:
            continue
        walk = []
        d = start
        while d not in face_of:
            face_of[d] = len(faces)
            walk.append(d)
            d = g.face_successor(d)
        faces.append(Face(len(faces), tuple(walk)))
    if g.n - g.m + len(faces) != 2:
        raise EulerViolation(
            f"n - m + f = {g.n} - {g.m} + {len(faces)} != 2; rotation is not planar")
    return tuple(faces)


def outer_face(g: EmbeddedGraph, faces: Sequence[Face], marker) -> Face:
    marker = Dart(*marker)
    for f in faces:
        if marker in f.darts:
            return f
    raise InvalidMarker(f"marker dart {tuple(marker)} is not a dart of the graph")


def boundary_darts(g: EmbeddedGraph, outer: Face, marker) -> tuple[Dart, ...]:
    """Darts of the outer boundary in anticlockwise order, interior on their left.

    The walk starts with the reverse of ``marker``.
    """
    marker = Dart(*marker)
    i = outer.darts.index(marker)
    ring = outer.darts[i:] + outer.darts[:i]
    return tuple(d.reverse() for d in (ring[0],) + tuple(reversed(ring[1:])))


def face_vertices(g: EmbeddedGraph, face: Face) -> tuple[int, ...]:
    return tuple(g.tail(d) for d in face.darts)


def check_biconnected(g: EmbeddedGraph) -> bool:
    """True iff ``g`` has no cut vertex.

    A single edge counts as not biconnected here: its outer boundary
    would not be a cycle.
    """
    if g.n < 3:
        return False
    return nx.is_biconnected(g.to_networkx())
