"""The modified planar dual used to turn multicut into Steiner forest.

Unlike the textbook dual, the outer face is not a single vertex. Each
boundary edge ``e`` gets its own outer vertex ``v_e``, and each terminal
pair ``i`` gets two more outer vertices: ``u_i`` attached to the boundary
edges between ``s_i`` and ``t_i`` (anticlockwise), ``v_i`` attached to the
rest. Attachments cost ``N``, the total primal cost; every other dual
edge costs as much as the primal edge it crosses.

Vertex ids follow construction order: finite faces, then ``u_1, v_1,
u_2, v_2, ...``, then boundary vertices in anticlockwise order. Edge ids
run internal (by primal id), crossing (anticlockwise), external (pair by
pair, ``u_i`` side before ``v_i`` side).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Optional

from .errors import BridgeDetected
from .instance import OSInstance, boundary_split
from .planar import Dart


class VertexKind(str, Enum):
    FACE = "face"
    BOUNDARY = "boundary"
    PAIR_U = "pair_u"
    PAIR_V = "pair_v"


class EdgeKind(str, Enum):
    INTERNAL = "internal"
    CROSSING = "crossing"
    EXTERNAL = "external"


class DualVertex(NamedTuple):
    id: int
    kind: VertexKind
    ref: int  # finite face id, boundary edge id, or pair index


class DualEdge(NamedTuple):
    id: int
    a: int
    b: int
    kind: EdgeKind
    cost: int
    primal: Optional[int]


class WeightedGraph(NamedTuple):
    """Plain undirected weighted graph as consumed by the Steiner forest solver."""

    n: int
    edges: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[DualVertex, ...]
    edges: tuple[DualEdge, ...]
    N: int
    pair_terminals: dict[int, tuple[int, int]]
    face_vertex: dict[int, int]
    boundary_vertex: dict[int, int]
    by_primal: dict[int, int]

    def weighted(self) -> WeightedGraph:
        return WeightedGraph(len(self.vertices), tuple((e.a, e.b, e.cost) for e in self.edges))

    def demands(self) -> list[tuple[int, int]]:
        return [self.pair_terminals[i] for i in sorted(self.pair_terminals)]

    def of_kind(self, kind: EdgeKind) -> list[DualEdge]:
        return [e for e in self.edges if e.kind is kind]

    def external_of_pair(self, i: int) -> list[int]:
        ends = set(self.pair_terminals[i])
        return [e.id for e in self.edges
                if e.kind is EdgeKind.EXTERNAL and (e.a in ends or e.b in ends)]

    def vertex_label(self, v: int) -> str:
        x = self.vertices[v]
        if x.kind is VertexKind.FACE:
            return f"f{x.ref}"
        if x.kind is VertexKind.BOUNDARY:
            return f"e{x.ref}"
        return ("u" if x.kind is VertexKind.PAIR_U else "v") + str(x.ref)


def build_dual(inst: OSInstance) -> DualGraph:
    g = inst.graph
    outer_id = inst.outer.id
    face_of: dict[Dart, int] = {d: f.id for f in inst.faces for d in f.darts}

    vertices: list[DualVertex] = []
    edges: list[DualEdge] = []

    def add_vertex(kind: VertexKind, ref: int) -> int:
        vertices.append(DualVertex(len(vertices), kind, ref))
        return len(vertices) - 1

    def add_edge(a: int, b: int, kind: EdgeKind, cost: int, primal: Optional[int]) -> None:
        edges.append(DualEdge(len(edges), a, b, kind, cost, primal))

    N = g.total_cost()

    face_vertex = {f.id: add_vertex(VertexKind.FACE, f.id) for f in inst.finite_faces}

    inner_of_boundary: dict[int, int] = {}
    for e in g.edges:
        left, right = face_of[Dart(e.id, 0)], face_of[Dart(e.id, 1)]
        if left == right:
            raise BridgeDetected(f"edge {e.id} has face {left} on both sides")
        if outer_id not in (left, right):
            add_edge(face_vertex[left], face_vertex[right], EdgeKind.INTERNAL, e.cost, e.id)
        else:
            inner_of_boundary[e.id] = right if left == outer_id else left

    pair_terminals = {}
    for p in inst.pairs:
        pair_terminals[p.index] = (add_vertex(VertexKind.PAIR_U, p.index),
                                   add_vertex(VertexKind.PAIR_V, p.index))

    boundary_vertex = {}
    for eid in inst.boundary_edges:
        ve = add_vertex(VertexKind.BOUNDARY, eid)
        boundary_vertex[eid] = ve
        add_edge(ve, face_vertex[inner_of_boundary[eid]], EdgeKind.CROSSING,
                 g.edges[eid].cost, eid)

    for p in inst.pairs:
        split = boundary_split(inst, p.index)
        ui, vi = pair_terminals[p.index]
        for eid in split.side_u:
            add_edge(ui, boundary_vertex[eid], EdgeKind.EXTERNAL, N, None)
        for eid in split.side_v:
            add_edge(vi, boundary_vertex[eid], EdgeKind.EXTERNAL, N, None)

    by_primal = {e.primal: e.id for e in edges if e.primal is not None}
    return DualGraph(tuple(vertices), tuple(edges), N, pair_terminals,
                     face_vertex, boundary_vertex, by_primal)


def primal_of(d: DualGraph, edge_id: int) -> Optional[int]:
    return d.edges[edge_id].primal


def dual_edges_of(d: DualGraph, primal_edges: Iterable[int]) -> frozenset[int]:
    return frozenset(d.by_primal[e] for e in primal_edges)
