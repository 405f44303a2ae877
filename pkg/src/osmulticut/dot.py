"""Graphviz DOT text for instances, their duals, and solutions.

Terminals are drawn blue and dual elements red. Dual edge kinds get
distinct line styles: internal solid, crossing dashed, external dotted.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .dual import DualGraph, EdgeKind, VertexKind
from .errors import MissingArtifact
from .instance import OSInstance

EDGE_STYLE = {
    EdgeKind.INTERNAL: "solid",
    EdgeKind.CROSSING: "dashed",
    EdgeKind.EXTERNAL: "dotted",
}

VERTEX_SHAPE = {
    VertexKind.FACE: "circle",
    VertexKind.BOUNDARY: "box",
    VertexKind.PAIR_U: "doublecircle",
    VertexKind.PAIR_V: "doublecircle",
}


def _primal_lines(inst: OSInstance, marked: frozenset[int]) -> list[str]:
    terminals = {x for p in inst.pairs for x in (p.s, p.t)}
    boundary = set(inst.boundary_edges)
    lines = []
    for v in range(inst.graph.n):
        attrs = 'color=blue, fontcolor=blue, style=bold' if v in terminals else 'color=black'
        lines.append(f'  p{v} [label="{v}", {attrs}];')
    for e in inst.graph.edges:
        attrs = [f'label="{e.cost}"']
        if e.id in boundary:
            attrs.append("penwidth=2")
        if e.id in marked:
            attrs += ["color=red", 'style="bold,dashed"', "penwidth=3"]
        lines.append(f'  p{e.u} -- p{e.v} [{", ".join(attrs)}];')
    return lines


def _dual_lines(d: DualGraph, marked: frozenset[int]) -> list[str]:
    lines = []
    for x in d.vertices:
        lines.append(f'  d{x.id} [label="{d.vertex_label(x.id)}", shape={VERTEX_SHAPE[x.kind]}, '
                     f'color=red, fontcolor=red];')
    for e in d.edges:
        attrs = [f"style={EDGE_STYLE[e.kind]}", "color=red", f'label="{e.cost}"']
        if e.id in marked:
            attrs.append("penwidth=3")
        lines.append(f'  d{e.a} -- d{e.b} [{", ".join(attrs)}];')
    return lines


def emit_dot(what: str, inst: OSInstance, dual: Optional[DualGraph] = None,
             forest_edges: Optional[Iterable[int]] = None,
             multicut: Optional[Iterable[int]] = None) -> str:
    """Render one layer as DOT.

    ``what`` is ``primal``, ``dual`` or ``solution``. The dual layer needs
    ``dual``. The solution layer needs ``multicut`` and marks those primal
    edges; given ``dual`` and ``forest_edges`` too, it adds the dual with
    the forest highlighted as a second cluster.
    """
    if what == "primal":
        body = _primal_lines(inst, frozenset())
    elif what == "dual":
        if dual is None:
            raise MissingArtifact("dual layer needs the dual graph")
        body = _dual_lines(dual, frozenset(forest_edges or ()))
    elif what == "solution":
        if multicut is None:
            raise MissingArtifact("solution layer needs a multicut")
        body = ["  subgraph cluster_primal {", '  label="primal";']
        body += _primal_lines(inst, frozenset(multicut)) + ["  }"]
        if dual is not None and forest_edges is not None:
            body += ["  subgraph cluster_dual {", '  label="dual";']
            body += _dual_lines(dual, frozenset(forest_edges)) + ["  }"]
    else:
        raise ValueError(f"unknown layer {what!r}")
    return "graph G {\n" + "\n".join(body) + "\n}\n"
