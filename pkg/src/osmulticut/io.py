"""JSON instance files.

Schema::

    {"n": 4,
     "edges": [[u, v, cost], ...],
     "rotation": [[[edge, dir], ...], ...],   # per vertex, anticlockwise
     "outer_dart": [edge, dir],                # a dart with the outer face on its left
     "pairs": [[s, t], ...]}

A dart ``[edge, 0]`` runs from the edge's first endpoint to its second.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import ParseError
from .instance import OSInstance, validate_os_instance
from .planar import build_graph

Triple = tuple[int, int, int]
Pair = tuple[int, int]


@dataclass(frozen=True)
class InstanceFile:
    n: int
    edges: tuple[Triple, ...]
    rotation: tuple[tuple[Pair, ...], ...]
    outer_dart: Pair
    pairs: tuple[Pair, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "rotation": [[list(d) for d in row] for row in self.rotation],
            "outer_dart": list(self.outer_dart),
            "pairs": [list(p) for p in self.pairs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]

    def to_instance(self) -> OSInstance:
        g = build_graph(self.n, self.edges, self.rotation)
        return validate_os_instance(g, self.outer_dart, self.pairs)


def _int(x, where: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise ParseError(where, f"expected an integer, got {x!r}")
    return x


def _seq(x, where: str, length: int | None = None) -> list:
    if not isinstance(x, list):
        raise ParseError(where, f"expected a list, got {type(x).__name__}")
    if length is not None and len(x) != length:
        raise ParseError(where, f"expected {length} entries, got {len(x)}")
    return x


def _vertex(x, n: int, where: str) -> int:
    v = _int(x, where)
    if not 0 <= v < n:
        raise ParseError(where, f"vertex {v} out of range 0..{n - 1}")
    return v


def _dart(x, m: int, where: str) -> Pair:
    e, s = (_int(y, f"{where}[{j}]") for j, y in enumerate(_seq(x, where, 2)))
    if not 0 <= e < m:
        raise ParseError(where, f"edge {e} out of range 0..{m - 1}")
    if s not in (0, 1):
        raise ParseError(where, f"direction must be 0 or 1, got {s}")
    return (e, s)


def load_instance_file(text: str) -> InstanceFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(raw, dict):
        raise ParseError("top level", "expected a JSON object")
    missing = [k for k in ("n", "edges", "rotation", "outer_dart", "pairs") if k not in raw]
    if missing:
        raise ParseError("top level", f"missing field(s) {missing}")

    n = _int(raw["n"], "n")
    if n < 1:
        raise ParseError("n", "need at least one vertex")
    edges = []
    for i, e in enumerate(_seq(raw["edges"], "edges")):
        where = f"edges[{i}]"
        u, v, c = _seq(e, where, 3)
        edges.append((_vertex(u, n, where + "[0]"), _vertex(v, n, where + "[1]"),
                      _int(c, where + "[2]")))
    m = len(edges)
    rows = _seq(raw["rotation"], "rotation", n)
    rotation = tuple(
        tuple(_dart(d, m, f"rotation[{v}][{j}]") for j, d in enumerate(_seq(row, f"rotation[{v}]")))
        for v, row in enumerate(rows))
    outer = _dart(raw["outer_dart"], m, "outer_dart")
    pairs = []
    for i, p in enumerate(_seq(raw["pairs"], "pairs")):
        where = f"pairs[{i}]"
        s, t = _seq(p, where, 2)
        pairs.append((_vertex(s, n, where + "[0]"), _vertex(t, n, where + "[1]")))
    return InstanceFile(n, tuple(edges), rotation, outer, tuple(pairs))


def parse_instance(text: str) -> OSInstance:
    return load_instance_file(text).to_instance()


def serialize_instance(f: InstanceFile) -> str:
    """Readable JSON: one top-level field per line, values compact."""
    fields = (f'"{k}": {json.dumps(v, separators=(",", ":"))}' for k, v in f.to_dict().items())
    return "{\n " + ",\n ".join(fields) + "\n}"
