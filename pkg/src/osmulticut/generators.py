"""Seeded generators of biconnected Okamura-Seymour instances.

Every generator places vertices in the plane, derives the anticlockwise
rotation from the coordinates, and marks the bottom-left perimeter edge
as lying on the outer face.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Sequence, Union

import networkx as nx

from .errors import BadParams
from .io import InstanceFile

CostSpec = Union[int, tuple[int, int]]
PairSpec = Union[int, Sequence[tuple[int, int]]]


def rotation_from_positions(n: int, edges: Sequence[tuple[int, int]],
                            pos: Sequence[tuple[float, float]]) -> list[list[tuple[int, int]]]:
    rot: list[list[tuple[float, tuple[int, int]]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        for tail, head, direction in ((u, v, 0), (v, u, 1)):
            angle = math.atan2(pos[head][1] - pos[tail][1], pos[head][0] - pos[tail][0])
            rot[tail].append((angle, (e, direction)))
    return [[d for _, d in sorted(row)] for row in rot]


def _costs(rng: random.Random, m: int, costs: CostSpec) -> list[int]:
    if isinstance(costs, int):
        if costs < 0:
            raise BadParams("costs must be nonnegative")
        return [costs] * m
    lo, hi = costs
    if not 0 <= lo <= hi:
        raise BadParams(f"bad cost range {costs}")
    return [rng.randint(lo, hi) for _ in range(m)]


def _pairs(rng: random.Random, boundary: Sequence[int], pairs: PairSpec) -> list[tuple[int, int]]:
    if not isinstance(pairs, int):
        return [tuple(p) for p in pairs]
    if not 0 <= pairs <= len(boundary) // 2:
        raise BadParams(f"{pairs} pairs requested, boundary of length {len(boundary)} allows "
                        f"at most {len(boundary) // 2}")
    chosen: list[tuple[int, int]] = []
    seen = set()
    while len(chosen) < pairs:
        s, t = rng.sample(list(boundary), 2)
        if frozenset((s, t)) not in seen:
            seen.add(frozenset((s, t)))
            chosen.append((s, t))
    return chosen


def _assemble(n, ends, pos, marker, boundary, rng, costs, pairs) -> InstanceFile:
    c = _costs(rng, len(ends), costs)
    return InstanceFile(
        n=n,
        edges=tuple((u, v, w) for (u, v), w in zip(ends, c)),
        rotation=tuple(tuple(row) for row in rotation_from_positions(n, ends, pos)),
        outer_dart=marker,
        pairs=tuple(_pairs(rng, boundary, pairs)),
    )


def cycle(length: int, costs: CostSpec = 1, pairs: PairSpec = 1, seed: int = 0) -> InstanceFile:
    """Cycle 0, 1, ..., length-1, listed anticlockwise."""
    if length < 3:
        raise BadParams("cycle length must be at least 3")
    rng = random.Random(seed)
    ends = [(i, (i + 1) % length) for i in range(length)]
    pos = [(math.cos(2 * math.pi * i / length), math.sin(2 * math.pi * i / length))
           for i in range(length)]
    return _assemble(length, ends, pos, (0, 1), list(range(length)), rng, costs, pairs)


def _grid_layout(rows: int, cols: int):
    def vid(r, c):
        return r * (cols + 1) + c

    n = (rows + 1) * (cols + 1)
    pos = [(c, r) for r in range(rows + 1) for c in range(cols + 1)]
    ends = [(vid(r, c), vid(r, c + 1)) for r in range(rows + 1) for c in range(cols)]
    ends += [(vid(r, c), vid(r + 1, c)) for r in range(rows) for c in range(cols + 1)]
    boundary = ([vid(0, c) for c in range(cols)] + [vid(r, cols) for r in range(rows)]
                + [vid(rows, c) for c in range(cols, 0, -1)] + [vid(r, 0) for r in range(rows, 0, -1)])
    return n, ends, pos, boundary, vid


def grid(rows: int, cols: int, costs: CostSpec = 1, pairs: PairSpec = 1, seed: int = 0) -> InstanceFile:
    """Axis-aligned grid with ``rows`` x ``cols`` square faces; the perimeter is the outer face."""
    if rows < 1 or cols < 1:
        raise BadParams("grid needs at least one face in each direction")
    rng = random.Random(seed)
    n, ends, pos, boundary, _ = _grid_layout(rows, cols)
    # edge 0 runs (0,0) -> (0,1); its reverse has the outside on its left
    return _assemble(n, ends, pos, (0, 1), boundary, rng, costs, pairs)


def random_os(rows: int | None = None, cols: int | None = None, costs: CostSpec = (1, 10),
              pairs: PairSpec = 2, seed: int = 0, diagonal_rate: float = 0.5,
              delete_rate: float = 0.3) -> InstanceFile:
    """Grid with random cell diagonals and random interior edges removed.

    Removals that would create a cut vertex are skipped, so the result
    stays biconnected; the perimeter is never touched.
    """
    rng = random.Random(seed)
    rows = rows if rows is not None else rng.randint(1, 3)
    cols = cols if cols is not None else rng.randint(1, 3)
    if rows < 1 or cols < 1:
        raise BadParams("grid needs at least one face in each direction")
    n, ends, pos, boundary, vid = _grid_layout(rows, cols)
    perimeter = {frozenset(p) for p in zip(boundary, boundary[1:] + boundary[:1])}
    for r in range(rows):
        for c in range(cols):
            if rng.random() < diagonal_rate:
                if rng.random() < 0.5:
                    ends.append((vid(r, c), vid(r + 1, c + 1)))
                else:
                    ends.append((vid(r, c + 1), vid(r + 1, c)))
    for e in list(ends):
        if frozenset(e) in perimeter or rng.random() >= delete_rate:
            continue
        trial = [x for x in ends if x != e]
        if nx.is_biconnected(nx.Graph(trial)) and len(nx.Graph(trial)) == n:
            ends = trial
    return _assemble(n, ends, pos, (0, 1), boundary, rng, costs, pairs)


def generate(kind: str, params: dict, seed: int = 0) -> InstanceFile:
    if kind == "cycle":
        return cycle(seed=seed, **params)
    if kind == "grid":
        return grid(seed=seed, **params)
    if kind in ("random-os", "random_os"):
        return random_os(seed=seed, **params)
    raise BadParams(f"unknown generator {kind!r}")


def corpus(count: int, seed: int = 0, cost_range: tuple[int, int] = (1, 10),
           max_pairs: int = 3) -> Iterable[InstanceFile]:
    """Mixed batch: cycles of length 3-12 and grids up to 3x3 faces, k in 1..max_pairs."""
    rng = random.Random(seed)
    for _ in range(count):
        sub = rng.getrandbits(32)
        k = rng.randint(1, max_pairs)
        if rng.random() < 0.5:
            length = rng.randint(3, 12)
            yield cycle(length, cost_range, min(k, length // 2), sub)
        else:
            rows, cols = rng.randint(1, 3), rng.randint(1, 3)
            perimeter = 2 * (rows + cols)
            yield grid(rows, cols, cost_range, min(k, perimeter // 2), sub)
