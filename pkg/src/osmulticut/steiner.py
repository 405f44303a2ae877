"""Primal-dual 2-approximation for minimum-cost Steiner forest.

Moat growing: every component separating some demand pair is active and
raises its dual variable at unit rate. An edge whose endpoints' moats
have paid its cost becomes tight and merges the two components. Once no
component is active, a reverse-delete pass drops every edge the demands
can do without, scanning latest additions first.

All times and dual values are :class:`fractions.Fraction`, so the
certificate ``cost <= 2 * sum(y)`` and dual feasibility are checked
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .dual import WeightedGraph
from .dsu import DisjointSet, all_connected, components
from .errors import UnsatisfiableDemand

Moats = dict[frozenset[int], Fraction]


@dataclass(frozen=True)
class ForestSolution:
    edges: frozenset[int]
    cost: int
    moats: Moats = field(default_factory=dict)
    addition_order: tuple[int, ...] = ()

    @property
    def dual_value(self) -> Fraction:
        return sum(self.moats.values(), Fraction(0))


def _live_demands(demands: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(a, b) for a, b in demands if a != b]


def check_satisfiable(graph: WeightedGraph, demands: Sequence[tuple[int, int]]) -> None:
    ds = components(graph.n, ((u, v) for u, v, _ in graph.edges))
    bad = [i for i, (a, b) in enumerate(demands) if ds.find(a) != ds.find(b)]
    if bad:
        raise UnsatisfiableDemand(f"demand(s) {bad} join different components of the graph")


def gw_steiner_forest(graph: WeightedGraph, demands: Sequence[tuple[int, int]]) -> ForestSolution:
    """Approximate a minimum-cost Steiner forest within a factor of 2.

    Edges that go tight at the same moment are taken in ascending id
    order, and merges cascade to a fixpoint before growth resumes.
    """
    n, edges = graph
    check_satisfiable(graph, demands)
    demands = _live_demands(demands)

    comp = list(range(n))
    members: dict[int, list[int]] = {v: [v] for v in range(n)}
    load = [Fraction(0)] * n  # total dual of the moats containing each vertex
    moats: Moats = {}
    order: list[int] = []

    def active() -> set[int]:
        act = set()
        for a, b in demands:
            if comp[a] != comp[b]:
                act.add(comp[a])
                act.add(comp[b])
        return act

    def merge(a: int, b: int) -> None:
        ca, cb = comp[a], comp[b]
        if len(members[ca]) < len(members[cb]):
            ca, cb = cb, ca
        for x in members[cb]:
            comp[x] = ca
        members[ca].extend(members.pop(cb))

    while True:
        act = active()
        progressed = True
        while progressed:
            progressed = False
            for eid, (u, v, c) in enumerate(edges):
                cu, cv = comp[u], comp[v]
                if cu != cv and (cu in act or cv in act) and load[u] + load[v] == c:
                    merge(u, v)
                    order.append(eid)
                    act = active()
                    progressed = True
                    break
        if not act:
            break

        step = None
        for u, v, c in edges:
            cu, cv = comp[u], comp[v]
            if cu == cv:
                continue
            rate = (cu in act) + (cv in act)
            if rate:
                t = (c - load[u] - load[v]) / rate
                if step is None or t < step:
                    step = t
        for c in act:
            key = frozenset(members[c])
            moats[key] = moats.get(key, Fraction(0)) + step
            for x in members[c]:
                load[x] += step

    kept = reverse_delete(graph, demands, order)
    return ForestSolution(
        edges=kept,
        cost=sum(edges[e][2] for e in kept),
        moats=moats,
        addition_order=tuple(order),
    )


def reverse_delete(graph: WeightedGraph, demands: Sequence[tuple[int, int]],
                   edges: Sequence[int]) -> frozenset[int]:
    """Drop, latest first, every edge whose removal keeps all demands connected."""
    keep = list(edges)
    for eid in reversed(edges):
        trial = [x for x in keep if x != eid]
        if all_connected(graph.n, (graph.edges[x][:2] for x in trial), demands):
            keep = trial
    return frozenset(keep)


def is_steiner_forest(graph: WeightedGraph, demands: Sequence[tuple[int, int]],
                      edges: Iterable[int]) -> bool:
    """Acyclic and connecting every demand."""
    ds = DisjointSet(graph.n)
    for e in edges:
        if not 0 <= e < len(graph.edges):
            return False
        u, v, _ = graph.edges[e]
        if not ds.union(u, v):
            return False
    return all(ds.find(a) == ds.find(b) for a, b in demands)


def dual_feasible(graph: WeightedGraph, moats: Moats) -> bool:
    if any(y < 0 for y in moats.values()):
        return False
    for u, v, c in graph.edges:
        paid = sum((y for s, y in moats.items() if (u in s) != (v in s)), Fraction(0))
        if paid > c:
            return False
    return True


def verify_forest(graph: WeightedGraph, demands: Sequence[tuple[int, int]],
                  solution: ForestSolution) -> bool:
    if not is_steiner_forest(graph, demands, solution.edges):
        return False
    if solution.cost != sum(graph.edges[e][2] for e in solution.edges):
        return False
    if not dual_feasible(graph, solution.moats):
        return False
    return solution.cost <= 2 * solution.dual_value
