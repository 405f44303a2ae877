"""Multicuts: extraction from dual Steiner forests, verification, minimalization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dsu import DisjointSet, all_connected, components
from .dual import DualGraph, EdgeKind, dual_edges_of
from .errors import ExtractionNotSeparating, NotAMulticut
from .instance import OSInstance
from .steiner import ForestSolution


@dataclass(frozen=True)
class MulticutSolution:
    edges: frozenset[int]
    cost: int
    certificate: tuple[frozenset[int], ...]  # s_i's component in (V, E - F), per pair


def _remaining(inst: OSInstance, cut: Iterable[int]) -> DisjointSet:
    cut = set(cut)
    return components(inst.graph.n, ((e.u, e.v) for e in inst.graph.edges if e.id not in cut))


def separated_pairs(inst: OSInstance, cut: Iterable[int]) -> list[bool]:
    ds = _remaining(inst, cut)
    return [ds.find(p.s) != ds.find(p.t) for p in inst.pairs]


def verify_multicut(inst: OSInstance, cut: Iterable[int]) -> bool:
    return all(separated_pairs(inst, cut))


def cut_cost(inst: OSInstance, cut: Iterable[int]) -> int:
    return sum(inst.graph.edges[e].cost for e in cut)


def make_solution(inst: OSInstance, cut: Iterable[int]) -> MulticutSolution:
    cut = frozenset(cut)
    ds = _remaining(inst, cut)
    side = {}
    for v in range(inst.graph.n):
        side.setdefault(ds.find(v), set()).add(v)
    cert = tuple(frozenset(side[ds.find(p.s)]) for p in inst.pairs)
    return MulticutSolution(cut, cut_cost(inst, cut), cert)


def primal_image(sol: ForestSolution, d: DualGraph) -> frozenset[int]:
    """Primal edges crossed by the forest's internal and crossing edges."""
    return frozenset(d.edges[e].primal for e in sol.edges if d.edges[e].primal is not None)


def extract_multicut(sol: ForestSolution, d: DualGraph, inst: OSInstance) -> MulticutSolution:
    """Read a multicut off a dual Steiner forest.

    Raises ExtractionNotSeparating when the primal image leaves some pair
    connected. That happens when the forest links ``u_i`` to ``v_i``
    through another pair's outer vertex instead of through the interior.
    """
    cut = primal_image(sol, d)
    sep = separated_pairs(inst, cut)
    if not all(sep):
        raise ExtractionNotSeparating([p.index for p, ok in zip(inst.pairs, sep) if not ok])
    return make_solution(inst, cut)


def minimalize(inst: OSInstance, cut: Iterable[int]) -> frozenset[int]:
    """Greedily shed edges, most expensive first, while the rest still separates every pair."""
    cut = set(cut)
    if not verify_multicut(inst, cut):
        raise NotAMulticut("input edge set does not separate every pair")
    for e in sorted(cut, key=lambda e: (-inst.graph.edges[e].cost, e)):
        cut.discard(e)
        if not verify_multicut(inst, cut):
            cut.add(e)
    return frozenset(cut)


def is_minimal(inst: OSInstance, cut: Iterable[int]) -> bool:
    cut = frozenset(cut)
    return verify_multicut(inst, cut) and not any(verify_multicut(inst, cut - {e}) for e in cut)


def cut_dual_connectivity(inst: OSInstance, d: DualGraph, cut: Iterable[int]) -> list[bool]:
    """Per pair: does the dual of ``cut`` plus that pair's external edges join ``u_i`` to ``v_i``?

    Whenever ``cut`` separates ``s_i`` from ``t_i`` the answer must be yes;
    for non-separating cuts nothing is claimed.
    """
    image = [d.edges[x] for x in dual_edges_of(d, cut)]
    out = []
    for p in inst.pairs:
        ext = [d.edges[x] for x in d.external_of_pair(p.index)]
        ends = [(e.a, e.b) for e in image + ext]
        out.append(all_connected(len(d.vertices), ends, [d.pair_terminals[p.index]]))
    return out


def dual_image_acyclic(d: DualGraph, cut: Iterable[int]) -> bool:
    ds = DisjointSet(len(d.vertices))
    return all(ds.union(d.edges[x].a, d.edges[x].b) for x in dual_edges_of(d, cut))


def external_count(sol: ForestSolution, d: DualGraph) -> int:
    return sum(1 for e in sol.edges if d.edges[e].kind is EdgeKind.EXTERNAL)
