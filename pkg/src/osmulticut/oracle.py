"""Exact brute-force solvers and Okamura-Seymour condition checkers.

These exist to check the approximation pipeline on small instances, so
they share nothing with it beyond the input data structures.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .dsu import DisjointSet, all_connected
from .dual import WeightedGraph
from .errors import BudgetExceeded
from .instance import OSInstance
from .multicut import MulticutSolution, make_solution
from .steiner import ForestSolution, check_satisfiable


@dataclass(frozen=True)
class OracleBudget:
    max_primal_edges: int = 20
    max_dual_edges: int = 22
    max_vertices: int = 20  # cut-condition enumeration is 2^n
    time_limit: Optional[float] = None  # seconds per call


class _Clock:
    def __init__(self, limit: Optional[float]):
        self.deadline = None if limit is None else time.monotonic() + limit

    def tick(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("oracle time limit reached")


def exact_min_multicut(inst: OSInstance, budget: OracleBudget = OracleBudget()) -> MulticutSolution:
    """Minimum-cost multicut by branch and bound over edge subsets.

    Subsets are explored include-first in edge-id order, which visits
    candidate cuts in lexicographic order; pruning on ``cost >= best``
    therefore returns the lexicographically smallest optimum.
    """
    g = inst.graph
    if g.m > budget.max_primal_edges:
        raise BudgetExceeded(f"{g.m} primal edges exceed budget {budget.max_primal_edges}")
    pairs = [(p.s, p.t) for p in inst.pairs]
    ends = [(e.u, e.v) for e in g.edges]
    costs = [e.cost for e in g.edges]
    clock = _Clock(budget.time_limit)
    best_cost: Optional[int] = None
    best: tuple[int, ...] = ()

    def separated(cut: list[int]) -> bool:
        # every edge not cut (decided or not) stays in the graph
        cut_set = set(cut)
        return not any_pair_joined(e for e in range(g.m) if e not in cut_set)

    def any_pair_joined(edge_ids) -> bool:
        ds = DisjointSet(g.n)
        for e in edge_ids:
            ds.union(*ends[e])
        return any(ds.find(s) == ds.find(t) for s, t in pairs)

    def search(i: int, cut: list[int], kept: list[int], cost: int) -> None:
        nonlocal best_cost, best
        clock.tick()
        if best_cost is not None and cost >= best_cost:
            return
        if separated(cut):
            best_cost, best = cost, tuple(cut)
            return
        if i == g.m or any_pair_joined(kept):
            return
        cut.append(i)
        search(i + 1, cut, kept, cost + costs[i])
        cut.pop()
        kept.append(i)
        search(i + 1, cut, kept, cost)
        kept.pop()

    if pairs:
        search(0, [], [], 0)
    return make_solution(inst, best)


def exact_min_steiner_forest(graph: WeightedGraph, demands: Sequence[tuple[int, int]],
                             budget: OracleBudget = OracleBudget()) -> ForestSolution:
    """Minimum-cost Steiner forest by branch and bound over edge subsets.

    Nodes are pruned when the chosen edges already cost too much, when the
    chosen plus undecided edges cannot satisfy every demand, or when each
    still-isolated terminal's cheapest remaining edge pushes the bound
    past the incumbent. Cycle-closing edges are never chosen.
    """
    n, edges = graph
    m = len(edges)
    if m > budget.max_dual_edges:
        raise BudgetExceeded(f"{m} edges exceed budget {budget.max_dual_edges}")
    check_satisfiable(graph, demands)
    demands = [(a, b) for a, b in demands if a != b]
    if not demands:
        return ForestSolution(frozenset(), 0)
    terminals = sorted({x for ab in demands for x in ab})
    is_terminal = set(terminals)
    touching = {r: [e for e, (u, v, _) in enumerate(edges) if r in (u, v)] for r in terminals}
    share2 = [2 * c if ((u in is_terminal) + (v in is_terminal)) == 1 else c
              for u, v, c in edges]  # twice the cost share each terminal endpoint can claim
    clock = _Clock(budget.time_limit)
    best_cost: Optional[int] = None
    best: tuple[int, ...] = ()

    def search(i: int, chosen: list[int], cost: int) -> None:
        nonlocal best_cost, best
        clock.tick()
        if best_cost is not None and cost >= best_cost:
            return
        ds = DisjointSet(n)
        for e in chosen:
            ds.union(edges[e][0], edges[e][1])
        if all(ds.find(a) == ds.find(b) for a, b in demands):
            best_cost, best = cost, tuple(chosen)
            return
        if i == m:
            return
        if not all_connected(n, [edges[e][:2] for e in chosen] + [edges[e][:2] for e in range(i, m)],
                             demands):
            return
        if best_cost is not None:
            degree = {r: 0 for r in terminals}
            for e in chosen:
                for x in edges[e][:2]:
                    if x in degree:
                        degree[x] += 1
            bound2 = 2 * cost
            for r in terminals:
                if degree[r] == 0:
                    bound2 += min(share2[e] for e in touching[r] if e >= i)
            if bound2 >= 2 * best_cost:
                return
        u, v, c = edges[i]
        if ds.find(u) != ds.find(v):
            chosen.append(i)
            search(i + 1, chosen, cost + c)
            chosen.pop()
        search(i + 1, chosen, cost)

    search(0, [], 0)
    return ForestSolution(frozenset(best), best_cost)


def check_cut_condition(inst: OSInstance, budget: OracleBudget = OracleBudget()) -> bool:
    g = inst.graph
    return cut_condition_holds(g.n, [(e.u, e.v) for e in g.edges],
                               [(p.s, p.t) for p in inst.pairs], budget)


def cut_condition_holds(n: int, ends: Sequence[tuple[int, int]], pairs: Sequence[tuple[int, int]],
                        budget: OracleBudget = OracleBudget()) -> bool:
    """Does every vertex set S have at least as many edges as demands leaving it?

    Edges and demands both count with multiplicity one; ``pairs`` may
    repeat a demand.
    """
    if n > budget.max_vertices:
        raise BudgetExceeded(f"{n} vertices exceed budget {budget.max_vertices}")
    if not pairs:
        return True
    top = n - 1
    # S and its complement give the same counts: keep the last vertex outside S
    for mask in range(1, 1 << top):
        d_e = sum(((mask >> u) ^ (mask >> v)) & 1 for u, v in ends)
        d_r = sum(((mask >> s) ^ (mask >> t)) & 1 for s, t in pairs)
        if d_e < d_r:
            return False
    return True


def check_euler_condition(inst: OSInstance) -> bool:
    degree = [0] * inst.graph.n
    for e in inst.graph.edges:
        degree[e.u] += 1
        degree[e.v] += 1
    for p in inst.pairs:
        degree[p.s] += 1
        degree[p.t] += 1
    return all(x % 2 == 0 for x in degree)
