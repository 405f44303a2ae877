"""End-to-end runs: validate, dualize, solve, extract, verify, compare with the oracles."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .dual import DualGraph, EdgeKind, build_dual
from .errors import BudgetExceeded, ExtractionNotSeparating
from .io import InstanceFile
from .multicut import (
    cut_cost,
    cut_dual_connectivity,
    dual_image_acyclic,
    external_count,
    minimalize,
    primal_image,
    separated_pairs,
)
from .oracle import (
    OracleBudget,
    check_cut_condition,
    check_euler_condition,
    exact_min_multicut,
    exact_min_steiner_forest,
)
from .steiner import ForestSolution, gw_steiner_forest, verify_forest

TIMING_KEYS = ("timings",)


@dataclass
class RunReport:
    digest: str
    n: int
    m: int
    k: int
    boundary_length: int
    finite_faces: int
    dual: dict
    gw: dict
    multicut: dict
    checks: dict
    conditions: dict
    oracle: Optional[dict] = None
    ratio: Optional[float] = None
    ratio_exact: Optional[str] = None
    timings: dict = field(default_factory=dict)

    def to_dict(self, timings: bool = True) -> dict:
        out = asdict(self)
        if self.oracle is None:
            for key in ("oracle", "ratio", "ratio_exact"):
                out.pop(key)
        elif self.ratio is None:
            out.pop("ratio")
            out.pop("ratio_exact")
        if not timings:
            out.pop("timings")
        return out


def _dual_summary(d: DualGraph) -> dict:
    return {
        "vertices": len(d.vertices),
        "edges": len(d.edges),
        "internal": len(d.of_kind(EdgeKind.INTERNAL)),
        "crossing": len(d.of_kind(EdgeKind.CROSSING)),
        "external": len(d.of_kind(EdgeKind.EXTERNAL)),
        "N": d.N,
    }


def run_pipeline(source: InstanceFile, budget: OracleBudget = OracleBudget(),
                 use_oracle: bool = True, strict: bool = True) -> RunReport:
    """Run the whole reduction on one instance.

    With ``strict`` set, a Steiner forest whose primal image fails to
    separate some pair raises ExtractionNotSeparating. Otherwise the run
    continues and the failure is recorded under ``checks["extraction_separates"]``.
    Oracle results are included only when the instance fits ``budget``.
    """
    clock: dict[str, float] = {}
    t0 = time.perf_counter()
    inst = source.to_instance()
    d = build_dual(inst)
    clock["dualize"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    wg, demands = d.weighted(), d.demands()
    forest = gw_steiner_forest(wg, demands)
    clock["steiner"] = time.perf_counter() - t0

    cut = primal_image(forest, d)
    sep = separated_pairs(inst, cut)
    if strict and not all(sep):
        raise ExtractionNotSeparating([p.index for p, ok in zip(inst.pairs, sep) if not ok])
    ext_used = external_count(forest, d)
    cost = cut_cost(inst, cut)
    minimal = minimalize(inst, cut) if all(sep) else None

    connected = cut_dual_connectivity(inst, d, cut)
    checks = {
        "cut_dual_connected": all(ok for ok, s in zip(connected, sep) if s),
        "extraction_separates": all(sep),
        "unseparated_pairs": [p.index for p, ok in zip(inst.pairs, sep) if not ok],
        "gw_certificate": verify_forest(wg, demands, forest),
        "cost_accounting": forest.cost == cost + d.N * ext_used,
    }
    report = RunReport(
        digest=source.digest(),
        n=inst.graph.n,
        m=inst.graph.m,
        k=inst.k,
        boundary_length=len(inst.boundary),
        finite_faces=len(inst.finite_faces),
        dual=_dual_summary(d),
        gw={
            "cost": forest.cost,
            "dual_value": str(forest.dual_value),
            "edges": sorted(forest.edges),
            "external_used": ext_used,
        },
        multicut={
            "edges": sorted(cut),
            "cost": cost,
            "separating": all(sep),
            "minimal_edges": None if minimal is None else sorted(minimal),
            "minimal_cost": None if minimal is None else cut_cost(inst, minimal),
        },
        checks=checks,
        conditions={"euler": check_euler_condition(inst)},
        timings=clock,
    )
    try:
        report.conditions["cut"] = check_cut_condition(inst, budget)
    except BudgetExceeded:
        report.conditions["cut"] = None

    if use_oracle:
        t0 = time.perf_counter()
        _attach_oracle(report, inst, d, forest, cut, budget)
        clock["oracle"] = time.perf_counter() - t0
    return report


def _attach_oracle(report: RunReport, inst, d: DualGraph, forest: ForestSolution,
                   cut, budget: OracleBudget) -> None:
    try:
        opt = exact_min_multicut(inst, budget)
    except BudgetExceeded:
        opt = None
    try:
        sf = exact_min_steiner_forest(d.weighted(), d.demands(), budget)
    except BudgetExceeded:
        sf = None
    if opt is None and sf is None:
        return

    oracle: dict = {}
    if opt is not None:
        best = minimalize(inst, opt.edges) if opt.edges else opt.edges
        conn = cut_dual_connectivity(inst, d, best)
        oracle.update(multicut_cost=opt.cost, multicut_edges=sorted(opt.edges))
        report.checks["oracle_cut_dual_connected"] = all(cut_dual_connectivity(inst, d, opt.edges))
        report.checks["minimal_cut_dual_connected"] = all(conn)
        report.checks["minimal_cut_dual_acyclic"] = dual_image_acyclic(d, best)
        if report.multicut["separating"]:
            report.checks["oracle_lower_bound"] = report.multicut["cost"] >= opt.cost
        if opt.cost > 0:
            ratio = Fraction(report.multicut["cost"], opt.cost)
            report.ratio = float(ratio)
            report.ratio_exact = str(ratio)
        report.checks["ratio_within_2"] = report.multicut["separating"] and (
            report.ratio is None or report.ratio <= 2)
    if sf is not None:
        ext = external_count(sf, d)
        oracle.update(steiner_cost=sf.cost, steiner_external=ext,
                      steiner_primal_cost=sf.cost - d.N * ext)
        report.checks["external_within_2k"] = ext <= 2 * inst.k
        report.checks["gw_dual_below_opt"] = forest.dual_value <= sf.cost
        report.checks["gw_within_2"] = forest.cost <= 2 * sf.cost
        if opt is not None:
            oracle["reduction_gap"] = sf.cost - d.N * ext - opt.cost
    report.oracle = oracle


def _run_one(args) -> dict:
    source, budget, use_oracle = args
    report = run_pipeline(source, budget, use_oracle, strict=False)
    return {"instance": source.to_dict(), "report": report.to_dict()}


def run_batch(sources: Sequence[InstanceFile], budget: OracleBudget = OracleBudget(),
              use_oracle: bool = True, workers: int = 1) -> dict:
    """Run many instances, aggregate, and collect counterexamples.

    Output is sorted by instance digest, so it does not depend on
    ``workers``. A counterexample is any instance where some checked
    property came out false; it carries the instance and full report.
    """
    jobs = [(s, budget, use_oracle) for s in sources]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_one, jobs, chunksize=8))
    else:
        rows = [_run_one(j) for j in jobs]
    rows.sort(key=lambda r: r["report"]["digest"])

    checks: dict[str, dict[str, int]] = {}
    ratios = []
    counterexamples = []
    for row in rows:
        rep = row["report"]
        failed = []
        for name, value in rep["checks"].items():
            if not isinstance(value, bool) or name == "minimal_cut_dual_acyclic":
                continue
            tally = checks.setdefault(name, {"checked": 0, "failed": 0})
            tally["checked"] += 1
            if not value:
                tally["failed"] += 1
                failed.append(name)
        if "ratio" in rep and rep["multicut"]["separating"]:
            ratios.append(rep["ratio"])
        if failed:
            counterexamples.append({"failed": failed, **row})

    acyclic = [r["report"]["checks"]["minimal_cut_dual_acyclic"] for r in rows
               if "minimal_cut_dual_acyclic" in r["report"]["checks"]]
    summary = {
        "instances": len(rows),
        "checks": dict(sorted(checks.items())),
        "ratio": _distribution(ratios),
        "minimal_cut_dual_acyclic": {"checked": len(acyclic), "acyclic": sum(acyclic)},
        "counterexamples": len(counterexamples),
    }
    return {
        "summary": summary,
        "reports": [r["report"] for r in rows],
        "counterexamples": counterexamples,
    }


def _distribution(values: list[float]) -> dict:
    if not values:
        return {"count": 0}
    xs = sorted(values)
    return {
        "count": len(xs),
        "min": xs[0],
        "median": xs[len(xs) // 2],
        "max": xs[-1],
        "mean": sum(xs) / len(xs),
        "at_most_2": sum(1 for x in xs if x <= 2),
        "equal_1": sum(1 for x in xs if x == 1),
    }


def strip_timings(obj):
    """Copy of a report or batch result with every timing field removed."""
    if isinstance(obj, dict):
        return {k: strip_timings(v) for k, v in obj.items() if k not in TIMING_KEYS}
    if isinstance(obj, list):
        return [strip_timings(v) for v in obj]
    return obj
