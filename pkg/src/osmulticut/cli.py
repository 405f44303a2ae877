"""Command-line interface.

Exit codes: 0 success, 1 validation error, 2 budget exceeded,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import generators
from .dot import emit_dot
from .dual import build_dual
from .errors import BudgetExceeded, InvariantViolation, OSMulticutError, ValidationError
from .io import load_instance_file, serialize_instance
from .multicut import extract_multicut, primal_image, verify_multicut
from .oracle import (
    OracleBudget,
    check_cut_condition,
    check_euler_condition,
    exact_min_multicut,
    exact_min_steiner_forest,
)
from .pipeline import run_batch, run_pipeline
from .steiner import gw_steiner_forest, verify_forest


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _budget(args) -> OracleBudget:
    return OracleBudget(max_primal_edges=args.budget_edges,
                        max_dual_edges=args.budget_dual_edges,
                        time_limit=args.time_limit)


def _pairs_arg(text: Optional[str]):
    if text is None:
        return None
    if text.isdigit():
        return int(text)
    out = []
    for chunk in text.split(","):
        s, t = chunk.split(":")
        out.append((int(s), int(t)))
    return out


def _cost_arg(text: Optional[str]):
    if text is None:
        return None
    if "," in text:
        lo, hi = text.split(",")
        return (int(lo), int(hi))
    return int(text)


def _table(rows: list[tuple[str, object]]) -> str:
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def _flatten(d: dict, prefix: str = "") -> list[tuple[str, object]]:
    rows = []
    for k, v in d.items():
        if isinstance(v, dict):
            rows += _flatten(v, f"{prefix}{k}.")
        else:
            rows.append((prefix + k, v))
    return rows


def _emit(args, payload, text: Optional[str] = None) -> None:
    if text is None:
        if args.format == "table" and isinstance(payload, dict):
            text = _table(_flatten(payload))
        else:
            text = json.dumps(payload, indent=1) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> None:
    inst = load_instance_file(_read(args.instance)).to_instance()
    info = {
        "n": inst.graph.n,
        "m": inst.graph.m,
        "faces": len(inst.faces),
        "boundary": list(inst.boundary),
        "pairs": [[p.s, p.t] for p in inst.pairs],
        "euler_condition": check_euler_condition(inst),
    }
    try:
        info["cut_condition"] = check_cut_condition(inst, _budget(args))
    except BudgetExceeded:
        info["cut_condition"] = None
    _emit(args, info)


def cmd_dualize(args) -> None:
    inst = load_instance_file(_read(args.instance)).to_instance()
    d = build_dual(inst)
    _emit(args, {
        "N": d.N,
        "vertices": [{"id": v.id, "kind": v.kind.value, "ref": v.ref, "label": d.vertex_label(v.id)}
                     for v in d.vertices],
        "edges": [{"id": e.id, "ends": [e.a, e.b], "kind": e.kind.value, "cost": e.cost,
                   "primal": e.primal} for e in d.edges],
        "pair_terminals": {str(i): list(uv) for i, uv in d.pair_terminals.items()},
    })


def cmd_solve(args) -> None:
    inst = load_instance_file(_read(args.instance)).to_instance()
    d = build_dual(inst)
    sol = gw_steiner_forest(d.weighted(), d.demands())
    if args.lenient:
        cut = primal_image(sol, d)
        separating = verify_multicut(inst, cut)
    else:
        cut = extract_multicut(sol, d, inst).edges
        separating = True
    _emit(args, {
        "forest": {"edges": sorted(sol.edges), "cost": sol.cost, "dual_value": str(sol.dual_value),
                   "certificate": verify_forest(d.weighted(), d.demands(), sol)},
        "multicut": {"edges": sorted(cut), "cost": sum(inst.graph.edges[e].cost for e in cut),
                     "separating": separating},
    })


def cmd_oracle(args) -> None:
    inst = load_instance_file(_read(args.instance)).to_instance()
    budget = _budget(args)
    opt = exact_min_multicut(inst, budget)
    out = {"multicut": {"edges": sorted(opt.edges), "cost": opt.cost}}
    d = build_dual(inst)
    try:
        sf = exact_min_steiner_forest(d.weighted(), d.demands(), budget)
        out["steiner_forest"] = {"edges": sorted(sf.edges), "cost": sf.cost}
    except BudgetExceeded as exc:
        out["steiner_forest"] = {"skipped": str(exc)}
    _emit(args, out)


def cmd_report(args) -> None:
    budget = _budget(args)
    if args.batch is not None:
        sources = list(generators.corpus(args.batch, args.seed, _cost_arg(args.cost_range) or (1, 10)))
        result = run_batch(sources, budget, not args.no_oracle, args.workers)
        if args.format == "table":
            _emit(args, result["summary"])
        else:
            _emit(args, result)
        return
    if not args.instance:
        raise ValidationError("report needs instance files or --batch")
    reports = [run_pipeline(load_instance_file(_read(p)), budget, not args.no_oracle,
                            strict=not args.lenient).to_dict()
               for p in args.instance]
    _emit(args, reports[0] if len(reports) == 1 else reports)


def cmd_generate(args) -> None:
    params: dict = {}
    if args.kind == "cycle":
        params["length"] = args.length
    else:
        params.update(rows=args.rows, cols=args.cols)
    if args.pairs is not None:
        params["pairs"] = _pairs_arg(args.pairs)
    if args.cost_range is not None:
        params["costs"] = _cost_arg(args.cost_range)
    f = generators.generate(args.kind, params, args.seed)
    _emit(args, None, serialize_instance(f) + "\n")


def cmd_dot(args) -> None:
    inst = load_instance_file(_read(args.instance)).to_instance()
    d = build_dual(inst) if args.layer in ("dual", "solution") else None
    forest = cut = None
    if args.layer == "solution" or args.highlight:
        sol = gw_steiner_forest(d.weighted(), d.demands()) if d else None
        if sol is not None:
            forest = sol.edges
            cut = primal_image(sol, d)
    _emit(args, None, emit_dot(args.layer, inst, d, forest, cut))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--budget-edges", type=int, default=20,
                        help="oracle limit on primal edges (default 20)")
    common.add_argument("--budget-dual-edges", type=int, default=22,
                        help="oracle limit on dual edges (default 22)")
    common.add_argument("--time-limit", type=float, default=None, help="oracle seconds per call")

    parser = argparse.ArgumentParser(prog="osmulticut",
                                     description="Multicut on Okamura-Seymour instances via dual Steiner forest.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check an instance file")
    p.add_argument("instance")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dualize", parents=[common], help="print the dual graph")
    p.add_argument("instance")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("solve", parents=[common], help="Steiner forest + extracted multicut")
    p.add_argument("instance")
    p.add_argument("--lenient", action="store_true",
                   help="report a non-separating extraction instead of failing")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common], help="exact optima by enumeration")
    p.add_argument("instance")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("report", parents=[common], help="full pipeline report")
    p.add_argument("instance", nargs="*")
    p.add_argument("--batch", type=int, metavar="COUNT", help="generate and run a random corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cost-range", metavar="LO,HI")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("generate", parents=[common], help="write a random instance")
    p.add_argument("kind", choices=("cycle", "grid", "random-os"))
    p.add_argument("--length", type=int, default=4)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--pairs", help="pair count, or explicit list like 0:2,1:3")
    p.add_argument("--cost-range", metavar="LO,HI", help="single cost C or range LO,HI")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("dot", parents=[common], help="emit Graphviz DOT")
    p.add_argument("instance")
    p.add_argument("--layer", choices=("primal", "dual", "solution"), default="primal")
    p.add_argument("--highlight", action="store_true", help="mark the forest on the dual layer")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate" and args.kind == "grid" and (args.rows is None or args.cols is None):
        parser.error("grid needs --rows and --cols")
    try:
        args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 3
    except OSMulticutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
