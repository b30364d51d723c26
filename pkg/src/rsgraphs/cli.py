"""Command-line surface tying constructions, verification, bounds and search together.

Exit codes: 0 pass/SAT/feasible, 1 fail/UNSAT/infeasible, 2 INDETERMINATE,
64 usage error, 65 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import expansion_audit, feasibility_verdict, max_r
from .constructions import (
    ResourceLimitError,
    ap_free_set,
    cayley_rs,
    disjoint_union,
    double_cover,
    hypercube_rs,
    kneser_rs,
)
from .core import GraphError, ParameterError, PreconditionError, verify_decomposition
from .rsg_format import RsgParseError, emit_rsg, parse_rsg
from .search import INDETERMINATE, SAT, UNSAT, Budget, exists_rs

EX_OK = 0
EX_FAIL = 1
EX_INDETERMINATE = 2
EX_USAGE = 64
EX_PARSE = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _frac(x: Fraction) -> str:
    return str(x)


def _load(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    try:
        return parse_rsg(text)
    except RsgParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_PARSE)


def _write_output(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    family = args.family
    try:
        if family == "kneser":
            dec = kneser_rs(_need(args, "k"))
        elif family == "hypercube":
            dec = hypercube_rs(_need(args, "k"), augmented=False)
        elif family == "hypercube-augmented":
            dec = hypercube_rs(_need(args, "k"), augmented=True)
        elif family == "disjoint-union":
            base = _load(_need(args, "input"))
            dec = disjoint_union(base, _need(args, "copies"))
        elif family == "double-cover":
            dec = double_cover(_load(_need(args, "input")))
        elif family == "cayley-ap":
            modulus = _need(args, "modulus")
            limit = args.limit if args.limit is not None else (modulus - 1) // 3
            s = ap_free_set(args.apset_method, limit)
            if s.note:
                print(f"note: {s.note}", file=sys.stderr)
            dec = cayley_rs(modulus, s)
        else:
            print(f"error: unknown family {family!r}", file=sys.stderr)
            return EX_USAGE
    except (ParameterError, PreconditionError, ResourceLimitError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    _write_output(emit_rsg(dec), args.output)
    return EX_OK


def _need(args, name):
    value = getattr(args, name, None)
    if value is None:
        print(f"error: --{name.replace('_', '-')} is required for family {args.family!r}",
              file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return value


def cmd_verify(args) -> int:
    dec = _load(args.file)
    report = verify_decomposition(dec)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"n={dec.graph.n} t={dec.t} r={dec.r} edges={len(dec.graph.edges)}")
        print(f"max edge degree sum: {report.max_edge_degree_sum}")
        print(f"max |V_i cap V_j|: {report.max_pair_intersection}")
        for note in report.notes:
            print(f"note: {note}")
        if report.passed:
            print("verdict: pass")
        else:
            print("verdict: fail")
            for v in report.violations:
                print(f"  {v.invariant}: {v.detail}")
    return EX_OK if report.passed else EX_FAIL


def cmd_bound(args) -> int:
    try:
        if args.r is None:
            cap = max_r(args.n, args.t)
            if args.json:
                print(json.dumps({"n": args.n, "t": args.t, "max_r": _frac(cap)}))
            else:
                print(f"max r = {_frac(cap)}")
            return EX_OK
        verdict = feasibility_verdict(args.n, args.r, args.t)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    if args.json:
        print(json.dumps(verdict.to_dict(), indent=2))
    else:
        print(f"regime: {verdict.regime}")
        if verdict.hard_bound is not None:
            print(f"hard bound on r: {_frac(verdict.hard_bound)}" + (" (tight)" if verdict.tight else ""))
        print(f"verdict: {'feasible' if verdict.feasible else 'INFEASIBLE'} ({verdict.witness})")
        for line in verdict.advisory:
            print(f"advisory: {line}")
    return EX_OK if verdict.feasible else EX_FAIL


def _budget_from(args) -> Budget:
    budget = Budget.default()
    if getattr(args, "max_nodes", None):
        budget = Budget(max_nodes=args.max_nodes, max_seconds=budget.max_seconds)
    if getattr(args, "timeout", None):
        budget = Budget(max_nodes=budget.max_nodes, max_seconds=args.timeout)
    return budget


def cmd_search(args) -> int:
    try:
        outcome = exists_rs(args.n, args.r, args.t, budget=_budget_from(args),
                            eq1_shortcut=not args.no_eq1_shortcut)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    payload = outcome.to_dict()
    if outcome.certificate is not None and args.output:
        _write_output(emit_rsg(outcome.certificate), args.output)
    if args.json:
        if outcome.certificate is not None:
            payload["certificate"] = emit_rsg(outcome.certificate)
        print(json.dumps(payload, indent=2))
    else:
        print(f"verdict: {outcome.verdict}  nodes={outcome.nodes_explored}  "
              f"time={outcome.wall_time:.2f}s")
        if outcome.note:
            print(f"note: {outcome.note}")
        if outcome.certificate is not None and not args.output:
            sys.stdout.write(emit_rsg(outcome.certificate))
    if outcome.verdict == SAT:
        return EX_OK
    if outcome.verdict == UNSAT:
        return EX_FAIL
    return EX_INDETERMINATE


def cmd_audit(args) -> int:
    dec = _load(args.file)
    try:
        report = expansion_audit(dec)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_FAIL
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"n={report.n} t={report.t} r={report.r}"
              + (" (audited on double cover)" if report.doubled else ""))
        print(f"E1={report.e1} E0={report.e0} s={_frac(report.s)} s'={_frac(report.s_prime)}")
        print(f"F: {report.f_vertex_count} vertices, achieved min degree "
              f"{report.f_achieved_min_degree} (threshold {_frac(report.f_min_degree_threshold)})")
        for name, status, detail in report.assertions:
            print(f"  {name}: {status} ({detail})")
        for row in report.layers:
            print(f"  layer {row.index}: |N_i|={row.size}, floor C(s,i)={row.binomial_floor}"
                  f" {'ok' if row.meets else 'below'}")
        print(f"verdict: {'pass' if report.passed else 'fail'}")
    return EX_OK if report.passed else EX_FAIL


def build_parser() -> _Parser:
    parser = _Parser(prog="rsg", description="Induced-matching decomposition workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a decomposition family")
    p.add_argument("family", choices=["kneser", "hypercube", "hypercube-augmented",
                                      "disjoint-union", "double-cover", "cayley-ap"])
    p.add_argument("--k", type=int)
    p.add_argument("--copies", type=int)
    p.add_argument("--modulus", type=int)
    p.add_argument("--apset-method", choices=["greedy-base3", "behrend"], default="greedy-base3")
    p.add_argument("--limit", type=int)
    p.add_argument("--input", help="input .rsg file for disjoint-union / double-cover")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a .rsg decomposition file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="hard cap on r, or full feasibility verdict with --r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="exhaustive existence search for (n, r, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--timeout", type=float)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--no-eq1-shortcut", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", help="write the SAT certificate here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("audit", help="run the expansion audit on a .rsg file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
