"""Command-line interface.

Exit codes: 0 solvable (or success), 1 unsolvable (or no solutions, or an
oracle disagreement), 2 usage and parse errors.  ``--json`` prints one JSON
record per line with a fixed field set; see the README.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .arith import TRIAL_DIVISION_CAP, U64_MAX, BudgetExceededError
from .cycles import C, CycleSet
from .decide import (
    decide_multi_target,
    decide_scaled,
    decide_scaled_paper,
    deep_decide,
)
from .enumeration import count_solutions, decide_by_enumeration, decide_sum_lhs, enumerate_solutions
from .oracle import grid_check
from .parser import (
    Basic,
    Const,
    Equation,
    Mul,
    MultiTarget,
    ParseError,
    Scaled,
    SumLhs,
    Unsupported,
    evaluate,
    normalize_ast,
    parse_equation,
    parse_expression,
    print_canonical,
    Var,
)

RECORD_FIELDS = ("command", "equation", "classification", "verdict", "witness", "refutation",
                 "intermediates", "count", "solutions", "elapsed_ns", "gcd_calls", "reason")


class UsageError(Exception):
    pass


def _record(**fields) -> dict:
    rec = dict.fromkeys(RECORD_FIELDS)
    rec.update(fields)
    return rec


def _classification_text(cls) -> str:
    name = type(cls).__name__
    if isinstance(cls, Unsupported):
        return f"Unsupported({cls.reason})"
    args = ",".join(str(v) for v in vars(cls).values())
    return f"{name}({args})"


def dispatch(equation: Equation, command: str, *, limit: int | None = None,
             paper_strict: bool = False) -> dict:
    """Route a parsed equation to the matching procedure and time it.

    ``command`` is ``decide``, ``enumerate`` or ``count``; the last two
    accept Basic equations only.  Raises UsageError otherwise.
    """
    cls = equation.classification
    base = dict(command=command, equation=print_canonical(equation),
                classification=_classification_text(cls))
    if isinstance(cls, Unsupported):
        raise UsageError(f"unsupported equation: {cls.reason}")
    if command in ("enumerate", "count"):
        if not isinstance(cls, Basic):
            raise UsageError(f"{command} supports Basic only")
        start = time.perf_counter_ns()
        if command == "count":
            count = count_solutions(cls.p, cls.q, cls.n)
            return _record(**base, verdict=count > 0, count=count,
                           elapsed_ns=time.perf_counter_ns() - start)
        sols = [str(x) for x in enumerate_solutions(cls.p, cls.q, cls.n, limit)]
        return _record(**base, verdict=bool(sols), count=len(sols), solutions=sols,
                       elapsed_ns=time.perf_counter_ns() - start)
    if command != "decide":
        raise UsageError(f"unknown command {command!r}")

    start = time.perf_counter_ns()
    if isinstance(cls, Basic):
        report = deep_decide(cls.p, cls.q, cls.n)
    elif isinstance(cls, Scaled):
        report = decide_scaled(cls.m, cls.p, cls.q, cls.n)
    elif isinstance(cls, MultiTarget):
        report = decide_multi_target(cls.m, cls.p, list(cls.targets))
    elif isinstance(cls, SumLhs):
        report = decide_sum_lhs(list(cls.monomials), cls.q, cls.n)
    elapsed = time.perf_counter_ns() - start
    rec = _record(**base, elapsed_ns=elapsed, **{k: v for k, v in report.to_record().items()
                                                 if k in RECORD_FIELDS})
    if paper_strict and isinstance(cls, (Basic, Scaled)):
        m = cls.m if isinstance(cls, Scaled) else 1
        strict = decide_scaled_paper(m, cls.p, cls.q, cls.n).verdict
        rec["paper_strict_verdict"] = strict
        rec["paper_strict_disagrees"] = strict != report.verdict
    return rec


def _equation_from_args(args) -> Equation:
    if args.equation:
        return parse_equation(args.equation)
    if args.p is None or args.q is None or args.n is None:
        raise UsageError("give an equation string or all of --p, --q, --n")
    for name in ("m", "p", "q", "n"):
        v = getattr(args, name)
        if v is not None and v < 1:
            raise UsageError(f"--{name} must be positive")
    m = args.m or 1
    return Equation(normalize_ast(Mul((Const(C(m, args.p)), Var("X")))), Const(C(args.n, args.q)))


def _print_human(rec: dict) -> None:
    cmd = rec["command"]
    if cmd == "decide":
        if rec["verdict"]:
            line = "solvable"
            if rec["witness"] is not None:
                line += f": X = {rec['witness']}"
        else:
            line = f"unsolvable: {rec['refutation']}"
        if rec["intermediates"]:
            line += f"  [pi_f={rec['intermediates']['pi_f']}, e={rec['intermediates']['e']}]"
        if rec.get("reason"):
            line += f"  ({rec['reason']})"
        print(line)
        if "paper_strict_verdict" in rec:
            tag = "DISAGREES" if rec["paper_strict_disagrees"] else "agrees"
            print(f"paper-strict verdict: {rec['paper_strict_verdict']} ({tag})")
    elif cmd == "count":
        print(rec["count"])
    elif cmd == "enumerate":
        for s in rec["solutions"]:
            print(s)


def _emit(rec: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rec, sort_keys=False))
    else:
        _print_human(rec)


def _cmd_solve(args) -> int:
    eq = _equation_from_args(args)
    rec = dispatch(eq, args.command, limit=getattr(args, "limit", None),
                   paper_strict=getattr(args, "paper_strict", False))
    _emit(rec, args.json)
    return 0 if rec["verdict"] else 1


def _cmd_eval(args) -> int:
    expr = parse_expression(args.expression)
    start = time.perf_counter_ns()
    value: CycleSet = evaluate(expr)
    rec = _record(command="eval", equation=print_canonical(expr), witness=str(value),
                  elapsed_ns=time.perf_counter_ns() - start)
    if args.json:
        print(json.dumps(rec))
    else:
        print(value)
    return 0


def _cmd_oracle_check(args) -> int:
    start = time.perf_counter_ns()
    res = grid_check(args.p_max, args.n_max, args.q_max, args.workers)
    rec = {
        "command": "oracle-check",
        "triples": res.triples,
        "solvable": res.solvable,
        "disagreements": len(res.disagreements),
        "examples": [list(d) for d in res.disagreements[:10]],
        "max_gcd_ratio": res.max_gcd_ratio,
        "elapsed_ns": time.perf_counter_ns() - start,
    }
    if args.json:
        print(json.dumps(rec))
    else:
        print(f"{res.triples} triples, {res.solvable} solvable, "
              f"{len(res.disagreements)} disagreements, max gcd-call ratio {res.max_gcd_ratio:.3f}")
        for d in res.disagreements[:10]:
            print("  disagreement (p,q,n,deep,theorem,enumeration):", d)
    return 0 if not res.disagreements else 1


def bench_rows(max_bits: int = 60, step: int = 4, n: int = 720720) -> list[dict]:
    """gcd-call counts and timings for the gcd decider vs the divisor decider.

    Inputs at each size are ``p = 2^a * 3^b`` and ``q = p * 6^c * 5`` with a
    bit length around the target, stopping at 64 bits; the divisor decider
    is skipped once ``q`` passes the trial-division cap.
    """
    rows = []
    for bits in range(step, max_bits + 1, step):
        third = max(1, bits // 3)
        p = 2**third * 3 ** max(1, third // 2)
        q = p * 6 ** max(1, third // 2) * 5
        if q > U64_MAX:
            break
        t0 = time.perf_counter_ns()
        report = deep_decide(p, q, n)
        deep_ns = time.perf_counter_ns() - t0
        enum_ns = None
        if q <= TRIAL_DIVISION_CAP:
            t0 = time.perf_counter_ns()
            decide_by_enumeration(p, q, n)
            enum_ns = time.perf_counter_ns() - t0
        rows.append({
            "bits": q.bit_length(), "p": p, "q": q, "n": n, "verdict": report.verdict,
            "gcd_calls": report.gcd_calls,
            "gcd_bound": round(4 * (math.log2(p) + 1) * (math.log2(q) + 1), 1),
            "deep_ns": deep_ns, "enumeration_ns": enum_ns,
        })
    return rows


def _cmd_bench(args) -> int:
    rows = bench_rows(args.max_bits, args.step)
    if args.json:
        for r in rows:
            print(json.dumps({"command": "bench", **r}))
        return 0
    print(f"{'bits':>4} {'gcd_calls':>9} {'bound':>7} {'deep_ns':>10} {'enum_ns':>12}")
    for r in rows:
        enum = "-" if r["enumeration_ns"] is None else str(r["enumeration_ns"])
        print(f"{r['bits']:>4} {r['gcd_calls']:>9} {r['gcd_bound']:>7} {r['deep_ns']:>10} {enum:>12}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclering",
                                 description="Decide and solve equations over permutation digraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def equation_cmd(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("equation", nargs="?", help='e.g. "C(1,4)*X = C(12,12)"')
        sp.add_argument("--m", type=int, help="multiplicity of the coefficient (default 1)")
        sp.add_argument("--p", type=int, help="cycle length of the coefficient")
        sp.add_argument("--q", type=int, help="cycle length of the right-hand side")
        sp.add_argument("--n", type=int, help="multiplicity of the right-hand side")
        sp.add_argument("--json", action="store_true", help="one JSON record per line")
        sp.set_defaults(func=_cmd_solve)
        return sp

    d = equation_cmd("decide", "decide solvability")
    d.add_argument("--paper-strict", action="store_true",
                   help="also report the mq/p criterion for scaled equations")
    e = equation_cmd("enumerate", "list all solutions of a basic equation")
    e.add_argument("--limit", type=int, help="stop after K solutions")
    equation_cmd("count", "count the solutions of a basic equation")

    ev = sub.add_parser("eval", help="evaluate a ground expression")
    ev.add_argument("expression")
    ev.add_argument("--json", action="store_true")
    ev.set_defaults(func=_cmd_eval)

    oc = sub.add_parser("oracle-check", help="three-way decider agreement on a grid")
    oc.add_argument("--p-max", type=int, default=200)
    oc.add_argument("--q-max", type=int, default=None)
    oc.add_argument("--n-max", type=int, default=60)
    oc.add_argument("--workers", type=int, default=1)
    oc.add_argument("--json", action="store_true")
    oc.set_defaults(func=_cmd_oracle_check)

    b = sub.add_parser("bench", help="gcd-call counts and timings across input sizes")
    b.add_argument("--max-bits", type=int, default=60)
    b.add_argument("--step", type=int, default=4)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, BudgetExceededError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
