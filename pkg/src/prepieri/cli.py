"""Command-line surface: verification commands with machine-readable reports.

Every command emits one report (text or a single JSON document) with the
keys command / inputs / verdict / lhs_terms / rhs_terms / elapsed_ms and,
on an identity failure, a counterexample term.  Exit codes: 0 verified or
success, 1 identity failure, 2 usage or precondition error.  Reports are
deterministic for fixed arguments (including --seed) except for the
elapsed_ms field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .acceptance import run_all
from .algebra import Polynomial, first_difference
from .combinatorics import IntTuple, binary_compositions, eta_tuple, weak_compositions, xi_tuple
from .multilinear import decompose as ml_decompose
from .multilinear import orbit, t_set, verify_decomposition
from .ninth_variation import NinthContext, verify_fun_rule
from .nsym import immaculate, verify_right_pieri
from .rules import (
    PieriContext,
    cor_e_sides,
    cor_h_sides,
    first_rule_sides,
    second_rule_sides,
)
from .schur import alt_pieri_equiv, horizontal_strips, vertical_strips

DEFAULT_SEED = 1729


class UsageError(ValueError):
    pass


def parse_tuple(text: str) -> IntTuple:
    """Comma-separated integers; the empty string is the empty tuple."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed tuple {text!r}") from exc


def format_tuple(tup: IntTuple) -> str:
    return ",".join(str(x) for x in tup)


def _compare_report(lhs: Polynomial, rhs: Polynomial) -> dict:
    report = {
        "verdict": "verified" if lhs == rhs else "failed",
        "lhs_terms": len(lhs),
        "rhs_terms": len(rhs),
    }
    diff = first_difference(lhs, rhs)
    if diff is not None:
        monomial, c_lhs, c_rhs = diff
        report["counterexample"] = {
            "monomial": monomial,
            "lhs_coefficient": c_lhs,
            "rhs_coefficient": c_rhs,
        }
    return report


def _cmd_verify_first(args) -> dict:
    alpha = parse_tuple(args.alpha)
    ctx = PieriContext(args.n, args.p, alpha, parse_tuple(args.kill or ""))
    lhs, rhs = first_rule_sides(ctx)
    report = _compare_report(lhs, rhs)
    report["inputs"] = {
        "n": args.n,
        "p": args.p,
        "alpha": format_tuple(alpha),
        "eta": format_tuple(eta_tuple(args.n, args.p)),
    }
    return report


def _cmd_verify_second(args) -> dict:
    alpha = parse_tuple(args.alpha)
    ctx = PieriContext(args.n, args.p, alpha, parse_tuple(args.kill or ""))
    lhs, rhs = second_rule_sides(ctx)
    report = _compare_report(lhs, rhs)
    report["inputs"] = {
        "n": args.n,
        "p": args.p,
        "alpha": format_tuple(alpha),
        "xi": format_tuple(xi_tuple(args.n, args.p)),
    }
    return report


def _cmd_verify_cor(args) -> dict:
    if (args.alpha is None) == (args.mu is None):
        raise UsageError("give exactly one of --alpha or --mu")
    mode = "alpha" if args.alpha is not None else "mu"
    base = parse_tuple(args.alpha if mode == "alpha" else args.mu)
    n = len(base)
    if n == 0:
        raise UsageError("tuple must be nonempty")
    if args.family == "h":
        kill = frozenset({n})
        sides = cor_h_sides
    else:
        q = n - args.p
        kill = frozenset(range(q + 1, n + 1))
        sides = cor_e_sides
    ctx = PieriContext(n, args.p, base, kill)
    lhs, rhs = sides(ctx, mode=mode)
    report = _compare_report(lhs, rhs)
    report["inputs"] = {
        "family": args.family,
        "mode": mode,
        "n": n,
        "p": args.p,
        mode: format_tuple(base),
        "negative_kill": format_tuple(tuple(sorted(kill))),
    }
    return report


def _cmd_expand_pieri(args) -> dict:
    lam = parse_tuple(args.lam)
    strips = horizontal_strips(lam, args.p) if args.kind == "H" else vertical_strips(lam, args.p)
    equivalent = alt_pieri_equiv(lam, args.p, args.kind)
    return {
        "verdict": "verified" if equivalent else "failed",
        "inputs": {"kind": args.kind, "lambda": format_tuple(lam), "p": args.p},
        "lhs_terms": len(strips),
        "rhs_terms": len(strips),
        "partitions": [format_tuple(mu) for mu in strips],
    }


def _cmd_expand_immaculate(args) -> dict:
    alpha = parse_tuple(args.alpha)
    element = immaculate(alpha)
    return {
        "verdict": "ok",
        "inputs": {"alpha": format_tuple(alpha)},
        "lhs_terms": len(element),
        "rhs_terms": len(element),
        "element": element.render(),
    }


def _cmd_verify_immaculate(args) -> dict:
    alpha = parse_tuple(args.alpha)
    ok = verify_right_pieri(alpha, args.s)
    return {
        "verdict": "verified" if ok else "failed",
        "inputs": {"alpha": format_tuple(alpha), "s": args.s},
        "lhs_terms": None,
        "rhs_terms": None,
    }


def _cmd_verify_fun(args) -> dict:
    mu = parse_tuple(args.mu)
    beta = parse_tuple(args.beta)
    ctx = NinthContext(len(beta), args.p, args.q, mu, beta)
    ok = verify_fun_rule(ctx)
    return {
        "verdict": "verified" if ok else "failed",
        "inputs": {
            "ell": ctx.ell,
            "p": args.p,
            "q": args.q,
            "mu": format_tuple(mu),
            "beta": format_tuple(beta),
        },
        "lhs_terms": None,
        "rhs_terms": None,
    }


def _cmd_decompose(args) -> dict:
    if args.set == "weak":
        tuples = set(weak_compositions(args.n, args.p))
        inputs = {"set": "weak", "n": args.n, "p": args.p}
    elif args.set == "binary":
        tuples = set(binary_compositions(args.n, args.p))
        inputs = {"set": "binary", "n": args.n, "p": args.p}
    else:
        seed_tuple = parse_tuple(args.orbit)
        tuples = orbit(seed_tuple)
        inputs = {"set": "orbit", "orbit": format_tuple(seed_tuple)}
        args.n = len(seed_tuple)
    element = t_set(tuples, args.n)
    coeffs = ml_decompose(element)
    ok = verify_decomposition(element)
    return {
        "verdict": "verified" if ok else "failed",
        "inputs": inputs,
        "lhs_terms": len(element.poly),
        "rhs_terms": len(coeffs),
        "coefficients": {format_tuple(g): c for g, c in sorted(coeffs.items())},
    }


def _cmd_sweep(args) -> dict:
    results = run_all(args.seed)
    return {
        "verdict": "verified" if all(r.passed for r in results) else "failed",
        "inputs": {"seed": args.seed},
        "lhs_terms": None,
        "rhs_terms": None,
        "criteria": [
            {"index": r.index, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
    }


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for key, value in sorted(report["inputs"].items()):
        lines.append(f"  {key}: {value}")
    lines.append(f"verdict: {report['verdict']}")
    if report.get("lhs_terms") is not None:
        lines.append(f"lhs_terms: {report['lhs_terms']}")
        lines.append(f"rhs_terms: {report['rhs_terms']}")
    if "partitions" in report:
        lines.append("partitions:")
        for item in report["partitions"]:
            lines.append(f"  {item}")
    if "criteria" in report:
        for entry in report["criteria"]:
            status = "PASS" if entry["passed"] else "FAIL"
            lines.append(f"{status} criterion {entry['index']} {entry['name']}: {entry['detail']}")
    if "element" in report:
        lines.append(f"element: {report['element']}")
    if "coefficients" in report:
        lines.append("coefficients:")
        for gamma, c in report["coefficients"].items():
            lines.append(f"  {gamma}: {c}")
    if "counterexample" in report:
        ce = report["counterexample"]
        lines.append(
            f"counterexample: {ce['monomial']} "
            f"(lhs {ce['lhs_coefficient']}, rhs {ce['rhs_coefficient']})"
        )
    lines.append(f"elapsed_ms: {report['elapsed_ms']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prepieri",
        description="Verify row-determinant Pieri-type identities exactly.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-first", help="sum over weak compositions vs eta columns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--kill", help="columns with h[k<0, i] = 0, comma-separated")
    p.set_defaults(handler=_cmd_verify_first)

    p = sub.add_parser("verify-second", help="sum over 0/1 compositions vs xi columns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--kill")
    p.set_defaults(handler=_cmd_verify_second)

    p = sub.add_parser("verify-cor", help="factorized corollaries of either rule")
    p.add_argument("--family", choices=("h", "e"), required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", help="base-tuple form")
    p.add_argument("--mu", help="reindexed form (last entries zero)")
    p.set_defaults(handler=_cmd_verify_cor)

    p = sub.add_parser("expand-pieri", help="strip partitions of a Pieri product")
    p.add_argument("--kind", choices=("H", "E"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(handler=_cmd_expand_pieri)

    p = sub.add_parser("expand-immaculate", help="expand an immaculate element")
    p.add_argument("--alpha", required=True)
    p.set_defaults(handler=_cmd_expand_immaculate)

    p = sub.add_parser("verify-immaculate", help="right multiplication rule by H_s")
    p.add_argument("--alpha", required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(handler=_cmd_verify_immaculate)

    p = sub.add_parser("verify-fun", help="grid multiplication rule for g[p,q]")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--beta", default="")
    p.set_defaults(handler=_cmd_verify_fun)

    p = sub.add_parser("decompose", help="antisymmetric decomposition of a tuple-set sum")
    p.add_argument("--set", choices=("weak", "binary", "orbit"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--orbit", help="seed tuple whose full orbit is summed")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("sweep", help="run the full verification matrix")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    start = time.perf_counter()
    try:
        if args.command == "decompose":
            if args.set in ("weak", "binary") and (args.n is None or args.p is None):
                raise UsageError("--set weak/binary needs --n and --p")
            if args.set == "orbit" and not args.orbit:
                raise UsageError("--set orbit needs --orbit")
        report = args.handler(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report["command"] = args.command
    report["elapsed_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(_render_text(report))
    return 1 if report["verdict"] == "failed" else 0


if __name__ == "__main__":
    sys.exit(main())
