"""Command line: ``python -m invmatroid {solve,check,oracle} --problem TAG --input FILE``.

Output is one JSON document on stdout; diagnostics go to stderr. Exit codes:
0 success, 2 malformed input, 3 violated precondition (including
integrality), 4 enumeration bound exceeded, 5 the solver's own answer failed
re-verification.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any

from .all_only import solve_all, solve_all_integral, solve_only
from .errors import InverseMatroidError, VerificationError
from .exists import solve_exists, solve_exists_integral
from .greedy import Variant, Weighting, check_feasible
from .im import solve_im, solve_im_integral
from .instance import SCHEMA, ProblemInstance, load_instance
from .matroid import CountingMatroid
from .negated import solve_not_all, solve_not_exists, solve_not_only, solve_relaxed_not_exists, solve_relaxed_not_exists_integral
from .oracle import DEFAULT_MAX_ENUM, brute_optimum, enumerate_bases

log = logging.getLogger("invmatroid")

__all__ = ["main", "solve_instance", "build_parser"]


def _names(inst: ProblemInstance, ids) -> list[str] | None:
    return None if ids is None else inst.name_set(ids)


def _certificate(inst: ProblemInstance, cert) -> dict[str, Any] | None:
    """Render a solver certificate with element names and rational strings."""
    if cert is None:
        return None
    name = type(cert).__name__
    out: dict[str, Any] = {"kind": name}
    n = inst.names
    if name == "ImCertificate":
        out["pair"] = None if cert.pair is None else {"f": n[cert.pair[0]], "e": n[cert.pair[1]]}
        out["witness_basis"] = _names(inst, cert.witness_basis)
    elif name == "ExistsCertificate":
        out["basis_in_s0"] = _names(inst, cert.basis_in_s0)
        if cert.triple is not None:
            b0, e, f = cert.triple
            out["triple"] = {"basis": _names(inst, b0), "e": n[e], "f": n[f]}
        else:
            out["triple"] = None
    elif name == "AllCertificate":
        plan = cert.plan
        out["delta_phase2"] = str(cert.delta_phase2)
        if plan is not None:
            out["components"] = [_names(inst, c) for c in plan.components]
            out["midpoints"] = [str(v) for v in plan.midpoints]
            out["shifts"] = [str(v) for v in plan.shifts]
            out["rho"] = str(plan.rho)
    elif name == "NotExistsCertificate":
        out["relaxed_delta"] = str(cert.relaxed_delta)
        out["witness_basis_outside"] = _names(inst, cert.witness_basis_outside)
    elif name == "NotAllCertificate":
        out["branch"] = cert.branch
        out["basis_b0"] = _names(inst, cert.basis_b0)
        out["pair"] = None if cert.pair is None else {"e": n[cert.pair[0]], "f": n[cert.pair[1]]}
    return out


def solve_instance(inst: ProblemInstance, integral: bool = False, method: str = "reduction", matroid=None):
    """Dispatch to the solver of ``inst.variant``; returns (weights, delta, certificate)."""
    m = inst.matroid if matroid is None else matroid
    target, w = inst.target, inst.weights
    v = inst.variant
    integral = integral or inst.integral or v.integral_only
    cert = None
    if v is Variant.IM:
        if integral:
            w_out, delta = solve_im_integral(m, target, w)
        else:
            w_out, cert = solve_im(m, target, w)
            delta = cert.delta_star
    elif v is Variant.IM_EXISTS:
        if integral:
            w_out, delta = solve_exists_integral(m, target, w)
        else:
            w_out, cert = solve_exists(m, target, w, method)
            delta = cert.delta_star
    elif v is Variant.IM_ALL:
        if integral:
            w_out, delta = solve_all_integral(m, target, w)
        else:
            w_out, cert = solve_all(m, target, w)
            delta = cert.delta_star
    elif v is Variant.IM_ONLY:
        w_out, delta = solve_only(m, target, w)
    elif v is Variant.IM_NOT_EXISTS:
        w_out, delta, cert = solve_not_exists(m, target, w)
    elif v is Variant.RELAXED_NOT_EXISTS:
        if integral:
            w_out, delta = solve_relaxed_not_exists_integral(m, target, w)
        else:
            w_out, delta = solve_relaxed_not_exists(m, target, w)
    elif v is Variant.IM_NOT_ALL:
        w_out, delta, cert = solve_not_all(m, target, w)
    else:
        w_out, delta = solve_not_only(m, target, w)
    return w_out, delta, cert


def _verify(inst: ProblemInstance, w_out: Weighting, delta: Fraction) -> bool:
    if not check_feasible(inst.matroid, inst.target, w_out, inst.variant):
        return False
    return inst.weights.distance(w_out) == delta


def _cmd_solve(args, inst: ProblemInstance) -> tuple[dict, int]:
    counter = CountingMatroid(inst.matroid) if args.count_oracle_calls else None
    w_out, delta, cert = solve_instance(inst, args.integral, args.method, counter)
    doc = {
        "schema": SCHEMA,
        "problem": inst.variant.value,
        "delta_star": str(delta),
        "weights_out": inst.name_map(w_out),
        "certificate": _certificate(inst, cert),
        "verified": None,
        "oracle_calls": None if counter is None else counter.calls,
    }
    code = 0
    if args.verify:
        doc["verified"] = _verify(inst, w_out, delta)
        if not doc["verified"]:
            log.error("solver output failed re-verification")
            code = VerificationError.exit_code
    return doc, code


def _cmd_check(args, inst: ProblemInstance) -> tuple[dict, int]:
    counter = CountingMatroid(inst.matroid) if args.count_oracle_calls else None
    m = inst.matroid if counter is None else counter
    feasible = check_feasible(m, inst.target, inst.weights, inst.variant)
    return {
        "schema": SCHEMA,
        "problem": inst.variant.value,
        "feasible": feasible,
        "oracle_calls": None if counter is None else counter.calls,
    }, 0


def _cmd_oracle(args, inst: ProblemInstance) -> tuple[dict, int]:
    v = inst.variant
    integral = args.integral or inst.integral
    delta = brute_optimum(inst.matroid, inst.target, inst.weights, v, integral, args.max_enum)
    count = len(enumerate_bases(inst.matroid, args.max_enum).bases)
    return {
        "schema": SCHEMA,
        "problem": v.value,
        "delta_star": str(delta),
        "weights_out": None,
        "certificate": {"kind": "enumeration", "bases": count},
        "verified": None,
        "oracle_calls": None,
    }, 0


_COMMANDS = {"solve": _cmd_solve, "check": _cmd_check, "oracle": _cmd_oracle}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invmatroid", description="Inverse matroid problems under the l-infinity norm.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("solve", "solve the instance"),
        ("check", "test whether the instance weights already satisfy the problem"),
        ("oracle", "brute-force optimum by basis enumeration"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--problem", help="problem tag, e.g. im-all (defaults to the file's variant)")
        p.add_argument("--input", required=True, help="instance JSON file")
        p.add_argument("--integral", action="store_true", help="restrict to integer weightings")
        p.add_argument("--verify", action="store_true", help="re-check the answer before reporting it")
        p.add_argument("--method", choices=("binary", "reduction"), default="reduction", help="im-exists algorithm")
        p.add_argument("--count-oracle-calls", action="store_true", help="report the number of independence queries")
        p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM, help="ground set bound for enumeration")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the malformed-input code
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        inst = load_instance(args.input, args.problem)
        log.info("loaded %s: %s, n=%d, problem %s", args.input, inst.matroid, inst.matroid.n, inst.variant.value)
        doc, code = _COMMANDS[args.command](args, inst)
    except InverseMatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
