"""Command-line interface; every subcommand prints one JSON envelope on stdout.

Exit codes: 0 success (including a witness search that found nothing),
1 when ``verify`` reports violations, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from .angles import RIGHT, STRAIGHT, ZERO, AngleClass, angle_between, norm2
from .angleset import (
    classify_by_norm,
    classify_by_tangent,
    hilbert_criterion,
    excluded_angle_with_case,
    excluded_vector,
    norm_rule_applies,
    tangent_rule_applies,
    theta_n_contains,
    theta_n_of_a_contains,
)
from .exactnum import as_rational
from .hilbert import hilbert_symbol, parse_place
from .oracle import SCHEMA_VERSION, angle_inventory, consistency_report
from .witness import SearchBudget, witness_for_angle

log = logging.getLogger("lattice_angles")

DEGENERATE = {"zero": ZERO, "right": RIGHT, "straight": STRAIGHT}


class UsageError(Exception):
    """Bad input; reported as a JSON error with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_vector(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("empty vector")
    out = []
    for p in parts:
        if any(c in p for c in ".eE"):
            raise UsageError(f"vector component {p!r} is not an integer; floats are not accepted")
        try:
            out.append(int(p))
        except ValueError:
            raise UsageError(f"vector component {p!r} is not an integer") from None
    return tuple(out)


def parse_rational(text: str):
    try:
        return as_rational(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _angle_from(args) -> AngleClass:
    if args.degenerate:
        if args.tan2 is not None or args.obtuse:
            raise UsageError("--degenerate excludes --tan2/--obtuse")
        return DEGENERATE[args.degenerate]
    if args.tan2 is None:
        raise UsageError("give --tan2 T [--obtuse] or --degenerate zero|right|straight")
    t = parse_rational(args.tan2)
    if t <= 0:
        raise UsageError("--tan2 must be positive")
    return AngleClass.oblique(t, args.obtuse)


def _vector_for(args, required: bool = True):
    if args.vector is None:
        if required:
            raise UsageError("--vector is required")
        return None
    a = parse_vector(args.vector)
    if not any(a):
        raise UsageError("the zero vector has no angles")
    dim = getattr(args, "dim", None)
    if dim is not None and len(a) != dim:
        raise UsageError(f"--vector has {len(a)} components but --dim is {dim}")
    return a


def _add_angle(p):
    p.add_argument("--tan2", help="squared tangent, 'T' or 'Tn/Td'")
    p.add_argument("--obtuse", action="store_true", help="angle lies in (pi/2, pi)")
    p.add_argument("--degenerate", choices=sorted(DEGENERATE))


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lattice-angles", description="Exact lattice-angle decisions and witnesses.")
    ap.add_argument("--pretty", action="store_true", help="indented JSON plus a summary on stderr")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("membership", help="is the angle attained in Z^n, or against a vector")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vector", help="comma-separated integers, e.g. --vector=-1,2,0")
    _add_angle(p)

    p = sub.add_parser("witness", help="construct a vector making the angle with --vector")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vector", required=True)
    p.add_argument("--bound", type=int, help="max-norm search bound (dims 3 and >= 5)")
    _add_angle(p)

    p = sub.add_parser("exclude", help="an angle --vector misses, or a vector missing --tan2")
    p.add_argument("--vector")
    p.add_argument("--tan2")
    p.add_argument("--obtuse", action="store_true")

    p = sub.add_parser("classify", help="closed-form verdict next to the Hilbert-symbol verdict")
    p.add_argument("--norm2", type=int, required=True)
    p.add_argument("--tan2", required=True)
    p.add_argument("--rule", choices=("norm", "tangent"),
                   help="closed form keyed on the square-free part of |a|^2 or of tan^2")

    p = sub.add_parser("hilbert", help="Hilbert symbol (a, b)_v")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--place", required=True, help="a prime or 'inf'")

    p = sub.add_parser("inventory", help="all angles realized against --vector in a box")
    p.add_argument("--vector", required=True)
    p.add_argument("--box", type=int, required=True)

    p = sub.add_parser("verify", help="brute-force consistency report")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vec-bound", type=int, required=True)
    p.add_argument("--tan2-height", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    return ap


def cmd_membership(args) -> dict:
    angle = _angle_from(args)
    a = _vector_for(args, required=False)
    if a is None:
        return {"dim": args.dim, "angle": angle.to_json(), "member": theta_n_contains(args.dim, angle),
                "method": "closed_form"}
    verdict = theta_n_of_a_contains(a, angle)
    return {"vector": list(a), "angle": angle.to_json(), **verdict.to_json()}


def cmd_witness(args) -> dict:
    angle = _angle_from(args)
    a = _vector_for(args)
    budget = SearchBudget(args.bound) if args.bound else None
    if len(a) == 3 and angle.is_oblique and theta_n_contains(3, angle):
        verdict = hilbert_criterion(norm2(a), angle.tan2)
        if not verdict.member:
            raise UsageError(f"angle {angle} is not attained against {list(a)}: "
                             + json.dumps(verdict.to_json()))
    w = witness_for_angle(a, angle, budget)
    out = {"vector": list(a), "angle": angle.to_json(), "witness": None if w is None else list(w)}
    if w is None:
        out["not_found"] = True
    else:
        out["verified"] = angle_between(a, w) == angle
    return out


def cmd_exclude(args) -> dict:
    if (args.vector is None) == (args.tan2 is None):
        raise UsageError("give exactly one of --vector or --tan2")
    if args.vector is not None:
        a = _vector_for(args)
        if len(a) != 3:
            raise UsageError("excluded angles exist only for 3-dimensional vectors")
        angle, case = excluded_angle_with_case(a)
        cert = hilbert_criterion(norm2(a), angle.tan2).certificate
        return {"vector": list(a), "angle": angle.to_json(), "case": case, "certificate": cert.to_json()}
    angle = AngleClass.oblique(parse_rational(args.tan2), args.obtuse)
    v = excluded_vector(angle)
    cert = hilbert_criterion(norm2(v), angle.tan2).certificate
    return {"angle": angle.to_json(), "vector": list(v), "norm2": norm2(v), "certificate": cert.to_json()}


def cmd_classify(args) -> dict:
    t = parse_rational(args.tan2)
    verdict = hilbert_criterion(args.norm2, t)
    rules = [args.rule] if args.rule else [
        name for name, ok in (("norm", norm_rule_applies(args.norm2)), ("tangent", tangent_rule_applies(t))) if ok
    ]
    if not rules:
        raise UsageError("neither closed form covers this |a|^2 and tan^2")
    out = {"norm2": args.norm2, "tan2": str(t), "criterion": verdict.to_json(), "closed_forms": []}
    for rule in rules:
        if rule == "norm":
            cf = classify_by_norm(args.norm2, t)
            entry = {"rule": "norm", "member": cf, "agrees": cf == verdict.member}
        else:
            cf = classify_by_tangent(args.norm2, t)
            lit = classify_by_tangent(args.norm2, t, literal=True)
            entry = {"rule": "tangent", "member": cf, "agrees": cf == verdict.member,
                     "literal_reading": lit, "literal_agrees": lit == verdict.member}
        out["closed_forms"].append(entry)
    return out


def cmd_hilbert(args) -> dict:
    a, b = parse_rational(args.a), parse_rational(args.b)
    place = parse_place(args.place)
    return {"a": str(a), "b": str(b), "place": str(place), "value": hilbert_symbol(a, b, place)}


def cmd_inventory(args) -> dict:
    a = _vector_for(args)
    if args.box < 1:
        raise UsageError("--box must be >= 1")
    return angle_inventory(a, args.box).to_json()


def cmd_verify(args) -> dict:
    return consistency_report(args.dim, args.vec_bound, args.tan2_height, args.box)


COMMANDS = {
    "membership": cmd_membership,
    "witness": cmd_witness,
    "exclude": cmd_exclude,
    "classify": cmd_classify,
    "hilbert": cmd_hilbert,
    "inventory": cmd_inventory,
    "verify": cmd_verify,
}


def _emit(payload: dict, pretty: bool) -> None:
    print(json.dumps(payload, indent=2 if pretty else None))


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pretty = "--pretty" in argv
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
        if args.command is None:
            raise UsageError("missing subcommand")
        result = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        _emit({"status": "error", "version": SCHEMA_VERSION, "error": {"message": str(exc)}}, pretty)
        return 2
    _emit({"status": "ok", "version": SCHEMA_VERSION, "result": result}, pretty)
    if pretty:
        print(_summary(args.command, result), file=sys.stderr)
    if args.command == "verify" and not result["ok"]:
        return 1
    return 0


def _summary(command: str, result: dict) -> str:
    if "member" in result:
        return f"{command}: member={result['member']}"
    if command == "witness":
        return f"witness: {result['witness']}"
    if command == "verify":
        return f"verify: {len(result['violations'])} violations, {len(result['budget_exhausted'])} exhausted"
    return f"{command}: ok"


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
