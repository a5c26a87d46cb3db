"""Command-line front end: ``orthogonal-ordinals <subcommand> ...``.

Exit codes: 0 success, 1 a ``witness`` request for a non-orthogonal pair
(or a failing ``check`` suite), 2 bad flags or unparsable input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from .checks import SUITES, run_suite
from .constructions import (
    NotOrthogonalError, build_witness, truncate, verify_witness, witness_to_json,
)
from .ordinal import OrdinalSyntaxError, decide_orthogonal, parse_ordinal, pretty, render
from .perms import E_MINUS_2, count_simple, format_permutation
from .structures import BoundExceeded, FiniteBichain, structure_from_json, to_dot
from .surd import SurdSyntaxError, parse_surd
from .words import MechanicalWord


class _UsageError(Exception):
    pass


def _ordinal_arg(text: str):
    try:
        return parse_ordinal(text)
    except OrdinalSyntaxError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_decide(args) -> int:
    d = decide_orthogonal(args.alpha, args.beta)
    _emit(args, {"alpha": render(d.alpha), "beta": render(d.beta), "verdict": d.verdict.value,
                 "reason": d.reason}, str(d))
    return 0


def cmd_count_simple(args) -> int:
    q = count_simple(args.n, bound=args.bound)
    ratio = q / math.factorial(args.n)
    payload = {"n": args.n, "q": q}
    text = f"q({args.n})={q}"
    if args.ratio:
        payload.update(ratio=ratio, e_minus_2=E_MINUS_2, gap=E_MINUS_2 - ratio)
        text += f", ratio={ratio:.4f}, e^-2={E_MINUS_2:.4f}, gap={E_MINUS_2 - ratio:.4f}"
    _emit(args, payload, text)
    return 0


def cmd_witness(args) -> int:
    try:
        w = build_witness(args.alpha, args.beta, seed=args.seed)
    except NotOrthogonalError as e:
        d = e.decision
        _emit(args, {"alpha": render(d.alpha), "beta": render(d.beta), "verdict": d.verdict.value,
                     "reason": d.reason}, str(d))
        return 1
    data = witness_to_json(w, args.truncate)
    B = truncate(w, args.truncate)
    perm = format_permutation(B.permutation, compact=False)
    lines = [f"{pretty(w.alpha)} ⊥ {pretty(w.beta)}", "trace: " + " ; ".join(w.trace),
             f"truncation({args.truncate}): {perm}"]
    data["truncation"] = {"n": B.n, "first": list(B.first), "second": list(B.second)}
    if args.verify:
        rep = verify_witness(w, args.truncate)
        data["verification"] = {"ok": rep.ok, "checks": rep.results, "details": rep.details}
        lines.append("verification: " + ("ok" if rep.ok else "FAILED"))
        lines += ["  " + line for line in str(rep).splitlines()]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=1, sort_keys=True, ensure_ascii=False)
            fh.write("\n")
        lines.append(f"wrote {args.out}")
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_check(args) -> int:
    res = run_suite(args.suite, args.max_n)
    text = f"{res.name}: {'pass' if res.ok else 'FAIL'} ({res.checked} cases)"
    if res.failures:
        text += "\n" + "\n".join("  " + f for f in res.failures[:20])
    _emit(args, res.as_dict(), text)
    return 0 if res.ok else 1


def cmd_sturmian(args) -> int:
    try:
        slope = parse_surd(args.slope)
        intercept = parse_surd(args.intercept)
        word = MechanicalWord(slope, intercept)
    except (SurdSyntaxError, ValueError) as e:
        raise _UsageError(str(e)) from None
    bits = word.window(args.n)
    _emit(args, {"slope": str(slope), "intercept": str(intercept), "n": args.n, "bits": bits}, bits)
    return 0


def _structure_from_file(data: dict):
    if "elements" in data:  # a witness export: draw its truncation
        xs = [parse_ordinal(e["rank1"]) for e in data["elements"]]
        ys = [parse_ordinal(e["rank2"]) for e in data["elements"]]
        r1 = [sorted(xs).index(x) for x in xs]
        r2 = [sorted(ys).index(y) for y in ys]
        return FiniteBichain(tuple(r1), tuple(r2)), [e["code"] for e in data["elements"]]
    return structure_from_json(data), None


def cmd_export_dot(args) -> int:
    try:
        with open(args.inp, encoding="utf-8") as fh:
            data = json.load(fh)
        S, labels = _structure_from_file(data)
    except (OSError, ValueError, KeyError) as e:
        raise _UsageError(f"cannot read {args.inp}: {e}") from None
    dot = to_dot(S, labels)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dot)
    _emit(args, {"in": args.inp, "out": args.out, "n": S.n}, f"wrote {args.out} ({S.n} vertices)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="orthogonal-ordinals",
                                description="Orthogonality of ordinals: decide, construct, verify.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decide", parents=[common], help="decide whether two ordinals are orthogonal")
    s.add_argument("--alpha", required=True, type=_ordinal_arg)
    s.add_argument("--beta", required=True, type=_ordinal_arg)
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("count-simple", parents=[common], help="count simple permutations")
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--ratio", action="store_true", help="also print q(n)/n!, e^-2 and the gap")
    s.add_argument("--bound", type=int, default=10, help="refuse n above this (default 10)")
    s.set_defaults(func=cmd_count_simple)

    s = sub.add_parser("witness", parents=[common], help="build a witness bichain")
    s.add_argument("--alpha", required=True, type=_ordinal_arg)
    s.add_argument("--beta", required=True, type=_ordinal_arg)
    s.add_argument("--truncate", type=int, default=12, help="sample size (default 12)")
    s.add_argument("--seed", type=int, default=0, help="family member for the fences")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--out", help="write the witness JSON here")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("check", parents=[common], help="run a consistency suite")
    s.add_argument("--suite", required=True, choices=sorted(SUITES))
    s.add_argument("--max-n", type=int, default=None,
                   help="size knob (sample count for 'fact', word length for 'sturmian')")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("sturmian", parents=[common], help="print a mechanical word")
    s.add_argument("--slope", required=True, help='e.g. "sqrt2-1" or "(sqrt5-1)/2"')
    s.add_argument("--intercept", default="0")
    s.add_argument("--n", required=True, type=int)
    s.set_defaults(func=cmd_sturmian)

    s = sub.add_parser("export-dot", parents=[common], help="structure or witness JSON to DOT")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_export_dot)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("n", "truncate", "max_n"):
        v = getattr(args, name, None)
        if v is not None and v < (0 if name == "n" else 1):
            parser.error(f"--{name.replace('_', '-')} must be positive")
    try:
        return args.func(args)
    except (_UsageError, BoundExceeded) as e:
        parser.error(str(e))
    return 2  # pragma: no cover - parser.error exits


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
