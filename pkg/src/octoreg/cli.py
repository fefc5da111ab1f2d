"""``octoreg`` command line: verify, classify, dims, ck, mult.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import algebra, operators, regspace, verify
from .algebra import Octonion, PreconditionError, format_element
from .polyfun import DegreeOverflowError, ParseError, PolyMap, parse, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ALGEBRA_CHOICES = {"oct": "O", "quat": "H", "cl": "Cl"}


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _read_source(args) -> str:
    if args.expr is not None and args.file is not None:
        raise UsageError("give either a file or --expr, not both")
    if args.expr is not None:
        return args.expr
    if args.file is None:
        raise UsageError("an expression is required (file or --expr)")
    if args.file == "-":
        return sys.stdin.read()
    try:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None


# verify

def cmd_verify(args, out) -> int:
    results = verify.run(args.seed, args.samples, args.only or None)
    if args.only:
        unknown = sorted(set(args.only) - {r.lemma for r in results})
        if unknown:
            raise UsageError(f"unknown lemma(s): {', '.join(unknown)}")
    n_fail = sum(1 for r in results if r.failures)
    if args.json:
        out.write(_dump({
            "seed": args.seed,
            "samples": args.samples,
            "passed": n_fail == 0,
            "lemmas": [r.to_dict(args.timing) for r in results],
        }) + "\n")
    else:
        width = max(len(r.lemma) for r in results)
        for r in results:
            status = "PASS" if not r.failures else "FAIL"
            line = f"{status}  {r.lemma:<{width}}  checks={r.checks} failures={r.failures}"
            if args.timing:
                line += f" elapsed={r.elapsed:.3f}s"
            out.write(line + "\n")
            for m in r.messages:
                out.write(f"      {m}\n")
        out.write(f"seed={args.seed} samples={args.samples}: "
                  f"{len(results) - n_fail}/{len(results)} lemmas passed\n")
    return EXIT_FAIL if n_fail else EXIT_OK


# classify

def classify_payload(f: PolyMap) -> dict:
    if f.algebra == "O":
        rep = operators.classify(f)
    elif f.algebra == "H":
        rep = operators.classify_quat(f)
    else:
        rep = operators.classify_clifford(f)
    payload = {
        "input": render(f),
        "algebra": rep.algebra,
        "flags": rep.flags(),
        "residuals": {
            "D_left": render(rep.d_left),
            "D_right": render(rep.d_right),
        },
        "curl_defects": {f"{i},{j}": render(PolyMap("R", [p])) for (i, j), p in sorted(rep.curl_defects.items())},
    }
    if rep.rotor is not None:
        payload["residuals"]["rotor"] = render(rep.rotor)
    if rep.spinor is not None:
        payload["residuals"]["spinor"] = render(rep.spinor)
    return payload


def cmd_classify(args, out) -> int:
    f = parse(_read_source(args), ALGEBRA_CHOICES[args.algebra])
    payload = classify_payload(f)
    if args.json:
        out.write(_dump(payload) + "\n")
        return EXIT_OK
    out.write(f"f = {payload['input']}\n")
    for name, flag in payload["flags"].items():
        shown = "n/a" if flag is None else ("yes" if flag else "no")
        out.write(f"  {name:<14} {shown}\n")
    out.write(f"  D_x f = {payload['residuals']['D_left']}\n")
    out.write(f"  f D_x = {payload['residuals']['D_right']}\n")
    return EXIT_OK


# dims

def cmd_dims(args, out) -> int:
    config = regspace.RegspaceConfig(degree_cap=args.degree_cap)
    if args.degree > config.degree_cap:
        raise UsageError(f"degree {args.degree} exceeds cap {config.degree_cap}")
    if args.degree < 1:
        raise UsageError("degree must be at least 1")
    rep = regspace.inclusion_report(args.degree, args.mode, config)
    rows = rep["rows"]
    if args.csv:
        out.write(regspace.to_csv(rows))
        return EXIT_OK
    if args.json:
        body = dict(rep)
        body["rows"] = json.loads(regspace.to_json(rows))
        out.write(_dump(body) + "\n")
        return EXIT_OK
    out.write(f"{'system':<10}{'degree':>7}{'unknowns':>10}{'rank':>7}{'dim':>7}\n")
    for r in rows:
        out.write(f"{r.system:<10}{r.degree:>7}{r.unknowns:>10}{r.rank:>7}{r.dimension:>7}\n")
    for key, value in rep.items():
        if key not in ("mode", "degree", "rows"):
            out.write(f"{key}: {value}\n")
    return EXIT_OK


# ck

def cmd_ck(args, out) -> int:
    f = parse(_read_source(args), "O")
    g = operators.ck_extension(f)
    if args.json:
        out.write(_dump({
            "input": render(f),
            "ck": render(g),
            "b_regular": operators.classify(g).b_regular,
        }) + "\n")
    else:
        out.write(render(g) + "\n")
    return EXIT_OK


# mult

def cmd_mult(args, out) -> int:
    for v in (args.i, args.j):
        if not 0 <= v <= 7:
            raise UsageError(f"basis index {v} outside 0..7")
    sign, k = algebra.basis_product(args.i, args.j)
    product = format_element(Octonion.basis(k).c if sign > 0 else (-Octonion.basis(k)).c)
    if args.json:
        out.write(_dump({"i": args.i, "j": args.j, "sign": sign, "index": k, "product": product}) + "\n")
    else:
        out.write(product + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="octoreg", description="Exact octonionic function-class toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the lemma verification suites")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=20, help="random samples per property")
    v.add_argument("--only", action="append", metavar="LEMMA", help="run only this lemma (repeatable)")
    v.add_argument("--timing", action="store_true", help="report elapsed time per lemma")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="classify a polynomial map")
    c.add_argument("file", nargs="?", help="UTF-8 file with one expression, or - for stdin")
    c.add_argument("--expr")
    c.add_argument("--algebra", choices=sorted(ALGEBRA_CHOICES), default="oct")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("dims", help="dimensions of homogeneous solution spaces")
    d.add_argument("--degree", type=int, required=True)
    d.add_argument("--mode", choices=("oct", "quat"), default="oct")
    d.add_argument("--degree-cap", type=int, default=regspace.DEFAULT_CONFIG.degree_cap)
    fmt = d.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_dims)

    k = sub.add_parser("ck", help="Cauchy-Kovalevskaya extension of x0-free data")
    k.add_argument("file", nargs="?")
    k.add_argument("--expr")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_ck)

    m = sub.add_parser("mult", help="product of two octonion basis units")
    m.add_argument("i", type=int)
    m.add_argument("j", type=int)
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_mult)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
    except (UsageError, PreconditionError, DegreeOverflowError, regspace.DegreeCapError) as exc:
        err.write(f"error: {exc}\n")
    except operators.ConsistencyError as exc:
        err.write(f"consistency failure: {exc}\n")
        return EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
