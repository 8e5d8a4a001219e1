"""Command-line front end.

Exit codes: 0 success; 1 a demanded verification came back negative
(verify-remark, selftest); 2 usage, parse or precondition errors;
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .commutant import single_conjugator_search, verify_remark
from .core import ALGEBRAS, sandwich
from .errors import CompalgError, ConsistencyError
from .parsing import ParseError, format_element, format_scalar, parse_element
from .selftest import run_selftest
from .witnesses import collapse_quaternion, conjugacy_witness, negator, verify_witness


def _scalar_json(x, complex_field):
    if complex_field:
        return [str(x.real), str(x.imag)]
    return str(x)


def _element_json(e):
    return {
        "algebra": e.algebra.name,
        "coeffs": [_scalar_json(c, e.algebra.complex_field) for c in e.coeffs],
    }


def _witness_json(w, verified):
    out = {
        "kind": "single" if w.is_single else "double",
        "p": _element_json(w.p),
        "branch": w.branch.value,
        "verified": verified,
    }
    if not w.is_single:
        out["q"] = _element_json(w.q)
    return out


def _emit(args, payload, human):
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _parse(args, text):
    return parse_element(text, ALGEBRAS[args.algebra])


def _cmd_table(args):
    alg = ALGEBRAS[args.algebra]
    if args.json:
        payload = {
            "algebra": alg.name,
            "dim": alg.dim,
            "labels": list(alg.labels()),
            "table": [[list(entry) for entry in row] for row in alg.table],
        }
        print(json.dumps(payload))
        return 0
    labels = alg.labels()
    cells = []
    for i in range(alg.dim):
        row = []
        for j in range(alg.dim):
            k, s = alg.table[i][j]
            row.append(labels[k] if s == 1 else f"-{labels[k]}")
        cells.append(row)
    width = max(len(c) for row in cells for c in row) + 2
    head = "".join(label.rjust(width) for label in labels)
    print(" " * 4 + head)
    for label, row in zip(labels, cells):
        print(label.ljust(4) + "".join(c.rjust(width) for c in row))
    return 0


def _cmd_mul(args):
    a, b = _parse(args, args.a), _parse(args, args.b)
    r = a * b
    _emit(args, _element_json(r), format_element(r))
    return 0


def _cmd_conj(args):
    r = _parse(args, args.a).conjugate()
    _emit(args, _element_json(r), format_element(r))
    return 0


def _cmd_inv(args):
    r = _parse(args, args.a).inverse()
    _emit(args, _element_json(r), format_element(r))
    return 0


def _cmd_norm(args):
    a = _parse(args, args.a)
    n = a.norm()
    _emit(
        args,
        {"algebra": a.algebra.name, "value": _scalar_json(n, a.algebra.complex_field)},
        format_scalar(n),
    )
    return 0


def _cmd_inner(args):
    a, b = _parse(args, args.a), _parse(args, args.b)
    v = a.inner(b)
    _emit(
        args,
        {"algebra": a.algebra.name, "value": _scalar_json(v, a.algebra.complex_field)},
        format_scalar(v),
    )
    return 0


def _cmd_negate_witness(args):
    a = _parse(args, args.a)
    p = negator(a)
    checks = [
        ("norm(p) != 0", p.norm() != 0),
        ("p a == -(a p)", p * a == -(a * p)),
        ("p a p^-1 == -a", sandwich(p, a) == -a),
    ]
    if args.json:
        print(
            json.dumps(
                {
                    "a": _element_json(a),
                    "p": _element_json(p),
                    "checks": [{"name": n, "ok": ok} for n, ok in checks],
                    "verified": all(ok for _, ok in checks),
                }
            )
        )
        return 0
    print(f"a = {format_element(a)}")
    print(f"p = {format_element(p)}")
    print(f"norm(p) = {format_scalar(p.norm())}")
    for name, ok in checks:
        print(f"{name}: {'ok' if ok else 'FAILED'}")
    return 0


def _cmd_conjugate_witness(args):
    a, b = _parse(args, args.a), _parse(args, args.b)
    w = conjugacy_witness(a, b, minimal=args.minimal)
    if a.algebra.dim == 4:
        w = collapse_quaternion(w)
    report = verify_witness(a, b, w)
    if args.json:
        print(json.dumps(_witness_json(w, report.ok)))
        return 0
    print(f"kind: {'single' if w.is_single else 'double'}")
    print(f"branch: {w.branch.value}")
    print(f"p = {format_element(w.p)}")
    if not w.is_single:
        print(f"q = {format_element(w.q)}")
    for name, ok in report.checks:
        print(f"{name}: {'ok' if ok else 'FAILED'}")
    return 0


def _cmd_commutant(args):
    a, b = _parse(args, args.a), _parse(args, args.b)
    report = single_conjugator_search(a, b)
    if args.json:
        payload = {
            "algebra": a.algebra.name,
            "a": _element_json(a),
            "b": _element_json(b),
            "nullity": report.nullity,
            "basis": [_element_json(v) for v in report.nullspace_basis],
            "gram": [
                [_scalar_json(g, a.algebra.complex_field) for g in row]
                for row in report.norm_gram
            ],
            "verdict": report.verdict,
            "single": _element_json(report.single) if report.single else None,
        }
        print(json.dumps(payload))
        return 0
    print(f"solution space of p a = b p has dimension {report.nullity}")
    for i, v in enumerate(report.nullspace_basis):
        print(f"v{i + 1} = {format_element(v)}")
    if report.nullity:
        print("norm Gram matrix:")
        for row in report.norm_gram:
            print("  [" + ", ".join(format_scalar(g) for g in row) + "]")
    if report.single_exists:
        print(f"verdict: single conjugator exists, p = {format_element(report.single)}")
    else:
        print("verdict: no single conjugator (norm form vanishes on the solution space)")
    return 0


def _cmd_verify_remark(args):
    report = verify_remark()
    if args.json:
        payload = {
            "instances": [
                {
                    "algebra": inst.algebra_name,
                    "checks": [{"name": n, "ok": ok} for n, ok in inst.checks],
                    "ok": inst.ok,
                }
                for inst in report.instances
            ],
            "ok": report.ok,
        }
        print(json.dumps(payload))
        return 0 if report.ok else 1
    for inst in report.instances:
        print(f"{inst.algebra_name}:")
        for name, ok in inst.checks:
            print(f"  {name}: {'ok' if ok else 'FAILED'}")
    print("all checks passed" if report.ok else "SOME CHECKS FAILED")
    return 0 if report.ok else 1


def _cmd_selftest(args):
    result = run_selftest(samples=args.samples, seed=args.seed)
    if args.json:
        payload = {
            "records": [
                {
                    "property": r.name,
                    "algebra": r.algebra,
                    "samples": r.samples,
                    "ok": r.failure == "",
                    "failure": r.failure,
                }
                for r in result.records
            ],
            "ok": result.ok,
        }
        print(json.dumps(payload))
        return 0 if result.ok else 1
    for r in result.records:
        status = "ok  " if r.failure == "" else "FAIL"
        line = f"{status} {r.name} [{r.algebra}] ({r.samples} samples)"
        if r.failure:
            line += f": {r.failure}"
        print(line)
    print(f"{'all properties hold' if result.ok else 'PROPERTY FAILURES'}")
    return 0 if result.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="compalg",
        description="Exact arithmetic and conjugacy witnesses for the six "
        "rational composition algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help, elements=0, algebra=True):
        p = sub.add_parser(name, help=help)
        if algebra:
            p.add_argument(
                "--algebra", required=True, choices=sorted(ALGEBRAS), help="algebra name"
            )
        if elements >= 1:
            p.add_argument("a", help="element expression (put -- before a leading '-')")
        if elements >= 2:
            p.add_argument("b", help="element expression")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    command("table", _cmd_table, "print the full multiplication table")
    command("mul", _cmd_mul, "multiply two elements", elements=2)
    command("conj", _cmd_conj, "conjugate an element", elements=1)
    command("inv", _cmd_inv, "invert an element", elements=1)
    command("norm", _cmd_norm, "norm of an element", elements=1)
    command("inner", _cmd_inner, "inner product of two elements", elements=2)
    command(
        "negate-witness",
        _cmd_negate_witness,
        "pure invertible p with p a p^-1 = -a, with verification transcript",
        elements=1,
    )
    cw = command(
        "conjugate-witness",
        _cmd_conjugate_witness,
        "witness conjugating a onto b (single, or double where required)",
        elements=2,
    )
    cw.add_argument(
        "--minimal",
        action="store_true",
        help="return a single witness whenever one exists",
    )
    command(
        "commutant",
        _cmd_commutant,
        "solution space of p a = b p, its norm form and the verdict",
        elements=2,
    )
    command(
        "verify-remark",
        _cmd_verify_remark,
        "verify both built-in no-single-conjugator instances",
        algebra=False,
    )
    st = command("selftest", _cmd_selftest, "randomized property suite", algebra=False)
    st.add_argument("--samples", type=int, default=100, help="samples per property")
    st.add_argument("--seed", type=int, default=0, help="generator seed")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except CompalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
