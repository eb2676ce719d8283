"""Command-line front end.

Verbs: factor, qmatrix, order, irred (test|count|list), classify, scan,
witness, selfcheck. Text output by default, --json where declared.
Exit codes: 0 success, 1 domain error (single-line diagnostic on
stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import properties, selfcheck
from .berlekamp import build_q, factor, factorization_to_json, poly_order
from .gf2poly import Poly, parse

SCAN_LIMIT = 10_000


def _poly_arg(text: str) -> Poly:
    p = parse(text)
    if p.is_zero():
        raise ValueError("expected a nonzero polynomial")
    return p


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _cmd_factor(args) -> int:
    f = _poly_arg(args.poly)
    fact = factor(f)
    if args.json:
        _emit_json(factorization_to_json(f, fact))
        return 0
    print(f"input: {f} ({f.hex()})")
    for p, mult in fact:
        suffix = f"^{mult}" if mult > 1 else ""
        print(f"  {p}{suffix}  ({p.hex()})")
    return 0


def _cmd_qmatrix(args) -> int:
    f = _poly_arg(args.poly)
    q = build_q(f, max_degree=args.max_degree)
    if args.json:
        _emit_json({"input": f.hex(), "m": q.n, "rows": q.to_bitstrings()})
        return 0
    for row in q.to_bitstrings():
        print(row)
    return 0


def _cmd_order(args) -> int:
    f = _poly_arg(args.poly)
    value = poly_order(f).value
    if args.json:
        _emit_json({"input": f.hex(), "order": value})
    else:
        print(value)
    return 0


def _cmd_irred(args) -> int:
    from .irreducible import count_irreducible, first_k_irreducibles, is_irreducible

    if args.subverb == "test":
        res = is_irreducible(_poly_arg(args.poly))
        if args.json:
            _emit_json({"input": parse(args.poly).hex(), "irreducible": res})
        else:
            print("irreducible" if res else "reducible")
    elif args.subverb == "count":
        c = count_irreducible(args.degree)
        if args.json:
            _emit_json({"degree": c.degree, "count": c.count})
        else:
            print(c.count)
    else:  # list
        polys = first_k_irreducibles(args.degree, args.k)
        if args.json:
            _emit_json([p.hex() for p in polys])
        else:
            for p in polys:
                print(f"{p}  ({p.hex()})")
    return 0


def _property_flag(args) -> str:
    return properties.P1 if args.p1 else properties.P2


def _verdict_line(v: properties.PropertyVerdict) -> str:
    if v.holds:
        return f"{v.property} m={v.m} holds (method={v.method})"
    line = f"{v.property} m={v.m} FAILS witness={v.witness} (method={v.method})"
    if v.witness_poly is not None:
        line += f" poly={v.witness_poly.hex()}"
    return line


def _cmd_classify(args) -> int:
    v = properties.classify(_property_flag(args), args.m, args.method)
    if args.json:
        _emit_json(v.to_json())
    else:
        print(_verdict_line(v))
    return 0


def _scan_one(task: tuple[str, int]) -> properties.PropertyVerdict:
    prop, m = task
    return properties.classify(prop, m, "search")


def _cmd_scan(args) -> int:
    if args.start < 2:
        raise ValueError("--from must be >= 2")
    if args.end < args.start:
        raise ValueError("--to must be >= --from")
    if args.end > args.limit:
        raise ValueError(f"--to exceeds the scan cap {args.limit} (raise with --limit)")
    prop = _property_flag(args)
    tasks = [(prop, m) for m in range(args.start, args.end + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(_scan_one, tasks, chunksize=16))
    else:
        verdicts = [_scan_one(t) for t in tasks]
    if args.json:
        _emit_json([v.to_json() for v in verdicts])
    else:
        for v in verdicts:
            print(_verdict_line(v))
    return 0


def _cmd_witness(args) -> int:
    prop = _property_flag(args)
    v = properties.classify(prop, args.m, "search")
    if v.holds:
        if args.json:
            _emit_json(v.to_json())
        else:
            print(f"{prop} holds for m={args.m}, no witness")
        return 0
    poly = properties.materialize_witness(v.witness)
    v = properties.PropertyVerdict(
        prop, args.m, False, v.method, witness=v.witness, witness_poly=poly
    )
    if args.json:
        _emit_json(v.to_json())
    else:
        print(_verdict_line(v))
        print(f"witness polynomial: {poly}")
    return 0


def _cmd_selfcheck(args) -> int:
    return 0 if selfcheck.run(print) else 1


def _add_property_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--p1", action="store_true", help="decide property P1 (Q^m = I iff irreducible)")
    group.add_argument("--p2", action="store_true", help="decide property P2 (order(Q) = m iff irreducible)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf2q",
        description="Exact workbench for polynomials over GF(2) and their squaring matrices.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("factor", help="factor a polynomial into irreducibles")
    p.add_argument("poly", help="polynomial, e.g. 'x^3+x+1' or '0xB'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_factor)

    p = verbs.add_parser("qmatrix", help="print the squaring matrix of a polynomial")
    p.add_argument("poly")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-degree", type=int, default=None, help="cap on deg f (default 4096)")
    p.set_defaults(fn=_cmd_qmatrix)

    p = verbs.add_parser("order", help="multiplicative order of Q(f), squarefree f only")
    p.add_argument("poly")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_order)

    p = verbs.add_parser("irred", help="irreducibility tools")
    sub = p.add_subparsers(dest="subverb", required=True)
    t = sub.add_parser("test", help="test a polynomial for irreducibility")
    t.add_argument("poly")
    t.add_argument("--json", action="store_true")
    c = sub.add_parser("count", help="count irreducibles of a degree")
    c.add_argument("degree", type=int)
    c.add_argument("--json", action="store_true")
    ls = sub.add_parser("list", help="list the k smallest irreducibles of a degree")
    ls.add_argument("degree", type=int)
    ls.add_argument("k", type=int)
    ls.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_irred)

    p = verbs.add_parser("classify", help="decide P1/P2 for one degree")
    _add_property_flags(p)
    p.add_argument("m", type=int)
    p.add_argument(
        "--method",
        choices=["search", "theorem", "corollary", "brute"],
        default="search",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_classify)

    p = verbs.add_parser("scan", help="decide P1/P2 over a range of degrees")
    _add_property_flags(p)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int, default=SCAN_LIMIT, help="cap on --to (default 10000)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_scan)

    p = verbs.add_parser("witness", help="materialize a counterexample polynomial")
    _add_property_flags(p)
    p.add_argument("m", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_witness)

    p = verbs.add_parser("selfcheck", help="run the embedded invariant suite")
    p.set_defaults(fn=_cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
