"""Command-line interface.

Exit codes: 0 the property holds / the operation succeeded, 1 the property
fails (the report carries a witness), 2 usage, parse or size-limit error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import conservative as cons
from . import duality, homs
from .core import HomMap, order_from_point, verify_derived_identities
from .errors import MedianKitError, NotAHom, RoundTripFailure, SizeLimit
from .io import ParseError, ValidationError, emit_dot, parse_document


class UsageError(Exception):
    pass


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    return parse_document(text)


def _fmt_median(A, triple):
    x, y, z = triple
    return f"m({A.label(x)},{A.label(y)},{A.label(z)})={A.label(A.m(x, y, z))}"


def _labels(A, elements):
    return [A.label(e) for e in elements]


def cmd_check(args):
    doc = _load(args.input)
    report = {"command": "check", "property": "conservative iff no A2 subalgebra iff no A2 in any base order"}
    if doc.poset is not None:
        w = cons.find_forbidden_poset(doc.poset)
        report["forbidden_figure"] = None if w is None else {"kind": w.kind, "elements": _labels(doc.poset, w.elements)}
        try:
            doc.algebra
        except ValidationError as exc:
            report["median_semilattice"] = False
            report["reason"] = str(exc.cause)
            return 1, report
        report["median_semilattice"] = True
    A = doc.algebra
    report["size"] = A.n
    report["median_axioms"] = True
    report["derived_identities"] = verify_derived_identities(A)
    d = cons.is_conservative(A)
    report["conservative"] = d.ok
    report["witness"] = None if d.ok else _fmt_median(A, d.witness)
    w = cons.find_A2_subalgebra(A)
    report["a2_subalgebra"] = None if w is None else _labels(A, w.elements)
    bases = [args.base] if args.base is not None else range(A.n)
    report["a2_in_base_order"] = None
    for a in bases:
        pw = cons.find_forbidden_poset(order_from_point(A, a), kinds=("A2",))
        if pw is not None:
            report["a2_in_base_order"] = {"base": A.label(a), "elements": _labels(A, pw.elements)}
            break
    return (0 if d.ok else 1), report


def cmd_chain_rep(args):
    A = _load(args.input).algebra
    report = {"command": "chain-rep", "property": "chain representation of a conservative median algebra"}
    d = cons.is_conservative(A)
    if not d:
        report["conservative"] = False
        report["witness"] = _fmt_median(A, d.witness)
        return 1, report
    report["conservative"] = True
    rep = cons.chain_ordering(A, base=args.base)
    if isinstance(rep, cons.TwoByTwo):
        report["kind"] = "two-by-two"
        report["isomorphism"] = {A.label(x): v for x, v in enumerate(rep.isomorphism)}
    else:
        report["kind"] = "chain"
        report["base"] = A.label(rep.base)
        report["c0"] = _labels(A, rep.c0)
        report["c1"] = _labels(A, rep.c1)
        report["order"] = _labels(A, rep.total_order)
    return 0, report


def _set_label(A, s):
    return "{" + ",".join(A.label(x) for x in s) + "}"


def cmd_dual(args):
    A = _load(args.input).algebra
    X = duality.dual_space(A, args.limit)
    pts = [_set_label(A, p) for p in X.points]
    report = {
        "command": "dual",
        "property": "prime convex subsets ordered by inclusion with complement",
        "points": pts,
        "covers": [[pts[x], pts[y]] for x, y in X.poset().covers()],
        "complement": {pts[x]: pts[c] for x, c in enumerate(X.complement)},
        "bottom": pts[X.bottom],
        "top": pts[X.top],
    }
    return 0, report


def cmd_roundtrip(args):
    A = _load(args.input).algebra
    report = {"command": "roundtrip", "property": "a -> r_a is an isomorphism onto the complete ideals of the dual"}
    try:
        unit = duality.double_dual_unit(A, args.limit)
    except RoundTripFailure as exc:
        report["isomorphic"] = False
        report["reason"] = str(exc)
        return 1, report
    X = duality.dual_space(A, args.limit)
    ideals = duality.enumerate_complete_ideals(X, args.limit)
    report["isomorphic"] = True
    report["unit"] = {
        A.label(a): [_set_label(A, X.points[i]) for i in ideals[w]] for a, w in enumerate(unit.images)
    }
    return 0, report


def cmd_homs(args):
    src, dst = _load(args.source), _load(args.target)
    A, B = src.algebra, dst.algebra
    ps, pt = src.product_shape, dst.product_shape
    report = {"command": "homs", "property": "median homomorphisms between the two algebras"}
    if args.classify is not None:
        try:
            images = json.loads(args.classify)
            f = HomMap.of(images, B.n)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"--classify expects a JSON list of images: {exc}") from exc
        report["map"] = list(f.images)
        try:
            if src.kind == "boolean-cube" and dst.kind == "boolean-cube":
                c = homs.classify_boolean_hom(f, src.payload["exponent"], dst.payload["exponent"])
                report["sigma"] = list(c.sigma)
                report["eps"] = list(c.eps)
            elif ps is not None and pt is not None:
                dec = homs.decompose_product_hom(f, ps, pt)
                report["sigma"] = list(dec.sigma)
                report["components"] = [list(g) for g in dec.components]
                report["isotone"] = list(dec.isotone)
            else:
                d = homs.is_median_hom(f, A, B)
                if not d:
                    raise NotAHom(d.witness)
        except NotAHom as exc:
            report["hom"] = False
            report["witness"] = list(exc.witness)
            return 1, report
        report["hom"] = True
        return 0, report
    if ps is not None and pt is not None:
        report["method"] = "componentwise"
        found = [d.recombine() for d in homs.enumerate_product_homs(ps, pt, args.limit)]
    else:
        report["method"] = "brute-force"
        found = homs.enumerate_homs_brute(A, B, args.limit)
    found.sort(key=lambda h: h.images)
    report["count"] = len(found)
    if not args.count:
        report["maps"] = [list(h.images) for h in found]
    return 0, report


def cmd_dot(args):
    doc = _load(args.input)
    if args.dual:
        return 0, emit_dot(duality.dual_space(doc.algebra, args.limit), name="dual")
    if doc.poset is not None and args.base is None:
        return 0, emit_dot(doc.poset)
    base = 0 if args.base is None else args.base
    return 0, emit_dot(order_from_point(doc.algebra, base).poset)


def _text(report):
    lines = []
    for k, v in report.items():
        lines.append(f"{k}: {v if isinstance(v, str) else json.dumps(v)}")
    return "\n".join(lines) + "\n"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--limit", type=int, default=None, help="enumeration bound as a power of two")
    p = argparse.ArgumentParser(prog="mediankit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="axioms, conservativeness, forbidden substructures")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--base", type=int)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("chain-rep", parents=[common], help="chain ordering of a conservative algebra")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--base", type=int)
    s.set_defaults(func=cmd_chain_rep)

    s = sub.add_parser("dual", parents=[common], help="dual space")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("roundtrip", parents=[common], help="check A against the complete ideals of its dual")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("homs", parents=[common], help="enumerate, count or classify homomorphisms")
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--count", action="store_true")
    s.add_argument("--classify", metavar="IMAGES", help="JSON list of images of one map")
    s.set_defaults(func=cmd_homs)

    s = sub.add_parser("dot", parents=[common], help="Hasse diagram in DOT")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--base", type=int)
    s.add_argument("--dual", action="store_true")
    s.set_defaults(func=cmd_dot)
    return p


def run_command(argv, out=None):
    """Run one subcommand; returns the exit code and writes the report."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "base", None) is not None:
            n = _load(args.input).algebra.n
            if not 0 <= args.base < n:
                raise UsageError(f"--base must lie in 0..{n - 1}")
        code, report = args.func(args)
    except (UsageError, ParseError, ValidationError, SizeLimit) as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, 2
    except MedianKitError as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, 1
    if isinstance(report, str):
        out.write(report)
    elif args.format == "text":
        out.write(_text(report))
    else:
        out.write(json.dumps(report, indent=2) + "\n")
    return code


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
