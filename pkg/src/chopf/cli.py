"""The chopf command line: algebra operations, series, enumeration and
verification suites over the colored Hopf algebras.

Exit codes: 0 success, 1 verification failure (with a counterexample), 2
usage errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
from fractions import Fraction
from functools import lru_cache

from . import colorcore as cc
from . import enumerations, fqsym, pbt, pqsym, special, symql
from .colorcore import ColorMonoid
from .linear import outer, tensor_bilinear, tensor_pairing
from .literals import (ALGEBRAS, LiteralError, algebra_basis, key_text,
                       parse_element, render_json, render_text,
                       render_tensor_text, sort_key)
from .series import DEFAULT_ORDER, TruncatedSeries


def _monoid(text) -> ColorMonoid:
    try:
        return ColorMonoid.parse(text)
    except ValueError as exc:
        raise SystemExit(f"chopf: {exc}") from None


def _series_order(args) -> int:
    if args.order is not None:
        return args.order
    env = os.environ.get("CHOPF_ORDER")
    return int(env) if env else DEFAULT_ORDER


@lru_cache(maxsize=1)
def _pbt_startup_check():
    # the insertion orientation is a convention; fail loudly if regrouping
    # ever breaks rather than emit silently wrong products
    return pbt.orientation_self_test(max_size=3, l=1)


_PRODUCTS = {
    "fqsym-g": fqsym.g_product,
    "fqsym-f": fqsym.f_product,
    "sym": symql.s_product,
    "qsym": symql.m_product,
    "mr": symql.mr_product,
    "mr-dual": symql.mr_dual_product,
    "pqsym-g": pqsym.pg_product,
    "pqsym-f": pqsym.pf_product,
    "pbt": pbt.p_product,
    "ncb": pqsym.p_product,
}

_COPRODUCTS = {
    "fqsym-g": fqsym.g_coproduct,
    "fqsym-f": fqsym.f_coproduct,
    "sym": symql.s_coproduct,
    "qsym": symql.m_coproduct,
    "mr": symql.mr_coproduct,
    "mr-dual": symql.mr_dual_coproduct,
    "pqsym-g": pqsym.pg_coproduct,
    "pqsym-f": pqsym.pf_coproduct,
    "pbt": pbt.p_coproduct,
    "ncb": pqsym.p_coproduct,
}

_INTERNAL = {
    "fqsym-f": lambda x, y, strict: fqsym.internal_product(x, y, strict),
    "fqsym-g": lambda x, y, strict: fqsym.internal_product(x, y, strict),
    "sym": lambda x, y, strict: symql.s_internal(x, y, strict),
    "mr": lambda x, y, strict: symql.mr_internal(x, y),
}


def cmd_product(args):
    monoid = _monoid(args.colors)
    if args.algebra in ("pbt", "ncb"):
        _pbt_startup_check()
    x = parse_element(args.x, args.algebra, monoid)
    y = parse_element(args.y, args.algebra, monoid)
    result = _PRODUCTS[args.algebra](x, y)
    print(render_json(result) if args.json else render_text(result))
    return 0


def cmd_coproduct(args):
    monoid = _monoid(args.colors)
    x = parse_element(args.x, args.algebra, monoid)
    result = _COPRODUCTS[args.algebra](x)
    print(render_tensor_text(result))
    return 0


def cmd_internal(args):
    monoid = _monoid(args.colors)
    if args.algebra not in _INTERNAL:
        raise SystemExit(f"chopf: no internal product on {args.algebra}")
    x = parse_element(args.x, args.algebra, monoid)
    y = parse_element(args.y, args.algebra, monoid)
    try:
        result = _INTERNAL[args.algebra](x, y, args.strict)
    except ValueError as exc:
        print(f"chopf: {exc}", file=sys.stderr)
        return 1
    print(render_json(result) if args.json else render_text(result))
    return 0


def cmd_convert(args):
    monoid = _monoid(args.colors)
    x = parse_element(args.x, args.source, monoid)
    if (args.source, args.to) == ("fqsym-f", "fqsym-g"):
        result = fqsym.f_to_g(x, phi=args.phi)
    elif (args.source, args.to) == ("fqsym-g", "fqsym-f"):
        result = fqsym.g_to_f(x, phi=args.phi)
    elif (args.source, args.to) == ("fqsym-g", "sym"):
        result = symql.to_sym(x)
    elif (args.source, args.to) == ("sym", "fqsym-g"):
        result = symql.s_embed(x)
    else:
        raise SystemExit(f"chopf: cannot convert {args.source} -> {args.to}")
    print(render_json(result) if args.json else render_text(result))
    return 0


def cmd_series(args):
    order = _series_order(args)
    try:
        s = enumerations.series(args.name, order, args.colors)
    except ValueError as exc:
        raise SystemExit(f"chopf: {exc}") from None
    if args.json:
        print(json.dumps({"name": args.name, "colors": args.colors,
                          "order": order,
                          "coefficients": [str(c) for c in s.coeffs]}))
    else:
        print(s)
    return 0


_FAMILIES = {
    "pf": lambda n, l: cc.parking_functions(n),
    "prime-pf": lambda n, l: cc.prime_parking_functions(n),
    "ndpf": lambda n, l: cc.nondecreasing_parking_functions(n),
    "connected": lambda n, l: cc.connected_permutations(n),
    "connected-pf": lambda n, l: cc.connected_parking_functions(n),
    "level2-pf": lambda n, l: pqsym.level2_parking_functions(n),
    "ncb": lambda n, l: pqsym.ncb_enumerate(n, l),
    "vector-compositions": lambda n, l: symql.vector_compositions(n, l),
    "trees": lambda n, l: [cc.tree_to_text(t) for t in cc.binary_trees(n)],
}


def cmd_enumerate(args):
    if args.family not in _FAMILIES:
        raise SystemExit(
            f"chopf: unknown family {args.family!r}; know {sorted(_FAMILIES)}")
    items = list(_FAMILIES[args.family](args.n, args.colors))
    if args.count:
        print(len(items))
    elif args.json:
        print(json.dumps([_plain(i) for i in items]))
    else:
        for item in items:
            print(_plain_text(item))
    return 0


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(i) for i in x]
    return x


def _plain_text(item):
    if isinstance(item, tuple) and len(item) == 2 and \
            all(isinstance(p, tuple) for p in item):
        return f"({''.join(map(str, item[0]))};{''.join(map(str, item[1]))})"
    if isinstance(item, tuple):
        return "".join(map(str, item))
    return str(item)


def cmd_check(args):
    try:
        report = enumerations.cross_check(args.name, args.n, args.colors)
    except ValueError as exc:
        raise SystemExit(f"chopf: {exc}") from None
    print(json.dumps(report))
    return 0 if report["ok"] else 1


def cmd_klyachko(args):
    if args.multi:
        x = special.klyachko_multi(args.n)
    else:
        x = special.klyachko_single(args.n)
    ribbons = symql.s_to_ribbon(x)
    if args.json:
        print(json.dumps({"n": args.n,
                          "ribbons": [{"composition": list(comp),
                                       "coeff": str(c)}
                                      for comp, c in sorted(ribbons.items())]}))
    else:
        bits = [f"({str(c)})*R{''.join(map(str, comp))}"
                for comp, c in sorted(ribbons.items())]
        print(" + ".join(bits))
    return 0


def cmd_raney(args):
    lhs = special.raney_specialize(args.n, args.colors)
    rhs = Fraction(1, cc.factorial(args.n)) * special.raney_closed(args.n,
                                                                   args.colors)
    ok = lhs == rhs
    if args.json:
        print(json.dumps({"n": args.n, "colors": args.colors,
                          "specialization": str(lhs), "closed": str(rhs),
                          "agree": ok}))
    else:
        print(f"g_{args.n}/{args.n}! = {lhs}")
        print(f"closed form   = {rhs}")
        print("agree" if ok else "MISMATCH")
    return 0 if ok else 1


def cmd_theta(args):
    t = special.theta(args.lmax, args.deg, with_y=not args.no_y)
    print(render_text(t))
    return 0


# ---------------------------------------------------------------------------
# verification suites

def _algebra_keys(algebra, monoid, n, rng=None):
    if algebra.startswith("fqsym"):
        return list(cc.colored_permutations(n, monoid))
    if algebra.startswith("pqsym"):
        return [(a, u) for a in cc.parking_functions(n)
                for u in itertools.product(list(monoid.colors()), repeat=n)]
    if algebra == "sym" or algebra == "qsym":
        return [symql.composition_key(i, monoid)
                for i in symql.vector_compositions(n, monoid.l)]
    if algebra in ("mr", "mr-dual"):
        out = []
        for comp in cc.compositions(n):
            for colors in itertools.product(range(monoid.l), repeat=len(comp)):
                out.append(tuple(zip(comp, colors)))
        return out
    if algebra == "pbt":
        return [(t, u) for t in cc.binary_trees(n)
                for u in itertools.product(list(monoid.colors()), repeat=n)]
    if algebra == "ncb":
        return pqsym.ncb_enumerate(n, monoid.l)
    raise SystemExit(f"chopf: no key enumeration for {algebra}")


def _fail(message):
    print(f"FAIL: {message}")
    return 1


def verify_hopf(args, monoid):
    algebra = args.algebra
    basis = algebra_basis(algebra, monoid)
    product = _PRODUCTS[algebra]
    coproduct = _COPRODUCTS[algebra]
    rng = random.Random(args.seed)
    small = [k for n in range(0, min(args.max_size, 2) + 1)
             for k in _algebra_keys(algebra, monoid, n)]
    pairs = list(itertools.product(small, small))
    for n1 in range(args.max_size + 1):
        for n2 in range(args.max_size + 1):
            if n1 <= 2 and n2 <= 2:
                continue
            if n1 + n2 > args.max_size + 2:
                continue
            pool1 = _algebra_keys(algebra, monoid, n1)
            pool2 = _algebra_keys(algebra, monoid, n2)
            for _ in range(max(1, args.trials // 10)):
                pairs.append((rng.choice(pool1), rng.choice(pool2)))
    def rule(k1, k2):
        return product(basis.monomial(k1), basis.monomial(k2)).terms.items()
    for k1, k2 in pairs:
        x, y = basis.monomial(k1), basis.monomial(k2)
        lhs = coproduct(product(x, y))
        rhs = tensor_bilinear(coproduct(x), coproduct(y), rule)
        if lhs != rhs:
            return _fail(f"Delta(xy) != Delta(x)Delta(y) at "
                         f"{key_text(basis.name, k1, 'X')}, "
                         f"{key_text(basis.name, k2, 'Y')}")
    print(f"ok: hopf compatibility on {len(pairs)} pairs "
          f"({algebra}, colors {monoid})")
    return 0


def verify_duality(args, monoid):
    pairs = {"fqsym-g": ("fqsym-f", fqsym.pair),
             "pqsym-g": ("pqsym-f", pqsym.pair_p),
             "sym": ("qsym", lambda f, g: symql.pair_sm(f, g)),
             "mr": ("mr-dual", lambda f, g: symql.pair_mr(f, g))}
    if args.algebra not in pairs:
        raise SystemExit(f"chopf: no duality suite for {args.algebra}")
    dual_name, pairing = pairs[args.algebra]
    basis = algebra_basis(args.algebra, monoid)
    dual = algebra_basis(dual_name, monoid)
    coproduct = _COPRODUCTS[args.algebra]
    dual_product = _PRODUCTS[dual_name]
    rng = random.Random(args.seed)
    checked = 0
    for n in range(0, args.max_size + 1):
        ukeys = _algebra_keys(args.algebra, monoid, n)
        if len(ukeys) > 20:
            ukeys = rng.sample(ukeys, 20)
        for ku in ukeys:
            du = coproduct(basis.monomial(ku))
            for i in range(n + 1):
                vs = _algebra_keys(dual_name, monoid, i)
                ws = _algebra_keys(dual_name, monoid, n - i)
                if len(vs) > 6:
                    vs = rng.sample(vs, 6)
                if len(ws) > 6:
                    ws = rng.sample(ws, 6)
                for kv in vs:
                    for kw in ws:
                        v, w = dual.monomial(kv), dual.monomial(kw)
                        lhs = tensor_pairing(du, v, w)
                        rhs = pairing(dual_product(v, w), basis.monomial(ku))
                        if lhs != rhs:
                            return _fail(f"adjunction fails at U="
                                         f"{key_text(basis.name, ku, 'U')}")
                        checked += 1
    print(f"ok: duality adjunction, {checked} triples "
          f"({args.algebra}, colors {monoid})")
    return 0


def verify_internal(args, monoid):
    if monoid.kind != "mod":
        raise SystemExit("chopf: the internal suite needs cyclic colors")
    basis = fqsym.f_basis(monoid)
    total = 0
    for n in range(0, args.max_size + 1):
        keys = list(cc.colored_permutations(n, monoid))
        e = fqsym.internal_unit(n, monoid)
        for k in keys:
            x = basis.monomial(k)
            if fqsym.internal_product(x, e) != x or \
               fqsym.internal_product(e, x) != x:
                return _fail(f"unit fails at {k}")
        rng = random.Random(args.seed)
        triples = itertools.product(keys, keys, keys)
        if len(keys) ** 3 > args.trials * 50:
            triples = ((rng.choice(keys), rng.choice(keys), rng.choice(keys))
                       for _ in range(args.trials * 50))
        for kx, ky, kz in triples:
            a = cc.wreath_multiply(cc.wreath_multiply(kx, ky, monoid), kz, monoid)
            b = cc.wreath_multiply(kx, cc.wreath_multiply(ky, kz, monoid), monoid)
            if a != b:
                return _fail(f"associativity fails at {kx}, {ky}, {kz}")
            total += 1
    print(f"ok: internal product unit and associativity, {total} triples "
          f"(colors {monoid})")
    return 0


def verify_typeb(args, monoid):
    report = pqsym.typeb_closure_check(min(args.max_size, 6))
    if not report["closed"]:
        bad = (report["bad_products"] or report["bad_coproducts"])[0]
        return _fail(f"type-B closure fails at {bad}")
    print(f"ok: type-B closure through size {report['bound']} "
          f"({report['products_checked']} products, "
          f"{report['coproducts_checked']} coproducts)")
    return 0


def verify_pbt(args, monoid):
    _pbt_startup_check()
    count = 0
    for n1 in range(1, args.max_size):
        for n2 in range(1, args.max_size - n1 + 1):
            for k1 in _algebra_keys("pbt", monoid, n1):
                for k2 in _algebra_keys("pbt", monoid, n2):
                    x = pbt.pbt_basis(monoid).monomial(k1)
                    y = pbt.pbt_basis(monoid).monomial(k2)
                    try:
                        prod = pbt.p_product(x, y)
                    except ValueError as exc:
                        return _fail(str(exc))
                    if any(not isinstance(c, int) or c <= 0
                           for c in prod.terms.values()):
                        return _fail(f"non-positive structure constant at "
                                     f"{k1}, {k2}")
                    count += 1
    print(f"ok: pbt regrouping on {count} products (colors {monoid})")
    return 0


def verify_master(args, monoid):
    if monoid.kind != "mod":
        raise SystemExit("chopf: the master suite needs cyclic colors")
    checked = 0
    for w in range(1, args.max_size + 1):
        comps = [symql.composition_key(i, monoid)
                 for i in symql.vector_compositions(w, monoid.l)]
        for i in comps:
            for j in comps:
                fast = symql.s_internal(symql.s_basis(monoid).monomial(i),
                                        symql.s_basis(monoid).monomial(j))
                slow = symql.s_internal_via_embedding(i, j, monoid)
                if fast != slow:
                    return _fail(f"embedding master test fails at {i} * {j}")
                checked += 1
    print(f"ok: embedding master test, {checked} pairs (colors {monoid})")
    return 0


_SUITES = {
    "hopf": verify_hopf,
    "duality": verify_duality,
    "internal": verify_internal,
    "typeb": verify_typeb,
    "pbt": verify_pbt,
    "master": verify_master,
}


def cmd_verify(args):
    monoid = _monoid(args.colors)
    if args.suite not in _SUITES:
        raise SystemExit(
            f"chopf: unknown suite {args.suite!r}; know {sorted(_SUITES)}")
    return _SUITES[args.suite](args, monoid)


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="chopf",
        description="colored combinatorial Hopf algebras, exactly")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_colors(p, default="mod:2"):
        p.add_argument("--colors", default=default,
                       help="color monoid: mod:l | nat | int (default %(default)s)")

    p = sub.add_parser("product", help="multiply two elements")
    p.add_argument("--algebra", required=True, choices=sorted(ALGEBRAS))
    add_colors(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("coproduct", help="comultiply an element")
    p.add_argument("--algebra", required=True, choices=sorted(ALGEBRAS))
    add_colors(p)
    p.add_argument("x")
    p.set_defaults(fn=cmd_coproduct)

    p = sub.add_parser("internal", help="internal (wreath) product")
    p.add_argument("--algebra", default="fqsym-f",
                   choices=sorted(_INTERNAL))
    add_colors(p)
    p.add_argument("--strict", action="store_true",
                   help="error on degree mismatch instead of returning zero")
    p.add_argument("--json", action="store_true")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_internal)

    p = sub.add_parser("convert", help="change basis or realization")
    p.add_argument("--from", dest="source", required=True,
                   choices=["fqsym-f", "fqsym-g", "sym"])
    p.add_argument("--to", required=True,
                   choices=["fqsym-f", "fqsym-g", "sym"])
    p.add_argument("--phi", default="identity", choices=["identity", "inverse"])
    add_colors(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("x")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("series", help="print a generating series")
    p.add_argument("name", help=f"one of {', '.join(enumerations.series_names())}")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--colors", type=int, default=1, metavar="L")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("enumerate", help="list a combinatorial family")
    p.add_argument("family", help=f"one of {', '.join(sorted(_FAMILIES))}")
    p.add_argument("n", type=int)
    p.add_argument("--colors", type=int, default=2, metavar="L")
    p.add_argument("--count", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("check", help="formula vs enumeration cross-check")
    p.add_argument("name", help=f"one of {', '.join(enumerations.check_names())}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", type=int, default=1, metavar="L")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("suite", help=f"one of {', '.join(sorted(_SUITES))}")
    p.add_argument("--algebra", default="fqsym-f", choices=sorted(ALGEBRAS))
    add_colors(p)
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=2024)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("klyachko", help="Klyachko element in the ribbon basis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--multi", action="store_true",
                   help="multiparameter version")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_klyachko)

    p = sub.add_parser("raney", help="Raney specialization vs closed formula")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--colors", type=int, default=1, metavar="L")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_raney)

    p = sub.add_parser("theta", help="truncated Theta series")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--no-y", action="store_true",
                   help="drop the y-weights (integer coefficients)")
    p.set_defaults(fn=cmd_theta)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except LiteralError as exc:
        parser.exit(2, f"chopf: {exc}\n")
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
