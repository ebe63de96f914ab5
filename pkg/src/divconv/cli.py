"""Command-line front end.

Subcommands: dims, search-cusp, basis, convsum, repnum, verify-paper.
Exit codes: 0 success, 2 usage error, 3 unsupported level, 4 internal
invariant breach.  --machine switches to deterministic JSON with exact
rationals encoded as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from .arith import classify_level, divisors
from .cache import Cache, default_cache_dir, encode_rational
from .convolution import (
    DerivationError,
    FormulaIntegrityError,
    FormulaProvider,
    UnsupportedLevelError,
    derive_formula,
    dispatch_W,
)
from .eta import order_at_infinity, search_cusp_forms
from .representation import count_N, count_R
from .spaces import load_fixture_basis, profile, repair_basis, search_basis
from . import fixtures
from . import verify as verify_mod

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4


def _emit(args, machine_doc, human_lines):
    if args.machine:
        print(json.dumps(machine_doc, sort_keys=True, separators=(",", ": "), indent=1))
    else:
        for line in human_lines:
            print(line)


def cmd_dims(args) -> int:
    prof = profile(args.level)
    doc = {
        "level": prof.level,
        "index_mu": prof.index_mu,
        "eps2": prof.eps2,
        "eps3": prof.eps3,
        "cusp_count": prof.cusp_count,
        "genus": prof.genus,
        "dim_E4": prof.dim_E4,
        "dim_S4": prof.dim_S4,
        "dim_M4": prof.dim_M4,
        "in_class": classify_level(args.level).in_class,
    }
    lines = [
        f"level {prof.level}: index mu={prof.index_mu} eps2={prof.eps2} "
        f"eps3={prof.eps3} cusps={prof.cusp_count} genus={prof.genus}",
        f"dim_E4={prof.dim_E4} dim_S4={prof.dim_S4} dim_M4={prof.dim_M4}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_search_cusp(args) -> int:
    N = args.level
    max_order = args.max_order if args.max_order else max(profile(N).dim_S4, 1)
    found = search_cusp_forms(
        N, 8, bound=args.bound, max_order=max_order, strict=args.strict, jobs=args.jobs
    )
    rows = []
    for q in found:
        rows.append(
            {
                "exponents": [[d, r] for d, r in q.exponents],
                "order": order_at_infinity(q),
            }
        )
    doc = {"level": N, "bound": args.bound, "max_order": max_order, "count": len(found), "quotients": rows}
    lines = [f"level {N}: {len(found)} cusp quotients (bound {args.bound}, order <= {max_order})"]
    header = " ".join(f"{d:>5}" for d in divisors(N))
    lines.append(f"  order | {header}")
    for q in found:
        m = q.exponent_map
        vec = " ".join(f"{m.get(d, 0):>5}" for d in divisors(N))
        lines.append(f"  {order_at_infinity(q):>5} | {vec}")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_basis(args) -> int:
    N = args.level
    T = args.terms or 208
    if args.use_fixture:
        if N not in fixtures.BASIS_TABLES:
            print(f"no fixture basis for level {N}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        basis = load_fixture_basis(N, T)
    elif args.repair:
        basis = repair_basis(N, T, bound=args.bound, jobs=args.jobs)
    else:
        basis = search_basis(N, T, bound=args.bound, jobs=args.jobs)
    if args.cache_dir is not False:
        Cache(args.cache_dir).store_basis(basis)
    doc = {
        "level": N,
        "checksum": basis.checksum,
        "eisenstein": list(basis.eisenstein),
        "cusp": [
            {"label": g.describe(), "order": g.order(), "kind": g.kind}
            for g in basis.cusp
        ],
        "defects": list(basis.defects),
    }
    lines = [f"level {N}: {len(basis.eisenstein)} Eisenstein + {len(basis.cusp)} cusp generators ({basis.checksum})"]
    for g in basis.cusp:
        lines.append(f"  order {g.order():>2}  {g.describe()}")
    for d in basis.defects:
        lines.append(f"  defect: {d}")
    _emit(args, doc, lines)
    return EXIT_OK


def _formula_doc(f, basis):
    return {
        "alpha": f.alpha,
        "beta": f.beta,
        "level": f.level,
        "verified_to": f.verified_to,
        "basis": basis.checksum,
        "sigma3_terms": {str(d): encode_rational(f.sigma3_coefficient(d)) for d in sorted(f.x)},
        "sigma_tail": [
            f"(1/24 - n/{4 * f.beta}) sigma(n/{f.alpha})",
            f"(1/24 - n/{4 * f.alpha}) sigma(n/{f.beta})",
        ],
        "cusp_terms": {str(j + 1): encode_rational(f.cusp_coefficient(j)) for j in range(len(f.y))},
        "generators": [g.describe() for g in basis.cusp],
    }


def cmd_convsum(args) -> int:
    a, b = args.alpha, args.beta
    if a < 1 or b < 1:
        print("alpha and beta must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    g = gcd(a, b)
    if a == b:
        lines = [
            f"W_({a},{a})(n) = W_(1,1)(n/{a}) = (5/12) sigma3(n/{a}) + (1/12 - n/(2*{a})) sigma(n/{a})"
        ]
        _emit(args, {"alpha": a, "beta": b, "diagonal": True}, lines)
        return EXIT_OK
    if g > 1:
        a1, b1 = a // g, b // g
        lines = [f"gcd {g} > 1: W_({a},{b})(n) = W_({a1},{b1})(n/{g}); deriving the reduced pair"]
    else:
        a1, b1 = a, b
        lines = []
    level = a1 * b1
    verify_to = args.verify
    min_terms = max(args.terms or 0, verify_to + 8)
    try:
        if args.use_fixture:
            basis = load_fixture_basis(level, max(208, min_terms))
            f = derive_formula(a1, b1, basis, verify_to=verify_to)
        else:
            provider = FormulaProvider(bound=args.bound, verify_to=verify_to, jobs=args.jobs)
            f, basis = provider.formula(a1, b1)
            if basis.precision < min_terms:
                basis = basis.at_precision(min_terms)
            note = provider.notes.get(level, {})
            if note.get("basis") == "repaired" and "fixture_failure" in note:
                lines.append(f"note: fixture basis unusable ({note['fixture_failure']}); using repaired basis")
    except UnsupportedLevelError as e:
        print(f"unsupported level: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DerivationError as e:
        print(f"derivation failed: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.cache_dir is not False:
        cache = Cache(args.cache_dir)
        cache.store_basis(basis)
        cache.store_formula(f)
    doc = _formula_doc(f, basis)
    lines.append(f"W_({a1},{b1})(n), level {level}, verified against the direct sum to n={f.verified_to}:")
    for d in sorted(f.x):
        lines.append(f"  {encode_rational(f.sigma3_coefficient(d)):>24}  * sigma3(n/{d})")
    lines.append(f"  (1/24 - n/{4 * b1}) sigma(n/{a1}) + (1/24 - n/{4 * a1}) sigma(n/{b1})")
    for j in range(len(f.y)):
        c = f.cusp_coefficient(j)
        if c != 0:
            lines.append(f"  {encode_rational(c):>24}  * b_{j + 1}(n)   [{basis.cusp[j].describe()}]")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_repnum(args) -> int:
    a, b, n = args.a, args.b, args.n
    if gcd(a, b) != 1:
        print("(a, b) must be coprime", file=sys.stderr)
        return EXIT_USAGE
    provider = FormulaProvider(bound=args.bound, jobs=args.jobs)
    calls: list[tuple[int, int, int]] = []

    def w(x, y, m):
        calls.append((x, y, m))
        return dispatch_W(x, y, m, provider)

    try:
        if args.form == "quad":
            value = count_N(a, b, n, w)
        else:
            value = count_R(a, b, n, w)
    except UnsupportedLevelError as e:
        print(f"unsupported level: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DerivationError as e:
        print(f"derivation failed: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    doc = {
        "form": args.form,
        "a": a,
        "b": b,
        "n": n,
        "count": value,
        "w_invocations": [list(c) for c in calls],
    }
    lines = [f"{'N' if args.form == 'quad' else 'R'}_({a},{b})({n}) = {value}"]
    lines += [f"  W_({x},{y})({m})" for x, y, m in calls]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    provider = FormulaProvider(jobs=args.jobs)
    results = verify_mod.run_all(provider, jobs=args.jobs, cache_dir=None)
    doc = {
        "items": [
            {"item": r.item, "status": r.status, "detail": r.detail} for r in results
        ],
        "failed": sum(1 for r in results if r.status == verify_mod.FAIL),
        "passed": sum(1 for r in results if r.status == verify_mod.PASS),
        "documented_discrepancies": sum(
            1 for r in results if r.status == verify_mod.DISCREPANCY
        ),
        "skipped": sum(1 for r in results if r.status == verify_mod.SKIPPED),
    }
    lines = [r.line() for r in results]
    lines.append(
        f"== {doc['passed']} passed, {doc['documented_discrepancies']} documented "
        f"discrepancies, {doc['skipped']} skipped, {doc['failed']} failed"
    )
    _emit(args, doc, lines)
    return EXIT_OK if doc["failed"] == 0 else EXIT_INTERNAL


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # the same flags are accepted before and after the subcommand; the
    # subparser copies use SUPPRESS so they never clobber a value parsed
    # by the main parser
    parser.add_argument(
        "--machine",
        action="store_true",
        help="deterministic JSON output",
        **({"default": argparse.SUPPRESS} if suppress else {"default": False}),
    )
    parser.add_argument(
        "--cache-dir",
        help=f"cache directory (default ${'{'}DIVCONV_CACHE{'}'} or {default_cache_dir()})",
        **({"default": argparse.SUPPRESS} if suppress else {"default": None}),
    )
    parser.add_argument(
        "--jobs",
        type=int,
        help="parallel workers for the search",
        **({"default": argparse.SUPPRESS} if suppress else {"default": 1}),
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="divconv",
        description="Exact convolution sums of the divisor function via "
        "weight-4 modular form bases, and octonary quadratic form "
        "representation counts.",
    )
    _add_global_flags(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dims", help="space dimensions and invariants for a level")
    d.add_argument("level", type=int)
    _add_global_flags(d, suppress=True)
    d.set_defaults(func=cmd_dims)

    s = sub.add_parser("search-cusp", help="exhaustive weight-4 cusp quotient search")
    s.add_argument("level", type=int)
    s.add_argument("--bound", type=int, default=10)
    s.add_argument("--max-order", type=int, default=None)
    s.add_argument("--strict", action="store_true", help="also require the companion congruence")
    _add_global_flags(s, suppress=True)
    s.set_defaults(func=cmd_search_cusp)

    b = sub.add_parser("basis", help="construct and print a cusp basis")
    b.add_argument("level", type=int)
    b.add_argument("--terms", type=int, default=None)
    b.add_argument("--bound", type=int, default=10)
    b.add_argument("--use-fixture", action="store_true")
    b.add_argument("--repair", action="store_true", help="certified-membership candidates only")
    _add_global_flags(b, suppress=True)
    b.set_defaults(func=cmd_basis)

    c = sub.add_parser("convsum", help="derive the closed form of W_(alpha,beta)")
    c.add_argument("alpha", type=int)
    c.add_argument("beta", type=int)
    c.add_argument("--terms", type=int, default=None)
    c.add_argument("--verify", type=int, default=200)
    c.add_argument("--bound", type=int, default=10)
    c.add_argument("--use-fixture", action="store_true")
    _add_global_flags(c, suppress=True)
    c.set_defaults(func=cmd_convsum)

    r = sub.add_parser("repnum", help="octonary representation count")
    r.add_argument("--form", choices=("quad", "hex"), required=True)
    r.add_argument("a", type=int)
    r.add_argument("b", type=int)
    r.add_argument("n", type=int)
    r.add_argument("--bound", type=int, default=10)
    _add_global_flags(r, suppress=True)
    r.set_defaults(func=cmd_repnum)

    v = sub.add_parser("verify-paper", help="run the embedded regression suite")
    _add_global_flags(v, suppress=True)
    v.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormulaIntegrityError as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except UnsupportedLevelError as e:
        print(f"unsupported level: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
