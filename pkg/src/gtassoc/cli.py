"""Command-line entry point.

Subcommands: verify {associator|grt|gt|braid|hecke|kz|all}, chars,
resonance, extend, kz-report, cache.  Exit codes: 0 all-pass, 1 check
failure, 2 usage error, 3 resource or cache error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import holonomy, kz, report
from .associators import AssociatorCandidate, extend_associator, phi0_reference
from .ncseries import NCSeries, to_text
from .symcoef import render_coeff

VERIFY_SUITES = {
    "associator": report.verify_associator,
    "grt": report.verify_grt,
    "gt": report.verify_gt,
    "braid": report.verify_braid,
    "hecke": report.verify_hecke,
    "kz": lambda degree: report.verify_kz(order=7),
}


def _emit(rep, args):
    text = rep.to_json() if args.format == "json" else rep.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_verify(args):
    names = list(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = VERIFY_SUITES[name](args.degree)
        _emit(rep, args)
        ok = ok and rep.ok
    return 0 if ok else 1


def cmd_chars(args):
    symbols = tuple(s.strip() for s in args.g.split(","))
    if len(symbols) != 2:
        raise UsageError("--g expects two symbol names, e.g. a,b")
    rep = report.chars_report(args.partition, symbols, args.order)
    _emit(rep, args)
    return 0 if rep.ok else 1


def cmd_resonance(args):
    rep = report.resonance_report(args.n)
    _emit(rep, args)
    return 0 if rep.ok else 1


def cmd_extend(args):
    phi = phi0_reference(min(args.degree, 5)) if args.degree >= 2 else \
        AssociatorCandidate(NCSeries.one(("x", "y"), 1), 1)
    start = AssociatorCandidate(phi.series.truncated(args.degree, known_order=args.degree), phi.lam) \
        if args.degree <= phi.maxdeg else phi
    extended, kernel = extend_associator(start, parity=args.parity)
    out = to_text(extended.series, extra={"lambda": extended.lam})
    sys.stdout.write(out)
    sys.stdout.write("# kernel dimension at degree %d: %d\n"
                     % (args.degree + 1, len(kernel)))
    return 0


def cmd_kz_report(args):
    ring = kz.kz_ring()
    lines = []
    for d in range(2, args.dmax + 1):
        series = kz.h_tilde(d, ring, args.order).log()
        for k in range(series.known_order + 1):
            c = series.coefficient(k)
            if c:
                lines.append("log_h_tilde d=%d hbar^%d\t%s" % (d, k, render_coeff(c)))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cache_dir(args):
    return args.dir or os.environ.get("GTASSOC_CACHE") or os.path.join(
        os.path.expanduser("~"), ".cache", "gtassoc")


def cmd_cache(args):
    cache_dir = _cache_dir(args)
    if args.action == "clear":
        removed = 0
        if os.path.isdir(cache_dir):
            for name in sorted(os.listdir(cache_dir)):
                if name.startswith("holonomy-") and name.endswith(".cache"):
                    os.remove(os.path.join(cache_dir, name))
                    removed += 1
        print("cleared %d cache file(s) under %s" % (removed, cache_dir))
        return 0
    if args.action == "build":
        t0 = time.monotonic()
        try:
            algebra = holonomy.HoloAlgebra(args.n, args.degree)
        except ValueError as exc:
            print("resource bound: %s" % exc, file=sys.stderr)
            return 3
        path = holonomy.cache_path(cache_dir, args.n, args.degree)
        holonomy.save_cache(algebra, path)
        dims = algebra.dimensions()
        print("built %s in %d ms" % (path, int((time.monotonic() - t0) * 1000)))
        print("dimensions: %s" % ",".join(map(str, dims)))
        return 0
    # inspect
    if not os.path.isdir(cache_dir):
        print("no cache directory at %s" % cache_dir)
        return 0
    found = False
    for name in sorted(os.listdir(cache_dir)):
        if not name.endswith(".cache"):
            continue
        found = True
        path = os.path.join(cache_dir, name)
        try:
            algebra = holonomy.load_cache(path)
            print("%s: n=%d maxdeg=%d dims=%s" % (
                name, algebra.n, algebra.maxdeg,
                ",".join(map(str, algebra.dimensions()))))
        except holonomy.CacheError as exc:
            print("%s: stale (%s); rebuild required" % (name, exc))
    if not found:
        print("no cache files under %s" % cache_dir)
    return 0


class UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gtassoc",
        description="exact verification toolkit for truncated associators, "
                    "the graded/filtered Teichmuller group laws, and Hecke "
                    "matrix models")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(VERIFY_SUITES) + ["all"])
    p.add_argument("--degree", type=int, default=5)
    p.add_argument("--out")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("chars", help="character diagonal of a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--g", default="a,b", help="symbol names for the generic element")
    p.add_argument("--order", type=int, default=5)
    p.add_argument("--out")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_chars)

    p = sub.add_parser("resonance", help="resonance-free scan over partitions")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--out")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_resonance)

    p = sub.add_parser("extend", help="extend the reference candidate one degree")
    p.add_argument("--degree", type=int, default=4, help="extend from this degree")
    p.add_argument("--parity", action="store_true")
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("kz-report", help="coefficient tables of the ratio logs")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_kz_report)

    p = sub.add_parser("cache", help="holonomy cache management")
    p.add_argument("action", choices=("build", "inspect", "clear"))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--dir", help="cache directory (default: GTASSOC_CACHE or ~/.cache/gtassoc)")
    p.set_defaults(fn=cmd_cache)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except holonomy.CacheError as exc:
        print("cache error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
