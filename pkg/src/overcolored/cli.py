"""Command-line entry point: ``overcolored {compute,verify,scan,list}``.

Exit codes: 0 success, 1 usage error, 2 cross-check mismatch, 3 a claim was
violated, 4 the conjecture scan found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from . import congruences as cg
from . import qseries as qs
from .oracle import ENUMERATION_CAP, count_colored, count_overcolored, enumerate_small
from .report import suite_document, to_csv, to_plain

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_VIOLATION, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3, 4

SUITES = ("thm3", "thm4", "thm5", "thm6", "thm7", "thm8", "das", "identities", "lemma22")

# progression index bound used when --nmax is not given
DEFAULT_NMAX = {
    "thm3": 2000, "thm4": 2000, "thm5": 1000, "thm6": 500, "thm7": 500, "thm8": 500,
    "das": 500, "lemma22": 200,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="overcolored", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="print counts from the eta-quotient expansion")
    c.add_argument("--r", type=_positive, default=1)
    c.add_argument("--s", type=_positive, default=1)
    c.add_argument("--n", type=_nonneg, required=True)
    c.add_argument("--range", action="store_true", help="print every value for 0..n")
    c.add_argument("--kind", choices=("overcolored", "colored", "even", "odd"), default="overcolored",
                   help="even: r colours on even parts only (s = 1); odd: s colours on odd parts only (r = 1)")
    c.add_argument("--modulus", type=int, default=None, help="reduce the printed values")
    c.add_argument("--cross-check", action="store_true", help="also run the combinatorial DP")

    def common(sp):
        sp.add_argument("--nmax", type=_nonneg, default=None,
                        help="largest progression index n checked")
        sp.add_argument("--order", type=_positive, default=None)
        sp.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
        sp.add_argument("--out", default=None, help="write the report here instead of stdout")
        sp.add_argument("--jobs", type=_positive, default=1)
        sp.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    common(v)
    v.add_argument("--kmax", type=_nonneg, default=None)
    v.add_argument("--imax", type=_nonneg, default=2)
    v.add_argument("--jmax", type=_nonneg, default=2)
    v.add_argument("--rmax", type=_positive, default=6)
    v.add_argument("--primes", type=lambda t: [int(x) for x in t.split(",")], default=[3, 5, 7, 11])
    v.add_argument("--negative-controls", action="store_true")

    s = sub.add_parser("scan", help="scan the conjectured families for counterexamples")
    common(s)
    s.add_argument("--kmax", type=_nonneg, default=3)
    s.add_argument("--imax", type=_nonneg, default=2)
    s.add_argument("--jmax", type=_nonneg, default=2)

    ls = sub.add_parser("list", help="enumerate the partitions of a small n")
    ls.add_argument("--r", type=_positive, default=1)
    ls.add_argument("--s", type=_positive, default=1)
    ls.add_argument("--n", type=_nonneg, required=True)
    ls.add_argument("--cap", type=_nonneg, default=ENUMERATION_CAP)
    return p


# -- compute --------------------------------------------------------------------


def _series(kind, r, s, order):
    if kind == "overcolored":
        return qs.gf_overcolored((r, s), order)
    if kind == "colored":
        return qs.gf_colored((r, s), order)
    if kind == "even":
        return qs.gf_even_over(r, order)
    return qs.gf_odd_over(s, order)


def _oracle(kind, r, s, order):
    if kind == "overcolored":
        return count_overcolored((r, s), order)
    if kind == "colored":
        return count_colored((r, s), order)
    if kind == "even":
        return count_overcolored((r, 1), order)
    return count_overcolored((1, s), order)


def cmd_compute(args) -> int:
    order = args.n + 1
    values = list(_series(args.kind, args.r, args.s, order))
    if args.cross_check:
        expected = _oracle(args.kind, args.r, args.s, order)
        bad = [n for n in range(order) if values[n] != expected[n]]
        if bad:
            n = bad[0]
            print(f"cross-check mismatch at n={n}: series {values[n]} vs DP {expected[n]}",
                  file=sys.stderr)
            return EXIT_MISMATCH
    if args.modulus is not None:
        if args.modulus < 2:
            raise UsageError("--modulus must be >= 2")
        values = [v % args.modulus for v in values]
    if args.range:
        for n, v in enumerate(values):
            print(n, v)
    else:
        print(values[args.n])
    return EXIT_OK


# -- verify / scan ------------------------------------------------------------


def _check_order(args, claims, n_max):
    if args.order is None or not claims:
        return
    need = max(c.order_for(n_max) for c in claims)
    if args.order < need:
        raise UsageError(f"--order {args.order} is too small; these claims need at least {need}")


def run_suite(args) -> tuple[list, dict, int | None]:
    """Returns (reports, grid, order) for the chosen suite."""
    suite = args.suite
    n_max = args.nmax if args.nmax is not None else DEFAULT_NMAX.get(suite)
    jobs = args.jobs
    if suite == "identities":
        order = args.order or 2048
        grid = {"order": order, "product_order": min(order, 512)}
        return qs.identity_suite(order, min(order, 512)), grid, order
    if suite in ("thm3", "thm4"):
        order = n_max + 1
        if args.order is not None and args.order < order:
            raise UsageError(f"--order must be at least {order}")
        grid = {"rmax": args.rmax, "smax": args.rmax, "nmax": n_max}
        return cg.profile_suite(4 if suite == "thm3" else 8, args.rmax, order, jobs), grid, order
    if suite == "das":
        grid = {"rmax": args.rmax, "nmax": n_max}
        return cg.s_equals_one_suite(args.rmax, n_max, jobs), grid, n_max + 1
    if suite == "lemma22":
        grid = {"instances": len(cg.transfer_instances()), "nmax": n_max}
        return cg.transfer_suite(n_max, jobs=jobs), grid, None
    if suite == "thm5":
        claims = cg.small_modulus_claims(args.rmax, args.imax, args.jmax, args.negative_controls)
        grid = {"rmax": args.rmax, "imax": args.imax, "jmax": args.jmax, "nmax": n_max,
                "negative_controls": args.negative_controls}
    elif suite == "thm6":
        k_max = 3 if args.kmax is None else args.kmax
        claims = cg.power_of_two_claims(k_max, args.imax, args.jmax, args.rmax)
        grid = {"kmax": k_max, "imax": args.imax, "jmax": args.jmax, "rmax": args.rmax, "nmax": n_max}
    elif suite == "thm7":
        k_max = 2 if args.kmax is None else args.kmax
        claims = cg.mod3_claims(k_max)
        grid = {"kmax": k_max, "nmax": n_max}
    else:
        k_max = 2 if args.kmax is None else args.kmax
        for p in args.primes:
            if p < 3 or not cg.is_prime(p):
                raise UsageError(f"--primes must be odd primes, got {p}")
        claims = cg.mod_p_claims(tuple(args.primes), k_max)
        grid = {"primes": args.primes, "kmax": k_max, "nmax": n_max}
    _check_order(args, claims, n_max)
    order = max((c.order_for(n_max) for c in claims), default=None)
    return cg.run_claims(claims, n_max, jobs), grid, order


def _emit(args, suite, reports, grid, order):
    doc = suite_document(suite, reports, order=order, grid=grid,
                         timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"))
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        text = to_csv(reports)
    else:
        text = to_plain(reports) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    reports, grid, order = run_suite(args)
    grid["seed"] = args.seed
    _emit(args, args.suite, reports, grid, order)
    failed = [r for r in reports if not r.as_expected]
    controls = sum(1 for r in reports if r.expect_violation)
    print(f"{args.suite}: {len(reports)} claims, {len(failed)} unexpected outcomes"
          + (f", {controls} negative controls" if controls else ""), file=sys.stderr)
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_scan_conjecture(args) -> int:
    n_max = args.nmax if args.nmax is not None else 1000
    claims = cg.conjecture_claims(args.kmax, args.imax, args.jmax)
    _check_order(args, claims, n_max)
    reports = cg.run_claims(claims, n_max, args.jobs)
    grid = {"kmax": args.kmax, "imax": args.imax, "jmax": args.jmax, "nmax": n_max, "seed": args.seed}
    order = max((c.order_for(n_max) for c in claims), default=None)
    _emit(args, "conjecture", reports, grid, order)
    bad = [r for r in reports if r.counterexamples]
    if not reports:
        print("conjecture: empty grid, 0 claims checked", file=sys.stderr)
        return EXIT_OK
    if bad:
        for r in bad:
            print(r.summary(), file=sys.stderr)
            print("  counterexamples:", r.counterexamples, file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    print(f"conjecture: consistent at depth n <= {n_max} across {len(reports)} claims", file=sys.stderr)
    return EXIT_OK


def cmd_list(args) -> int:
    if args.n > args.cap:
        raise UsageError(f"n = {args.n} exceeds the enumeration cap {args.cap} (raise it with --cap)")
    for obj in enumerate_small((args.r, args.s), args.n, cap=args.cap):
        print(obj.render(args.r, args.s))
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "scan": cmd_scan_conjecture, "list": cmd_list}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"overcolored: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
