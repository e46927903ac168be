"""Acceptance checks, one per criterion.

Each check prints a single ``[ACCEPT n] PASS|FAIL ...`` line. Run with
``pytest tests/test_acceptance.py -v -s`` or ``python3 tests/test_acceptance.py``.
"""

import time

import pytest

from overcolored import congruences as cg
from overcolored import qseries as qs
from overcolored.oracle import count_overcolored, enumerate_small
from overcolored.series import residue_ring


def _bad(reports):
    return [r for r in reports if not r.as_expected]


def _describe(reports, limit=3):
    bad = _bad(reports)
    if not bad:
        return f"{len(reports)} reports, all as expected"
    shown = "; ".join(f"{r.label} {r.params} first={r.counterexamples[:1]}" for r in bad[:limit])
    return f"{len(bad)}/{len(reports)} unexpected: {shown}"


def c1():
    value = list(qs.gf_overcolored((1, 1), 4))[3]
    objs = enumerate_small((1, 1), 3)
    return value == 8 and len(objs) == 8, f"abar_(1,1)(3) = {value}, list gives {len(objs)} objects"


def c2():
    t0 = time.perf_counter()
    bad = [(r, s) for r in range(1, 5) for s in range(1, 5)
           if count_overcolored((r, s), 301) != list(qs.gf_overcolored((r, s), 301))]
    dt = time.perf_counter() - t0
    return not bad and dt < 30, f"16 pairs to n = 300, mismatches {bad}, {dt:.1f}s (< 30s)"


def c3():
    t0 = time.perf_counter()
    reports = qs.identity_suite(2048, 512)
    dt = time.perf_counter() - t0
    return not _bad(reports) and dt < 60, f"{_describe(reports)}, {dt:.1f}s (< 60s)"


def c4():
    reports = [qs.verify_binomial_congruence(m, p, k, 1000)
               for m in (1, 2, 4) for p in (2, 3, 5) for k in (1, 2)]
    return not _bad(reports), _describe(reports)


def c5():
    reports = cg.profile_suite(4, 6, 2001)
    return not _bad(reports), "mod 4, (r, s) in [1,6]^2, n <= 2000: " + _describe(reports)


def c6():
    reports = cg.profile_suite(8, 6, 2001)
    multi = [n for n, c in enumerate(cg.square_rep_counts(2001)) if c >= 2]
    ok = not _bad(reports) and bool(multi)
    return ok, (f"mod 8, (r, s) in [1,6]^2, n <= 2000: {_describe(reports)}; "
                f"{len(multi)} n with rep count >= 2 (first {multi[:3]})")


def c7():
    reports = cg.small_modulus_suite(6, 2, 2, 1000, negative_controls=True, jobs=4)
    displays = {r.label for r in reports if not r.expect_violation}
    controls = [r for r in reports if r.expect_violation]
    ok = not _bad(reports) and len(displays) == 9 and controls and all(
        r.status == "violated" for r in controls)
    return ok, f"{len(displays)} displays, {len(controls)} negative controls violated; {_describe(reports)}"


def c8():
    reports = cg.power_of_two_suite(3, 2, 2, 500, jobs=4)
    labels = {r.label for r in reports}
    return not _bad(reports) and len(labels) == 8, f"{len(labels)} displays; {_describe(reports)}"


def c9():
    # the displays exactly as stated; the corrected mod-3 progression and the
    # informational non-overlined mod-p variant are excluded
    claims = cg.mod3_claims(2, derived=False) + cg.mod_p_claims((3, 5, 7, 11), 2, informational=False)
    reports = cg.run_claims(claims, 500, jobs=4)
    return not _bad(reports), _describe(reports)


def c10():
    reports = cg.s_equals_one_suite(6, 500)
    reports += qs.verify_specializations(6, 501)
    return not _bad(reports), _describe(reports)


def c11():
    reports = cg.transfer_suite(200)
    vacuous = sum("vacuous" in r.notes for r in reports)
    ok = not _bad(reports) and len(reports) == 10
    return ok, f"{_describe(reports)}, {vacuous} with a failing premise"


def c12():
    reports = cg.conjecture_scan(3, 2, 2, 1000, jobs=4)
    found = [r for r in reports if r.counterexamples]
    return not found, f"{len(reports)} claims, {len(found)} with counterexamples (n <= 1000)"


def c13():
    qs._f1_power.cache_clear()
    spec = [(1, -12), (2, 12), (4, -11), (8, 7), (3, 5)]
    t0 = time.perf_counter()
    series = qs.eta_quotient(spec, 4096, residue_ring(256))
    dt = time.perf_counter() - t0
    return series.order == 4096 and dt < 5, f"order 4096 mod 256 build in {dt:.3f}s (< 5s)"


CRITERIA = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13]


def _line(index, ok, detail):
    return f"[ACCEPT {index:2d}] {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("index", range(1, len(CRITERIA) + 1))
def test_acceptance(index, capsys):
    ok, detail = CRITERIA[index - 1]()
    with capsys.disabled():
        print("\n" + _line(index, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [CRITERIA[i - 1]() for i in range(1, len(CRITERIA) + 1)]
    for i, (ok, detail) in enumerate(results, 1):
        print(_line(i, ok, detail))
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
