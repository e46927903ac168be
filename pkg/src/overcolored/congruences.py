"""Congruences for overlined coloured partitions, checked coefficient by coefficient.

A claim says a(step*n + residue) == 0 (mod M) for every n >= 0. Index 0 is
always skipped since a(0) = 1. Each suite instantiates its families over a
parameter grid and returns one :class:`VerificationReport` per claim.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt

from .qseries import (
    ColorParams,
    EtaQuotientSpec,
    colored_spec,
    eta_quotient,
    gf_even_over,
    overcolored_spec,
    verify_specializations,
)
from .report import VerificationReport
from .series import ZZ, reduce_mod, residue_ring

# -- number theory helpers ----------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime, got {p}")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo p via the extended Euclidean algorithm."""
    old_r, r = a % p, p
    old_x, x = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
    if old_r != 1:
        raise ValueError(f"{a} has no inverse modulo {p}")
    return old_x % p


def _exact_root(n: int) -> int | None:
    if n < 1:
        return None
    k = isqrt(n)
    return k if k * k == n else None


@dataclass(frozen=True)
class NSquareClassification:
    """Which square-type forms n takes; each witness is the k in the form, or None.

    ``two_even_square``: n = 2(2k)^2.  ``two_odd_square``: n = 2(2k-1)^2.
    ``rep_count``: ordered pairs (k, l), both >= 1, with k^2 + 2l^2 = n.
    """

    n: int
    square: int | None
    twice_square: int | None
    two_even_square: int | None
    two_odd_square: int | None
    four_square: int | None
    rep_count: int
    reps: tuple = ()

    @property
    def is_square(self):
        return self.square is not None

    @property
    def is_twice_square(self):
        return self.twice_square is not None

    @property
    def is_2_times_even_square(self):
        return self.two_even_square is not None

    @property
    def is_2_times_odd_square(self):
        return self.two_odd_square is not None

    @property
    def is_4_times_square(self):
        return self.four_square is not None


def classify_n(n: int) -> NSquareClassification:
    sq = _exact_root(n)
    tw = _exact_root(n // 2) if n % 2 == 0 else None
    two_even = two_odd = None
    if tw is not None:
        if tw % 2 == 0:
            two_even = tw // 2
        else:
            two_odd = (tw + 1) // 2
    four = _exact_root(n // 4) if n % 4 == 0 else None
    reps = []
    for k in range(1, isqrt(max(n, 0)) + 1):
        rest = n - k * k
        if rest >= 2 and rest % 2 == 0:
            l = _exact_root(rest // 2)
            if l is not None:
                reps.append((k, l))
    return NSquareClassification(n, sq, tw, two_even, two_odd, four, len(reps), tuple(reps))


def square_rep_counts(order: int) -> list[int]:
    """Number of (k, l), k, l >= 1, with k^2 + 2l^2 = n, for n < order."""
    out = [0] * order
    k = 1
    while k * k < order:
        l = 1
        while k * k + 2 * l * l < order:
            out[k * k + 2 * l * l] += 1
            l += 1
        k += 1
    return out


# -- families and claims ------------------------------------------------------


@dataclass(frozen=True)
class FamilyParams:
    """A point in one of the parameter schemes, resolved to (r, s).

    Build instances with the class methods; they compute r and s from the
    scheme's indices and enforce the scheme's side conditions.
    """

    scheme: str
    r: int
    s: int
    indices: tuple = ()

    def __post_init__(self):
        ColorParams(self.r, self.s)

    @property
    def params(self) -> dict:
        d = dict(self.indices)
        d.update(r=self.r, s=self.s)
        return d

    @classmethod
    def direct(cls, r, s):
        return cls("direct", r, s)

    @classmethod
    def small(cls, r, s, tag, **idx):
        return cls("small:" + tag, r, s, tuple(sorted(idx.items())))

    @classmethod
    def pow2(cls, k, i, j, family):
        """family "A": (2^{k+1}j + 2^k - 1, 2^k i + 1); family "B": (2^{k+1}j + 2^k, 2^k i)."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if family == "A":
            r, s = 2 ** (k + 1) * j + 2 ** k - 1, 2 ** k * i + 1
        elif family == "B":
            r, s = 2 ** (k + 1) * j + 2 ** k, 2 ** k * i
        else:
            raise ValueError(f"unknown family {family!r}")
        return cls("pow2:" + family, r, s, (("i", i), ("j", j), ("k", k)))

    @classmethod
    def mod3(cls, k, j, family):
        """family "A": (3(k-j)+3, 3k+6); family "B": (3(k-j)+5, 3k+1)."""
        if not k >= j >= 0:
            raise ValueError(f"need k >= j >= 0, got k={k}, j={j}")
        if family == "A":
            r, s = 3 * (k - j) + 3, 3 * k + 6
        elif family == "B":
            r, s = 3 * (k - j) + 5, 3 * k + 1
        else:
            raise ValueError(f"unknown family {family!r}")
        return cls("mod3:" + family, r, s, (("j", j), ("k", k)))

    @classmethod
    def modp(cls, p, k, j, family):
        """family 1: (p(k-j)+p-1, pk+p+1); family 2: (p(k-j)+p-1, pk+p)."""
        if not k >= j >= 0:
            raise ValueError(f"need k >= j >= 0, got k={k}, j={j}")
        if p < 3 or not is_prime(p):
            raise ValueError(f"need an odd prime, got {p}")
        r = p * (k - j) + p - 1
        if family == 1:
            s = p * k + p + 1
        elif family == 2:
            s = p * k + p
        else:
            raise ValueError(f"unknown family {family!r}")
        return cls(f"modp:{family}", r, s, (("j", j), ("k", k), ("p", p)))

    @classmethod
    def conjecture(cls, k, i, j):
        if k < 1 or i < 0 or j < 0:
            raise ValueError("need k >= 1 and i, j >= 0")
        return cls("conjecture", 2 ** (k + 1) * j + 2 ** k - 1, 2 ** k * i + 1,
                   (("i", i), ("j", j), ("k", k)))


@dataclass(frozen=True)
class CongruenceClaim:
    label: str
    family: FamilyParams
    step: int
    residue: int
    modulus: int
    expect_violation: bool = False
    informational: bool = False
    colored: bool = False  # check a_{r,s} (no overlines) instead

    def __post_init__(self):
        if not 0 <= self.residue < self.step:
            raise ValueError("need 0 <= residue < step")
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    def order_for(self, n_max: int) -> int:
        return self.step * n_max + self.residue + 1

    def describe(self) -> str:
        name = "a" if self.colored else "abar"
        return (f"{name}_{{{self.family.r},{self.family.s}}}({self.step}n+{self.residue})"
                f" = 0 mod {self.modulus}")


# -- series cache -------------------------------------------------------------

_cache: dict = {}
_cache_lock = threading.Lock()


def overcolored_mod(r: int, s: int, modulus: int, order: int, colored: bool = False):
    """The generating function reduced mod ``modulus``, memoised per (r, s, modulus)."""
    key = (r, s, modulus, colored)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None and hit.order >= order:
        return hit.truncate(order)
    spec = colored_spec(r, s) if colored else overcolored_spec(r, s)
    series = eta_quotient(spec, order, residue_ring(modulus))
    with _cache_lock:
        prev = _cache.get(key)
        if prev is None or prev.order < order:
            _cache[key] = series
    return series


def clear_cache():
    with _cache_lock:
        _cache.clear()


def verify_claim(claim: CongruenceClaim, n_max: int, *, route: str = "residue",
                 order: int | None = None) -> VerificationReport:
    """Check a(step*n + residue) mod M for n = 0..n_max, skipping index 0.

    ``route="residue"`` expands directly in Z/MZ; ``route="exact"`` expands
    over Z and reduces afterwards.
    """
    t0 = time.perf_counter()
    need = claim.order_for(n_max)
    order = max(order or 0, need)
    f = claim.family
    M = claim.modulus
    if route == "residue":
        series = overcolored_mod(f.r, f.s, M, order, claim.colored)
    elif route == "exact":
        spec = colored_spec(f.r, f.s) if claim.colored else overcolored_spec(f.r, f.s)
        series = reduce_mod(eta_quotient(spec, order, ZZ), M)
    else:
        raise ValueError(f"unknown route {route!r}")
    idx = [claim.step * n + claim.residue for n in range(n_max + 1)]
    idx = [k for k in idx if k >= 1]
    bad = [(k, series[k]) for k in idx if series[k] % M]
    return VerificationReport(
        label=claim.label,
        description=claim.describe(),
        params=f.params,
        progression=(claim.step, claim.residue),
        modulus=M,
        n_checked=len(idx),
        n_range=(idx[0], idx[-1]) if idx else None,
        counterexamples=bad,
        wall_time=time.perf_counter() - t0,
        expect_violation=claim.expect_violation,
        informational=claim.informational,
    )


def run_claims(claims, n_max: int, jobs: int = 1, route: str = "residue") -> list[VerificationReport]:
    """Verify many claims, sharing one expansion per (r, s, modulus)."""
    claims = list(claims)
    orders: dict = {}
    for c in claims:
        key = (c.family.r, c.family.s, c.modulus, c.colored)
        orders[key] = max(orders.get(key, 0), c.order_for(n_max))

    def one(c):
        key = (c.family.r, c.family.s, c.modulus, c.colored)
        return verify_claim(c, n_max, route=route, order=orders[key])

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(one, claims))
    else:
        reports = [one(c) for c in claims]
    return sorted(reports, key=VerificationReport.sort_key)


# -- square-class profiles ----------------------------------------------------


def mod4_prediction(r: int, s: int, order: int) -> list[int]:
    """1 + 2s sum q^{n^2} + 2(r+s) sum q^{2n^2}, reduced mod 4."""
    pred = [0] * order
    pred[0] = 1
    for n in range(1, isqrt(order - 1) + 1):
        pred[n * n] += 2 * s
    for n in range(1, isqrt((order - 1) // 2) + 1):
        pred[2 * n * n] += 2 * (r + s)
    return [c % 4 for c in pred]


def mod8_prediction(r: int, s: int, order: int) -> list[int]:
    """Sum of the square-class series, reduced mod 8.

    The k^2 + 2l^2 series carries each representation separately.
    """
    pred = [0] * order
    pred[0] = 1
    for n in range(1, isqrt(order - 1) + 1):
        pred[n * n] += 2 * s
        if 4 * n * n < order:
            pred[4 * n * n] += 2 * (r + s) * (r + s + 1)
        # 2n^2 with n even or odd
        m = 2 * n * n
        if m < order:
            pred[m] += 2 * (3 * r + 2 * s + s * s) if n % 2 == 0 else 2 * (r + s * s)
    for n, c in enumerate(square_rep_counts(order)):
        pred[n] += 4 * s * (r + s) * c
    return [c % 8 for c in pred]


def mod4_table(r: int, s: int, n: int) -> int:
    c = classify_n(n)
    if c.is_square:
        return 2 * s % 4
    if c.is_twice_square:
        return 2 * (r + s) % 4
    return 0


def mod8_table(r: int, s: int, n: int) -> int | None:
    """Case-table value mod 8, or None when more than one case applies.

    A number with two or more representations k^2 + 2l^2 counts as
    overlapping: each representation is a separate contribution.
    """
    c = classify_n(n)
    cases = []
    if c.is_square:
        cases.append(2 * s)
    if c.is_2_times_even_square:
        cases.append(2 * (3 * r + 2 * s + s * s))
    if c.is_2_times_odd_square:
        cases.append(2 * (r + s * s))
    if c.is_4_times_square:
        cases.append(2 * (r + s) * (r + s + 1))
    cases.extend([4 * s * (r + s)] * c.rep_count)
    if len(cases) > 1:
        return None
    return cases[0] % 8 if cases else 0


def _profile(label, r, s, order, modulus, predicted, table, actual=None, extra=None):
    t0 = time.perf_counter()
    if actual is None:
        actual = overcolored_mod(r, s, modulus, order)
    bad = {}
    tabled = 0
    for n in range(order):
        if actual[n] != predicted[n]:
            bad[n] = actual[n]
        if n >= 1:
            want = table(r, s, n)
            if want is not None:
                tabled += 1
                if actual[n] != want:
                    bad[n] = actual[n]
    params = {"r": r, "s": s}
    params.update(extra or {})
    return VerificationReport(
        label=label,
        description=f"abar_{{{r},{s}}}(n) mod {modulus} against the square-class series",
        params=params,
        modulus=modulus,
        n_checked=order,
        n_range=(0, order - 1),
        counterexamples=sorted(bad.items()),
        wall_time=time.perf_counter() - t0,
        notes=f"case table applied at {tabled} of {order - 1} n >= 1",
    )


def mod4_profile(p, order: int) -> VerificationReport:
    r, s = (p.r, p.s) if hasattr(p, "r") else p
    return _profile("mod 4 profile", r, s, order, 4, mod4_prediction(r, s, order), mod4_table)


def mod8_profile(p, order: int) -> VerificationReport:
    r, s = (p.r, p.s) if hasattr(p, "r") else p
    return _profile("mod 8 profile", r, s, order, 8, mod8_prediction(r, s, order), mod8_table)


def profile_suite(modulus: int, rs_max: int = 6, order: int = 2001, jobs: int = 1):
    fn = mod4_profile if modulus == 4 else mod8_profile
    pairs = [(r, s) for r in range(1, rs_max + 1) for s in range(1, rs_max + 1)]
    return _map(lambda rs: fn(rs, order), pairs, jobs)


def _map(fn, items, jobs):
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(fn, items))
    else:
        out = [fn(x) for x in items]
    return sorted(out, key=VerificationReport.sort_key)


# -- even-colour specialization (s = 1) ---------------------------------------


def even_colored_mod4_table(r: int, n: int) -> int:
    c = classify_n(n)
    if c.is_square:
        return 2
    if c.is_twice_square:
        return 2 * (r + 1) % 4
    return 0


def even_colored_mod8_table(r: int, n: int) -> int | None:
    c = classify_n(n)
    cases = []
    if c.is_square:
        cases.append(2)
    if c.is_2_times_even_square:
        cases.append(6 * (r + 1))
    if c.is_2_times_odd_square:
        cases.append(2 * (r + 1))
    if c.is_4_times_square:
        cases.append(2 * (r + 1) * (r + 2))
    cases.extend([4 * (r + 1)] * c.rep_count)
    if len(cases) > 1:
        return None
    return cases[0] % 8 if cases else 0


def s_equals_one_suite(r_max: int = 6, n_max: int = 500, jobs: int = 1) -> list[VerificationReport]:
    """The s = 1 case: profiles of abar_{r,1}, the tables for even-coloured
    overpartitions evaluated on their own generating function, and the
    series-level specialization identities."""
    order = n_max + 1
    reports = []
    for r in range(1, r_max + 1):
        reports.append(mod4_profile((r, 1), order))
        reports.append(mod8_profile((r, 1), order))
        star = gf_even_over(r, order, residue_ring(8))
        reports.append(_profile(
            "even-coloured mod 4 table", r, 1, order, 4,
            [c % 4 for c in mod4_prediction(r, 1, order)],
            lambda r_, s_, n: even_colored_mod4_table(r_, n),
            actual=[c % 4 for c in star]))
        reports.append(_profile(
            "even-coloured mod 8 table", r, 1, order, 8, mod8_prediction(r, 1, order),
            lambda r_, s_, n: even_colored_mod8_table(r_, n),
            actual=list(star)))
    reports.extend(verify_specializations(r_max, order))
    return sorted(reports, key=VerificationReport.sort_key)


# -- congruence families ------------------------------------------------------


def small_modulus_claims(rs_max: int = 6, i_max: int = 2, j_max: int = 2,
                         negative_controls: bool = False):
    grid = [(r, s) for r in range(1, rs_max + 1) for s in range(1, rs_max + 1)]
    D = FamilyParams.direct
    claims = []
    for r, s in grid:
        claims.append(CongruenceClaim("n mod 2", D(r, s), 1, 0, 2))
        claims.append(CongruenceClaim("9n+3 mod 4", D(r, s), 9, 3, 4))
        claims.append(CongruenceClaim("9n+6 mod 4", D(r, s), 9, 6, 4))
        if (r + s) % 2 == 0:
            claims.append(CongruenceClaim("4n+2 mod 4, r+s even", D(r, s), 4, 2, 4))
            claims.append(CongruenceClaim("3n+2 mod 4, r+s even", D(r, s), 3, 2, 4))
    for r in range(1, rs_max + 1):
        for i in range(1, i_max + 1):
            if 2 * i <= rs_max:
                fam = FamilyParams.small(r, 2 * i, "s=2i", i=i)
                claims.append(CongruenceClaim("3n+1 mod 4, s=2i", fam, 3, 1, 4))
    for i in range(1, i_max + 1):
        for j in range(1, j_max + 1):
            fam = FamilyParams.small(2 * j, 2 * i + 1, "r=2j,s=2i+1", i=i, j=j)
            claims.append(CongruenceClaim("4n+3 mod 4, r=2j, s=2i+1", fam, 4, 3, 4))
    for j in range(1, j_max + 1):
        for s in range(1, rs_max + 1):
            fam = FamilyParams.small(2 * j + 1, s, "r=2j+1", j=j)
            claims.append(CongruenceClaim("9n+3 mod 8, r=2j+1", fam, 9, 3, 8))
            claims.append(CongruenceClaim("9n+6 mod 8, r=2j+1", fam, 9, 6, 8))
    if negative_controls:
        claims.extend(negative_control_claims())
    return claims


def negative_control_claims():
    """r + s odd on 4n+2: a(2) = 2(r+s) = 2 mod 4, so these must fail."""
    return [CongruenceClaim("control: 4n+2 mod 4, r+s odd", FamilyParams.direct(r, s), 4, 2, 4,
                            expect_violation=True)
            for r, s in ((1, 2), (2, 1), (3, 4))]


def small_modulus_suite(rs_max=6, i_max=2, j_max=2, n_max=1000, negative_controls=False, jobs=1):
    return run_claims(small_modulus_claims(rs_max, i_max, j_max, negative_controls), n_max, jobs)


def power_of_two_claims(k_max=3, i_max=2, j_max=2, r_max=6, k_min=1):
    claims = []
    for k in range(k_min, k_max + 1):
        lo, hi = 2 ** (k + 1), 2 ** (k + 2)
        for r in range(1, r_max + 1):
            claims.append(CongruenceClaim(
                "2n+1 mod 2^(k+1), s=2^k", FamilyParams.small(r, 2 ** k, "s=2^k", k=k), 2, 1, lo))
            for i in range(1, i_max + 1):
                s = 2 ** k * i + 2 ** (k - 1)
                claims.append(CongruenceClaim(
                    "2n+1 mod 2^k, s=2^k i+2^(k-1)",
                    FamilyParams.small(r, s, "s=2^k i+2^(k-1)", i=i, k=k), 2, 1, 2 ** k))
        for i in range(1, i_max + 1):
            for j in range(1, j_max + 1):
                A = FamilyParams.pow2(k, i, j, "A")
                B = FamilyParams.pow2(k, i, j, "B")
                claims += [
                    CongruenceClaim("4n+2 mod 2^(k+1), family A", A, 4, 2, lo),
                    CongruenceClaim("4n+2 mod 2^(k+1), family B", B, 4, 2, lo),
                    CongruenceClaim("4n+3 mod 2^(k+2), family A", A, 4, 3, hi),
                    CongruenceClaim("4n+3 mod 2^(k+2), family B", B, 4, 3, hi),
                    CongruenceClaim("8n+4 mod 2^(k+1), family B", B, 8, 4, lo),
                    CongruenceClaim("8n+5 mod 2^(k+2), family A", A, 8, 5, hi),
                ]
    return claims


def power_of_two_suite(k_max=3, i_max=2, j_max=2, n_max=500, r_max=6, jobs=1):
    return run_claims(power_of_two_claims(k_max, i_max, j_max, r_max), n_max, jobs)


def mod3_claims(k_max=2, derived=True):
    claims = []
    for k in range(k_max + 1):
        for j in range(k + 1):
            A = FamilyParams.mod3(k, j, "A")
            B = FamilyParams.mod3(k, j, "B")
            claims += [
                CongruenceClaim("3n+1 mod 3, (3(k-j)+3, 3k+6)", A, 3, 1, 3),
                CongruenceClaim("3n+2 mod 3, (3(k-j)+3, 3k+6)", A, 3, 2, 3),
                CongruenceClaim("3n+1 mod 3, (3(k-j)+5, 3k+1)", B, 3, 1, 3),
            ]
            if derived:
                # abar_{5,1}(1) = 2, so the 3n+1 form above cannot hold; the
                # argument through phi(q) mod 3 gives 3n+2 for this family
                claims.append(CongruenceClaim("3n+2 mod 3, (3(k-j)+5, 3k+1)", B, 3, 2, 3))
    return claims


def mod3_suite(k_max=2, n_max=500, jobs=1, derived=True):
    return run_claims(mod3_claims(k_max, derived), n_max, jobs)


def qnr_residues(p: int, family: int) -> list[int]:
    """Residues c in [1, p-1] with c (family 1) or c/2 (family 2) a non-residue mod p."""
    half = mod_inverse(2, p)
    if family == 1:
        return [c for c in range(1, p) if legendre(c, p) == -1]
    return [c for c in range(1, p) if legendre(half * c % p, p) == -1]


def mod_p_claims(primes=(3, 5, 7, 11), k_max=2, informational=True):
    claims = []
    for p in primes:
        for k in range(k_max + 1):
            for j in range(k + 1):
                for family in (1, 2):
                    fam = FamilyParams.modp(p, k, j, family)
                    label = ("pn+c mod p, (p(k-j)+p-1, pk+p+1), c non-residue" if family == 1
                             else "pn+c mod p, (p(k-j)+p-1, pk+p), c/2 non-residue")
                    for c in qnr_residues(p, family):
                        claims.append(CongruenceClaim(label, fam, p, c, p))
        if informational:
            fam = FamilyParams.modp(p, 0, 0, 2)
            for c in qnr_residues(p, 2):
                claims.append(CongruenceClaim("pn+c mod p, non-overlined (p-1, p)", fam, p, c, p,
                                              informational=True, colored=True))
    return claims


def mod_p_suite(primes=(3, 5, 7, 11), k_max=2, n_max=500, jobs=1, informational=True):
    return run_claims(mod_p_claims(primes, k_max, informational), n_max, jobs)


def conjecture_claims(k_max=3, i_max=2, j_max=2):
    claims = []
    for k in range(1, k_max + 1):
        for i in range(i_max + 1):
            for j in range(j_max + 1):
                fam = FamilyParams.conjecture(k, i, j)
                claims += [
                    CongruenceClaim("conjecture: 3n+2 mod 2^(k+1)", fam, 3, 2, 2 ** (k + 1)),
                    CongruenceClaim("conjecture: 9n+3 mod 2^(k+2)", fam, 9, 3, 2 ** (k + 2)),
                    CongruenceClaim("conjecture: 9n+6 mod 2^(k+2)", fam, 9, 6, 2 ** (k + 2)),
                ]
    return claims


def conjecture_scan(k_max=3, i_max=2, j_max=2, n_max=1000, jobs=1):
    """Scan the conjectured families; counterexamples are reported, not raised."""
    return run_claims(conjecture_claims(k_max, i_max, j_max), n_max, jobs)


# -- exponent perturbation (transfer) -----------------------------------------


def perturbation_between(base: EtaQuotientSpec, target: EtaQuotientSpec, unit: int):
    """(scale, multiplier) pairs with target = base * prod f_scale^(multiplier * unit)."""
    diff = EtaQuotientSpec(list(target.factors) + [(m, -e) for m, e in base.factors])
    out = []
    for m, e in diff.factors:
        if e % unit:
            raise ValueError(f"exponent change {e} at f{m} is not a multiple of {unit}")
        out.append((m, e // unit))
    return out


def transfer_check(base: EtaQuotientSpec, perturbation, p: int, lam: int, C: int,
                   n_max: int, label: str = "exponent transfer") -> VerificationReport:
    """If A(p^lam n + C) vanishes mod p, check that B(p^lam n + C) does too.

    B is ``base`` with each exponent at scale m shifted by multiplier * p^lam.
    A counterexample is recorded only when the premise holds and B fails.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    step = p ** lam
    if not 1 <= C <= step - 1:
        raise ValueError(f"need 1 <= C <= {step - 1}")
    t0 = time.perf_counter()
    perturbed = base * EtaQuotientSpec([(m, a * step) for m, a in perturbation])
    order = step * n_max + C + 1
    ring = residue_ring(p)
    A = eta_quotient(base, order, ring)
    B = eta_quotient(perturbed, order, ring)
    idx = [step * n + C for n in range(n_max + 1)]
    premise = all(A[k] == 0 for k in idx)
    bad = [(k, B[k]) for k in idx if B[k]] if premise else []
    return VerificationReport(
        label=label,
        description=f"[{base}] -> [{perturbed}] at {step}n+{C} mod {p}",
        params={"base": str(base), "perturbation": [list(x) for x in perturbation],
                "p": p, "lambda": lam, "C": C},
        progression=(step, C),
        modulus=p,
        n_checked=len(idx),
        n_range=(idx[0], idx[-1]),
        counterexamples=bad,
        wall_time=time.perf_counter() - t0,
        notes="premise holds" if premise else "premise fails; implication vacuous",
    )


def transfer_instances():
    """Ten perturbations of the base quotients used for the mod-3 and mod-p families."""
    S = overcolored_spec

    def between(b, t, unit):
        return perturbation_between(S(*b), S(*t), unit)

    return [
        (S(3, 6), between((3, 6), (6, 9), 3), 3, 1, 1),
        (S(3, 6), between((3, 6), (3, 9), 3), 3, 1, 2),
        (S(3, 6), between((3, 6), (9, 12), 3), 3, 1, 1),
        (S(3, 6), [(1, 1)], 3, 2, 4),
        (S(5, 1), between((5, 1), (8, 4), 3), 3, 1, 2),
        (S(5, 1), [(2, 1), (1, -1)], 3, 1, 2),
        (S(4, 6), between((4, 6), (9, 11), 5), 5, 1, 2),
        (S(4, 6), between((4, 6), (4, 11), 5), 5, 1, 3),
        (S(4, 5), between((4, 5), (9, 10), 5), 5, 1, 1),
        (S(6, 8), between((6, 8), (13, 15), 7), 7, 1, 3),
    ]


def transfer_suite(n_max=200, instances=None, jobs=1):
    instances = transfer_instances() if instances is None else instances
    return _map(lambda args: transfer_check(*args, n_max=n_max), instances, jobs)
