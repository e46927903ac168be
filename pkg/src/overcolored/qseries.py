"""Euler products, theta series, eta-quotients and the identities among them.

``f_m`` denotes the Euler product prod_{j>=1} (1 - q^{mj}). An eta-quotient is
a finite product of f_m^e with integer exponents e.
"""

from __future__ import annotations

import time
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt
from typing import Iterable

from .report import VerificationReport
from .series import (
    ZZ,
    CoefficientRing,
    TruncatedSeries,
    add,
    extract_ap,
    invert,
    mismatches,
    mul,
    one,
    power,
    residue_ring,
    scalar_mul,
    shift,
)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """prod f_m^e over (m, e) in ``factors``; repeated scales add up."""

    factors: tuple = ()

    def __init__(self, factors: Iterable[tuple[int, int]] = ()):
        merged: dict[int, int] = defaultdict(int)
        for m, e in factors:
            if m < 1:
                raise ValueError(f"scale must be positive, got {m}")
            merged[int(m)] += int(e)
        object.__setattr__(
            self, "factors", tuple(sorted((m, e) for m, e in merged.items() if e))
        )

    def __mul__(self, other: EtaQuotientSpec) -> EtaQuotientSpec:
        return EtaQuotientSpec(self.factors + other.factors)

    def __pow__(self, k: int) -> EtaQuotientSpec:
        return EtaQuotientSpec((m, e * k) for m, e in self.factors)

    def exponent(self, m: int) -> int:
        return dict(self.factors).get(m, 0)

    def __str__(self):
        if not self.factors:
            return "1"
        return " ".join(f"f{m}^{e}" for m, e in self.factors)


@dataclass(frozen=True)
class ColorParams:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError(f"need r, s >= 1, got r={self.r}, s={self.s}")


def _params(p) -> ColorParams:
    if isinstance(p, ColorParams):
        return p
    return ColorParams(*p)


# -- building blocks ----------------------------------------------------------

def pentagonal_exponents(limit: int):
    """Yield (sign, k(3k-1)/2) for all k in Z with exponent < limit."""
    yield 1, 0
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 >= limit:
            break
        sign = -1 if k % 2 else 1
        yield sign, e1
        e2 = k * (3 * k + 1) // 2
        if e2 < limit:
            yield sign, e2
        k += 1


def euler_f(m: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """(q^m; q^m)_inf to the given order, via the pentagonal number theorem."""
    if m < 1 or order < 1:
        raise ValueError("need m >= 1 and order >= 1")
    cs = [0] * order
    for sign, e in pentagonal_exponents((order - 1) // m + 1):
        cs[m * e] = sign
    return TruncatedSeries(cs, ring)


@lru_cache(maxsize=512)
def _f1_power(e: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    return power(euler_f(1, order, ring), e)


def eta_quotient(spec: EtaQuotientSpec | Iterable[tuple[int, int]], order: int,
                 ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """Expand prod f_m^e to the given order, working in ``ring`` throughout.

    Each f_m^e is computed as f_1^e at order ceil(order/m) and then spread out
    by q -> q^m. Denominator factors are multiplied together first so that
    only one inversion is needed.
    """
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(spec)
    num = one(order, ring)
    den = one(order, ring)
    for m, e in spec.factors:
        if m >= order:
            continue
        sub = -(-order // m)
        piece = _stretch(_f1_power(abs(e), sub, ring), m, order)
        if e > 0:
            num = mul(num, piece)
        else:
            den = mul(den, piece)
    if any(den.coeffs[1:]):
        num = mul(num, invert(den))
    return num


def _pad(a: TruncatedSeries, order: int) -> TruncatedSeries:
    # zero-fill a short series up to ``order``
    if a.order >= order:
        return a.truncate(order)
    return TruncatedSeries(a.coeffs, a.ring, order)


def _stretch(a: TruncatedSeries, t: int, order: int) -> TruncatedSeries:
    cs = [0] * order
    for k, c in enumerate(a.coeffs):
        if t * k >= order:
            break
        cs[t * k] = c
    return TruncatedSeries(cs, a.ring)


def phi(t: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """phi(q^t) = 1 + 2 sum_{n>=1} q^{t n^2}, from the theta sum."""
    if t < 1:
        raise ValueError("t must be >= 1")
    cs = [0] * order
    cs[0] = 1
    for n in range(1, isqrt((order - 1) // t) + 1):
        cs[t * n * n] = 2
    return TruncatedSeries(cs, ring)


def phi_neg(t: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """phi(-q^t) = 1 + 2 sum_{n>=1} (-1)^n q^{t n^2}."""
    if t < 1:
        raise ValueError("t must be >= 1")
    cs = [0] * order
    cs[0] = 1
    for n in range(1, isqrt((order - 1) // t) + 1):
        cs[t * n * n] = 2 if n % 2 == 0 else -2
    return TruncatedSeries(cs, ring)


def phi_eta_spec(t: int) -> EtaQuotientSpec:
    return EtaQuotientSpec([(2 * t, 5), (t, -2), (4 * t, -2)])


def phi_neg_eta_spec(t: int) -> EtaQuotientSpec:
    return EtaQuotientSpec([(t, 2), (2 * t, -1)])


# -- generating functions -----------------------------------------------------

def overcolored_spec(r: int, s: int) -> EtaQuotientSpec:
    """f_2^{3s-2r} / (f_1^{2s} f_4^{s-r})."""
    return EtaQuotientSpec([(2, 3 * s - 2 * r), (1, -2 * s), (4, r - s)])


def colored_spec(r: int, s: int) -> EtaQuotientSpec:
    return EtaQuotientSpec([(2, s - r), (1, -s)])


def gf_overcolored(p, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    p = _params(p)
    return eta_quotient(overcolored_spec(p.r, p.s), order, ring)


def gf_colored(p, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    p = _params(p)
    return eta_quotient(colored_spec(p.r, p.s), order, ring)


def gf_even_over(r: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """Overpartitions whose even parts come in r colours: f_4^{r-1}/(f_1^2 f_2^{2r-3})."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return eta_quotient([(4, r - 1), (1, -2), (2, -(2 * r - 3))], order, ring)


def gf_odd_over(s: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """Overpartitions whose odd parts come in s colours: f_2^{3s-2}/(f_1^{2s} f_4^{s-1})."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return eta_quotient([(2, 3 * s - 2), (1, -2 * s), (4, -(s - 1))], order, ring)


def theta_product(p, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """phi(q)^s * prod_{i>=1} phi(q^{2^i})^{(r+s) 2^{i-1}}, built from theta sums only.

    Factors with 2^i >= order are 1 + O(q^order) and are dropped, so the
    truncation is exact.
    """
    p = _params(p)
    acc = power(phi(1, order, ring), p.s)
    i = 1
    while (1 << i) < order:
        # raise phi(q)^e at the short order, then substitute q -> q^{2^i}
        t = 1 << i
        base = phi(1, -(-order // t), ring)
        factor = _stretch(power(base, (p.r + p.s) << (i - 1)), t, order)
        acc = mul(acc, factor)
        i += 1
    return acc


# -- identity checks ----------------------------------------------------------

def _report_equal(label: str, description: str, lhs: TruncatedSeries, rhs: TruncatedSeries,
                  params: dict, started: float) -> VerificationReport:
    bad = mismatches(lhs, rhs)
    return VerificationReport(
        label=label,
        description=description,
        params=params,
        n_checked=min(lhs.order, rhs.order),
        counterexamples=[(k, lhs[k]) for k in bad],
        wall_time=time.perf_counter() - started,
    )


def verify_phi(t: int, order: int) -> VerificationReport:
    t0 = time.perf_counter()
    return _report_equal(
        "phi dual build", f"theta sum vs f{2*t}^5/(f{t}^2 f{4*t}^2)",
        phi(t, order), eta_quotient(phi_eta_spec(t), order),
        {"t": t, "order": order}, t0)


def verify_phi_neg(t: int, order: int) -> VerificationReport:
    t0 = time.perf_counter()
    return _report_equal(
        "phi(-q) dual build", f"alternating theta sum vs f{t}^2/f{2*t}",
        phi_neg(t, order), eta_quotient(phi_neg_eta_spec(t), order),
        {"t": t, "order": order}, t0)


def two_dissection_rhs(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """f_8^5/(f_2^5 f_16^2) + 2q f_4^2 f_16^2/(f_2^5 f_8)."""
    even = eta_quotient([(8, 5), (2, -5), (16, -2)], order, ring)
    odd = eta_quotient([(4, 2), (16, 2), (2, -5), (8, -1)], order, ring)
    return add(even, scalar_mul(shift(odd, 1), 2))


def verify_two_dissection(order: int) -> VerificationReport:
    """1/f_1^2 against its even/odd split into eta-quotients in q^2."""
    t0 = time.perf_counter()
    lhs = invert(power(euler_f(1, order), 2))
    return _report_equal(
        "2-dissection of 1/f1^2", "1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)",
        lhs, two_dissection_rhs(order), {"order": order}, t0)


def verify_binomial_congruence(m: int, p: int, k: int, order: int) -> VerificationReport:
    """f_m^{p^k} == f_{mp}^{p^(k-1)} mod p^k, both sides built in Z/p^kZ."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t0 = time.perf_counter()
    ring = residue_ring(p ** k)
    lhs = eta_quotient([(m, p ** k)], order, ring)
    rhs = eta_quotient([(m * p, p ** (k - 1))], order, ring)
    return _report_equal(
        "binomial congruence", f"f{m}^({p}^{k}) = f{m*p}^({p}^{k-1}) mod {p**k}",
        lhs, rhs, {"m": m, "p": p, "k": k, "order": order}, t0)


def _weighted_sum(weights: Iterable[tuple[int, EtaQuotientSpec]], order: int,
                  ring: CoefficientRing) -> TruncatedSeries:
    # sum_m w_m q^m * eta(spec_m); terms with zero weight or m >= order vanish
    acc = TruncatedSeries([0], ring, order)
    for m, (w, spec) in enumerate(weights):
        if w == 0 or m >= order:
            continue
        term = eta_quotient(spec, order - m, ring)
        acc = add(acc, scalar_mul(shift(_pad(term, order), m), w))
    return acc


def _l_sum(r: int, s: int, order: int, ring: CoefficientRing) -> TruncatedSeries:
    return _weighted_sum(
        ((comb(s + r, l) * 2 ** l, EtaQuotientSpec([(4, 2 * l), (16, 4 * l), (8, -6 * l)]))
         for l in range(s + r + 1)), order, ring)


def parity_split_full(r: int, s: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """Generating function after one application of the 2-dissection of 1/f_1^2."""
    pre = eta_quotient([(8, 5 * s), (2, -2 * (s + r)), (4, -(s - r)), (16, -2 * s)], order, ring)
    inner = _weighted_sum(
        ((comb(s, m) * 2 ** m, EtaQuotientSpec([(4, 2 * m), (16, 4 * m), (8, -6 * m)]))
         for m in range(s + 1)), order, ring)
    return mul(pre, inner)


def parity_split_even(r: int, s: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    """sum_n a(2n) q^n as a prefactor times two binomial sums."""
    pre = eta_quotient([(4, 5 * s), (8, 3 * s + 5 * r), (2, -2 * (3 * s + 2 * r)),
                        (16, -2 * (s + r))], order, ring)
    m_sum = _weighted_sum(
        ((comb(s, 2 * m) * 4 ** m, EtaQuotientSpec([(2, 4 * m), (8, 8 * m), (4, -12 * m)]))
         for m in range(s + 1)), order, ring)
    return mul(mul(pre, m_sum), _l_sum(r, s, order, ring))


def parity_split_odd(r: int, s: int, order: int, ring: CoefficientRing = ZZ,
                     f8_offset: int = 4) -> TruncatedSeries:
    """sum_n a(2n+1) q^n as twice a prefactor times two binomial sums.

    The f_8 exponent of the prefactor is 3s + 5r + ``f8_offset``; the
    expansion only closes with an offset of +4.
    """
    pre = eta_quotient([(4, 5 * s - 6), (8, 3 * s + 5 * r + f8_offset),
                        (2, -2 * (3 * s + 2 * r - 1)), (16, -2 * (s + r))], order, ring)
    m_sum = _weighted_sum(
        ((comb(s, 2 * m + 1) * 4 ** m, EtaQuotientSpec([(2, 4 * m), (8, 8 * m), (4, -12 * m)]))
         for m in range(s + 1)), order, ring)
    return scalar_mul(mul(mul(pre, m_sum), _l_sum(r, s, order, ring)), 2)


def verify_parity_split(p, order: int) -> list[VerificationReport]:
    """Three exact checks of the even/odd expansion of the generating function."""
    p = _params(p)
    r, s = p.r, p.s
    params = {"r": r, "s": s, "order": order}
    gf = gf_overcolored(p, order)
    half = -(-order // 2)
    half_odd = order // 2

    t0 = time.perf_counter()
    full = _report_equal("parity split: full", "one-step dissection of the generating function",
                         gf, parity_split_full(r, s, order), params, t0)
    t0 = time.perf_counter()
    even = _report_equal("parity split: even part", "a(2n) as prefactor times binomial sums",
                         extract_ap(gf, 0, 2), parity_split_even(r, s, half), params, t0)
    t0 = time.perf_counter()
    odd = _report_equal("parity split: odd part", "a(2n+1) as 2 * prefactor times binomial sums",
                        extract_ap(gf, 1, 2), parity_split_odd(r, s, half_odd), params, t0)
    return [full, even, odd]


def verify_theta_product(p, order: int, ring: CoefficientRing = ZZ) -> VerificationReport:
    p = _params(p)
    t0 = time.perf_counter()
    return _report_equal(
        "theta product", "generating function = phi(q)^s prod phi(q^(2^i))^((r+s) 2^(i-1))",
        gf_overcolored(p, order, ring), theta_product(p, order, ring),
        {"r": p.r, "s": p.s, "order": order}, t0)


def verify_specializations(r_max: int, order: int) -> list[VerificationReport]:
    """gf_even_over(r) = gf_overcolored(r, 1) and gf_odd_over(s) = gf_overcolored(1, s)."""
    out = []
    for r in range(1, r_max + 1):
        t0 = time.perf_counter()
        out.append(_report_equal("even-colour specialization", "s = 1 reduces to even-coloured overpartitions",
                                 gf_even_over(r, order), gf_overcolored((r, 1), order),
                                 {"r": r, "s": 1, "order": order}, t0))
        t0 = time.perf_counter()
        out.append(_report_equal("odd-colour specialization", "r = 1 reduces to odd-coloured overpartitions",
                                 gf_odd_over(r, order), gf_overcolored((1, r), order),
                                 {"r": 1, "s": r, "order": order}, t0))
    return out


def identity_suite(order: int = 2048, product_order: int = 512,
                   split_params=((1, 1), (2, 3), (3, 2)), product_max: int = 6,
                   phi_scales=(1, 2, 4)) -> list[VerificationReport]:
    reports = [verify_two_dissection(order)]
    for t in phi_scales:
        reports.append(verify_phi(t, order))
        reports.append(verify_phi_neg(t, order))
    for rs in split_params:
        reports.extend(verify_parity_split(rs, order))
    for r in range(1, product_max + 1):
        for s in range(1, product_max + 1):
            reports.append(verify_theta_product((r, s), product_order))
    return reports
