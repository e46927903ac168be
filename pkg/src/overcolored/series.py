"""Truncated formal power series over Z or Z/mZ.

Every operation keeps the smaller of its operands' truncation orders, so a
result never claims more precision than its inputs carry.

Multiplication has two interchangeable paths:

* ``"schoolbook"``: the quadratic Cauchy product. Slow, but it is the
  correctness reference.
* ``"kronecker"``: pack coefficients into one big integer, multiply with
  Python's bigint arithmetic, and unpack the result. This is the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

METHODS = ("kronecker", "schoolbook")
DEFAULT_METHOD = "kronecker"


class RingMismatch(ValueError):
    pass


class NotInvertible(ValueError):
    pass


@dataclass(frozen=True)
class CoefficientRing:
    """Exact integers (``modulus is None``) or residues modulo ``modulus``."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def exact(self) -> bool:
        return self.modulus is None

    def normalize(self, value: int) -> int:
        return int(value) if self.modulus is None else int(value) % self.modulus

    def is_unit(self, value: int) -> bool:
        if self.modulus is None:
            return value in (1, -1)
        from math import gcd

        return gcd(value, self.modulus) == 1

    def unit_inverse(self, value: int) -> int:
        if not self.is_unit(value):
            raise NotInvertible(f"{value} is not a unit in {self}")
        if self.modulus is None:
            return value
        return pow(value, -1, self.modulus)

    def __str__(self):
        return "ZZ" if self.modulus is None else f"Z/{self.modulus}Z"


ZZ = CoefficientRing()


def residue_ring(m: int) -> CoefficientRing:
    return CoefficientRing(m)


class TruncatedSeries:
    """c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N), immutable.

    ``==`` compares coefficients on the common order only; use
    :func:`mismatches` for the indices that differ.
    """

    __slots__ = ("_ring", "_coeffs")

    def __init__(self, coeffs: Iterable[int], ring: CoefficientRing = ZZ,
                 order: int | None = None):
        cs = [ring.normalize(c) for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError("order must be positive")
            cs = cs[:order] + [0] * (order - len(cs))
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "_ring", ring)
        object.__setattr__(self, "_coeffs", tuple(cs))

    @classmethod
    def _raw(cls, coeffs: tuple, ring: CoefficientRing) -> TruncatedSeries:
        # coeffs already canonical; skips normalisation
        obj = cls.__new__(cls)
        object.__setattr__(obj, "_ring", ring)
        object.__setattr__(obj, "_coeffs", coeffs)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"TruncatedSeries([{head}{more}], ring={self._ring}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self._ring != other._ring:
            return False
        n = min(self.order, other.order)
        return self._coeffs[:n] == other._coeffs[:n]

    __hash__ = None

    def __add__(self, other):
        return add(self, _coerce(other, self))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, negate(_coerce(other, self)))

    def __rsub__(self, other):
        return add(_coerce(other, self), negate(self))

    def __neg__(self):
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(self, other)
        return NotImplemented

    def __pow__(self, e: int):
        return power(self, e)

    def __truediv__(self, other):
        return mul(self, invert(_coerce(other, self)))

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries._raw(self._coeffs[:order], self._ring)


def _coerce(x, like: TruncatedSeries) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, int):
        return constant(x, like.order, like.ring)
    raise TypeError(f"cannot combine a series with {type(x).__name__}")


def _check_rings(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")


def constant(c: int, order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    return TruncatedSeries([c], ring, order)


def one(order: int, ring: CoefficientRing = ZZ) -> TruncatedSeries:
    return constant(1, order, ring)


def monomial(k: int, order: int, ring: CoefficientRing = ZZ, c: int = 1) -> TruncatedSeries:
    """c * q^k to the given order (zero if k >= order)."""
    cs = [0] * order
    if k < order:
        cs[k] = c
    return TruncatedSeries(cs, ring)


def from_exponents(exps: Iterable[int], order: int, ring: CoefficientRing = ZZ,
                   weight: int = 1) -> TruncatedSeries:
    """Sum of weight * q^e over the given exponents, with multiplicity."""
    cs = [0] * order
    for e in exps:
        if 0 <= e < order:
            cs[e] += weight
    return TruncatedSeries(cs, ring)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_rings(a, b)
    n = min(a.order, b.order)
    ring = a.ring
    m = ring.modulus
    if m is None:
        cs = tuple(x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n]))
    else:
        cs = tuple((x + y) % m for x, y in zip(a.coeffs[:n], b.coeffs[:n]))
    return TruncatedSeries._raw(cs, ring)


def negate(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries([-c for c in a.coeffs], a.ring)


def scalar_mul(a: TruncatedSeries, c: int) -> TruncatedSeries:
    return TruncatedSeries([c * x for x in a.coeffs], a.ring)


def shift(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by q^k, keeping the order."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    cs = ((0,) * k + a.coeffs)[:a.order]
    return TruncatedSeries._raw(cs, a.ring)


# -- multiplication ---------------------------------------------------------

def _schoolbook(x: Sequence[int], y: Sequence[int], n: int) -> list:
    out = [0] * n
    ys = [(j, c) for j, c in enumerate(y[:n]) if c]
    for i, xi in enumerate(x[:n]):
        if not xi:
            continue
        lim = n - i
        for j, yj in ys:
            if j >= lim:
                break
            out[i + j] += xi * yj
    return out


def _width_bytes(bits: int) -> int:
    return max(1, (bits + 7) // 8)


def _pack(cs: Sequence[int], nbytes: int) -> int:
    """Signed Kronecker packing: sum c_k 2^(8*nbytes*k)."""
    pos = b"".join((c if c > 0 else 0).to_bytes(nbytes, "little") for c in cs)
    neg = b"".join((-c if c < 0 else 0).to_bytes(nbytes, "little") for c in cs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _pack_unsigned(cs: Sequence[int], nbytes: int) -> int:
    if nbytes in (1, 2, 4, 8):
        buf = np.asarray(cs, dtype=np.uint64).astype(f"<u{nbytes}").tobytes()
    else:
        buf = b"".join(c.to_bytes(nbytes, "little") for c in cs)
    return int.from_bytes(buf, "little")


def _kronecker_exact(x: Sequence[int], y: Sequence[int], n: int) -> list:
    x, y = x[:n], y[:n]
    bound = max(map(abs, x)) * max(map(abs, y)) * min(len(x), len(y))
    if bound == 0:
        return [0] * n
    nbytes = _width_bytes(bound.bit_length() + 2)
    w = 8 * nbytes
    prod = _pack(x, nbytes) * _pack(y, nbytes)
    # a bias of 2^(w-1) per slot keeps every slot non-negative, so no borrows
    half = 1 << (w - 1)
    bias = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * n, "little")
    low = (prod + bias) & ((1 << (w * n)) - 1)
    buf = low.to_bytes(nbytes * n, "little")
    return [int.from_bytes(buf[k * nbytes:(k + 1) * nbytes], "little") - half
            for k in range(n)]


def _kronecker_mod(x: Sequence[int], y: Sequence[int], n: int, m: int) -> list:
    x, y = x[:n], y[:n]
    bound = (m - 1) * (m - 1) * min(len(x), len(y))
    if bound == 0:
        return [0] * n
    nbytes = _width_bytes(bound.bit_length())
    if nbytes <= 8:
        nbytes = 1 << (nbytes - 1).bit_length()
    w = 8 * nbytes
    prod = _pack_unsigned(x, nbytes) * _pack_unsigned(y, nbytes)
    low = prod & ((1 << (w * n)) - 1)
    buf = low.to_bytes(nbytes * n, "little")
    if nbytes <= 8:
        arr = np.frombuffer(buf, dtype=f"<u{nbytes}") % np.uint64(m)
        return arr.tolist()
    return [int.from_bytes(buf[k * nbytes:(k + 1) * nbytes], "little") % m
            for k in range(n)]


def mul(a: TruncatedSeries, b: TruncatedSeries, method: str = DEFAULT_METHOD) -> TruncatedSeries:
    """Cauchy product truncated to min(a.order, b.order)."""
    _check_rings(a, b)
    n = min(a.order, b.order)
    ring = a.ring
    if method == "schoolbook":
        cs = _schoolbook(a.coeffs, b.coeffs, n)
        if ring.modulus is not None:
            cs = [c % ring.modulus for c in cs]
    elif method == "kronecker":
        if ring.modulus is None:
            cs = _kronecker_exact(a.coeffs, b.coeffs, n)
        else:
            cs = _kronecker_mod(a.coeffs, b.coeffs, n, ring.modulus)
    else:
        raise ValueError(f"unknown multiplication method {method!r}; expected one of {METHODS}")
    return TruncatedSeries._raw(tuple(cs), ring)


def _invert_recurrence(a: TruncatedSeries) -> TruncatedSeries:
    ring = a.ring
    m = ring.modulus
    inv0 = ring.unit_inverse(a[0])
    terms = [(i, c) for i, c in enumerate(a.coeffs) if c and i > 0]
    b = [0] * a.order
    b[0] = inv0 if m is None else inv0 % m
    for k in range(1, a.order):
        acc = 0
        for i, c in terms:
            if i > k:
                break
            acc += c * b[k - i]
        v = -inv0 * acc
        b[k] = v if m is None else v % m
    return TruncatedSeries._raw(tuple(b), ring)


def invert(a: TruncatedSeries, method: str = DEFAULT_METHOD) -> TruncatedSeries:
    """Multiplicative inverse; the constant term must be a unit.

    The schoolbook path solves the triangular recurrence term by term and
    skips zero coefficients of ``a``. The fast path is Newton iteration
    b <- b(2 - ab), which doubles the number of correct terms each step and
    works over any ring where c_0 is a unit.
    """
    ring = a.ring
    if not ring.is_unit(a[0]):
        raise NotInvertible(f"constant term {a[0]} is not a unit in {ring}")
    if method == "schoolbook":
        return _invert_recurrence(a)
    if method != "kronecker":
        raise ValueError(f"unknown method {method!r}")
    b = TruncatedSeries._raw((ring.normalize(ring.unit_inverse(a[0])),), ring)
    prec = 1
    while prec < a.order:
        prec = min(2 * prec, a.order)
        a_p = a.truncate(prec)
        b_p = TruncatedSeries._raw(b.coeffs + (0,) * (prec - b.order), ring)
        e = mul(a_p, b_p)
        corr = TruncatedSeries._raw(tuple(ring.normalize(-c) for c in e.coeffs), ring)
        corr = add(corr, constant(2, prec, ring))
        b = mul(b_p, corr)
    return b


def power(a: TruncatedSeries, e: int, method: str = DEFAULT_METHOD) -> TruncatedSeries:
    if e < 0:
        return invert(power(a, -e, method), method)
    result = one(a.order, a.ring)
    base = a
    while e:
        if e & 1:
            result = mul(result, base, method)
        e >>= 1
        if e:
            base = mul(base, base, method)
    return result


def scale_variable(a: TruncatedSeries, t: int) -> TruncatedSeries:
    """Substitute q -> q^t, keeping the order."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if t == 1:
        return a
    n = a.order
    cs = [0] * n
    cs[::t] = a.coeffs[:len(range(0, n, t))]
    return TruncatedSeries._raw(tuple(cs), a.ring)


def extract_ap(a: TruncatedSeries, residue: int, step: int) -> TruncatedSeries:
    """b_n = a_{step*n + residue}; the order is ceil((a.order - residue) / step)."""
    if step < 1 or not 0 <= residue < step:
        raise ValueError(f"need 0 <= residue < step, got residue={residue}, step={step}")
    if residue >= a.order:
        raise ValueError("residue lies beyond the truncation order")
    return TruncatedSeries._raw(a.coeffs[residue::step], a.ring)


def interleave(parts: Sequence[TruncatedSeries], order: int) -> TruncatedSeries:
    """Inverse of extract_ap over all residues 0..len(parts)-1."""
    step = len(parts)
    cs = [0] * order
    for c, part in enumerate(parts):
        for n, v in enumerate(part.coeffs):
            k = step * n + c
            if k < order:
                cs[k] = v
    return TruncatedSeries(cs, parts[0].ring)


def reduce_mod(a: TruncatedSeries, m: int) -> TruncatedSeries:
    if not a.ring.exact:
        raise ValueError("reduce_mod expects a series over the exact integers")
    ring = residue_ring(m)
    return TruncatedSeries._raw(tuple(c % m for c in a.coeffs), ring)


def mismatches(a: TruncatedSeries, b: TruncatedSeries) -> list[int]:
    """Indices below the common order where the two series differ."""
    _check_rings(a, b)
    n = min(a.order, b.order)
    return [k for k in range(n) if a[k] != b[k]]
