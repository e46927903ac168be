"""Truncated power series: exact and residue-ring arithmetic.

Run: python3 demos/01_series_arithmetic.py
"""
from overcolored import ZZ, TruncatedSeries, residue_ring
from overcolored.series import extract_ap, interleave, invert, mul, reduce_mod
from overcolored.qseries import euler_f

# A series knows its truncation order; operations keep the smaller one.
a = TruncatedSeries([1, 1, 0, 0, 0, 0], ZZ)
b = TruncatedSeries([1, -1, 0, 0], ZZ)
print("(1+q)(1-q) =", mul(a, b).coeffs, "order", mul(a, b).order)

# Inverting the Euler product counts ordinary partitions.
f1 = euler_f(1, 15)
print("f1        =", f1.coeffs)
print("1/f1      =", invert(f1).coeffs)

# Kronecker substitution (default) and schoolbook agree, even for huge entries.
big = TruncatedSeries([10 ** 30, -7, 2 ** 90, 5], ZZ)
assert mul(big, big) == mul(big, big, method="schoolbook")
print("big * big agrees across methods")

# Working mod 8 from the start gives the same digits as reducing afterwards.
p = invert(f1 * f1)
assert reduce_mod(p, 8) == invert(reduce_mod(f1, 8) ** 2)
print("1/f1^2 mod 8 =", reduce_mod(p, 8).coeffs)

# Splitting by residue class mod 3 and putting the pieces back is lossless.
parts = [extract_ap(p, c, 3) for c in range(3)]
assert interleave(parts, p.order) == p
print("3-dissection pieces:", [q.coeffs[:4] for q in parts])
