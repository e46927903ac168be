"""Eta quotients, theta functions and the identities the congruences rely on.

Run: python3 demos/02_identities.py
"""
from overcolored import qseries as qs

# phi(q) = 1 + 2 sum q^{n^2} built two ways: directly and as f2^5/(f1^2 f4^2).
print("phi(q)  :", qs.phi(1, 17).coeffs)
print("as eta  :", qs.eta_quotient(qs.phi_eta_spec(1), 17).coeffs)

# Overpartitions of n with r colours on even parts and s on odd parts.
print("eta form of the (2,3) generating function:", qs.overcolored_spec(2, 3))
print("first terms:", qs.gf_overcolored((2, 3), 10).coeffs)

# Every report below is an exact coefficient-by-coefficient comparison.
for rep in qs.identity_suite(order=1024, product_order=256, product_max=3):
    print(rep.summary())

# f_m^(p^k) = f_(mp)^(p^(k-1)) modulo p^k
print(qs.verify_binomial_congruence(2, 3, 2, 500).summary())
