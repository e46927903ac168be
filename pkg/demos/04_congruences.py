"""Checking congruences on arithmetic progressions.

Run: python3 demos/04_congruences.py
"""
from overcolored import congruences as cg
from overcolored.report import to_plain

# One claim by hand: abar_{2,3}(4n+3) = 0 mod 4.
claim = cg.CongruenceClaim("4n+3 mod 4", cg.FamilyParams.direct(2, 3), 4, 3, 4)
print(cg.verify_claim(claim, 500).summary())

# A claim that should fail shows what a counterexample looks like.
control = cg.CongruenceClaim("control", cg.FamilyParams.direct(1, 2), 4, 2, 4, expect_violation=True)
rep = cg.verify_claim(control, 50)
print(rep.summary(), "first (index, value):", rep.counterexamples[:3])

# Residues of abar mod 4 and mod 8 are predicted from how n splits into squares.
print(cg.classify_n(27))
print(to_plain([cg.mod4_profile((3, 4), 1000), cg.mod8_profile((3, 4), 1000)]))

# Whole families, run in parallel with deterministic output.
print(to_plain(cg.power_of_two_suite(k_max=1, i_max=1, j_max=1, n_max=200, r_max=2, jobs=4)))

# The mod-3 family with parameters (3(k-j)+5, 3k+1) fails on 3n+1 and holds on 3n+2.
print(to_plain(cg.mod3_suite(k_max=1, n_max=200)))

# Perturbing exponents by multiples of p keeps the vanishing pattern.
print(to_plain(cg.transfer_suite(100)[:3]))
