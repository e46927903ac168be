"""Independent combinatorial counts and explicit enumeration.

Run: python3 demos/03_counting_oracle.py
"""
from overcolored.oracle import count_overcolored, enumerate_small
from overcolored.qseries import gf_overcolored

print("overpartitions of 3:")
for obj in enumerate_small((1, 1), 3):
    print("  ", obj.render())

print("two colours on even parts, n = 2:")
for obj in enumerate_small((2, 1), 2):
    print("  ", obj.render(2, 1))

# The dynamic program never touches eta quotients, so agreement is a real check.
dp = count_overcolored((3, 2), 200)
eta = list(gf_overcolored((3, 2), 200))
print("DP and eta quotient agree to n = 199:", dp == eta)
print("abar_{3,2}(199) =", dp[-1])
