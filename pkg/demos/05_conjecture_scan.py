"""Searching the conjectured power-of-two families for counterexamples.

Run: python3 demos/05_conjecture_scan.py
"""
import json

from overcolored import congruences as cg
from overcolored.report import suite_document

reports = cg.conjecture_scan(k_max=2, i_max=1, j_max=1, n_max=400, jobs=4)
found = [r for r in reports if r.counterexamples]
print(f"{len(reports)} claims checked to n = 400, {len(found)} with counterexamples")
doc = suite_document("conjecture", reports, grid={"kmax": 2, "imax": 1, "jmax": 1, "nmax": 400})
print(json.dumps(doc["claims"][0], indent=2))
