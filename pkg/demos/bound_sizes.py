"""
How large is the effective bound?
=================================

For k >= 27 every Carmichael number k*2^n + 1 has n below 2^E(k).  E grows
like tau(k)^2 (log k)^2 omega(k), so the bound is astronomically beyond any
search even for k = 27.
"""

from carmseq.bounds import Horizon, scan_horizon_check, theorem1_report

for k in (27, 105, 3003):
    r = theorem1_report(k)
    print(f"k = {k:5d}  tau = {r.tau:3d}  omega = {r.omega}  M = {r.M:6d}  "
          f"log2 bound on n = {float(r.theorem1_exponent):.4g}  checks ok = {all(r.checks.values())}")

print()
print(theorem1_report(27).to_text())

# where does an actual scan sit relative to the thresholds used in the proof?
for n in (64, 3000, 10**40):
    print(f"k = 27, n = {n}: {scan_horizon_check(27, n).value}")
