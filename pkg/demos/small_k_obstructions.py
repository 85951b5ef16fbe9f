"""
Why k = 21 never works
======================

A prime p that divides 21*2^n + 1 pins n to a residue class modulo the order
of 2 mod p.  Two such classes can be incompatible, which rules out some
factor combinations outright.
"""

from carmseq.harness import exhaustive_small_scan, theorem2_verdict
from carmseq.sieve import compatible, qr_allowed_exponents, residues_for_prime

k = 21
for p in (5, 13, 17, 29, 97, 337, 673):
    print(residues_for_prime(p, k))

pair = [residues_for_prime(17, k), residues_for_prime(337, k)]
sol = compatible(pair)
print("17 and 337 together:", f"n = {sol.residue} (mod {sol.modulus})")
print("adding 673:", compatible(pair + [residues_for_prime(673, k)]).ok)

# which exponents b leave 3*2^b + 1 prime and able to divide some 21*2^n + 1
print("b mod 12 for d = 3:", sorted(qr_allowed_exponents(k, 3, 12, 200, b_min=3)))
print("b mod 12 for d = 7:", sorted(qr_allowed_exponents(k, 7, 12, 200, b_min=3)))

# the direct search for every odd k below 27
print("hits for odd k <= 25, n <= 256:", exhaustive_small_scan())

v = theorem2_verdict()
print(f"{sum(r.passed for r in v.claims)}/{len(v.claims)} finite claims hold; passed = {v.passed}")
