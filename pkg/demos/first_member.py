"""
1729 as 27*2^6 + 1
==================

Factor the smallest member, look at the class of each prime factor and at
the divisibility that the generic factors satisfy.
"""

from carmseq import SequenceTarget, certify, partition_products
from carmseq.lemmas import division_triple, multdep_factor
from carmseq.special import FactorClass

target = SequenceTarget(27, 6)
cert = certify(target)
print(cert.to_text())

# 13 - 1 = 12 and 1729 - 1 = 1728 = 12^3 are powers of a common base
print("multiplicatively dependent factor:", multdep_factor(target))

# products of the factors in each class
rep = partition_products(target)
print("N1 (Fermat) =", rep.N1, " N2 (MultDep) =", rep.N2,
      " N3 (SmallExponent) =", rep.N3, " N4 (Generic) =", rep.N4)

# each generic factor p = d*2^m + 1 divides d^q + (-1)^q k 2^r, where n = q m + r
for f in cert.factors:
    if f.cls is FactorClass.GENERIC:
        t = division_triple(f, target)
        print(f"p = {f.p}: U = {t.U}, V = {t.V1} + {t.V2} = {t.V}, (U+1) | V: {t.divides}")
