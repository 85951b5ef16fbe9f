import math

import pytest

from carmseq.korselt import certify
from carmseq.lemmas import (
    Check,
    above_3logk,
    above_eq_n,
    check_lemma2,
    check_lemma4,
    division_triple,
    fermat_prime_candidates,
    lemma3_bound_equality,
    multdep_factor,
    partition_products,
    pigeonhole_pair,
)
from carmseq.special import FactorClass, SequenceTarget, SpecialFactor, special_factorize


def test_thresholds():
    assert above_3logk(10, 27) and not above_3logk(9, 27)  # 3 log 27 = 9.887
    assert not above_eq_n(2780, 27) and above_eq_n(2781, 27)  # 64*4*(log 27)^2 = 2780.8


def test_fermat_candidates():
    assert fermat_prime_candidates(9) == [3, 5, 17]
    assert fermat_prime_candidates(21) == [3, 5, 17, 257]
    assert fermat_prime_candidates(3) == [3, 5]
    with pytest.raises(ValueError):
        fermat_prime_candidates(1)


def test_lemma2():
    t = SequenceTarget(35, 4)
    assert check_lemma2(SpecialFactor(17, 1, 4), t)
    with pytest.raises(ValueError):
        check_lemma2(SpecialFactor(11, 5, 1), t)


def test_multdep():
    t = SequenceTarget(27, 6)
    assert multdep_factor(t) == 13
    assert lemma3_bound_equality(t, 13)
    assert multdep_factor(SequenceTarget(27, 3)) == 7
    assert multdep_factor(SequenceTarget(35, 4)) is None


def test_multdep_agrees_with_classifier():
    for k in range(3, 200, 2):
        for n in range(1, 30):
            t = SequenceTarget(k, n)
            out = special_factorize(t)
            md = [f.p for f, _ in out.factors if f.cls is FactorClass.MULT_DEP]
            assert len(md) <= 1
            p = multdep_factor(t)
            if p is not None:
                assert md == [p], (k, n)
            if md and certify(t).is_carmichael:
                assert p == md[0], (k, n)


def _brute_pair(m, n, k):
    B = math.isqrt(int(n / math.log(k)))
    best = None
    for u in range(-B, B + 1):
        for v in range(-B, B + 1):
            if (u, v) != (0, 0) and math.gcd(u, v) == 1:
                c = abs(u * m + v * n)
                best = c if best is None else min(best, c)
    return B, best


def test_pigeonhole_examples():
    p = pigeonhole_pair(5, 20, 9)
    assert (p.u, p.v, p.combined) == (1, 0, 5)
    p = pigeonhole_pair(40, 100, 27)
    assert (p.u, p.v, p.combined) == (5, -2, 0)
    with pytest.raises(ValueError):
        pigeonhole_pair(5, 9, 27)
    with pytest.raises(ValueError):
        pigeonhole_pair(30, 20, 9)


def test_pigeonhole_against_brute():
    for k in (3, 9, 27, 105):
        for n in range(20, 200, 17):
            for m in range(1, n + 1, 7):
                if n <= 3 * math.log(k):
                    continue
                p = pigeonhole_pair(m, n, k)
                B, best = _brute_pair(m, n, k)
                assert p.box == B
                assert abs(p.combined) == best
                assert p.combined**2 <= 9 * n * math.log(k)


def test_lemma4():
    # n = 6 < 3 log 27: every factor of 1729 is out of scope
    t = SequenceTarget(27, 6)
    for f in certify(t).factors:
        assert check_lemma4(f, t) is Check.VACUOUS
    # force the Carmichael hypothesis to exercise the inequality itself
    t = SequenceTarget(3, 40)
    f7 = SpecialFactor(7, 3, 1, FactorClass.GENERIC)
    assert t.N % 7 == 0
    assert check_lemma4(f7, t, certified=True) is Check.HOLDS
    t = SequenceTarget(3, 201)  # prime; m = n = 201 > 7 sqrt(201 log 3)
    big = SpecialFactor(t.N, 3, 201, FactorClass.GENERIC)
    assert check_lemma4(big, t, certified=True) is Check.FAILS
    assert check_lemma4(big, t) is Check.VACUOUS
    # not Carmichael: vacuous
    t = SequenceTarget(27, 3)
    f = special_factorize(t).factors[0][0]
    assert check_lemma4(f, t) is Check.VACUOUS


def test_partition():
    r = partition_products(SequenceTarget(27, 6))
    assert (r.N1, r.N2, r.N3, r.N4) == (1, 13, 1, 133)
    assert r.N == 1729
    assert r.bounds_checked["N3 < 2^(n/4)"] is Check.VACUOUS
    r = partition_products(SequenceTarget(35, 4))
    assert r.N1 == 51 and r.N4 == 11
    with pytest.raises(ValueError):
        partition_products(SequenceTarget(27, 3))


def test_division_triple():
    t = SequenceTarget(35, 4)
    f = next(f for f in certify(t).factors if f.p == 11)
    tr = division_triple(f, t)
    assert (tr.U, tr.V1, tr.V2, tr.q, tr.r) == (10, 625, 35, 4, 0)
    assert tr.divides and tr.V == 660
    t = SequenceTarget(27, 6)
    for f in certify(t).factors:
        if f.cls is FactorClass.GENERIC:
            tr = division_triple(f, t)
            assert tr.divides
            assert tr.V2 == 27 * (-1) ** tr.q * 2**tr.r
    assert division_triple(SpecialFactor(7, 3, 1).with_class(FactorClass.GENERIC), t).V == 729 + 27
    with pytest.raises(ValueError):
        division_triple(SpecialFactor(13, 3, 2, FactorClass.MULT_DEP), t)
