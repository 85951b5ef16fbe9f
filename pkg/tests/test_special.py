import pytest
from hypothesis import given, settings, strategies as st

from carmseq.special import (
    FactorClass,
    SequenceTarget,
    SpecialFactor,
    candidate_primes,
    classify_factor,
    is_fermat_exponent,
    special_factorize,
)

from oracles import special_factors_brute, trial_is_prime


def test_target_validation():
    assert SequenceTarget(27, 6).N == 1729
    with pytest.raises(ValueError, match="k=27, n=6"):
        SequenceTarget(54, 5)
    with pytest.raises(ValueError):
        SequenceTarget(1, 5)
    with pytest.raises(ValueError):
        SequenceTarget(27, 0)
    assert SequenceTarget(1, 5, allow_unit=True).N == 33


def test_from_N_normalizes():
    t = SequenceTarget.from_N(1729)
    assert (t.k, t.n) == (27, 6)
    t = SequenceTarget.from_N(65537)
    assert (t.k, t.n) == (1, 16)
    with pytest.raises(ValueError):
        SequenceTarget.from_N(100)


def test_special_factor_checks_form():
    SpecialFactor(13, 3, 2)
    with pytest.raises(ValueError):
        SpecialFactor(11, 3, 2)


def test_candidate_primes_ascending_and_complete():
    got = [f.p for f in candidate_primes(27, 6)]
    want = sorted({d * 2**m + 1 for d in (1, 3, 9, 27) for m in range(1, 7) if trial_is_prime(d * 2**m + 1)})
    assert got == want


def test_fermat_exponent():
    assert [m for m in range(1, 40) if is_fermat_exponent(m)] == [1, 2, 4, 8, 16, 32]


def test_factorize_1729():
    out = special_factorize(SequenceTarget(27, 6))
    assert out.primes == [7, 13, 19]
    assert out.cofactor == 1 and out.proven
    assert [f.cls for f, _ in out.factors] == [FactorClass.GENERIC, FactorClass.MULT_DEP, FactorClass.GENERIC]
    assert out.product() == 1729


def test_classes():
    t = SequenceTarget(35, 4)  # 561 = 3 * 11 * 17
    out = special_factorize(t)
    cls = {f.p: f.cls for f, _ in out.factors}
    assert cls == {3: FactorClass.FERMAT, 11: FactorClass.GENERIC, 17: FactorClass.FERMAT}
    with pytest.raises(ValueError):
        classify_factor(SpecialFactor(13, 3, 2), SequenceTarget(35, 4))


def test_small_exponent_boundary():
    # 7 | 3*2^n+1 iff n = 1 (mod 3); tau(3) = 2 so SmallExponent iff 8 < n
    for n in (7, 10, 13):
        t = SequenceTarget(3, n)
        out = special_factorize(t)
        c = {f.p: f.cls for f, _ in out.factors}[7]
        assert c is (FactorClass.SMALL_EXPONENT if n > 8 else FactorClass.GENERIC)


def test_against_brute_oracle_grid():
    for k in range(3, 120, 2):
        for n in range(1, 22):
            out = special_factorize(SequenceTarget(k, n))
            got = {f.p: e for f, e in out.factors}
            assert got == special_factors_brute(k, n), (k, n)
            assert out.product() == k * 2**n + 1


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 2000).map(lambda x: 2 * x + 1), st.integers(1, 30))
def test_against_brute_oracle_random(k, n):
    out = special_factorize(SequenceTarget(k, n))
    assert {f.p: e for f, e in out.factors} == special_factors_brute(k, n)
    for f, _ in out.factors:
        assert k % f.d == 0 and 1 <= f.m <= n


def test_large_target_terminates():
    out = special_factorize(SequenceTarget(27, 300))
    assert out.product() == 27 * 2**300 + 1
