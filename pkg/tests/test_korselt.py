import pytest

from carmseq.korselt import (
    certificate_from,
    BRUTE_LIMIT,
    Reason,
    brute_is_carmichael,
    certify,
    korselt_holds,
)
from carmseq.special import FactorizationOutcome, SequenceTarget, SpecialFactor

from oracles import carmichael_from_factors, trial_factor


def test_1729():
    c = certify(SequenceTarget(27, 6))
    assert c.is_carmichael and c.verdict == "Carmichael"
    assert [f.p for f in c.factors] == [7, 13, 19]
    assert all(ch.divides_N_minus_1 and ch.squarefree for ch in c.checks)
    assert "verdict: Carmichael" in c.to_text()


@pytest.mark.parametrize("k,n,reason", [
    (3, 4, Reason.NON_SQUAREFREE),   # 49
    (9, 1, Reason.PRIME),            # 19
    (9, 10, Reason.COFACTOR_REMAINS),
    (5, 1, Reason.PRIME),            # 11
    (7, 1, Reason.COFACTOR_REMAINS), # 15 = 3*5, and 5 = 2^2+1 needs m <= n
])
def test_reasons(k, n, reason):
    c = certify(SequenceTarget(k, n))
    assert c.reason is reason
    assert c.verdict == f"NotCarmichael({reason.value})"


def test_known_carmichael_of_the_form():
    for k, n in [(35, 4), (69, 4), (77, 5), (705, 2), (255, 15), (729, 6)]:
        assert certify(SequenceTarget(k, n)).is_carmichael


def test_certify_agrees_with_trial_division_grid():
    for k in range(3, 300, 2):
        for n in range(1, 25):
            N = k * 2**n + 1
            if N > 10**10:
                break
            want = carmichael_from_factors(N, trial_factor(N))
            assert certify(SequenceTarget(k, n)).is_carmichael == want, (k, n)


def test_korselt_holds():
    assert korselt_holds([7, 13, 19])
    assert korselt_holds([5, 29, 113, 65537, 114689])
    assert not korselt_holds([7, 13])
    assert not korselt_holds([7, 7, 13])
    assert not korselt_holds([3, 11, 15])


def test_brute_oracle():
    assert brute_is_carmichael(561)
    assert not brute_is_carmichael(563)
    assert not brute_is_carmichael(560)
    assert not brute_is_carmichael(1)
    with pytest.raises(ValueError):
        brute_is_carmichael(BRUTE_LIMIT + 1)


def test_too_few_factors_reason():
    # Two distinct special primes p = d1*2^m1+1, q = d2*2^m2+1 never multiply to
    # k*2^n+1 with d1, d2 | k (it forces m1 = m2 and d1 = d2), so the reason is
    # only reachable from a hand-built outcome.
    t = SequenceTarget(45, 1)  # 91 = 7 * 13
    out = FactorizationOutcome(t, ((SpecialFactor(7, 3, 1), 1), (SpecialFactor(13, 3, 2), 1)), 1)
    assert certificate_from(out).reason is Reason.TOO_FEW_FACTORS


def test_two_special_factors_never_occur():
    for k in range(3, 400, 2):
        for n in range(1, 30):
            assert certify(SequenceTarget(k, n)).reason is not Reason.TOO_FEW_FACTORS
