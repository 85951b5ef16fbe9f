import math
import random
from fractions import Fraction
from decimal import Decimal, getcontext, localcontext

import pytest

from carmseq.arith import omega, tau
from carmseq.bounds import (
    Horizon,
    M_for,
    MatveevInput,
    error_term_E,
    evertse_log2_t1,
    exponent_for,
    final_step_holds,
    matveev_c1,
    matveev_log_lower_bound,
    min_M_lower_bound,
    pontreau_log2_t2,
    scan_horizon_check,
    theorem1_report,
)

REL = Decimal("1e-9")


def dec_report(k: int, digits: int = 120) -> dict:
    """Second evaluation of the k-dependent quantities with the decimal module."""
    with localcontext() as ctx:
        ctx.prec = digits
        t, w = tau(k), omega(k)
        lk = Decimal(k).ln()
        ln2 = Decimal(2).ln()
        M1 = int((60 * t * lk).to_integral_value(rounding="ROUND_FLOOR"))
        M = 2 * M1 + 1
        s = w + 2
        log2 = lambda x: Decimal(x).ln() / ln2
        return {
            "delta2_inv": 20 * t * lk,
            "M1": M1,
            "M": M,
            "exponent": 2 * 10**7 * t * t * lk * lk * w,
            "lemma8": 3 * 121**3 * t * t * lk * lk * w,
            "log2_t1": s * (60 * M * M + 7 * M * log2(M1 + 2)),
            "log2_t2": (104 * s + 51) + (6 * s + 3) * log2(M) + (10 * s + 6) * log2(Decimal(M + 2).ln()),
            "eq_n": 64 * t * lk * lk,
        }


def close(a, b: Decimal) -> bool:
    a = Decimal(str(a))
    return abs(a - b) <= REL * abs(b)


@pytest.mark.parametrize("k", [27, 29, 45, 105, 255, 3003, 10**6 + 1])
def test_report_matches_decimal(k):
    r = theorem1_report(k)
    d = dec_report(k)
    assert r.M1 == d["M1"] and r.M == d["M"]
    assert close(1 / r.delta2, d["delta2_inv"])
    assert close(r.theorem1_exponent, d["exponent"])
    assert close(r.log2_lemma8, d["lemma8"])
    assert close(r.log2_t1, d["log2_t1"])
    assert close(r.log2_t2, d["log2_t2"])
    assert close(r.threshold_eq_n, d["eq_n"])
    assert all(r.checks.values()), r.checks


def test_k27_values():
    r = theorem1_report(27)
    assert (r.tau, r.omega, r.s) == (4, 1, 3)
    # floor(240 ln 27) = floor(791.0008...) = 791
    assert r.M1 == 791 and r.M == 1583
    assert close(r.theorem1_exponent, Decimal("3476013007.1402360962"))
    assert abs(float(r.log2_lemma8) - 9.237e8) / 9.237e8 < 1e-3
    assert r.delta == pytest.approx(1 / 793)


def test_report_text():
    text = theorem1_report(27).to_text()
    assert "M1 = 791" in text
    assert "theorem1_exponent = 3476013007.14" in text
    assert "not desk-verifiable" in text
    assert "check.E(M) < 1 = pass" in text


def test_report_rejects_small_or_even_k():
    for k in (25, 28, 1):
        with pytest.raises(ValueError):
            theorem1_report(k)


def test_min_M():
    assert min_M_lower_bound() == 791
    ms = [M_for(k) for k in range(27, 2001, 2)]
    assert min(ms) >= 791
    assert M_for(27) == 1583


def test_error_term():
    assert error_term_E(791) < 1
    assert error_term_E(10**5) < error_term_E(791)
    assert error_term_E(10) > 1


def test_evertse_and_pontreau():
    assert float(evertse_log2_t1(791, Fraction(1, 397), 3)) == pytest.approx(1.12766e8, rel=1e-5)
    assert float(evertse_log2_t1(2, 0.5, 1)) == 254
    assert float(pontreau_log2_t2(791, 3)) == pytest.approx(663.78, abs=0.01)
    assert float(pontreau_log2_t2(1, 1)) == pytest.approx(157.17, abs=0.01)
    with pytest.raises(ValueError):
        evertse_log2_t1(5, 1, 1)
    with pytest.raises(ValueError):
        pontreau_log2_t2(0, 1)


def test_matveev_example():
    inp = MatveevInput((2, 3), (3, -2))
    assert float(inp.log_abs_lambda()) == pytest.approx(math.log(1 / 9), rel=1e-12)
    assert float(matveev_log_lower_bound(inp)) == pytest.approx(-1.2302e9, rel=1e-4)
    assert MatveevInput((2, 4), (2, -1)).log_abs_lambda() is None
    with pytest.raises(ValueError):
        MatveevInput((2,), (1,))
    with pytest.raises(ValueError):
        MatveevInput((1, 3), (1, 1))


def test_matveev_soundness_random():
    rng = random.Random(20240601)
    checked = 0
    while checked < 100:
        t = rng.randint(2, 4)
        gammas = tuple(rng.randint(2, 60) for _ in range(t))
        bs = tuple(rng.randint(-40, 40) for _ in range(t))
        inp = MatveevInput(gammas, bs)
        lam = inp.log_abs_lambda()
        if lam is None:
            continue
        assert matveev_log_lower_bound(inp) <= lam, inp
        checked += 1


def test_matveev_c1():
    want = 1.4 * 30**6 * 3**4.5 * 2 * math.log(2)
    assert float(matveev_c1()) == pytest.approx(want, rel=1e-12)


def test_horizons():
    assert scan_horizon_check(27, 6) is Horizon.BELOW_ALL
    assert scan_horizon_check(27, 2780) is Horizon.BELOW_ALL
    assert scan_horizon_check(27, 2781) is Horizon.ABOVE_EQ_N
    assert scan_horizon_check(27, 3000) is Horizon.ABOVE_EQ_N
    assert scan_horizon_check(27, 10**40) is Horizon.ABOVE_EQ_MAXN22


def test_final_step_and_exponent_for():
    for k in (27, 99, 10**9 + 7):
        assert final_step_holds(k)
    assert float(exponent_for(4, 1, 27)) == pytest.approx(3476013007.14, rel=1e-12)
