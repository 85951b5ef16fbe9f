"""Effective bounds behind the finiteness result, evaluated numerically.

Every quantity that would overflow (solution counts, the final bound on n)
is carried as a base-2 logarithm.  Natural logs appear inside the formulas
themselves.  Arithmetic runs in a private mpmath context at ``PREC`` bits so
callers' global precision is never touched.
"""
from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass, field
from mpmath.ctx_mp import MPContext

from .arith import omega, tau

PREC = 192

# Exact integer coefficients of the formulas.
EVERTSE_EXP_COEFF = 60
EVERTSE_DELTA_COEFF = 7
LEMMA8_COEFF = 3 * 121**3
THEOREM1_COEFF = 2 * 10**7


def _ctx(prec: int = PREC) -> MPContext:
    c = MPContext()
    c.prec = prec
    return c


@dataclass(frozen=True)
class MatveevInput:
    gammas: tuple[int, ...]
    bs: tuple[int, ...]

    def __post_init__(self):
        if len(self.gammas) != len(self.bs):
            raise ValueError("gammas and bs must have the same length")
        if len(self.gammas) < 2:
            raise ValueError("need t >= 2")
        if any(g <= 1 for g in self.gammas):
            raise ValueError("every gamma must be > 1")

    @property
    def t(self) -> int:
        return len(self.gammas)

    @property
    def B(self) -> int:
        return max(max(abs(b) for b in self.bs), 1)

    def log_abs_lambda(self, prec: int = PREC):
        """log |prod gamma_i^b_i - 1|, or None when the form vanishes."""
        num = den = 1
        for g, b in zip(self.gammas, self.bs):
            if b >= 0:
                num *= g**b
            else:
                den *= g ** (-b)
        diff = num - den
        if diff == 0:
            return None
        c = _ctx(prec)
        return c.log(abs(diff)) - c.log(den)


def matveev_log_lower_bound(inp: MatveevInput, prec: int = PREC):
    """Lower bound for log |Lambda| (valid when Lambda != 0)."""
    c = _ctx(prec)
    t = inp.t
    prod = c.mpf(1)
    for g in inp.gammas:
        prod *= c.log(g)
    return -c.mpf("1.4") * c.mpf(30) ** (t + 3) * c.mpf(t) ** c.mpf("4.5") * (1 + c.log(inp.B)) * prod


def matveev_c1(prec: int = PREC):
    """1.4 * 30^6 * 3^4.5 * 2 * log 2: the t = 3 constant with gamma = (k, 2, d)."""
    c = _ctx(prec)
    return c.mpf("1.4") * c.mpf(30) ** 6 * c.mpf(3) ** c.mpf("4.5") * 2 * c.log(2)


def evertse_log2_t1(M: int, delta, s: int, prec: int = PREC):
    """log2 of (2^(60 M^2) delta^(-7 M))^s."""
    c = _ctx(prec)
    if isinstance(delta, numbers.Rational):
        delta = c.mpf(delta.numerator) / delta.denominator
    else:
        delta = c.mpf(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    return s * (EVERTSE_EXP_COEFF * M * M + EVERTSE_DELTA_COEFF * M * c.log(1 / delta, 2))


def pontreau_log2_t2(D: int, s: int, prec: int = PREC):
    """log2 of 2^(104 s + 51) D^(6 s + 3) (log(D + 2))^(10 s + 6)."""
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    c = _ctx(prec)
    return (104 * s + 51) + (6 * s + 3) * c.log(D, 2) + (10 * s + 6) * c.log(c.log(D + 2), 2)


def error_term_E(M: int, prec: int = PREC):
    """Slack term that must stay below 1 for t1 t2 < 2^(61 s M^2)."""
    c = _ctx(prec)
    l2 = c.log(2)
    return (
        7 * c.log(c.mpf(M + 3) / 2) / (l2 * M)
        + c.mpf(221) / M**2
        + 7 * c.log(M) / (l2 * M**2)
        + 7 * c.log(c.log(M + 2)) / (l2 * M**2)
    )


def min_M_lower_bound() -> int:
    """2 floor(60 * 2 * log 27) + 1: M for the smallest tau and log k allowed."""
    return 2 * math.floor(60 * 2 * _ctx().log(27)) + 1


def M_for(k: int) -> int:
    c = _ctx()
    return 2 * int(c.floor(60 * tau(k) * c.log(k))) + 1


@dataclass
class BoundReport:
    k: int
    tau: int
    omega: int
    delta0: object
    delta1: object
    delta2: object
    M1: int
    M: int
    delta: object
    s: int
    log2_t1: object
    log2_t2: object
    log2_lemma8: object  # log2 of the triple count bound
    log2_combined: object  # log2 of 24^2 log k * 2^(2 * log2_lemma8)
    threshold_eq_n: object  # 64 tau (log k)^2
    threshold_eq_maxn22: object  # 10^28 (log k)^6 tau
    theorem1_exponent: object  # 2*10^7 tau^2 (log k)^2 omega; the bound is n < 2^this
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def theorem1_exponent_terms(self) -> dict[str, object]:
        return {
            "coefficient": THEOREM1_COEFF,
            "tau^2": self.tau**2,
            "omega": self.omega,
            "(log k)^2": self.theorem1_exponent / (THEOREM1_COEFF * self.tau**2 * self.omega),
        }

    def to_text(self) -> str:
        return report_to_text(self)


_FIELDS = [
    ("k", "integer"),
    ("tau", "integer"),
    ("omega", "integer"),
    ("delta0", "1/(2 sqrt(tau))"),
    ("delta1", "10 ln(k) sqrt(tau)"),
    ("delta2", "1/(20 tau ln k)"),
    ("M1", "floor(3/delta2)"),
    ("M", "2 M1 + 1"),
    ("delta", "1/(M1 + 2)"),
    ("s", "omega + 2"),
    ("log2_t1", "log base 2"),
    ("log2_t2", "log base 2"),
    ("log2_lemma8", "log base 2 of the triple count bound"),
    ("log2_combined", "log base 2 of the bound on n from the triple count"),
    ("threshold_eq_n", "64 tau (ln k)^2"),
    ("threshold_eq_maxn22", "1e28 (ln k)^6 tau"),
    ("theorem1_exponent", "log base 2 of the bound on n"),
]


def report_to_text(rep: BoundReport) -> str:
    c = _ctx()
    lines = []
    for name, label in _FIELDS:
        v = getattr(rep, name)
        sval = str(v) if isinstance(v, int) else c.nstr(v, 20)
        lines.append(f"{name} = {sval}  # {label}")
    for name, ok in rep.checks.items():
        lines.append(f"check.{name} = {'pass' if ok else 'FAIL'}")
    lines.append(
        f"note = the bound n < 2^{c.nstr(rep.theorem1_exponent, 6)} is not desk-verifiable "
        "as a search statement; it is supported only by the property checks above, not by enumeration"
    )
    return "\n".join(lines) + "\n"


def theorem1_report(k: int, prec: int = PREC) -> BoundReport:
    if k < 27 or k % 2 == 0:
        raise ValueError(f"k must be odd and >= 27, got {k}")
    c = _ctx(prec)
    t, w = tau(k), omega(k)
    lk = c.log(k)
    delta0 = 1 / (2 * c.sqrt(t))
    delta1 = 10 * lk * c.sqrt(t)
    delta2 = 1 / (20 * t * lk)
    M1 = int(c.floor(3 / delta2))
    M = 2 * M1 + 1
    delta = c.mpf(1) / (M1 + 2)
    s = w + 2
    log2_t1 = evertse_log2_t1(M, delta, s, prec)
    log2_t2 = pontreau_log2_t2(M, s, prec)
    log2_lemma8 = LEMMA8_COEFF * t * t * lk**2 * w
    log2_combined = c.log(576 * lk, 2) + 2 * log2_lemma8
    exponent = THEOREM1_COEFF * t * t * lk**2 * w
    eq_n = 64 * t * lk**2
    eq_maxn22 = c.mpf(10) ** 28 * lk**6 * t

    checks = {
        "delta in (0,1)": bool(0 < delta < 1),
        "M >= 791": M >= min_M_lower_bound(),
        "E(M) < 1": bool(error_term_E(M, prec) < 1),
        "t1*t2 < 2^(61 s M^2)": bool(log2_t1 + log2_t2 < 61 * s * M * M),
        "61 s M^2 <= lemma8 exponent": bool(61 * s * M * M <= log2_lemma8),
        "simplified exponent >= combined": bool(exponent >= log2_combined),
        "2^exponent > 1e28 (ln k)^6 tau": bool(exponent > c.log(eq_maxn22, 2)),
    }
    return BoundReport(
        k, t, w, delta0, delta1, delta2, M1, M, delta, s,
        log2_t1, log2_t2, log2_lemma8, log2_combined, eq_n, eq_maxn22, exponent, checks,
    )


class Horizon(str, enum.Enum):
    BELOW_ALL = "BelowAllThresholds"
    ABOVE_EQ_N = "AboveEqN"
    ABOVE_EQ_MAXN22 = "AboveEqMaxn22"


def scan_horizon_check(k: int, n: int) -> Horizon:
    """Where (k, n) sits relative to 64 tau (log k)^2 and 10^28 (log k)^6 tau."""
    c = _ctx(max(PREC, 2 * n.bit_length() + 64))
    t = tau(k)
    lk = c.log(k)
    nn = c.mpf(n)
    if nn > c.mpf(10) ** 28 * lk**6 * t:
        return Horizon.ABOVE_EQ_MAXN22
    if nn > 64 * t * lk**2:
        return Horizon.ABOVE_EQ_N
    return Horizon.BELOW_ALL


def final_step_holds(k: int) -> bool:
    """2^(2e7 tau^2 (log k)^2 omega) > 10^28 (log k)^6 tau, compared in log2."""
    c = _ctx()
    t, w, lk = tau(k), omega(k), c.log(k)
    return THEOREM1_COEFF * t * t * lk**2 * w > c.log(c.mpf(10) ** 28 * lk**6 * t, 2)


def exponent_for(tau_k: int, omega_k: int, k: int, prec: int = PREC):
    """2*10^7 tau^2 (log k)^2 omega with tau, omega supplied independently of k."""
    c = _ctx(prec)
    return THEOREM1_COEFF * tau_k**2 * c.log(k) ** 2 * omega_k

