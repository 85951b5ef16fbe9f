"""Executable forms of the structural lemmas on prime factors of N = k*2**n + 1.

Each check returns a :class:`Check`: HOLDS, FAILS, or VACUOUS when the
lemma's hypotheses are not met for the given input.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import _real
from .arith import is_prime, nu2, perfect_power_base, tau
from .korselt import certify
from .special import FactorClass, SequenceTarget, SpecialFactor


class Check(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    VACUOUS = "vacuous"

    @classmethod
    def of(cls, ok: bool) -> "Check":
        return cls.HOLDS if ok else cls.FAILS


def above_3logk(n: int, k: int) -> bool:
    """n > 3 log k."""
    return _real.less(lambda c: 3 * c.log(k), lambda c: c.mpf(n))


def above_eq_n(n: int, k: int) -> bool:
    """n > 64 tau(k) (log k)^2, the range where the four-class bounds apply."""
    t = tau(k)
    return _real.less(lambda c: 64 * t * c.log(k) ** 2, lambda c: c.mpf(n))


# -- Fermat factors -----------------------------------------------------------

def fermat_prime_candidates(k: int) -> list[int]:
    """Primes 2**(2**a) + 1 below k**2."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    out = []
    a = 0
    while (1 << (1 << a)) < k * k:
        p = (1 << (1 << a)) + 1
        if p < k * k and is_prime(p):
            out.append(p)
        a += 1
    return out


def check_lemma2(f: SpecialFactor, target: SequenceTarget) -> bool:
    """A Fermat prime dividing k*2**n + 1 is below k**2."""
    if f.d != 1 or target.N % f.p:
        raise ValueError("check_lemma2 needs a Fermat factor (d = 1) dividing N")
    return f.p < target.k ** 2


# -- the multiplicatively dependent factor ------------------------------------

def multdep_factor(target: SequenceTarget) -> int | None:
    """The only prime p | N with p - 1 and N - 1 multiplicatively dependent.

    With 2**n k = rho**u (u maximal) and u = 2**a * u1, u1 odd, the only
    candidate is rho**(2**a) + 1, and it needs u1 >= 3.
    """
    x = target.N - 1
    pw = perfect_power_base(x)
    a = nu2(pw.exponent)
    u1 = pw.exponent >> a
    if u1 < 3:
        return None
    p = pw.base ** (1 << a) + 1
    if not is_prime(p) or target.N % p:
        return None
    # p <= 2^(n/3) k^(1/3) + 1, i.e. (p-1)^3 <= 2^n k
    if (p - 1) ** 3 > x:
        return None
    return p


def lemma3_bound_equality(target: SequenceTarget, p: int) -> bool:
    """True when p = 2^(n/3) k^(1/3) + 1 holds exactly."""
    return (p - 1) ** 3 == target.N - 1


# -- pigeonhole pair -----------------------------------------------------------

@dataclass(frozen=True)
class PigeonholePair:
    u: int
    v: int
    combined: int
    box: int  # floor(sqrt(n / log k))


def pigeonhole_pair(m: int, n: int, k: int) -> PigeonholePair:
    """Coprime (u, v) != (0, 0) in the box |u|, |v| <= sqrt(n / log k)
    minimizing |u m + v n|.

    Ties go to the smallest (|u|, |v|), then positive u (positive v if u = 0).
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if not above_3logk(n, k):
        raise ValueError(f"need n > 3 log k (n={n}, k={k})")
    # floor(sqrt(X)) = largest B with B^2 <= n / log k, i.e. B^2 log k <= n
    B = math.isqrt(int(n / math.log(k)) + 2)
    while B > 0 and _real.less(lambda c: c.mpf(n), lambda c: B * B * c.log(k)):
        B -= 1
    while _real.less(lambda c: (B + 1) ** 2 * c.log(k), lambda c: c.mpf(n)):
        B += 1
    best = None
    for u in range(-B, B + 1):
        for v in range(-B, B + 1):
            if (u, v) == (0, 0) or math.gcd(u, v) != 1:
                continue
            key = (abs(u * m + v * n), abs(u), abs(v), u < 0 or (u == 0 and v < 0))
            if best is None or key < best[0]:
                best = (key, u, v)
    _, u, v = best
    pair = PigeonholePair(u, v, u * m + v * n, B)
    c = abs(pair.combined)
    if not _real.less(lambda ctx: ctx.mpf(c * c), lambda ctx: 9 * n * ctx.log(k)) and c != 0:
        raise ArithmeticError(f"pigeonhole bound violated for {(m, n, k)}: {pair}")
    return pair


def check_lemma4(f: SpecialFactor, target: SequenceTarget, certified: bool | None = None) -> Check:
    """m < 7 sqrt(n log k) for a non-Fermat, independent factor of a
    Carmichael N; VACUOUS when n <= 3 log k or the factor is out of scope."""
    k, n = target.k, target.n
    if f.cls not in (FactorClass.GENERIC, FactorClass.SMALL_EXPONENT):
        return Check.VACUOUS
    if certified is None:
        certified = certify(target).is_carmichael
    if not certified or not above_3logk(n, k):
        return Check.VACUOUS
    m = f.m
    return Check.of(_real.less(lambda c: c.mpf(m * m), lambda c: 49 * n * c.log(k)))


# -- four-class partition ------------------------------------------------------

@dataclass
class PartitionReport:
    N1: int
    N2: int
    N3: int
    N4: int
    n0: float
    bounds_checked: dict[str, Check] = field(default_factory=dict)
    counts: dict[FactorClass, int] = field(default_factory=dict)

    @property
    def N(self) -> int:
        return self.N1 * self.N2 * self.N3 * self.N4


def partition_products(target: SequenceTarget) -> PartitionReport:
    cert = certify(target)
    if not cert.is_carmichael:
        raise ValueError(f"{target} is not Carmichael: {cert.verdict}")
    k, n = target.k, target.n
    prods = {c: 1 for c in FactorClass}
    counts = {c: 0 for c in FactorClass}
    for f in cert.factors:
        prods[f.cls] *= f.p
        counts[f.cls] += 1
    N1, N2, N3, N4 = (prods[c] for c in FactorClass)
    t = tau(k)
    checks: dict[str, Check] = {}
    checks["N1 < k^4"] = Check.of(N1 < k**4)
    # N2 <= 2^(n/3) k^(1/3) + 1  <=>  (N2 - 1)^3 <= 2^n k
    checks["N2 <= 2^(n/3) k^(1/3) + 1"] = Check.of(N2 == 1 or (N2 - 1) ** 3 <= target.N - 1)
    if above_eq_n(n, k):
        checks["N3 < 2^(n/4)"] = Check.of(N3**4 < 1 << n)
        checks["N4 > 2^(n/3)"] = Check.of(N4**3 > 1 << n)
        c4 = counts[FactorClass.GENERIC]
        # c4 >= sqrt(n) / (24 sqrt(log k))  <=>  576 c4^2 log k >= n
        checks["omega(N4) >= sqrt(n)/(24 sqrt(log k))"] = Check.of(
            not _real.less(lambda c: 576 * c4 * c4 * c.log(k), lambda c: c.mpf(n))
        )
    else:
        for name in ("N3 < 2^(n/4)", "N4 > 2^(n/3)", "omega(N4) >= sqrt(n)/(24 sqrt(log k))"):
            checks[name] = Check.VACUOUS
    n0 = math.sqrt(n) / (2 * math.sqrt(t))
    return PartitionReport(N1, N2, N3, N4, n0, checks, counts)


# -- division triple -----------------------------------------------------------

@dataclass(frozen=True)
class DivisionTriple:
    U: int
    V1: int
    V2: int
    q: int
    r: int
    divides: bool
    dominates: bool  # U > |V1 + V2|^(1 / (20 tau(k) log k))

    @property
    def V(self) -> int:
        return self.V1 + self.V2


def division_triple(f: SpecialFactor, target: SequenceTarget) -> DivisionTriple:
    """Write n = q m + r and form U = d 2^m, V1 = d^q, V2 = (-1)^q k 2^r.

    p = U + 1 divides V1 + V2, which is nonzero when 2^m d and 2^n k are
    multiplicatively independent.
    """
    if f.cls is not FactorClass.GENERIC:
        raise ValueError(f"division_triple needs a Generic factor, got {f.cls}")
    k, n = target.k, target.n
    if target.N % f.p:
        raise ValueError(f"{f.p} does not divide N")
    q, r = divmod(n, f.m)
    U = f.d << f.m
    V1 = f.d**q
    V2 = (-1) ** q * (k << r)
    V = V1 + V2
    if V == 0:
        raise ArithmeticError(f"V1 + V2 = 0 for {f} in {target}")
    t = tau(k)
    # U > |V|^(1/(20 t log k))  <=>  20 t log k log U > log |V|
    dominates = _real.less(
        lambda c: c.log(abs(V)), lambda c: 20 * t * c.log(k) * c.log(U)
    )
    return DivisionTriple(U, V1, V2, q, r, V % (U + 1) == 0, dominates)
