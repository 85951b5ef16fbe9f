"""Carmichael certification by Korselt's criterion."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .arith import factorize, is_prime
from .special import (
    FactorizationOutcome,
    SequenceTarget,
    SpecialFactor,
    special_factorize,
)

BRUTE_LIMIT = 10**12


class Reason(str, enum.Enum):
    PRIME = "Prime"
    NON_SQUAREFREE = "NonSquarefree"
    COFACTOR_REMAINS = "CofactorRemains"
    TOO_FEW_FACTORS = "TooFewFactors"
    KORSELT_FAILS = "KorseltFails"


@dataclass(frozen=True)
class FactorCheck:
    p: int
    divides_N_minus_1: bool
    squarefree: bool


@dataclass(frozen=True)
class CarmichaelCertificate:
    target: SequenceTarget
    factors: tuple[SpecialFactor, ...]
    checks: tuple[FactorCheck, ...]
    reason: Reason | None  # None means Carmichael
    cofactor: int = 1
    proven: bool = True

    @property
    def is_carmichael(self) -> bool:
        return self.reason is None

    @property
    def verdict(self) -> str:
        return "Carmichael" if self.reason is None else f"NotCarmichael({self.reason.value})"

    def to_text(self) -> str:
        t = self.target
        lines = [f"N = {t.k}*2^{t.n}+1 = {t.N}", f"verdict: {self.verdict}"]
        for f, c in zip(self.factors, self.checks):
            cls = f.cls.value if f.cls else "-"
            lines.append(
                f"  p = {f.p} = {f.d}*2^{f.m}+1  class={cls}"
                f"  (p-1)|(N-1)={'yes' if c.divides_N_minus_1 else 'no'}"
                f"  squarefree={'yes' if c.squarefree else 'no'}"
            )
        if self.cofactor != 1:
            lines.append(f"  unfactored cofactor: {self.cofactor}")
        if not self.proven:
            lines.append("  note: some factor is a BPSW probable prime (not proven)")
        return "\n".join(lines) + "\n"


def certify(target: SequenceTarget) -> CarmichaelCertificate:
    """Certify or refute that k*2**n + 1 is Carmichael.

    Failure reasons are reported in a fixed order: Prime, NonSquarefree,
    CofactorRemains, TooFewFactors, KorseltFails.
    """
    out = special_factorize(target)
    return certificate_from(out)


def certificate_from(out: FactorizationOutcome) -> CarmichaelCertificate:
    N = out.target.N
    factors = tuple(f for f, _ in out.factors)
    checks = tuple(
        FactorCheck(f.p, (N - 1) % (f.p - 1) == 0, e == 1) for f, e in out.factors
    )
    # N prime <=> N itself shows up as its own special factor (d = k, m = n).
    if out.cofactor == 1 and len(out.factors) == 1 and out.factors[0][1] == 1:
        reason = Reason.PRIME
    elif not all(c.squarefree for c in checks):
        reason = Reason.NON_SQUAREFREE
    elif out.cofactor != 1:
        reason = Reason.COFACTOR_REMAINS
    elif len(factors) < 3:
        reason = Reason.TOO_FEW_FACTORS
    elif not all(c.divides_N_minus_1 for c in checks):
        reason = Reason.KORSELT_FAILS
    else:
        reason = None
    return CarmichaelCertificate(out.target, factors, checks, reason, out.cofactor, out.proven)


def korselt_holds(primes: Iterable[int]) -> bool:
    """Korselt's criterion for N = product of the given primes.

    Every entry is checked for primality; repeats make N non-squarefree.
    """
    ps = list(primes)
    if len(ps) < 2 or len(set(ps)) != len(ps) or not all(is_prime(p) for p in ps):
        return False
    N = 1
    for p in ps:
        N *= p
    return all((N - 1) % (p - 1) == 0 for p in ps)


def brute_is_carmichael(N: int) -> bool:
    """Independent oracle: full factorization of N, then Korselt."""
    if N > BRUTE_LIMIT:
        raise ValueError(f"N={N} exceeds the brute-force oracle range {BRUTE_LIMIT}")
    if N < 3 or N % 2 == 0:
        # Carmichael numbers are odd
        return False
    fac = factorize(N)
    if len(fac) < 2 or any(e > 1 for e in fac.values()):
        return False
    return all((N - 1) % (p - 1) == 0 for p in fac)
