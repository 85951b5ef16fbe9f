"""Special-form factors d*2**m + 1 (d | k) of N = k*2**n + 1.

If N is Carmichael, Korselt forces every prime p | N to have p - 1 | N - 1,
so p = d*2**m + 1 with d | k and m <= n.  Trial division against exactly
these candidates therefore either factors N completely or proves it is not
Carmichael.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .arith import divisors, is_prime, mult_dependent, nu2, primality, tau


class FactorClass(str, enum.Enum):
    """Four-way partition of the prime factors of N, tested in this order."""

    FERMAT = "Fermat"
    MULT_DEP = "MultDep"
    SMALL_EXPONENT = "SmallExponent"
    GENERIC = "Generic"


@dataclass(frozen=True)
class SequenceTarget:
    """The number N = k*2**n + 1 with k odd.

    k = 1 is only accepted with ``allow_unit=True``; the sequence 2**n + 1 is
    handled separately and most of the library assumes k >= 3.
    """

    k: int
    n: int
    allow_unit: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.k % 2 == 0:
            e = nu2(self.k)
            raise ValueError(
                f"k must be odd; normalize to k={self.k >> e}, n={self.n + e} "
                f"(same N = {self.N})"
            )
        if self.k < 3 and not self.allow_unit:
            raise ValueError("k must be >= 3 (pass allow_unit=True for k = 1)")

    @property
    def N(self) -> int:
        return (self.k << self.n) + 1

    @classmethod
    def from_N(cls, N: int) -> "SequenceTarget":
        """Split an odd N >= 3 as N - 1 = k*2**n; k = 1 is allowed."""
        if N < 3 or N % 2 == 0:
            raise ValueError(f"N must be odd and >= 3, got {N}")
        n = nu2(N - 1)
        return cls((N - 1) >> n, n, allow_unit=True)


@dataclass(frozen=True)
class SpecialFactor:
    p: int
    d: int
    m: int
    cls: FactorClass | None = None

    def __post_init__(self):
        if self.p != (self.d << self.m) + 1:
            raise ValueError(f"{self.p} != {self.d}*2^{self.m}+1")

    def with_class(self, cls: FactorClass) -> "SpecialFactor":
        return SpecialFactor(self.p, self.d, self.m, cls)


@dataclass(frozen=True)
class FactorizationOutcome:
    target: SequenceTarget
    factors: tuple[tuple[SpecialFactor, int], ...]
    cofactor: int
    proven: bool = True  # False if some factor is only a BPSW probable prime

    @property
    def primes(self) -> list[int]:
        return [f.p for f, _ in self.factors]

    def product(self) -> int:
        out = self.cofactor
        for f, e in self.factors:
            out *= f.p**e
        return out


def _pairs(k: int, n_max: int) -> list[tuple[int, int, int]]:
    return sorted(((d << m) + 1, d, m) for d in divisors(k) for m in range(1, n_max + 1))


def candidate_primes(k: int, n_max: int) -> Iterator[SpecialFactor]:
    """Yield every prime d*2**m + 1 with d | k, 1 <= m <= n_max, ascending."""
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be odd and positive, got {k}")
    for p, d, m in _pairs(k, n_max):
        if is_prime(p):
            yield SpecialFactor(p, d, m)


def is_fermat_exponent(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def classify_factor(f: SpecialFactor, target: SequenceTarget) -> FactorClass:
    """First matching class: Fermat, MultDep, SmallExponent, Generic.

    SmallExponent means m < sqrt(n) / (2 sqrt(tau(k))), tested exactly as
    4 m^2 tau(k) < n.
    """
    k, n = target.k, target.n
    if k % f.d:
        raise ValueError(f"d={f.d} does not divide k={k}")
    if target.N % f.p:
        raise ValueError(f"{f.p} does not divide N={target.N}")
    if f.d == 1:
        return FactorClass.FERMAT
    if mult_dependent(f.p - 1, target.N - 1) is not None:
        return FactorClass.MULT_DEP
    if 4 * f.m * f.m * tau(k) < n:
        return FactorClass.SMALL_EXPONENT
    return FactorClass.GENERIC


def special_factorize(target: SequenceTarget) -> FactorizationOutcome:
    """Strip every special-form prime from N, recording multiplicities.

    Candidates are tried in ascending order; each is checked for divisibility
    before primality, so only actual divisors pay for a primality test.
    """
    k, n, N = target.k, target.n, target.N
    rest = N
    proven = True
    found: list[tuple[SpecialFactor, int]] = []
    for q, d, m in _pairs(k, n):
        if q > rest:
            break
        if rest % q:
            continue
        ok, pr = primality(q)
        if not ok:
            continue
        proven &= pr
        e = 0
        while rest % q == 0:
            rest //= q
            e += 1
        f = SpecialFactor(q, d, m)
        found.append((f.with_class(classify_factor(f, target)), e))
    return FactorizationOutcome(target, tuple(found), rest, proven)
