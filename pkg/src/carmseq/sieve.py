"""Congruence conditions on n coming from a prime p | k*2**n + 1.

For p not dividing 2k, p | k*2**n + 1 iff 2**n == -1/k (mod p), which pins
n to at most one residue modulo ord_p(2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .arith import discrete_log, is_prime, mult_order

# Orbits at most this long are walked directly; longer ones use Pohlig-Hellman.
_WALK_LIMIT = 1 << 16


@dataclass(frozen=True)
class CongruenceClass:
    prime: int
    k: int
    modulus: int
    residues: frozenset[int]

    @property
    def residue(self) -> int | None:
        return next(iter(self.residues), None)

    def admits(self, n: int) -> bool:
        return n % self.modulus in self.residues

    def __str__(self) -> str:
        if not self.residues:
            return f"{self.prime} never divides {self.k}*2^n+1"
        return f"{self.prime} | {self.k}*2^n+1  <=>  n = {self.residue} (mod {self.modulus})"


class Compatibility(NamedTuple):
    ok: bool
    residue: int | None
    modulus: int

    def __bool__(self) -> bool:
        return self.ok


def residues_for_prime(p: int, k: int) -> CongruenceClass:
    if p % 2 == 0 or k % p == 0:
        raise ValueError(f"p={p} must not divide 2k={2 * k}")
    e = mult_order(2, p)
    target = -pow(k, -1, p) % p
    if e <= _WALK_LIMIT:
        x, r = 1, None
        for i in range(e):
            if x == target:
                r = i
                break
            x = 2 * x % p
    else:
        r = discrete_log(2, target, p, e)
    return CongruenceClass(p, k, e, frozenset() if r is None else frozenset({r}))


def never_divides(p: int, k: int) -> bool:
    """True if p divides no k*2**n + 1 (including the case p | 2k)."""
    if p % 2 == 0 or k % p == 0:
        return True
    return not residues_for_prime(p, k).residues


def _crt(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = m1 // g * m2
    t = (r2 - r1) // g * pow(m1 // g, -1, m2 // g) % (m2 // g)
    return (r1 + m1 * t) % l, l


def compatible(classes: Iterable[CongruenceClass]) -> Compatibility:
    """Solve the CRT system of all the classes; least witness mod the lcm."""
    r, m = 0, 1
    for c in classes:
        if not c.residues:
            return Compatibility(False, None, m)
        sol = _crt(r, m, c.residue, c.modulus)
        if sol is None:
            return Compatibility(False, None, m * c.modulus // math.gcd(m, c.modulus))
        r, m = sol
    return Compatibility(True, r, m)


def admissible_n(
    k: int,
    primes: Sequence[int],
    n_range: Iterable[int],
    polarity: Sequence[bool] | None = None,
) -> list[int]:
    """n in n_range where each listed prime divides (polarity True) or does
    not divide (False) k*2**n + 1.  Polarity defaults to all True."""
    if polarity is None:
        polarity = [True] * len(primes)
    if len(polarity) != len(primes):
        raise ValueError("one polarity flag per prime")
    classes = [residues_for_prime(p, k) for p in primes]
    return [n for n in n_range if all(c.admits(n) == want for c, want in zip(classes, polarity))]


def qr_allowed_exponents(
    k: int, d: int, modulus: int, b_max: int, b_min: int = 1
) -> set[int]:
    """Residues b mod ``modulus`` for which p = d*2**b + 1 (b_min <= b <= b_max)
    is prime and can divide some k*2**n + 1."""
    if k % d:
        raise ValueError(f"d={d} does not divide k={k}")
    out = set()
    for b in range(b_min, b_max + 1):
        p = (d << b) + 1
        if not is_prime(p) or never_divides(p, k):
            continue
        out.add(b % modulus)
    return out
