"""Exact integer primitives: modular powers, primality, orders, roots.

Everything here works on Python ints and never rounds.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

# Deterministic Miller-Rabin witnesses for every n < 3.3e24, so certainly below 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
PROVEN_LIMIT = 1 << 64

_TRIAL_LIMIT = 10**6


@lru_cache(maxsize=None)
def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def small_primes(limit: int = _TRIAL_LIMIT) -> tuple[int, ...]:
    """All primes <= limit (cached)."""
    return _sieve(limit)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base, exp, modulus)


def nu2(n: int) -> int:
    """2-adic valuation of n >= 1."""
    if n <= 0:
        raise ValueError(f"nu2 needs n >= 1, got {n}")
    return (n & -n).bit_length() - 1


def _strong_probable_prime(n: int, a: int) -> bool:
    d = n - 1
    s = nu2(d)
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _is_square(n: int) -> bool:
    r = math.isqrt(n)
    return r * r == n


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge method A parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if _is_square(n):
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    d = n + 1
    s = nu2(d)
    d >>= s

    # Binary ladder for U_d, V_d, Q^d.
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def primality(n: int) -> tuple[bool, bool]:
    """Return ``(is_prime, proven)``.

    Below 2**64 the answer is proven (deterministic Miller-Rabin witness set).
    Above it the test is Baillie-PSW plus the remaining fixed Miller-Rabin
    bases; a ``True`` there is not proven and ``proven`` is ``False``.
    A ``False`` answer is always a proof of compositeness.
    """
    if n < 2:
        return False, True
    for p in _MR_BASES:
        if n % p == 0:
            return n == p, True
    if n < 1369:  # 37**2
        return True, True
    if n < PROVEN_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES), True
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False, True
    if not _strong_lucas_probable_prime(n):
        return False, True
    return True, False


def is_prime(n: int) -> bool:
    return primality(n)[0]


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"jacobi needs odd n >= 3, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of the odd composite n (Brent's variant)."""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as ``{prime: exponent}``.

    Trial division by primes up to 10**6, then Pollard rho on what remains.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    if n > 1 and n % 2 == 0:
        e = nu2(n)
        out[2] = e
        n >>= e
    # small inputs (divisor lists of k) should not pay for the full table
    table = small_primes(1000) if n < 10**6 else small_primes()
    for p in table:
        if p == 2:
            continue
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _pollard_rho(m)
        stack += [f, m // f]
    return dict(sorted(out.items()))


@lru_cache(maxsize=4096)
def _divisors(k: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(k).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(k: int) -> list[int]:
    if k < 1:
        raise ValueError(f"divisors needs k >= 1, got {k}")
    return list(_divisors(k))


def tau(k: int) -> int:
    return len(_divisors(k))


def omega(k: int) -> int:
    return len(factorize(k))


def mult_order(a: int, p: int) -> int:
    """Multiplicative order of a modulo the prime p.

    p - 1 is factored and each prime is stripped from the exponent while
    a**e stays 1.
    """
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    if math.gcd(a, p) != 1:
        raise ValueError(f"gcd({a}, {p}) != 1")
    if p == 2:
        return 1
    e = p - 1
    for q in factorize(p - 1):
        while e % q == 0 and pow(a, e // q, p) == 1:
            e //= q
    return e


def discrete_log(g: int, h: int, p: int, order: int) -> int | None:
    """Least x in [0, order) with g**x == h (mod p), or None.

    ``order`` must be the multiplicative order of g.  Pohlig-Hellman over the
    factorization of ``order`` with baby-step giant-step inside each prime
    power, so the cost is governed by the largest prime factor of ``order``.
    """
    h %= p
    if pow(h, order, p) != 1:
        return None
    residues, moduli = [], []
    for q, e in factorize(order).items():
        qe = q**e
        g_i = pow(g, order // qe, p)
        h_i = pow(h, order // qe, p)
        gamma = pow(g_i, qe // q, p)  # order q
        x = 0
        for j in range(e):
            target = pow(pow(g_i, -x, p) * h_i % p, qe // q ** (j + 1), p)
            dj = _bsgs(gamma, target, p, q)
            if dj is None:
                return None
            x += dj * q**j
        residues.append(x)
        moduli.append(qe)
    x, m = 0, 1
    for r, mod in zip(residues, moduli):
        # moduli are pairwise coprime prime powers
        t = (r - x) * pow(m, -1, mod) % mod
        x += m * t
        m *= mod
    x %= order
    return x if pow(g, x, p) == h else None


def _bsgs(g: int, h: int, p: int, n: int) -> int | None:
    if n <= 64:
        y = 1
        for i in range(n):
            if y == h:
                return i
            y = y * g % p
        return None
    m = math.isqrt(n - 1) + 1
    table = {}
    y = 1
    for j in range(m):
        table.setdefault(y, j)
        y = y * g % p
    step = pow(g, -m, p)
    y = h
    for i in range(m):
        j = table.get(y)
        if j is not None:
            return i * m + j
        y = y * step % p
    return None


def iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, k >= 1."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    if k == 2:
        return math.isqrt(x)
    # Newton from an overestimate.
    r = 1 << (-(-x.bit_length() // k))
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


@dataclass(frozen=True)
class PowerDecomposition:
    base: int
    exponent: int


def perfect_power_base(x: int) -> PowerDecomposition:
    """Write x = base**exponent with exponent maximal.

    With the exponent maximal the base is minimal and is not itself a
    perfect power.  Exponents are tried from floor(log2 x) downwards.
    """
    if x < 2:
        raise ValueError(f"perfect_power_base needs x >= 2, got {x}")
    for u in range(x.bit_length() - 1, 1, -1):
        r = iroot(x, u)
        if r >= 2 and r**u == x:
            return PowerDecomposition(r, u)
    return PowerDecomposition(x, 1)


def mult_dependent(a: int, b: int) -> tuple[int, int] | None:
    """Minimal (i, j) with a**i == b**j, or None if a, b are independent."""
    if a < 2 or b < 2:
        raise ValueError("mult_dependent needs a, b >= 2")
    pa, pb = perfect_power_base(a), perfect_power_base(b)
    if pa.base != pb.base:
        return None
    g = math.gcd(pa.exponent, pb.exponent)
    return pb.exponent // g, pa.exponent // g
