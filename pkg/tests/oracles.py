"""Slow, obviously-correct reference implementations used by the tests."""


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def trial_factor(n: int) -> dict[int, int]:
    out = {}
    i = 2
    while i * i <= n:
        while n % i == 0:
            out[i] = out.get(i, 0) + 1
            n //= i
        i += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def factor_with_spf(n: int, spf) -> dict[int, int]:
    out = {}
    while n > 1:
        p = spf[n]
        out[p] = out.get(p, 0) + 1
        n //= p
    return out


def carmichael_from_factors(N: int, fac: dict[int, int]) -> bool:
    if N < 3 or N % 2 == 0 or len(fac) < 2 or any(e > 1 for e in fac.values()):
        return False
    return all((N - 1) % (p - 1) == 0 for p in fac)


def special_factors_brute(k: int, n: int) -> dict[int, int]:
    """Prime powers of N = k*2^n+1 whose prime p has p-1 = d*2^m, d | k, 1 <= m <= n."""
    N = k * 2**n + 1
    out = {}
    for p, e in trial_factor(N).items():
        q = p - 1
        m = 0
        while q % 2 == 0 and q:
            q //= 2
            m += 1
        if 1 <= m <= n and k % q == 0:
            out[p] = e
    return out


def order_brute(a: int, p: int) -> int:
    x, e = a % p, 1
    while x != 1:
        x = x * a % p
        e += 1
    return e
