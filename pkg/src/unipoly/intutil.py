"""Small integer number theory helpers (primality, factorization, primes)."""

from __future__ import annotations

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, ascending, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in the closed interval [lo, hi]."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def split_prime_power(n: int) -> tuple[int, int]:
    """Write n = p^a with p prime, or raise ValueError."""
    if n < 2:
        raise ValueError(f"{n} is not a prime power")
    ps = prime_factors(n)
    if len(ps) != 1:
        raise ValueError(f"{n} is not a prime power")
    p = ps[0]
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    if n != 1:
        raise ValueError("not a prime power")
    return p, a
