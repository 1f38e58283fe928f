"""Integer helpers: primes, p-parts, factorisation."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in ascending order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_prime_power_of(n: int, p: int) -> bool:
    """True for ``n = p**k`` with ``k >= 0``."""
    return n >= 1 and p_part(n, p) == n
