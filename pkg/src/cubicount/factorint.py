"""Exact integer factorization sized for discriminants below ~10^12.

Trial division by a fixed prime table first, Pollard rho (Brent variant)
for what survives.  Deterministic Miller-Rabin is exact for the 64-bit
range we ever see.
"""

from __future__ import annotations

import math

from .errors import IntegrityError

TRIAL_BOUND = 10**6

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return [i for i in range(limit + 1) if flags[i]]

_SMALL_PRIMES = _sieve(20000)


def primes_up_to(limit: int) -> list[int]:
    """Ascending primes <= limit (sieved fresh above the built-in table)."""
    if limit <= _SMALL_PRIMES[-1]:
        import bisect

        return _SMALL_PRIMES[: bisect.bisect_right(_SMALL_PRIMES, limit)]
    return _sieve(limit)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
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


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd composite without small factors.
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        q = 1
        count = 0
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            q = q * abs(x - y) % n
            count += 1
            if count % 64 == 0:
                d = math.gcd(q, n)
        if d != n:
            return d
        c += 1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {p: exponent}; n must be nonzero."""
    if n == 0:
        raise IntegrityError("factorize(0)")
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
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
            stack.extend([r, r])
            continue
        d = _pollard_rho(m)
        stack.extend([d, m // d])
    return out


def radical(n: int) -> int:
    """Product of the distinct primes dividing |n| (1 for |n| = 1)."""
    out = 1
    for p in factorize(n):
        out *= p
    return out


def squarefree_kernel(n: int) -> tuple[int, int]:
    """Write n = k * s^2 with k squarefree (k carries the sign of n)."""
    sign = -1 if n < 0 else 1
    k, s = 1, 1
    for p, e in factorize(n).items():
        if e % 2:
            k *= p
        s *= p ** (e // 2)
    return sign * k, s


def fundamental_discriminant(n: int) -> tuple[int, int]:
    """Fundamental discriminant D in the square class of n, and F with
    n = D * F^2.  Raises IntegrityError when the square class carries no
    fundamental discriminant (n not congruent to 0 or 1 mod 4 in class)."""
    if n == 0:
        raise IntegrityError("square class of 0")
    k, s = squarefree_kernel(n)
    if k % 4 == 1:
        d = k
    else:
        d = 4 * k
        if s % 2:
            raise IntegrityError(f"{n} is not of the form D*F^2, D fundamental")
        s //= 2
    if d * s * s != n:
        raise IntegrityError(f"decomposition failed for {n}")
    return d, s
