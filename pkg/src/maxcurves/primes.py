"""Primality, prime powers and small sieves."""

from __future__ import annotations

import numpy as np

from .exact import is_square

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0."""
    if n < 2:
        return n
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q == p**k and p prime, or None."""
    if q < 2:
        return None
    # smallest prime factor by trial division; q < 1e7 at desk scale
    p = None
    if q % 2 == 0:
        p = 2
    else:
        f = 3
        while f * f <= q:
            if q % f == 0:
                p = f
                break
            f += 2
        if p is None:
            return (q, 1)
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


_PRIMES = np.zeros(0, dtype=np.int64)
_PRIMES_LIMIT = 1


def _sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_upto(limit: int) -> np.ndarray:
    """Primes <= limit, from a sieve that grows on demand and is reused."""
    global _PRIMES, _PRIMES_LIMIT
    limit = int(limit)
    if limit < 2:
        return _PRIMES[:0]
    if limit > _PRIMES_LIMIT:
        _PRIMES_LIMIT = max(limit, 2 * _PRIMES_LIMIT)
        _PRIMES = _sieve(_PRIMES_LIMIT)
    return _PRIMES[: np.searchsorted(_PRIMES, limit, side="right")]


def odd_primes_upto(limit: int) -> np.ndarray:
    ps = primes_upto(limit)
    return ps[ps > 2]


def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers q with lo <= q <= hi, ascending."""
    if hi < 2 or hi < lo:
        return []
    out = set()
    for p in primes_upto(hi).tolist():
        pk = p
        while pk <= hi:
            if pk >= lo:
                out.add(pk)
            pk *= p
    return sorted(out)


def nonsquare_prime_powers(lo: int, hi: int) -> list[int]:
    return [q for q in prime_powers(lo, hi) if not is_square(q)]
