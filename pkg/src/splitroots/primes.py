"""Prime enumeration by segmented sieve of Eratosthenes, plus 64-bit primality."""

from __future__ import annotations

import math
from typing import Iterator

import numpy as np

DEFAULT_SEGMENT_SIZE = 1 << 20

# Witness set proving primality for every n < 3.3e24, far beyond 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all inputs below 2**64."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_upto(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (plain, non-segmented sieve)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_in_range(lo: int, hi: int, base_primes: np.ndarray | None = None) -> np.ndarray:
    """Primes in [lo, hi) via one sieved segment.

    base_primes must cover every prime <= sqrt(hi-1); computed when omitted.
    """
    lo = max(lo, 2)
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    if base_primes is None:
        base_primes = sieve_upto(math.isqrt(hi - 1))
    flags = np.ones(hi - lo, dtype=bool)
    for p in base_primes:
        p = int(p)
        if p * p >= hi:
            break
        # clamp to p*p so a base prime inside the window survives its own pass
        start = max(p * p, ((lo + p - 1) // p) * p)
        flags[start - lo :: p] = False
    return np.flatnonzero(flags).astype(np.int64) + lo


def iter_prime_segments(
    lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> Iterator[tuple[int, int, np.ndarray]]:
    """Yield (seg_lo, seg_hi, primes) over consecutive windows covering [lo, hi]."""
    if segment_size < 2:
        raise ValueError("segment_size must be >= 2")
    lo = max(lo, 2)
    if hi < lo:
        return
    base_primes = sieve_upto(math.isqrt(hi))
    seg_lo = lo
    while seg_lo <= hi:
        seg_hi = min(seg_lo + segment_size, hi + 1)
        yield seg_lo, seg_hi, primes_in_range(seg_lo, seg_hi, base_primes)
        seg_lo = seg_hi


def prime_count(limit: int) -> int:
    """pi(limit), counted by segmented sieve."""
    return sum(len(ps) for _, _, ps in iter_prime_segments(2, limit))
