"""Prime enumeration (segmented sieve) and deterministic primality testing."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import RangeTooLarge

MAX_VALUE = 1 << 62
MAX_SPAN = 1 << 28

RESIDUE_FILTERS = ("3 mod 4", "1 mod 4", "all")

# Deterministic for every n < 3.3 * 10**24, so certainly below 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test, exact for all n < 2**64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> np.ndarray:
    """Primes <= limit via a plain sieve."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def sieve_segment(lo: int, hi: int, residue_filter: str = "all") -> list[int]:
    """All primes in ``[lo, hi)`` matching ``residue_filter``, ascending.

    ``residue_filter`` is one of ``"3 mod 4"``, ``"1 mod 4"`` or ``"all"``.
    """
    if residue_filter not in RESIDUE_FILTERS:
        raise ValueError(f"unknown residue filter {residue_filter!r}")
    return sieve_segment_array(lo, hi, residue_filter).tolist()


def sieve_segment_array(lo: int, hi: int, residue_filter: str = "all") -> np.ndarray:
    lo = max(lo, 0)
    if hi > MAX_VALUE:
        raise RangeTooLarge(f"upper bound {hi} exceeds 2**62")
    if hi - lo > MAX_SPAN:
        raise RangeTooLarge(f"segment width {hi - lo} exceeds {MAX_SPAN}")
    if math.isqrt(hi) > MAX_SPAN:
        raise RangeTooLarge(f"base sieve for upper bound {hi} exceeds {MAX_SPAN}")
    if hi <= lo:
        return np.array([], dtype=np.int64)

    flags = np.ones(hi - lo, dtype=bool)
    if lo < 2:
        flags[: 2 - lo] = False
    for p in _base_primes(math.isqrt(hi - 1)):
        p = int(p)
        start = max(p * p, -(-lo // p) * p)
        if start >= hi:
            continue
        flags[start - lo :: p] = False

    primes = np.flatnonzero(flags).astype(np.int64) + lo
    if residue_filter == "3 mod 4":
        primes = primes[primes % 4 == 3]
    elif residue_filter == "1 mod 4":
        primes = primes[primes % 4 == 1]
    return primes
