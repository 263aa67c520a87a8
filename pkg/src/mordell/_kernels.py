"""Fused surd + modular-convergent loops for the verification fast paths.

Each kernel is written once in plain Python and compiled with numba.  The
compiled version works in int64, which is exact while every product
``a * h`` stays below 2**63; with ``a <= 2*sqrt(d)`` and ``h < m`` that holds
for ``d, m < JIT_LIMIT``.  Larger inputs run the same source uncompiled on
Python integers.
"""

from __future__ import annotations

import math

import numpy as np

from numba import njit

JIT_LIMIT = 1 << 40


def _half_period(d, m):
    """Walk sqrt(d) to its midpoint, tracking h_i mod m.

    Returns ``(l, central, witness, steps)``.  For even l, ``central`` is
    a_{l/2} and ``witness`` is h_{l/2-1} mod m.  For odd l = 2j+1, ``central``
    is 0 and ``witness`` is h_{j-1} mod m (h_{-1} = 0).  ``steps`` counts
    completed surd steps and equals floor(l/2) except for l = 1.
    """
    n = int(math.sqrt(d))
    while n * n > d:
        n -= 1
    while (n + 1) * (n + 1) <= d:
        n += 1
    P = 0
    Q = 1
    a = n
    h_prev = 0
    h = 1 % m
    steps = 0
    while True:
        P = a * Q - P
        Q = (d - P * P) // Q
        a = (P + n) // Q
        h_prev, h = h, (a * h + h_prev) % m
        steps += 1
        if Q == 1:
            return steps, 0, h_prev, steps
        P_next = a * Q - P
        if P_next == P:
            return 2 * steps, a, h_prev, steps
        Q_next = (d - P_next * P_next) // Q
        if Q_next == Q:
            return 2 * steps + 1, 0, h_prev, steps


def _full_period(d, m):
    """Walk one full period of sqrt(d); return ``(l, h_{l-1} mod m)``."""
    n = int(math.sqrt(d))
    while n * n > d:
        n -= 1
    while (n + 1) * (n + 1) <= d:
        n += 1
    P = 0
    Q = 1
    a = n
    h_prev = 0
    h = 1 % m
    l = 0
    while True:
        P = a * Q - P
        Q = (d - P * P) // Q
        l += 1
        if Q == 1:
            return l, h
        a = (P + n) // Q
        h_prev, h = h, (a * h + h_prev) % m


def _half_period_batch(ps, out_l, out_central, out_witness, out_steps):
    for i in range(ps.shape[0]):
        l, c, w, s = _half_period_jit(ps[i], ps[i])
        out_l[i] = l
        out_central[i] = c
        out_witness[i] = w
        out_steps[i] = s


def _full_period_batch(ps, out_l, out_witness):
    for i in range(ps.shape[0]):
        l, w = _full_period_jit(ps[i], ps[i])
        out_l[i] = l
        out_witness[i] = w


_half_period_jit = njit(cache=True)(_half_period)
_full_period_jit = njit(cache=True)(_full_period)
_half_period_batch_jit = njit(cache=True)(_half_period_batch)
_full_period_batch_jit = njit(cache=True)(_full_period_batch)


def half_period(d: int, m: int) -> tuple[int, int, int, int]:
    if d < JIT_LIMIT and m < JIT_LIMIT:
        return tuple(int(v) for v in _half_period_jit(d, m))
    return _half_period(d, m)


def full_period(d: int, m: int) -> tuple[int, int]:
    if d < JIT_LIMIT and m < JIT_LIMIT:
        return tuple(int(v) for v in _full_period_jit(d, m))
    return _full_period(d, m)


def half_period_batch(ps: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised ``half_period(p, p)`` over an int64 array of primes."""
    ps = np.ascontiguousarray(ps, dtype=np.int64)
    out = [np.zeros(ps.shape[0], dtype=np.int64) for _ in range(4)]
    if ps.size and int(ps.max()) >= JIT_LIMIT:
        for i, p in enumerate(ps.tolist()):
            for arr, v in zip(out, _half_period(p, p)):
                arr[i] = v
    else:
        _half_period_batch_jit(ps, *out)
    return tuple(out)


def full_period_batch(ps: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ``full_period(p, p)`` over an int64 array of primes."""
    ps = np.ascontiguousarray(ps, dtype=np.int64)
    out = [np.zeros(ps.shape[0], dtype=np.int64) for _ in range(2)]
    if ps.size and int(ps.max()) >= JIT_LIMIT:
        for i, p in enumerate(ps.tolist()):
            for arr, v in zip(out, _full_period(p, p)):
                arr[i] = v
    else:
        _full_period_batch_jit(ps, *out)
    return tuple(out)
