from __future__ import annotations

import math

import numpy as np
import pytest
from mpmath import mp, mpf, floor, sqrt

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---------------------------------------------------------------- oracles
# None of these share code with the package.


def naive_primes(lo: int, hi: int) -> list[int]:
    """Trial division."""
    out = []
    for v in range(max(lo, 2), hi):
        if all(v % q for q in range(2, math.isqrt(v) + 1)):
            out.append(v)
    return out


def float_cf(d: int, terms: int) -> list[int]:
    """Partial quotients a_0..a_{terms-1} of sqrt(d) by high-precision floors."""
    mp.dps = 60 + 4 * terms
    x = sqrt(mpf(d))
    out = []
    for _ in range(terms):
        a = int(floor(x))
        out.append(a)
        x = 1 / (x - a)
    return out


def float_cf_period(d: int) -> tuple[int, list[int]]:
    """(n, period) from the floor iteration; the period ends at the first a_i = 2n."""
    n = math.isqrt(d)
    terms = 8
    while True:
        seq = float_cf(d, terms)
        for i in range(1, terms):
            if seq[i] == 2 * n:
                return n, seq[1 : i + 1]
        terms *= 2


def brute_pell(d: int, cap: int = 1_000_000) -> tuple[int, int, int] | None:
    """Least y <= cap with d*y**2 -+ 1 a square; returns (x, y, norm) or None."""
    ys = np.arange(1, cap + 1, dtype=np.int64)
    base = d * ys * ys
    best = None
    for norm in (-1, 1):
        v = base + norm  # x**2 = d*y**2 + norm
        r = np.floor(np.sqrt(v.astype(np.float64))).astype(np.int64)
        r = np.where(r * r > v, r - 1, r)
        r = np.where((r + 1) * (r + 1) <= v, r + 1, r)
        hit = np.flatnonzero(r * r == v)
        if hit.size:
            i = int(hit[0])
            cand = (int(r[i]), int(ys[i]), norm)
            if best is None or cand[1] < best[1]:
                best = cand
    return best


def chakravala(d: int) -> tuple[int, int]:
    """Least solution of x**2 - d*y**2 = 1 by the cyclic (chakravala) method."""
    r = math.isqrt(d)
    a = r if d - r * r <= (r + 1) ** 2 - d else r + 1
    b, k = 1, a * a - d
    while k != 1:
        ak = abs(k)
        m = min(
            (m for m in range(max(1, r - ak), r + ak + 2) if (a + b * m) % ak == 0),
            key=lambda m: abs(m * m - d),
        )
        a, b, k = (a * m + d * b) // ak, (a + b * m) // ak, (m * m - d) // k
    return a, b


def oracle_fundamental(d: int, cap: int = 1_000_000) -> tuple[int, int, int]:
    """Least (x, y, norm) with x**2 - d*y**2 = norm = +-1.

    Brute force over y <= cap; past the cap, the chakravala norm +1 solution
    (X, Y) is the answer unless it is the square of a norm -1 solution, i.e.
    x**2 = (X - 1)/2 and y = Y/(2x) solve x**2 - d*y**2 = -1.
    """
    hit = brute_pell(d, cap)
    if hit is not None:
        return hit
    X, Y = chakravala(d)
    x = math.isqrt((X - 1) // 2)
    if 2 * x * x == X - 1 and Y % (2 * x) == 0:
        y = Y // (2 * x)
        if x * x - d * y * y == -1:
            return x, y, -1
    return X, Y, 1
