"""Periodic continued fractions of square roots via the integer surd recurrence.

A tail of the expansion of sqrt(d) is written ``(P + sqrt(d)) / Q`` with
``Q | d - P**2``.  Starting from ``P = 0, Q = 1`` the recurrence

    P' = a*Q - P,   Q' = (d - P'**2) / Q,   a' = (P' + n) // Q'

with ``n = isqrt(d)`` produces the partial quotients using integers bounded
by ``2*n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainTooSmall, Overflow, PerfectSquare, PeriodGuardExceeded

#: radicands must be strictly below this bound
MAX_RADICAND = 1 << 62


@dataclass(frozen=True)
class SurdState:
    d: int
    index: int
    P: int
    Q: int
    a: int


@dataclass(frozen=True)
class CFExpansion:
    """sqrt(d) = <n; period[0], ..., period[l-1]> with the period repeating."""

    d: int
    n: int
    period: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.period)

    def partial_quotient(self, i: int) -> int:
        """a_i for any i >= 0, cycling through the period."""
        if i == 0:
            return self.n
        return self.period[(i - 1) % self.l]

    def __str__(self) -> str:
        return f"<{self.n}; {', '.join(map(str, self.period))}>"


def check_radicand(d: int) -> int:
    """Validate a radicand and return isqrt(d)."""
    if d < 2:
        raise DomainTooSmall(f"radicand must be >= 2, got {d}")
    if d >= MAX_RADICAND:
        raise Overflow(f"radicand {d} outside supported range d < 2**62")
    n = math.isqrt(d)
    if n * n == d:
        raise PerfectSquare(f"{d} = {n}**2")
    return n


def surd_init(d: int) -> SurdState:
    n = check_radicand(d)
    return SurdState(d=d, index=0, P=0, Q=1, a=n)


def surd_step(s: SurdState) -> SurdState:
    d = s.d
    n = math.isqrt(d)
    P = s.a * s.Q - s.P
    Q, rem = divmod(d - P * P, s.Q)
    if rem or Q <= 0:
        raise ValueError(f"invalid surd state {s}")
    return SurdState(d=d, index=s.index + 1, P=P, Q=Q, a=(P + n) // Q)


def iter_surd(d: int):
    """Yield the surd states of sqrt(d) for index 0, 1, 2, ... forever."""
    s = surd_init(d)
    while True:
        yield s
        s = surd_step(s)


def expand_sqrt(d: int, max_terms: int | None = None) -> CFExpansion:
    """Full period of the continued fraction of sqrt(d).

    Iterates until the state at index 1 recurs.  ``max_terms`` caps the
    period length; by default it is set generously above the known
    ``O(sqrt(d) log d)`` bound.
    """
    n = check_radicand(d)
    if max_terms is None:
        max_terms = 4 * (n + 1) * (d.bit_length() + 1)
    s = surd_step(surd_init(d))
    first = (s.P, s.Q)
    period = [s.a]
    while True:
        s = surd_step(s)
        if (s.P, s.Q) == first:
            break
        if len(period) >= max_terms:
            raise PeriodGuardExceeded(f"period of sqrt({d}) exceeds {max_terms} terms")
        period.append(s.a)
    return CFExpansion(d=d, n=n, period=tuple(period))


def detect_half_period(d: int) -> tuple[int, str, int]:
    """Period length from the midpoint symmetry of the surd states.

    Returns ``(l, parity, j)``: ``P_j == P_{j+1}`` gives ``l = 2j`` (even),
    ``Q_j == Q_{j+1}`` gives ``l = 2j + 1`` (odd).  A state with ``Q == 1``
    past index 0 closes the period directly, which only happens for l = 1.
    """
    it = iter_surd(d)
    next(it)
    s = next(it)
    while True:
        if s.Q == 1:
            return s.index, "odd" if s.index % 2 else "even", s.index // 2
        t = surd_step(s)
        if t.P == s.P:
            return 2 * s.index, "even", s.index
        if t.Q == s.Q:
            return 2 * s.index + 1, "odd", s.index
        s = t
