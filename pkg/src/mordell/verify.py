"""Per-prime verification of Mordell's conjecture (and the A-A-C analogue).

For p = 3 mod 4 with fundamental solution (x, y) of x**2 - p*y**2 = 1, p
divides y exactly when p divides h_{l/2-1}, the convergent denominator just
before the middle of the period.  The fast path only walks half a period and
keeps h modulo p; the full path builds y exactly and reduces it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import count
from typing import Callable

from . import _kernels
from .cf_surd import MAX_RADICAND, expand_sqrt
from .convergents import last_convergent
from .errors import InternalError, NotCongruent1Mod4, NotCongruent3Mod4, NotPrime, Overflow
from .primes import is_prime

HOLDS = "holds"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclass(frozen=True)
class VerificationRecord:
    p: int
    p_mod_8: int
    l: int
    central: int
    witness_residue: int
    method: str
    verdict: str
    steps: int | None = field(default=None, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS


def _verdict(residue: int) -> str:
    return HOLDS if residue else COUNTEREXAMPLE


def _check(p: int, residue: int) -> None:
    if p % 4 != residue:
        err = NotCongruent3Mod4 if residue == 3 else NotCongruent1Mod4
        raise err(f"{p} is not congruent to {residue} mod 4")
    if p >= MAX_RADICAND:
        raise Overflow(f"{p} outside supported range p < 2**62")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def mordell_fast(p: int) -> VerificationRecord:
    """Half-period modular check: verdict from h_{l/2-1} mod p."""
    _check(p, 3)
    l, central, witness, steps = _kernels.half_period(p, p)
    if l % 2:
        raise InternalError(f"odd period {l} for sqrt({p}) with p = 3 mod 4")
    return VerificationRecord(p, p % 8, l, central, witness, "fast", _verdict(witness), steps)


def mordell_full(p: int) -> VerificationRecord:
    """Exact check: build y = h_{l-1} as an integer and reduce it mod p."""
    _check(p, 3)
    exp = expand_sqrt(p)
    y = last_convergent(exp).h
    central = exp.period[exp.l // 2 - 1] if exp.l % 2 == 0 else 0
    residue = y % p
    return VerificationRecord(p, p % 8, exp.l, central, residue, "full", _verdict(residue))


def cross_check(fast: VerificationRecord, full: VerificationRecord) -> VerificationRecord:
    """Merge a fast and a full record for the same prime into one ``both`` record."""
    if (
        fast.p != full.p
        or fast.verdict != full.verdict
        or fast.l != full.l
        or fast.central != full.central
    ):
        raise InternalError(f"fast and full paths disagree: {fast} vs {full}")
    return VerificationRecord(
        fast.p, fast.p_mod_8, fast.l, fast.central, fast.witness_residue, "both", fast.verdict, fast.steps
    )


def mordell_both(p: int) -> VerificationRecord:
    return cross_check(mordell_fast(p), mordell_full(p))


def aac_fast(p: int) -> VerificationRecord:
    """A-A-C check for p = 1 mod 4 from h_{l-1} mod p over the full period."""
    _check(p, 1)
    l, witness = _kernels.full_period(p, p)
    return VerificationRecord(p, p % 8, l, 0, witness, "fast", _verdict(witness), l)


def aac_full(p: int) -> VerificationRecord:
    _check(p, 1)
    exp = expand_sqrt(p)
    residue = last_convergent(exp).h % p
    return VerificationRecord(p, p % 8, exp.l, 0, residue, "full", _verdict(residue))


def aac_both(p: int) -> VerificationRecord:
    return cross_check(aac_fast(p), aac_full(p))


def classify(p: int) -> tuple[int, int, bool]:
    """(l, central term, whether the period-length and central-term laws hold).

    The laws: l = 2 mod 4 for p = 3 mod 8, l = 0 mod 4 for p = 7 mod 8, and
    the central term is odd and equal to isqrt(p) or isqrt(p) - 1.
    """
    _check(p, 3)
    l, central, _, _ = _kernels.half_period(p, p)
    n = math.isqrt(p)
    period_ok = l % 4 == (2 if p % 8 == 3 else 0)
    central_ok = central % 2 == 1 and central in (n, n - 1)
    return l, central, period_ok and central_ok


def _family(poly: Callable[[int], int], start: int, how_many: int) -> list[int]:
    if how_many < 1:
        raise ValueError(f"count must be >= 1, got {how_many}")
    out: list[int] = []
    for k in count(start):
        v = poly(k)
        if is_prime(v):
            out.append(v)
            if len(out) == how_many:
                return out
    raise AssertionError("unreachable")


def family_period2(how_many: int) -> list[int]:
    """First primes of the form n**2 + 2 (period length 2)."""
    return _family(lambda n: n * n + 2, 1, how_many)


def family_period4(how_many: int) -> list[int]:
    """First odd primes of the form (n+1)**2 - 2 (period length 4)."""
    return _family(lambda m: m * m - 2, 3, how_many)


def family_period6(how_many: int) -> list[int]:
    """First primes 36k**2 + 52k + 19, k >= 0 (period length 6)."""
    return _family(lambda k: 36 * k * k + 52 * k + 19, 0, how_many)


FAMILIES = {2: family_period2, 4: family_period4, 6: family_period6}

