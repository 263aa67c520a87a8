"""Convergents k_i / h_i of the continued fraction of sqrt(d).

Seeds are ``h_{-1} = 0, k_{-1} = 1`` and ``h_0 = 1, k_0 = n``; after that
``h_{i+1} = a_{i+1} h_i + h_{i-1}`` (same for ``k``).  Two flavors are
provided: exact integer streams, and a rolling pair of residues modulo m that
never grows beyond the modulus.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import islice

from .cf_surd import CFExpansion, check_radicand, iter_surd
from .errors import IndexOutOfRange, Overflow

MAX_MODULUS = 1 << 62


@dataclass(frozen=True)
class ConvergentPair:
    i: int
    h: int
    k: int


@dataclass(frozen=True)
class ModConvergentState:
    m: int
    i: int
    h_prev: int
    h_cur: int


def iter_convergents(exp: CFExpansion) -> Iterator[ConvergentPair]:
    """Exact convergents for i = -1, 0, 1, ... (cycling the period)."""
    h_prev, h = 0, 1
    k_prev, k = 1, exp.n
    yield ConvergentPair(-1, h_prev, k_prev)
    i = 0
    while True:
        yield ConvergentPair(i, h, k)
        i += 1
        a = exp.partial_quotient(i)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev


def convergent_stream(exp: CFExpansion, upto: int) -> list[ConvergentPair]:
    """Pairs for i = -1 .. upto (inclusive), within one period."""
    if not 0 <= upto <= exp.l - 1:
        raise IndexOutOfRange(f"upto={upto} outside 0..{exp.l - 1}")
    return list(islice(iter_convergents(exp), upto + 2))


def convergent_mod_stream(d: int, m: int, upto: int) -> ModConvergentState:
    """Residues of h_{upto-1} and h_upto modulo m, driven by the surd recurrence."""
    check_radicand(d)
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m >= MAX_MODULUS:
        raise Overflow(f"modulus {m} outside supported range m < 2**62")
    if upto < 0:
        raise IndexOutOfRange(f"upto={upto} must be >= 0")
    h_prev, h = 0, 1 % m
    states = iter_surd(d)
    next(states)
    for s in islice(states, upto):
        h_prev, h = h, (s.a * h + h_prev) % m
    return ModConvergentState(m=m, i=upto, h_prev=h_prev, h_cur=h)


def _at(pairs: Sequence[ConvergentPair], i: int) -> ConvergentPair:
    j = i - pairs[0].i
    if not 0 <= j < len(pairs):
        raise IndexOutOfRange(f"convergent index {i} not covered")
    return pairs[j]


def check_wronskian(pairs: Sequence[ConvergentPair]) -> bool:
    """k_i h_{i-1} - k_{i-1} h_i == (-1)**(i-1) at every consecutive pair."""
    for prev, cur in zip(pairs, pairs[1:]):
        if cur.i != prev.i + 1:
            return False
        sign = 1 if (cur.i - 1) % 2 == 0 else -1
        if cur.k * prev.h - prev.k * cur.h != sign:
            return False
    return True


def palindromic_split(exp: CFExpansion, pairs: Sequence[ConvergentPair], i: int) -> bool:
    """h_{l-1} == h_i h_{l-1-i} + h_{i-1} h_{l-2-i}."""
    l = exp.l
    if not 0 <= i <= l - 2:
        raise IndexOutOfRange(f"i={i} outside 0..{l - 2}")
    h = lambda j: _at(pairs, j).h  # noqa: E731
    return h(l - 1) == h(i) * h(l - 1 - i) + h(i - 1) * h(l - 2 - i)


def last_convergent(exp: CFExpansion) -> ConvergentPair:
    """(h_{l-1}, k_{l-1}) without keeping the stream in memory."""
    return next(islice(iter_convergents(exp), exp.l, None))
