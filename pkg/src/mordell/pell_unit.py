"""Fundamental Pell solutions and the +-2 splitting of the unit for p = 3 mod 4."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .cf_surd import expand_sqrt
from .convergents import convergent_stream, last_convergent
from .errors import InexactSquareRoot, NotCongruent1Mod4, NotCongruent3Mod4, NotPrime
from .primes import is_prime


@dataclass(frozen=True)
class PellSolution:
    d: int
    x: int
    y: int
    norm: int

    def __str__(self) -> str:
        return f"{self.x} + {self.y}*sqrt({self.d})"


@dataclass(frozen=True)
class UnitDecomposition:
    """x -+ 1 = a**2, x +- 1 = p*b**2 with a**2 - p*b**2 = epsilon."""

    p: int
    a: int
    b: int
    epsilon: int


def exact_isqrt(v: int) -> int:
    if v < 0:
        raise InexactSquareRoot(f"negative argument {v}")
    r = math.isqrt(v)
    if r * r != v:
        raise InexactSquareRoot(f"{v} is not a perfect square")
    return r


def _require_prime(p: int, residue: int) -> None:
    if p % 4 != residue:
        err = NotCongruent3Mod4 if residue == 3 else NotCongruent1Mod4
        raise err(f"{p} is not congruent to {residue} mod 4")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def fundamental_solution(d: int) -> PellSolution:
    """(k_{l-1}, h_{l-1}): the least solution of x**2 - d*y**2 = +-1.

    The norm is (-1)**l; no squaring is done to force norm +1.
    """
    exp = expand_sqrt(d)
    last = last_convergent(exp)
    return PellSolution(d=d, x=last.k, y=last.h, norm=-1 if exp.l % 2 else 1)


def decompose_unit(p: int, sol: PellSolution) -> UnitDecomposition:
    if p % 4 != 3:
        raise NotCongruent3Mod4(f"{p} is not congruent to 3 mod 4")
    if sol.norm != 1 or sol.d != p:
        raise ValueError(f"expected a norm +1 solution for {p}, got {sol}")
    x = sol.x
    if p % 8 == 3:
        a, b, eps = exact_isqrt(x - 1), exact_isqrt_div(x + 1, p), -2
    else:
        a, b, eps = exact_isqrt(x + 1), exact_isqrt_div(x - 1, p), 2
    if a * a - p * b * b != eps or a * b != sol.y or math.gcd(a, b) != 1 or not (a & b & 1):
        raise InexactSquareRoot(f"inconsistent decomposition for {p}: a={a}, b={b}")
    return UnitDecomposition(p=p, a=a, b=b, epsilon=eps)


def exact_isqrt_div(v: int, p: int) -> int:
    q, r = divmod(v, p)
    if r:
        raise InexactSquareRoot(f"{p} does not divide {v}")
    return exact_isqrt(q)


def half_identities(p: int) -> tuple[int, int, int]:
    """(l, h_{l/2-1}, c_{l/2-1}) with c_{l/2-1} = h_{l/2} + h_{l/2-2}."""
    _require_prime(p, 3)
    exp = expand_sqrt(p)
    half = exp.l // 2
    pairs = convergent_stream(exp, half)
    h = {pr.i: pr.h for pr in pairs}
    return exp.l, h[half - 1], h[half] + h[half - 2]


def verify_half_identities(p: int) -> bool:
    """Check a = c_{l/2-1}, b = h_{l/2-1}, their coprimality and c**2 - p*h**2 = eps."""
    _, b_half, c_half = half_identities(p)
    dec = decompose_unit(p, fundamental_solution(p))
    return (
        dec.a == c_half
        and dec.b == b_half
        and math.gcd(b_half, c_half) == 1
        and c_half * c_half - p * b_half * b_half == dec.epsilon
    )


def central_term_law(p: int) -> bool:
    """a_{l/2} is odd and equal to isqrt(p) or isqrt(p) - 1."""
    _require_prime(p, 3)
    exp = expand_sqrt(p)
    c = exp.period[exp.l // 2 - 1]
    return c % 2 == 1 and c in (exp.n, exp.n - 1)


def aac_y_mod_p(p: int) -> int:
    """h_{l-1} mod p over the full period of sqrt(p), for p = 1 mod 4.

    Zero exactly when p divides the sqrt(p)-coefficient of the fundamental
    unit of the ring of integers (that unit is the Z[sqrt(p)] unit or its
    cube root, and the cube's trace term is prime to p).
    """
    _require_prime(p, 1)
    return _kernels.full_period(p, p)[1]
