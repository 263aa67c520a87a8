import math

import pytest
from mpmath import mp, mpf, nint, sqrt

from mordell.cf_surd import expand_sqrt
from mordell.convergents import convergent_stream
from mordell.errors import InexactSquareRoot, NotCongruent1Mod4, NotCongruent3Mod4, NotPrime, PerfectSquare
from mordell.pell_unit import (
    PellSolution,
    UnitDecomposition,
    aac_y_mod_p,
    central_term_law,
    decompose_unit,
    exact_isqrt,
    fundamental_solution,
    half_identities,
    verify_half_identities,
)
from mordell.primes import sieve_segment

from conftest import chakravala, oracle_fundamental


@pytest.mark.parametrize(
    "d, x, y, norm",
    [(3, 2, 1, 1), (7, 8, 3, 1), (10017223, 10017224, 3165, 1), (13, 18, 5, -1), (61, 29718, 3805, -1)],
)
def test_fundamental_solution_examples(d, x, y, norm):
    assert fundamental_solution(d) == PellSolution(d, x, y, norm)


def test_fundamental_solution_rejects_square():
    with pytest.raises(PerfectSquare):
        fundamental_solution(49)


@pytest.mark.parametrize("d", [d for d in range(2, 120) if math.isqrt(d) ** 2 != d])
def test_fundamental_solution_brute_force_small(d):
    x, y, norm = oracle_fundamental(d, cap=20_000)
    assert fundamental_solution(d) == PellSolution(d, x, y, norm)


@pytest.mark.parametrize(
    "p, x, y, a, b, eps",
    [(3, 2, 1, 1, 1, -2), (7, 8, 3, 3, 1, 2), (19, 170, 39, 13, 3, -2)],
)
def test_decompose_examples(p, x, y, a, b, eps):
    assert decompose_unit(p, PellSolution(p, x, y, 1)) == UnitDecomposition(p, a, b, eps)


def test_decompose_errors():
    with pytest.raises(NotCongruent3Mod4):
        decompose_unit(13, fundamental_solution(13))
    with pytest.raises(InexactSquareRoot):
        decompose_unit(7, PellSolution(7, 10, 3, 1))
    with pytest.raises(InexactSquareRoot):
        exact_isqrt(8)


@pytest.mark.parametrize("p", [7, 3, 19, 23, 10017223])
def test_half_identities_examples(p):
    assert verify_half_identities(p)


def test_half_identity_values():
    assert half_identities(7) == (4, 1, 3)
    assert half_identities(3) == (2, 1, 1)
    assert half_identities(19) == (6, 3, 13)


@pytest.mark.parametrize("p", [7, 19, 3, 23, 31])
def test_central_term_examples(p):
    assert central_term_law(p)


def test_preconditions():
    with pytest.raises(NotCongruent3Mod4):
        central_term_law(13)
    with pytest.raises(NotPrime):
        central_term_law(15)
    with pytest.raises(NotCongruent1Mod4):
        aac_y_mod_p(7)


def test_aac_examples():
    assert aac_y_mod_p(13) == 5
    assert aac_y_mod_p(5) == 1
    assert aac_y_mod_p(29) == 13  # 70**2 - 29*13**2 = -1


P3_1E4 = sieve_segment(3, 10**4 + 1, "3 mod 4")


def test_unit_laws_all_primes_to_1e4():
    for p in P3_1E4:
        sol = fundamental_solution(p)
        dec = decompose_unit(p, sol)
        assert sol.norm == 1
        assert dec.epsilon == (-2 if p % 8 == 3 else 2), p
        assert dec.a * dec.b == sol.y and sol.y % 2 == 1, p
        assert verify_half_identities(p), p
        assert central_term_law(p), p


def test_h2_bound_all_primes_to_1e5():
    for p in sieve_segment(3, 10**5 + 1):
        exp = expand_sqrt(p)
        if exp.l < 3:
            continue
        h2 = convergent_stream(exp, 2)[-1].h
        assert h2 <= 2 * exp.n, p


def _ring_unit_coefficient(p: int) -> int:
    """u of the fundamental unit (t + u sqrt(p))/2 of the integers of Q(sqrt(p)).

    Independent of the package.  The chakravala unit of Z[sqrt(p)] is eps**2
    or eps**6 for the fundamental ring unit eps, so try the sixth root first
    and accept a root only if it is exactly a unit.
    """
    X, Y = chakravala(p)
    mp.dps = 3 * len(str(X)) + 30
    eta = mpf(X) + mpf(Y) * sqrt(p)
    for root in (6, 2):
        eps = eta ** (mpf(1) / root)
        for norm in (-1, 1):
            t = int(nint(eps + norm / eps))
            u = int(nint((eps - norm / eps) / sqrt(p)))
            if u > 0 and t * t - p * u * u == 4 * norm:
                return u
    raise AssertionError(p)


def test_aac_equivalence_to_2000():
    """p | h_{l-1} exactly when p | u for the fundamental ring unit."""
    for p in sieve_segment(5, 2001, "1 mod 4"):
        u = _ring_unit_coefficient(p)
        assert (aac_y_mod_p(p) == 0) == (u % p == 0), p
