"""Continued fractions of square roots, Pell units, and Mordell's conjecture.

For a prime p = 3 mod 4 with fundamental solution (x, y) of x**2 - p*y**2 = 1,
Mordell conjectured that p never divides y.  This package computes the
periodic continued fraction of sqrt(p), the convergents and the fundamental
unit, and checks the conjecture over prime ranges using the fact that p | y
exactly when p divides the convergent denominator h_{l/2-1} at the middle of
the period.
"""

from .cf_surd import CFExpansion, SurdState, detect_half_period, expand_sqrt, surd_init, surd_step
from .convergents import (
    ConvergentPair,
    ModConvergentState,
    check_wronskian,
    convergent_mod_stream,
    convergent_stream,
    palindromic_split,
)
from .harness import Checkpoint, RunConfig, RunSummary, emit_report, resume, run_range
from .pell_unit import (
    PellSolution,
    UnitDecomposition,
    aac_y_mod_p,
    central_term_law,
    decompose_unit,
    fundamental_solution,
    verify_half_identities,
)
from .primes import is_prime, sieve_segment
from .verify import (
    VerificationRecord,
    aac_fast,
    aac_full,
    classify,
    family_period2,
    family_period4,
    family_period6,
    mordell_both,
    mordell_fast,
    mordell_full,
)

__version__ = "0.1.0"
