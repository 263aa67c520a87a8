"""
Checking Mordell's conjecture over a range
==========================================

The fast path walks half a period and keeps the convergent denominators
modulo p; a deterministic sample of primes is also checked with exact
integers.  Here we run the check to 10^6 and look at the period lengths.
"""

import numpy as np

from mordell import RunConfig, family_period2, family_period4, family_period6, mordell_both, run_range
from mordell._kernels import half_period_batch
from mordell.primes import sieve_segment_array

summary = run_range(RunConfig("mordell", 3, 10**6, full_every=1000))
print(summary.as_dict(), "exact cross-checks:", summary.full_checks)
print("longest period seen:", summary.max_witness_seen)

# Period length mod 4 is decided by p mod 8
ps = sieve_segment_array(3, 10**6, "3 mod 4")
ls = half_period_batch(ps)[0]
for r in (3, 7):
    sel = ls[ps % 8 == r]
    print(f"p = {r} mod 8: l mod 4 values {np.unique(sel % 4)}, mean l {sel.mean():.1f}")

# The three polynomial families
for name, gen in (("n^2+2", family_period2), ("(n+1)^2-2", family_period4), ("36k^2+52k+19", family_period6)):
    primes = gen(8)
    print(name, primes, [mordell_both(p).verdict for p in primes][:3], "...")

# The A-A-C analogue for p = 1 mod 4
print(run_range(RunConfig("aac", 5, 10**5)).as_dict())
