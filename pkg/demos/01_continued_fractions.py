"""
Continued fractions of square roots
===================================

The expansion of sqrt(d) is periodic, the period ends in 2*isqrt(d) and the
rest of it reads the same backwards.  The surd states (P, Q) make the middle
of the period easy to spot.
"""

import numpy as np

from mordell import detect_half_period, expand_sqrt, surd_init, surd_step

# A few expansions
for d in (7, 13, 19, 107, 10017223):
    exp = expand_sqrt(d)
    print(f"sqrt({d}) = {exp}   l = {exp.l}")

# The surd states of sqrt(19): P repeats at the middle of the period
s = surd_init(19)
for _ in range(7):
    print(f"index {s.index}: P={s.P} Q={s.Q} a={s.a}")
    s = surd_step(s)

print("midpoint of sqrt(19):", detect_half_period(19))
print("midpoint of sqrt(13):", detect_half_period(13))  # odd period, Q repeats

# Period lengths grow roughly like sqrt(d)
ds = np.array([d for d in range(2, 20001) if int(np.sqrt(d)) ** 2 != d])
ls = np.array([expand_sqrt(int(d)).l for d in ds])
print("mean l / sqrt(d) over d <= 20000:", np.mean(ls / np.sqrt(ds)).round(3))
print("longest period:", ls.max(), "for d =", ds[ls.argmax()])
