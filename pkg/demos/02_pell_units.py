"""
Pell solutions and the +-2 splitting
====================================

For p = 3 mod 4 the fundamental solution (x, y) of x^2 - p y^2 = 1 splits:
x -+ 1 = a^2 and x +- 1 = p b^2 with a^2 - p b^2 = -+2, and a, b can be read
off the convergents at the middle of the period.
"""

from mordell import decompose_unit, expand_sqrt, fundamental_solution
from mordell.pell_unit import half_identities

for d in (3, 7, 13, 19, 61):
    sol = fundamental_solution(d)
    print(f"d={d:3d}: {sol}  (norm {sol.norm:+d})")

# y = a*b with a = h_{l/2} + h_{l/2-2} and b = h_{l/2-1}
for p in (7, 19, 23, 31, 43, 10007):
    dec = decompose_unit(p, fundamental_solution(p))
    l, b, c = half_identities(p)
    print(f"p={p:5d} l={l:3d} a={dec.a} b={dec.b} eps={dec.epsilon:+d}  from convergents: a={c} b={b}")

# Large primes of the form (n+1)^2 - 2 have a short period and a tiny unit
for p in (10017223, 20948927, 21003887, 21022223):
    print(f"sqrt({p}) = {expand_sqrt(p)}   unit {fundamental_solution(p)}")
