"""
Deciding C(1,8400) * X = C(6000,8316000)
========================================

Walk through the gcd-only decision procedure on a concrete instance.
"""

from cyclering import C, mul
from cyclering.decide import deep_decide, pi_e, pi_f

p, q, n = 8400, 8316000, 6000

# the part of q/p built only from primes that also divide p
f = pi_f(p, q // p)
print("pi_f =", f)

# the deficient part that any solution must absorb
e = pi_e(p, q // f)
print("e =", e)

report = deep_decide(p, q, n)
print(report.verdict, report.witness, "gcd calls:", report.gcd_calls)

# multiply back to be sure
assert mul(C(1, p), report.witness) == C(n, q)

# a nearby count that is not a multiple of e
print(deep_decide(p, q, 6001).reason)
