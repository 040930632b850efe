"""
Listing every solution
======================

The solutions of C(1,4) * X = C(12,12) come out in decreasing order.
"""

from cyclering import C, mul
from cyclering.enumeration import count_solutions, enumerate_solutions, feasible_divisors

fds = feasible_divisors(4, 12)
print("feasible divisors:", fds.divisors, "cycle lengths:", fds.derived_lengths)

for i, x in enumerate(enumerate_solutions(4, 12, 12), 1):
    assert mul(C(1, 4), x) == C(12, 12)
    print(f"{i:2d}  {x}")

print("count:", count_solutions(4, 12, 12))

# counting does not need the list; this space is far too big to print
print("count for n=200:", count_solutions(4, 12, 200))

# the enumerator is lazy, so huge spaces are fine as long as you stop early
it = enumerate_solutions(720720, 720720, 10**6)
print(next(it))
