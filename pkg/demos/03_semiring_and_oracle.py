"""
Sums and products of permutation digraphs
=========================================
"""

from cyclering import C, ONE, ZERO
from cyclering.cycles import explicit_product_oracle

a = C(2, 4) + C(1, 6)
b = C(1, 3) + C(3, 2)
print("a =", a, " states:", a.total_states)
print("b =", b, " states:", b.total_states)

print("a + b =", a + b)
print("a * b =", a * b)
print("a ^ 3 =", a ** 3)

# the closed form agrees with building the product graph state by state
print("oracle:", explicit_product_oracle(a, b))
assert a * b == explicit_product_oracle(a, b)

# distributivity, identities, annihilation
assert a * (b + ONE) == a * b + a
assert a * ZERO == ZERO
