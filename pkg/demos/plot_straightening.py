"""
Straightening products of minors
================================

Standard monomials (multichains in the lattice of minors) form a basis of
the polynomial ring on a generic matrix.  Any product of minors therefore
has a unique expansion in them, found here by exact linear algebra.
"""

from aslkit import build_sigma, straighten, verify_basis
from aslkit.lattice import monomial_weight, parse_minors
from aslkit.straighten import expand, verify_weight_increase

# The only incomparable pair in the 2 x 2 case.
sigma = build_sigma(2, 2)
pair = parse_minors("[2|1][1|2]")
result = straighten(pair, 2, 2)
print(result)

# Each term weighs more than the input, which is why rewriting terminates.
print("input weight", monomial_weight(sigma, pair))
for c, mono in result:
    print(c, mono, monomial_weight(sigma, mono))

# %%
# A longer product in the 3 x 3 case, checked by re-expansion.

factors = parse_minors("[23|12][1|3][13|23]")
result = straighten(factors, 3, 3)
print(len(result.terms), "terms")
assert result.polynomial() == expand(factors, 3, 3)
print(result)

# %%
# Basis check: independent standard monomials, as many as monomials of degree d.

for d in range(5):
    print(d, verify_basis(3, 3, d))

print(verify_weight_increase(3, 3))
