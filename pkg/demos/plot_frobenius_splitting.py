"""
Frobenius splitting probes
==========================

Over F_p, S/I is F-pure when (I^[p] : I) is not inside (x_1^p, ..., x_v^p).
The colon is computed degree by degree with exact linear algebra, and every
witness is re-checked by a separate membership test.
"""

from aslkit import HomogeneousIdeal, fedder_fpure, gamma_presentation, splitting_probe
from aslkit.gamma import BlockSpec
from aslkit.poly import parse_poly

# The 2 x 2 determinant in characteristics 2 and 3.
for p in (2, 3):
    I = HomogeneousIdeal.from_strings(["x1*x4 - x2*x3"], p)
    r = fedder_fpure(I)
    print(p, r.verdict.value, r.witness)

# A double point and the cusp are not F-pure in characteristic 2.
# The cusp is homogeneous once x and y get degrees 2 and 3.
print(fedder_fpure(HomogeneousIdeal.from_strings(["x1^2"], 2)).verdict.value)
print(fedder_fpure(HomogeneousIdeal.from_strings(["x2^2 - x1^3"], 2, weights=(2, 3))).verdict.value)

# %%
# Splitting of x -> c * x^q for a chosen multiplier c.

I = HomogeneousIdeal.from_strings(["x1*x4 - x2*x3"], 2)
for r in (1, 2):
    res = splitting_probe(I, parse_poly("x1", 4, 2), r)
    print(r, res.verdict.value, res.witness)

# %%
# The invariant ring of a block group, presented by its straightening
# relations up to degree 3 and fed to the same test.

J = gamma_presentation(BlockSpec(2, (0, 1, 2), ("T", "T")), 3, 3, 2)
print(len(J.generators), "relations in", J.nvars, "variables")
res = fedder_fpure(J)
print(res.verdict.value, res.note)
