"""
Invariants of block groups, counted two ways
============================================

A block group acts on the rows of a generic m x n matrix.  Its invariant
ring is spanned by standard monomials in a sublattice Gamma of minors,
and its graded dimensions are also a sum of products of GL dimensions over
the weight set Theta.  This script computes both sides and compares them.
"""

from aslkit import BlockSpec, hilbert_gamma, hilbert_theta, verify_main_identity
from aslkit.gamma import all_block_specs, gamma_generators, theta_partitions

# Rows {1} form a torus block, rows {2} an SL block.
spec = BlockSpec(2, (0, 1, 2), ("T", "S"))
print(spec)
print("Gamma:", " ".join(str(a) for a in sorted(gamma_generators(spec, 2))))

# Gamma is a chain here, so K[Gamma] is a polynomial ring on x11, x12 and det.
for d in range(6):
    print(d, hilbert_gamma(spec, 2, d), hilbert_theta(spec, 2, d), [tuple(lam) for lam in theta_partitions(spec, 2, d)])

# %%
# A GL block in front cuts Gamma down to nothing.

print(gamma_generators(BlockSpec(2, (0, 1, 2), ("G", "T")), 2))

# %%
# Sweep every block specification with m <= 4 and at most three blocks.

cells = 0
for m in range(1, 5):
    for b in all_block_specs(m, max_blocks=3):
        for n in range(1, 5):
            report = verify_main_identity(b, n, 5)
            assert report.passed, report.mismatches()
            cells += len(report.rows)
print("cells compared:", cells)
