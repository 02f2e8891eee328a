"""Invariant rings of block subgroups acting on generic matrices.

Combinatorics of the lattice of minors and its standard monomials,
straightening, Hilbert functions computed both by counting and by dual
Weyl module dimensions, and degree-bounded Frobenius splitting probes over
small prime fields.
"""

__version__ = "0.1.0"

from .combinatorics import (  # noqa: E402
    DominantWeight,
    Partition,
    cauchy_dim,
    partitions_of,
    ssyt_count,
    transpose,
    weyl_dim,
)
from .fsing import (  # noqa: E402
    HomogeneousIdeal,
    Verdict,
    fedder_fpure,
    gamma_presentation,
    presentation_kernel,
    splitting_probe,
    tight_closure_probe,
)
from .gamma import (  # noqa: E402
    BlockSpec,
    gamma_generators,
    hilbert_determinantal,
    hilbert_gamma,
    hilbert_theta,
    verify_main_identity,
)
from .lattice import (  # noqa: E402
    Minor,
    MinorPoset,
    StandardMonomial,
    build_sigma,
    standard_monomials,
)
from .straighten import straighten, verify_basis  # noqa: E402
