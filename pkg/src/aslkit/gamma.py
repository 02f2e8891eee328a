"""Invariants of block subgroups of GL_m acting on generic m x n matrices.

A :class:`BlockSpec` cuts the rows 1..m into consecutive blocks and tags
each block ``G`` (general linear), ``S`` (special linear) or ``T`` (trivial).
The group H is block upper triangular with those diagonal blocks.  Its
invariant ring is generated by an explicit set of minors (``gamma``), and
its Hilbert function can be computed two independent ways:

* combinatorially, counting standard monomials whose factors lie in gamma;
* representation-theoretically, summing products of dual Weyl dimensions
  over the admissible weights (``theta``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .combinatorics import Partition, partitions_of, ssyt_count, weyl_dim
from .lattice import (
    Minor,
    MinorPoset,
    StandardMonomial,
    build_sigma,
    count_multichains,
    iter_multichains,
    shape_of,
)

__all__ = [
    "BlockSpec",
    "IdentityRow",
    "IdentityReport",
    "validate_blocks",
    "gamma_generators",
    "gamma_poset",
    "is_gamma_standard",
    "satisfies_block_rows",
    "in_theta",
    "hilbert_gamma",
    "theta_partitions",
    "hilbert_theta",
    "verify_main_identity",
    "hilbert_determinantal",
    "all_block_specs",
]

TAGS = ("G", "S", "T")


@dataclass(frozen=True)
class BlockSpec:
    """Block data ``0 = a_0 < a_1 < ... < a_s = m`` with one tag per block.

    ``a`` includes the leading zero.  Block ``l`` (1-based) is the row range
    ``a[l-1] < i <= a[l]``.
    """

    m: int
    a: tuple[int, ...]
    tags: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "tags", tuple(str(t).upper() for t in self.tags))
        validate_blocks(self)

    @classmethod
    def parse(cls, m: int, a: str, tags: str) -> "BlockSpec":
        """Build from the textual form ``a="0,1,3"``, ``tags="T,S"``."""
        try:
            a_seq = tuple(int(x) for x in a.split(","))
        except ValueError:
            raise ValueError(f"cannot parse block boundaries {a!r}") from None
        tag_seq = tuple(t.strip() for t in tags.split(",") if t.strip())
        return cls(m, a_seq, tag_seq)

    @property
    def s(self) -> int:
        return len(self.a) - 1

    def block(self, l: int) -> range:
        """Row indices (1-based) of block ``l``."""
        return range(self.a[l - 1] + 1, self.a[l] + 1)

    def block_of_row(self, i: int) -> int:
        for l in range(1, self.s + 1):
            if self.a[l - 1] < i <= self.a[l]:
                return l
        raise ValueError(f"row {i} outside 1..{self.m}")

    def epsilon(self) -> int:
        """Index of the first G block, or ``s + 1`` when there is none."""
        for l, tag in enumerate(self.tags, start=1):
            if tag == "G":
                return l
        return self.s + 1

    def __str__(self) -> str:
        return f"m={self.m} a={','.join(map(str, self.a))} tags={','.join(self.tags)}"


def validate_blocks(b: BlockSpec) -> None:
    """Raise ``ValueError`` unless ``b`` is well formed."""
    if b.m < 1:
        raise ValueError("m must be positive")
    a = b.a
    if len(a) < 2 or a[0] != 0:
        raise ValueError(f"block boundaries must start at 0 and have s >= 1: {a}")
    if any(a[i] >= a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"block boundaries not strictly increasing: {a}")
    if a[-1] != b.m:
        raise ValueError(f"last block boundary {a[-1]} differs from m = {b.m}")
    if len(b.tags) != len(a) - 1:
        raise ValueError(f"expected {len(a) - 1} tags, got {len(b.tags)}")
    bad = [t for t in b.tags if t not in TAGS]
    if bad:
        raise ValueError(f"unknown block tags {bad}; use G, S or T")


def gamma_generators(b: BlockSpec, n: int) -> frozenset[Minor]:
    """The minors generating the invariant ring of H on m x n matrices."""
    if n < 1:
        raise ValueError("n must be positive")
    out: set[Minor] = set()
    for l in range(1, b.epsilon()):
        lo, hi = b.a[l - 1], b.a[l]
        if b.tags[l - 1] == "S":
            if hi <= n:
                rows = tuple(range(1, hi + 1))
                out.update(Minor(rows, cols) for cols in combinations(range(1, n + 1), hi))
        else:
            # T block: sizes lo < u <= hi, rows 1..lo followed by rows inside the block
            prefix = tuple(range(1, lo + 1))
            for u in range(lo + 1, min(hi, n) + 1):
                for top in combinations(range(lo + 1, hi + 1), u - lo):
                    for cols in combinations(range(1, n + 1), u):
                        out.add(Minor(prefix + top, cols))
    return frozenset(out)


@lru_cache(maxsize=1024)
def gamma_poset(b: BlockSpec, n: int) -> MinorPoset:
    """Gamma with the order inherited from the full lattice of minors."""
    return MinorPoset(b.m, n, gamma_generators(b, n))


def satisfies_block_rows(v: StandardMonomial | Sequence[Minor], b: BlockSpec) -> bool:
    """Row condition: position i of every factor holds a row of i's own block."""
    for factor in v:
        for pos, row in enumerate(factor.rows, start=1):
            if b.block_of_row(pos) != b.block_of_row(row):
                return False
    return True


def in_theta(weight: Sequence[int], b: BlockSpec) -> bool:
    """True iff the rank-m weight is zero on G blocks and constant on S blocks."""
    weight = tuple(weight)
    if len(weight) != b.m:
        raise ValueError(f"weight {weight} does not have rank {b.m}")
    for l, tag in enumerate(b.tags, start=1):
        piece = weight[b.a[l - 1] : b.a[l]]
        if tag == "G" and any(piece):
            return False
        if tag == "S" and len(set(piece)) > 1:
            return False
    return True


def is_gamma_standard(
    v: StandardMonomial | Sequence[Minor], b: BlockSpec, n: int | None = None
) -> bool:
    """True iff every factor of the standard monomial ``v`` lies in gamma.

    With ``n`` given, membership is tested directly against
    :func:`gamma_generators`.  Without it, the equivalent criterion is used:
    the shape lies in theta and every factor satisfies the block row
    condition.
    """
    factors = tuple(v)
    if n is not None:
        gamma = gamma_generators(b, n)
        return all(f in gamma for f in factors)
    if any(f.rows[-1] > b.m for f in factors):
        return False
    shape = shape_of(factors)
    if len(shape) > b.m or not in_theta(shape.padded(b.m), b):
        return False
    return satisfies_block_rows(factors, b)


def hilbert_gamma(b: BlockSpec, n: int, d: int) -> int:
    """Number of degree-d standard monomials all of whose factors lie in gamma."""
    return count_multichains(gamma_poset(b, n), d)


def gamma_standard_monomials(b: BlockSpec, n: int, d: int) -> list[StandardMonomial]:
    """Explicit list of the monomials counted by :func:`hilbert_gamma`."""
    return list(iter_multichains(gamma_poset(b, n), d))


def theta_partitions(b: BlockSpec, n: int, d: int) -> list[Partition]:
    """Partitions of d with at most min(m, n) parts whose rank-m padding is in theta."""
    return [
        lam
        for lam in partitions_of(d, min(b.m, n))
        if in_theta(lam.padded(b.m), b)
    ]


def hilbert_theta(b: BlockSpec, n: int, d: int) -> int:
    """dim of the degree-d invariants, as a sum of dual Weyl dimensions.

    Each admissible lambda contributes dim of the GL_n module of highest
    weight lambda times the product over blocks of the dimension of the
    block's GL module with highest weight the slice of lambda.
    """
    total = 0
    for lam in theta_partitions(b, n, d):
        full = lam.padded(b.m)
        term = ssyt_count(lam, n)
        for l in range(1, b.s + 1):
            term *= weyl_dim(full[b.a[l - 1] : b.a[l]])
        total += term
    return total


@dataclass(frozen=True)
class IdentityRow:
    d: int
    gamma: int
    theta: int

    @property
    def equal(self) -> bool:
        return self.gamma == self.theta


@dataclass(frozen=True)
class IdentityReport:
    spec: BlockSpec
    n: int
    rows: tuple[IdentityRow, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.rows)

    def mismatches(self) -> list[IdentityRow]:
        return [r for r in self.rows if not r.equal]


def verify_main_identity(b: BlockSpec, n: int, d_max: int) -> IdentityReport:
    """Compare both Hilbert functions in every degree ``0..d_max``."""
    rows = tuple(
        IdentityRow(d, hilbert_gamma(b, n, d), hilbert_theta(b, n, d))
        for d in range(d_max + 1)
    )
    return IdentityReport(b, n, rows)


def hilbert_determinantal(m: int, n: int, t: int, d: int) -> int:
    """Hilbert function of the coordinate ring of m x n matrices of rank <= t."""
    if not 0 <= t <= min(m, n):
        raise ValueError(f"need 0 <= t <= min(m, n), got t = {t}")
    return sum(
        ssyt_count(lam, m) * ssyt_count(lam, n) for lam in partitions_of(d, t)
    )


def all_block_specs(m: int, max_blocks: int | None = None) -> list[BlockSpec]:
    """Every BlockSpec for m rows with at most ``max_blocks`` blocks and any tags."""
    from itertools import product

    out = []
    max_s = m if max_blocks is None else min(m, max_blocks)
    for s in range(1, max_s + 1):
        for inner in combinations(range(1, m), s - 1):
            a = (0, *inner, m)
            for tags in product(TAGS, repeat=s):
                out.append(BlockSpec(m, a, tags))
    return out
