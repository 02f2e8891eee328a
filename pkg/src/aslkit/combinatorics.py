"""Partitions, dominant weights and dimensions of dual Weyl modules of GL_n.

All counts are exact Python integers.  The primary dimension algorithm is a
column-by-column count of semistandard Young tableaux; the Weyl product
formula is kept alongside as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "Partition",
    "DominantWeight",
    "partitions_of",
    "transpose",
    "ssyt_count",
    "weyl_dim",
    "weyl_product_dim",
    "cauchy_dim",
    "binomial_dim",
]


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers, trailing zeros removed.

    Being a tuple, a partition compares equal to the plain tuple of its
    nonzero parts, so ``Partition((2, 1, 0)) == (2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, length: int) -> tuple[int, ...]:
        """Parts extended by zeros to ``length`` entries."""
        if len(self) > length:
            raise ValueError(f"{self} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class DominantWeight:
    """A dominant weight of GL_rank: a weakly decreasing integer vector.

    Unlike :class:`Partition`, entries may be negative and zeros are kept,
    since the rank is part of the data.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("a dominant weight needs rank >= 1")
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"weight {entries} is not dominant")

    @property
    def rank(self) -> int:
        return len(self.entries)


def partitions_of(d: int, max_len: int | None = None) -> list[Partition]:
    """All partitions of ``d`` with at most ``max_len`` parts.

    The order is reverse lexicographic: ``(4), (3, 1), (2, 2), (2, 1, 1), ...``.
    ``max_len=None`` means no bound on the number of parts.
    """
    if d < 0:
        return []
    if max_len is None:
        max_len = d

    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_len:
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def transpose(p: Sequence[int]) -> Partition:
    """Conjugate partition: the i-th part counts the j with ``p[j] >= i``."""
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def ssyt_count(shape: Sequence[int], n: int) -> int:
    """Number of semistandard Young tableaux of ``shape`` with entries in 1..n.

    For a partition this is the dimension of the dual Weyl module of GL_n
    with that highest weight.  Tableaux are built one column at a time: a
    column is a strictly increasing n-subset, and consecutive columns must
    be weakly increasing along rows.
    """
    shape = Partition(shape)
    if not shape:
        return 1
    if n <= 0 or len(shape) > n:
        return 0
    return _ssyt_count_cached(tuple(transpose(shape)), n)


@lru_cache(maxsize=4096)
def _ssyt_count_cached(column_lengths: tuple[int, ...], n: int) -> int:
    columns_by_len = {
        k: list(combinations(range(1, n + 1), k)) for k in set(column_lengths)
    }

    # ways[col] = number of fillings of the columns so far ending in col
    ways = {col: 1 for col in columns_by_len[column_lengths[0]]}
    for k in column_lengths[1:]:
        nxt: dict[tuple[int, ...], int] = {}
        for col in columns_by_len[k]:
            total = 0
            for prev, count in ways.items():
                if all(prev[i] <= col[i] for i in range(k)):
                    total += count
            if total:
                nxt[col] = total
        ways = nxt
    return sum(ways.values())


def _as_weight(w: DominantWeight | Sequence[int]) -> DominantWeight:
    return w if isinstance(w, DominantWeight) else DominantWeight(tuple(w))


def weyl_dim(w: DominantWeight | Sequence[int]) -> int:
    """Dimension of the dual Weyl module of GL_rank with highest weight ``w``.

    Twisting by a power of the determinant does not change the dimension, so
    the weight is shifted to make its last entry zero and the resulting
    partition is counted with :func:`ssyt_count`.
    """
    w = _as_weight(w)
    low = w.entries[-1]
    return ssyt_count([x - low for x in w.entries], w.rank)


def weyl_product_dim(w: DominantWeight | Sequence[int]) -> int:
    """Weyl dimension formula, prod_{i<j} (w_i - w_j + j - i) / (j - i).

    Used only as an oracle for :func:`weyl_dim` and :func:`ssyt_count`.
    """
    w = _as_weight(w)
    e = w.entries
    value = Fraction(1)
    for i in range(len(e)):
        for j in range(i + 1, len(e)):
            value *= Fraction(e[i] - e[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


def cauchy_dim(m: int, n: int, d: int) -> int:
    """Dimension of Sym_d(K^m (x) K^n) summed over its Cauchy decomposition."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return sum(
        ssyt_count(lam, m) * ssyt_count(lam, n)
        for lam in partitions_of(d, min(m, n))
    )


def binomial_dim(m: int, n: int, d: int) -> int:
    """Dimension of the degree-d part of a polynomial ring in m*n variables."""
    return comb(m * n + d - 1, d)

