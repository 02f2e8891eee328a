"""The distributive lattice of minors of a generic m x n matrix.

A minor ``[c_1..c_u | d_1..d_u]`` is ordered below ``[c'_1..c'_v | d'_1..d'_v]``
when ``u >= v`` and the primed indices dominate on the first ``v`` positions.
Larger minors therefore sit lower; the 1x1 minor ``[m|n]`` is the top.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .combinatorics import Partition, transpose

__all__ = [
    "Minor",
    "MinorPoset",
    "StandardMonomial",
    "leq",
    "meet",
    "join",
    "build_sigma",
    "coheight",
    "monomial_weight",
    "standard_monomials",
    "iter_multichains",
    "count_multichains",
    "shape_of",
    "count_by_shape",
    "parse_minor",
    "parse_minors",
]


@dataclass(frozen=True, order=True, repr=False)
class Minor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        rows, cols = tuple(self.rows), tuple(self.cols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        if not rows or len(rows) != len(cols):
            raise ValueError(f"rows {rows} and cols {cols} must be nonempty of equal length")
        for seq in (rows, cols):
            if seq[0] < 1 or any(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"indices must be positive and strictly increasing: {seq}")

    @property
    def size(self) -> int:
        return len(self.rows)

    def fits(self, m: int, n: int) -> bool:
        return self.rows[-1] <= m and self.cols[-1] <= n

    def __str__(self) -> str:
        if self.rows[-1] < 10 and self.cols[-1] < 10:
            r = "".join(map(str, self.rows))
            c = "".join(map(str, self.cols))
        else:
            r = ",".join(map(str, self.rows))
            c = ",".join(map(str, self.cols))
        return f"[{r}|{c}]"

    def __repr__(self) -> str:
        return f"Minor({self})"


_MINOR_RE = re.compile(r"\[\s*([\d,\s]+?)\s*\|\s*([\d,\s]+?)\s*\]")


def _parse_indices(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    if " " in text:
        return tuple(int(t) for t in text.split())
    return tuple(int(ch) for ch in text)


def parse_minor(text: str) -> Minor:
    """Parse ``"[12|13]"`` or ``"[1,2|1,3]"`` into a :class:`Minor`."""
    match = _MINOR_RE.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"cannot parse minor {text!r}")
    return Minor(_parse_indices(match.group(1)), _parse_indices(match.group(2)))


def parse_minors(text: str) -> list[Minor]:
    """Parse a comma or whitespace separated list such as ``"[2|1],[1|2]"``."""
    stripped = text.strip()
    found = list(_MINOR_RE.finditer(stripped))
    leftover = _MINOR_RE.sub("", stripped).replace(",", "").replace("*", "").strip()
    if not found or leftover:
        raise ValueError(f"cannot parse minor list {text!r}")
    return [parse_minor(m.group(0)) for m in found]


def leq(a: Minor, b: Minor) -> bool:
    """True iff ``a <= b`` in the lattice of minors."""
    v = b.size
    if a.size < v:
        return False
    return all(b.rows[i] >= a.rows[i] and b.cols[i] >= a.cols[i] for i in range(v))


def meet(a: Minor, b: Minor) -> Minor:
    """Greatest lower bound: componentwise minima, padded by the longer tail."""
    if a.size < b.size:
        a, b = b, a
    v = b.size
    rows = tuple(min(a.rows[i], b.rows[i]) for i in range(v)) + a.rows[v:]
    cols = tuple(min(a.cols[i], b.cols[i]) for i in range(v)) + a.cols[v:]
    return Minor(rows, cols)


def join(a: Minor, b: Minor) -> Minor:
    """Least upper bound: componentwise maxima over the shorter length."""
    v = min(a.size, b.size)
    rows = tuple(max(a.rows[i], b.rows[i]) for i in range(v))
    cols = tuple(max(a.cols[i], b.cols[i]) for i in range(v))
    return Minor(rows, cols)


def _linear_key(a: Minor) -> tuple:
    # a < b implies _linear_key(a) < _linear_key(b)
    return (-a.size, sum(a.rows) + sum(a.cols), a.rows, a.cols)


class MinorPoset:
    """All minors of a generic m x n matrix, or a subset of them.

    Elements are stored in a linear extension of the order, so ``a < b``
    implies ``index(a) < index(b)``.  Instances are immutable after
    construction; the order and coheights are precomputed.
    """

    def __init__(self, m: int, n: int, elements: Iterable[Minor] | None = None):
        if m < 1 or n < 1:
            raise ValueError("m and n must be positive")
        self.m, self.n = m, n
        if elements is None:
            elements = _all_minors(m, n)
        elems = sorted(set(elements), key=_linear_key)
        for e in elems:
            if not e.fits(m, n):
                raise ValueError(f"{e} is not a minor of a {m}x{n} matrix")
        self.elements: tuple[Minor, ...] = tuple(elems)
        self._index = {e: i for i, e in enumerate(elems)}
        size = len(elems)
        # up[i] = indices j >= i with elements[i] <= elements[j]
        self._up: tuple[tuple[int, ...], ...] = tuple(
            tuple(j for j in range(i, size) if leq(elems[i], elems[j]))
            for i in range(size)
        )
        coht = [0] * size
        for i in range(size - 1, -1, -1):
            coht[i] = max((coht[j] + 1 for j in self._up[i] if j != i), default=0)
        self._coheight = tuple(coht)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Minor]:
        return iter(self.elements)

    def __contains__(self, a: object) -> bool:
        return a in self._index

    def index(self, a: Minor) -> int:
        return self._index[a]

    def leq(self, a: Minor, b: Minor) -> bool:
        return self._index[b] in self._up_sets[self._index[a]]

    @cached_property
    def _up_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(u) for u in self._up)

    def up(self, a: Minor) -> list[Minor]:
        """Elements ``b`` with ``a <= b``, ``a`` included."""
        return [self.elements[j] for j in self._up[self._index[a]]]

    def coheight(self, a: Minor) -> int:
        return self._coheight[self._index[a]]

    def is_sublattice(self) -> bool:
        """True iff the element set is closed under the ambient meet and join."""
        for a, b in combinations(self.elements, 2):
            if meet(a, b) not in self._index or join(a, b) not in self._index:
                return False
        return True

    def incomparable_pairs(self) -> list[tuple[Minor, Minor]]:
        return [
            (a, b)
            for a, b in combinations(self.elements, 2)
            if not self.leq(a, b) and not self.leq(b, a)
        ]

    def __repr__(self) -> str:
        return f"MinorPoset(m={self.m}, n={self.n}, size={len(self)})"


def _all_minors(m: int, n: int) -> Iterator[Minor]:
    for u in range(1, min(m, n) + 1):
        for rows in combinations(range(1, m + 1), u):
            for cols in combinations(range(1, n + 1), u):
                yield Minor(rows, cols)


@lru_cache(maxsize=64)
def build_sigma(m: int, n: int) -> MinorPoset:
    """The full lattice of minors of a generic m x n matrix."""
    return MinorPoset(m, n)


def coheight(p: MinorPoset, a: Minor) -> int:
    """Length of the longest chain ``a = a_0 < a_1 < ...`` in ``p``."""
    return p.coheight(a)


def monomial_weight(p: MinorPoset, factors: Iterable[Minor]) -> int:
    """Sum over factors (with multiplicity) of 3 ** coheight."""
    return sum(3 ** p.coheight(a) for a in factors)


@dataclass(frozen=True)
class StandardMonomial:
    """A product of minors forming a weakly increasing chain.

    Factors increase along the tuple, so their sizes weakly decrease.
    """

    factors: tuple[Minor, ...] = ()

    def __post_init__(self) -> None:
        factors = tuple(self.factors)
        object.__setattr__(self, "factors", factors)
        for a, b in zip(factors, factors[1:]):
            if not leq(a, b):
                raise ValueError(f"{a} <= {b} fails; not a standard monomial")

    @classmethod
    def from_factors(cls, factors: Iterable[Minor]) -> "StandardMonomial":
        """Sort an unordered multiset of minors; raises if it is not a chain."""
        return cls(tuple(sorted(factors, key=_linear_key)))

    @property
    def degree(self) -> int:
        return sum(a.size for a in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Minor]:
        return iter(self.factors)

    def __str__(self) -> str:
        return "".join(map(str, self.factors)) if self.factors else "1"


def is_standard(factors: Sequence[Minor]) -> bool:
    """True iff the multiset ``factors`` is a multichain."""
    ordered = sorted(factors, key=_linear_key)
    return all(leq(a, b) for a, b in zip(ordered, ordered[1:]))


def iter_multichains(p: MinorPoset, d: int) -> Iterator[StandardMonomial]:
    """Depth-first enumeration of multichains of ``p`` of total degree ``d``."""
    if d < 0:
        return
    elems, up = p.elements, p._up
    stack: list[int] = []

    def rec(candidates: Sequence[int], remaining: int) -> Iterator[StandardMonomial]:
        if remaining == 0:
            yield StandardMonomial(tuple(elems[i] for i in stack))
            return
        for j in candidates:
            size = elems[j].size
            if size > remaining:
                continue
            stack.append(j)
            yield from rec(up[j], remaining - size)
            stack.pop()

    yield from rec(range(len(elems)), d)


def count_multichains(p: MinorPoset, d: int) -> int:
    """Number of multichains of total degree ``d``, by dynamic programming."""
    if d < 0:
        return 0
    elems, up = p.elements, p._up
    memo: dict[tuple[int, int], int] = {}

    def after(i: int, remaining: int) -> int:
        # chains whose first factor is elems[i], of total degree `remaining`
        key = (i, remaining)
        if key not in memo:
            rest = remaining - elems[i].size
            if rest < 0:
                memo[key] = 0
            elif rest == 0:
                memo[key] = 1
            else:
                memo[key] = sum(after(j, rest) for j in up[i])
        return memo[key]

    if d == 0:
        return 1
    return sum(after(i, d) for i in range(len(elems)))


def standard_monomials(m: int, n: int, d: int) -> list[StandardMonomial]:
    """Basis of the degree-d part of the polynomial ring on an m x n matrix."""
    return list(iter_multichains(build_sigma(m, n), d))


def shape_of(v: StandardMonomial | Sequence[Minor]) -> Partition:
    """Transpose of the sequence of factor sizes."""
    sizes = sorted((a.size for a in v), reverse=True)
    return transpose(sizes)


def count_by_shape(m: int, n: int, d: int) -> dict[Partition, int]:
    """Number of degree-d standard monomials of each shape."""
    counts = Counter(shape_of(v) for v in iter_multichains(build_sigma(m, n), d))
    return dict(sorted(counts.items(), reverse=True))
