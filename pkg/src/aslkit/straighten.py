"""Straightening products of minors into the standard monomial basis.

Rather than rewriting with explicit quadratic relations, a product is
expanded as a polynomial in the matrix entries and written in the basis of
standard monomials by exact linear algebra.  Every minor is homogeneous for
the Z^m x Z^n grading by row and column content, so only standard
monomials with the same content as the product need to be considered.
This keeps the systems small: a product of three 3x3 minors involves 55
unknowns rather than the 24310 standard monomials of degree 9.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .combinatorics import binomial_dim
from .gamma import BlockSpec, gamma_poset
from .lattice import (
    Minor,
    MinorPoset,
    StandardMonomial,
    build_sigma,
    iter_multichains,
    leq,
    monomial_weight,
)
from .linalg import rank, solve_membership
from .poly import SparsePoly

__all__ = [
    "StraighteningError",
    "StraighteningResult",
    "minor_polynomial",
    "expand",
    "content",
    "standard_monomials_with_content",
    "straighten",
    "BasisReport",
    "verify_basis",
    "Violation",
    "PairReport",
    "verify_subasl_condition",
    "verify_weight_increase",
]


class StraighteningError(RuntimeError):
    """The standard monomials failed to span a product of minors."""


def _var(i: int, j: int, n: int) -> int:
    return (i - 1) * n + (j - 1)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=4096)
def _minor_terms(a: Minor, m: int, n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    u = a.size
    out = []
    for perm in permutations(range(u)):
        exp = [0] * (m * n)
        for k in range(u):
            exp[_var(a.rows[k], a.cols[perm[k]], n)] += 1
        out.append((tuple(exp), _perm_sign(perm)))
    return tuple(out)


def minor_polynomial(a: Minor, m: int, n: int, p: int | None = None) -> SparsePoly:
    """Leibniz expansion of the minor in the variables ``x_ij`` (index ``(i-1)*n + j``).

    Rows are taken in order and the sign is that of the column permutation.
    """
    if not a.fits(m, n):
        raise ValueError(f"{a} is not a minor of a {m}x{n} matrix")
    return SparsePoly(dict(_minor_terms(a, m, n)), m * n, p)


def expand(factors: Iterable[Minor], m: int, n: int, p: int | None = None) -> SparsePoly:
    """Product of the minors as a polynomial in the matrix entries."""
    result = SparsePoly.constant(1, m * n, p)
    for a in factors:
        result = result * minor_polynomial(a, m, n, p)
    return result


@lru_cache(maxsize=65536)
def _expand_standard(factors: tuple[Minor, ...], m: int, n: int) -> SparsePoly:
    return expand(factors, m, n)


def content(factors: Iterable[Minor], m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """How often each row and each column index occurs among the factors."""
    rows, cols = [0] * m, [0] * n
    for a in factors:
        for i in a.rows:
            rows[i - 1] += 1
        for j in a.cols:
            cols[j - 1] += 1
    return tuple(rows), tuple(cols)


def standard_monomials_with_content(
    m: int, n: int, row_content: Sequence[int], col_content: Sequence[int]
) -> list[StandardMonomial]:
    """Standard monomials whose factors use each row/column the given number of times."""
    p = build_sigma(m, n)
    elems, up = p.elements, p._up
    rows_left, cols_left = list(row_content), list(col_content)
    remaining = sum(rows_left)
    if remaining != sum(cols_left):
        return []
    stack: list[int] = []
    out: list[StandardMonomial] = []

    def rec(candidates: Iterable[int], remaining: int) -> None:
        if remaining == 0:
            out.append(StandardMonomial(tuple(elems[i] for i in stack)))
            return
        for j in candidates:
            a = elems[j]
            if a.size > remaining:
                continue
            if any(rows_left[i - 1] == 0 for i in a.rows) or any(cols_left[c - 1] == 0 for c in a.cols):
                continue
            for i in a.rows:
                rows_left[i - 1] -= 1
            for c in a.cols:
                cols_left[c - 1] -= 1
            stack.append(j)
            rec(up[j], remaining - a.size)
            stack.pop()
            for i in a.rows:
                rows_left[i - 1] += 1
            for c in a.cols:
                cols_left[c - 1] += 1

    rec(range(len(elems)), remaining)
    return out


@dataclass(frozen=True)
class StraighteningResult:
    """``prod(input) == sum(c * monomial for c, monomial in terms)``."""

    m: int
    n: int
    input: tuple[Minor, ...]
    terms: tuple[tuple[Fraction, StandardMonomial], ...]

    def polynomial(self) -> SparsePoly:
        """Re-expansion of the right-hand side."""
        total = SparsePoly({}, self.m * self.n)
        for c, mono in self.terms:
            total = total + expand(mono, self.m, self.n) * c
        return total

    def __iter__(self) -> Iterator[tuple[Fraction, StandardMonomial]]:
        return iter(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, mono in self.terms:
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign}{abs(c)} {mono}")
        return " ".join(parts)


def straighten(factors: Iterable[Minor], m: int, n: int) -> StraighteningResult:
    """Write a product of minors in the standard monomial basis over the rationals.

    Terms are listed by increasing monomial weight, ties broken by the
    printed form.  The expression is unique because standard monomials are
    linearly independent.
    """
    factors = tuple(factors)
    for a in factors:
        if not a.fits(m, n):
            raise ValueError(f"{a} is not a minor of a {m}x{n} matrix")
    key = tuple(sorted(factors))
    return _straighten_cached(key, m, n)


@lru_cache(maxsize=8192)
def _straighten_cached(factors: tuple[Minor, ...], m: int, n: int) -> StraighteningResult:
    target = expand(factors, m, n)
    basis = standard_monomials_with_content(m, n, *content(factors, m, n))
    polys = [_expand_standard(v.factors, m, n) for v in basis]
    support = sorted(set(target.terms).union(*(f.terms for f in polys)))
    position = {e: i for i, e in enumerate(support)}

    def vec(f: SparsePoly) -> list:
        row = [0] * len(support)
        for e, c in f.terms.items():
            row[position[e]] = c
        return row

    coeffs = solve_membership(vec(target), [vec(f) for f in polys])
    if coeffs is None:
        raise StraighteningError(
            f"product {' '.join(map(str, factors))} is outside the span of standard monomials"
        )
    sigma = build_sigma(m, n)
    terms = [(Fraction(c), v) for c, v in zip(coeffs, basis) if c]
    terms.sort(key=lambda t: (monomial_weight(sigma, t[1]), str(t[1])))
    return StraighteningResult(m, n, factors, tuple(terms))


@dataclass(frozen=True)
class BasisReport:
    m: int
    n: int
    d: int
    count: int
    rank: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.count == self.rank == self.expected

    def __bool__(self) -> bool:
        return self.ok


def verify_basis(m: int, n: int, d: int) -> BasisReport:
    """Check that degree-d standard monomials are independent and of the right number.

    Independence is checked block by block over the row/column content
    grading, by exact rational rank; the blocks are independent of each
    other because their supports are disjoint.
    """
    groups: dict[tuple, list[StandardMonomial]] = {}
    for v in iter_multichains(build_sigma(m, n), d):
        groups.setdefault(content(v, m, n), []).append(v)
    total_rank = 0
    count = 0
    for members in groups.values():
        polys = [_expand_standard(v.factors, m, n) for v in members]
        support = sorted(set().union(*(f.terms for f in polys)))
        position = {e: i for i, e in enumerate(support)}
        rows = []
        for f in polys:
            row = [0] * len(support)
            for e, c in f.terms.items():
                row[position[e]] = c
            rows.append(row)
        total_rank += rank(rows)
        count += len(members)
    return BasisReport(m, n, d, count, total_rank, binomial_dim(m, n, d))


@dataclass(frozen=True)
class Violation:
    pair: tuple[Minor, Minor]
    monomial: StandardMonomial | None
    reason: str


@dataclass
class PairReport:
    """Outcome of a sweep over incomparable pairs."""

    pairs_checked: int = 0
    rewrites_checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def verify_subasl_condition(b: BlockSpec, n: int) -> PairReport:
    """Check that incomparable pairs of gamma straighten inside gamma.

    Each monomial in the straightening of ``xi * eta`` must have all its
    factors in gamma and at least one factor below both ``xi`` and ``eta``.
    """
    gamma: MinorPoset = gamma_poset(b, n)
    report = PairReport()
    for xi, eta in gamma.incomparable_pairs():
        report.pairs_checked += 1
        for _, mono in straighten((xi, eta), b.m, n):
            report.rewrites_checked += 1
            if any(f not in gamma for f in mono):
                report.violations.append(Violation((xi, eta), mono, "factor outside gamma"))
            if not any(leq(f, xi) and leq(f, eta) for f in mono):
                report.violations.append(
                    Violation((xi, eta), mono, "no factor below both inputs")
                )
    return report


def verify_weight_increase(m: int, n: int, degree_bound: int | None = None) -> PairReport:
    """Check that every straightening rewrite strictly increases the weight.

    Pairs whose total degree exceeds ``degree_bound`` are skipped.
    Comparable pairs are already standard and are not rewritten.
    """
    sigma = build_sigma(m, n)
    report = PairReport()
    for xi, eta in sigma.incomparable_pairs():
        if degree_bound is not None and xi.size + eta.size > degree_bound:
            continue
        report.pairs_checked += 1
        before = monomial_weight(sigma, (xi, eta))
        for _, mono in straighten((xi, eta), m, n):
            report.rewrites_checked += 1
            after = monomial_weight(sigma, mono)
            if after <= before:
                report.violations.append(
                    Violation((xi, eta), mono, f"weight {after} <= {before}")
                )
    return report
