"""Exact dense linear algebra over the rationals and over prime fields.

Matrices are lists of rows.  ``p=None`` selects the rationals; an integer
``p`` selects the prime field F_p, whose elements are ints in ``range(p)``.
Rational elimination runs fraction-free on integer rows, dividing every
updated row by the gcd of its entries; the reduced form is converted to
:class:`fractions.Fraction` only at the end.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

__all__ = ["rref", "rank", "nullspace", "solve_membership", "normalize", "is_prime"]

Matrix = Sequence[Sequence]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def normalize(x, p: int | None):
    """Coerce a scalar into the field: a Fraction, or an int mod p."""
    if p is None:
        return Fraction(x)
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def _ncols(mat: Matrix, ncols: int | None) -> int:
    if ncols is not None:
        return ncols
    return len(mat[0]) if mat else 0


def _integer_rows(mat: Matrix) -> list[list[int]]:
    rows = []
    for row in mat:
        fr = [Fraction(x) for x in row]
        den = reduce(lcm, (x.denominator for x in fr), 1)
        ints = [int(x * den) for x in fr]
        g = reduce(gcd, ints, 0)
        rows.append([x // g for x in ints] if g > 1 else ints)
    return rows


def _rref_rational(mat: Matrix, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    rows = _integer_rows(mat)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r]
        a = piv[c]
        for i in range(len(rows)):
            if i == r:
                continue
            b = rows[i][c]
            if b == 0:
                continue
            row = [a * x - b * y for x, y in zip(rows[i], piv)]
            g = reduce(gcd, row, 0)
            rows[i] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    out = []
    for i, c in enumerate(pivots):
        lead = rows[i][c]
        out.append([Fraction(x, lead) for x in rows[i]])
    out.extend([Fraction(0)] * ncols for _ in range(len(rows) - len(pivots)))
    return out, pivots


def _rref_modp(mat: Matrix, ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    rows = [[normalize(x, p) for x in row] for row in mat]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        piv = [x * inv % p for x in rows[r]]
        rows[r] = piv
        nz = [j for j in range(c, ncols) if piv[j]]
        for i in range(len(rows)):
            if i == r:
                continue
            b = rows[i][c]
            if b:
                row = rows[i]
                for j in nz:
                    row[j] = (row[j] - b * piv[j]) % p
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(mat: Matrix, p: int | None = None, ncols: int | None = None):
    """Reduced row-echelon form.

    Returns ``(R, pivots, rank)``; ``R`` has the same number of rows as
    ``mat`` with the zero rows last.  ``ncols`` is only needed for a matrix
    with no rows.
    """
    ncols = _ncols(mat, ncols)
    if p is None:
        reduced, pivots = _rref_rational(mat, ncols)
    else:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        reduced, pivots = _rref_modp(mat, ncols, p)
    return reduced, pivots, len(pivots)


def rank(mat: Matrix, p: int | None = None) -> int:
    return rref(mat, p)[2]


def nullspace(mat: Matrix, p: int | None = None, ncols: int | None = None) -> list[list]:
    """Basis of ``{x : mat @ x = 0}``, one vector per free column."""
    ncols = _ncols(mat, ncols)
    reduced, pivots, _ = rref(mat, p, ncols)
    one, zero = (Fraction(1), Fraction(0)) if p is None else (1, 0)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [zero] * ncols
        vec[f] = one
        for i, c in enumerate(pivots):
            val = reduced[i][f]
            if val:
                vec[c] = -val if p is None else (-val) % p
        basis.append(vec)
    return basis


def solve_membership(target: Sequence, span_rows: Matrix, p: int | None = None) -> list | None:
    """Coefficients ``c`` with ``sum(c[i] * span_rows[i]) == target``, or None.

    Free coefficients are set to zero, so the answer is canonical for a given
    input even when the rows are dependent.
    """
    k = len(span_rows)
    width = len(target)
    if any(len(row) != width for row in span_rows):
        raise ValueError("target and span rows differ in length")
    zero = Fraction(0) if p is None else 0
    if k == 0:
        return [] if all(normalize(t, p) == 0 for t in target) else None
    # columns of the system are the span rows, augmented by the target
    system = [[span_rows[i][j] for i in range(k)] + [target[j]] for j in range(width)]
    reduced, pivots, _ = rref(system, p, k + 1)
    if k in pivots:
        return None
    coeffs = [zero] * k
    for i, c in enumerate(pivots):
        coeffs[c] = reduced[i][k]
    return coeffs
