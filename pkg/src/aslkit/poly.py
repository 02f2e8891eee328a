"""Sparse multivariate polynomials with exact coefficients.

Coefficients live in the rationals (``p=None``) or in F_p.  Variables are
indexed ``0..nvars-1`` and printed as ``x1..xN``.  Variables may carry
positive integer weights, which define the grading used by
:class:`MonomialIndex` and :meth:`SparsePoly.is_homogeneous`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .linalg import normalize

__all__ = [
    "SparsePoly",
    "MonomialIndex",
    "exponents_of_degree",
    "parse_poly",
    "parse_polys",
    "PolyParseError",
]

Exponent = tuple[int, ...]


class SparsePoly:
    """Map from exponent tuples to nonzero field elements.

    Instances are treated as immutable values.
    """

    __slots__ = ("terms", "nvars", "p")

    def __init__(self, terms: Mapping[Exponent, object] | None = None, nvars: int = 0, p: int | None = None):
        self.nvars = nvars
        self.p = p
        clean: dict[Exponent, object] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length != {nvars}")
            c = normalize(c, p)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if p is not None:
                    clean[exp] %= p
                if not clean[exp]:
                    del clean[exp]
        self.terms: dict[Exponent, object] = clean

    # construction

    @classmethod
    def constant(cls, c, nvars: int, p: int | None = None) -> "SparsePoly":
        return cls({(0,) * nvars: c}, nvars, p)

    @classmethod
    def variable(cls, i: int, nvars: int, p: int | None = None) -> "SparsePoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars, p)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1, p: int | None = None) -> "SparsePoly":
        return cls({tuple(exp): c}, len(exp), p)

    def _new(self, terms: dict) -> "SparsePoly":
        out = SparsePoly.__new__(SparsePoly)
        out.nvars, out.p = self.nvars, self.p
        out.terms = terms
        return out

    def _check(self, other: "SparsePoly") -> None:
        if other.nvars != self.nvars or other.p != self.p:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        return SparsePoly.constant(other, self.nvars, self.p)

    # arithmetic

    def __add__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            val = terms.get(exp, 0) + c
            if self.p is not None:
                val %= self.p
            if val:
                terms[exp] = val
            else:
                terms.pop(exp, None)
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        if self.p is None:
            return self._new({e: -c for e, c in self.terms.items()})
        return self._new({e: (-c) % self.p for e, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            c = normalize(other, self.p)
            if not c:
                return self._new({})
            if self.p is None:
                return self._new({e: v * c for e, v in self.terms.items()})
            return self._new({e: v * c % self.p for e, v in self.terms.items()})
        self._check(other)
        terms: dict[Exponent, object] = {}
        p = self.p
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        if p is None:
            terms = {e: c for e, c in terms.items() if c}
        else:
            terms = {e: c % p for e, c in terms.items() if c % p}
        return self._new(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(1, self.nvars, self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.p == other.p and self.terms == other.terms
        if not self.terms:
            return normalize(other, self.p) == 0
        return self == SparsePoly.constant(other, self.nvars, self.p)

    def __hash__(self) -> int:
        return hash((self.nvars, self.p, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # grading

    def degree(self, weights: Sequence[int] | None = None) -> int:
        """Largest weighted degree of a term; -1 for the zero polynomial."""
        return max((_wdeg(e, weights) for e in self.terms), default=-1)

    def min_degree(self, weights: Sequence[int] | None = None) -> int:
        return min((_wdeg(e, weights) for e in self.terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return len({_wdeg(e, weights) for e in self.terms}) <= 1

    def homogeneous_components(self, weights: Sequence[int] | None = None) -> dict[int, "SparsePoly"]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(_wdeg(e, weights), {})[e] = c
        return {d: self._new(t) for d, t in sorted(parts.items())}

    # conversion

    def to_vector(self, index: "MonomialIndex") -> list:
        zero = Fraction(0) if self.p is None else 0
        vec = [zero] * len(index)
        for e, c in self.terms.items():
            vec[index.position(e)] = c
        return vec

    @classmethod
    def from_vector(cls, vec: Sequence, index: "MonomialIndex", p: int | None = None) -> "SparsePoly":
        return cls({index.exponents[i]: c for i, c in enumerate(vec) if c}, index.nvars, p)

    def reduce_mod(self, p: int) -> "SparsePoly":
        """Image in F_p; raises if a denominator is divisible by p."""
        return SparsePoly(self.terms, self.nvars, p)

    def substitute(self, values: Sequence["SparsePoly"]) -> "SparsePoly":
        """Replace variable i by ``values[i]``."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        target = values[0] if values else None
        if target is None:
            return self
        result = SparsePoly({}, target.nvars, target.p)
        for e, c in self.terms.items():
            term = SparsePoly.constant(c, target.nvars, target.p)
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            result = result + term
        return result

    def __iter__(self) -> Iterator[tuple[Exponent, object]]:
        return iter(sorted(self.terms.items(), key=lambda t: _graded_key(t[0]), reverse=True))

    def __str__(self) -> str:
        return self.format()

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for exp, c in self:
            if self.p is not None and c > self.p // 2 and self.p > 2:
                c = c - self.p
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = [
                names[i] if k == 1 else f"{names[i]}^{k}"
                for i, k in enumerate(exp)
                if k
            ]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        field = "QQ" if self.p is None else f"GF({self.p})"
        return f"SparsePoly({self}, nvars={self.nvars}, {field})"


def _wdeg(exp: Exponent, weights: Sequence[int] | None) -> int:
    if weights is None:
        return sum(exp)
    return sum(e * w for e, w in zip(exp, weights))


def _graded_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


def exponents_of_degree(nvars: int, d: int, weights: Sequence[int] | None = None) -> list[Exponent]:
    """Exponent vectors of weighted degree exactly ``d``, graded-lex descending."""
    return list(_exponents_cached(nvars, d, tuple(weights) if weights else None))


@lru_cache(maxsize=512)
def _exponents_cached(nvars: int, d: int, weights: tuple[int, ...] | None) -> tuple[Exponent, ...]:
    w = weights or (1,) * nvars
    out: list[Exponent] = []
    prefix: list[int] = []

    def rec(i: int, remaining: int) -> None:
        if i == nvars - 1:
            if remaining % w[i] == 0:
                out.append(tuple(prefix) + (remaining // w[i],))
            return
        for k in range(remaining // w[i], -1, -1):
            prefix.append(k)
            rec(i + 1, remaining - k * w[i])
            prefix.pop()

    if d < 0:
        return ()
    if nvars == 0:
        return ((),) if d == 0 else ()
    rec(0, d)
    return tuple(out)


class MonomialIndex:
    """Bijection between the monomials of one weighted degree and positions."""

    def __init__(self, nvars: int, degree: int, weights: Sequence[int] | None = None):
        self.nvars = nvars
        self.degree = degree
        self.weights = tuple(weights) if weights else None
        self.exponents: list[Exponent] = exponents_of_degree(nvars, degree, self.weights)
        self._pos = {e: i for i, e in enumerate(self.exponents)}

    def __len__(self) -> int:
        return len(self.exponents)

    def __contains__(self, exp: object) -> bool:
        return exp in self._pos

    def position(self, exp: Exponent) -> int:
        try:
            return self._pos[exp]
        except KeyError:
            raise ValueError(f"monomial {exp} is not of degree {self.degree}") from None


class PolyParseError(ValueError):
    """Raised with the character position of the first offending token."""

    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+)"
    r"|(?P<mvar>x_\{?(?P<i>\d+)\}?_\{?(?P<j>\d+)\}?)"
    r"|(?P<var>x(?P<k>\d+))"
    r"|(?P<op>[-+*^()])"
    r")"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PolyParseError("unexpected character", text, start)
        start = pos + (len(match.group(0)) - len(match.group(0).lstrip()))
        if match.group("num") is not None:
            tokens.append(("num", int(match.group("num")), start))
        elif match.group("mvar") is not None:
            tokens.append(("mvar", (int(match.group("i")), int(match.group("j"))), start))
        elif match.group("var") is not None:
            tokens.append(("var", int(match.group("k")), start))
        else:
            tokens.append(("op", match.group("op"), start))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_poly(
    text: str,
    nvars: int | None = None,
    p: int | None = None,
    ncols: int | None = None,
) -> SparsePoly:
    """Parse a polynomial with integer coefficients.

    Grammar: sums of products of integers, variables and parenthesized
    expressions, with ``^`` taking a nonnegative integer exponent.  A
    variable is ``x<k>`` (1-based) or a matrix entry ``x_{i}_{j}`` /
    ``x_i_j``, which maps to ``x<(i-1)*ncols + j>``.  When ``ncols`` is not
    given it is the largest column index appearing in the text.  ``nvars``
    defaults to the largest variable index used.
    """
    tokens = _tokenize(text)
    if ncols is None:
        ncols = max((t[1][1] for t in tokens if t[0] == "mvar"), default=0)

    def var_index(tok) -> int:
        kind, val, pos = tok
        if kind == "var":
            k = val
        else:
            i, j = val
            if i < 1 or j < 1 or j > ncols:
                raise PolyParseError(f"matrix entry x_{i}_{j} outside {ncols} columns", text, pos)
            k = (i - 1) * ncols + j
        if k < 1:
            raise PolyParseError("variables are numbered from 1", text, pos)
        return k - 1

    used = [var_index(t) for t in tokens if t[0] in ("var", "mvar")]
    width = max(used, default=-1) + 1
    if nvars is None:
        nvars = width
    elif width > nvars:
        bad = next(t for t in tokens if t[0] in ("var", "mvar") and var_index(t) >= nvars)
        raise PolyParseError(f"variable index exceeds {nvars} variables", text, bad[2])

    pos = 0

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expect_op(op: str) -> None:
        tok = take()
        if tok[0] != "op" or tok[1] != op:
            raise PolyParseError(f"expected {op!r}", text, tok[2])

    def parse_sum() -> SparsePoly:
        tok = peek()
        sign = 1
        if tok[0] == "op" and tok[1] in "+-":
            take()
            sign = -1 if tok[1] == "-" else 1
        acc = parse_product() * sign
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            term = parse_product()
            acc = acc + term if op == "+" else acc - term
        return acc

    def parse_product() -> SparsePoly:
        acc = parse_power()
        while peek()[0] == "op" and peek()[1] == "*":
            take()
            acc = acc * parse_power()
        return acc

    def parse_power() -> SparsePoly:
        base = parse_atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            tok = take()
            if tok[0] != "num":
                raise PolyParseError("exponent must be a nonnegative integer", text, tok[2])
            base = base ** tok[1]
        return base

    def parse_atom() -> SparsePoly:
        tok = take()
        kind, val, at = tok
        if kind == "num":
            return SparsePoly.constant(val, nvars, p)
        if kind in ("var", "mvar"):
            return SparsePoly.variable(var_index(tok), nvars, p)
        if kind == "op" and val == "(":
            inner = parse_sum()
            expect_op(")")
            return inner
        if kind == "op" and val == "-":
            return -parse_power()
        raise PolyParseError("unexpected token" if kind != "end" else "unexpected end of input", text, at)

    result = parse_sum()
    if peek()[0] != "end":
        raise PolyParseError("unexpected trailing input", text, peek()[2])
    return result


def parse_polys(text: str, nvars: int | None = None, p: int | None = None, ncols: int | None = None) -> list[SparsePoly]:
    """Parse a comma, semicolon or newline separated list of polynomials.

    All polynomials share one ring: ``nvars`` defaults to the largest
    variable index in any of them, and matrix entries use a common ``ncols``.
    """
    pieces = [s for s in re.split(r"[,;\n]", text) if s.strip()]
    if ncols is None:
        ncols = max(
            (t[1][1] for s in pieces for t in _tokenize(s) if t[0] == "mvar"), default=0
        )
    if nvars is None:
        nvars = max((parse_poly(s, None, p, ncols).nvars for s in pieces), default=0)
    return [parse_poly(s, nvars, p, ncols) for s in pieces]
