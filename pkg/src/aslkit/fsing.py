"""Degree-bounded Frobenius splitting probes for graded quotients S/I over F_p.

Splitting questions about R = S/I become colon-ideal questions in S:

* R is F-pure iff ``(I^[p] : I)`` is not contained in ``m^[p]``;
* ``c F^r`` splits iff ``c (I^[q] : I)`` is not contained in ``m^[q]``,
  with ``q = p^r``.

Here ``I^[q]`` is generated by q-th powers of generators and ``m`` is the
ideal of the variables.  ``m^[q]`` is a monomial ideal, so a polynomial
lies outside it exactly when some monomial has every exponent below q.
That caps the degree of any witness, so searching the homogeneous pieces of
the colon ideal up to that degree is exhaustive.  Every colon piece is
computed by linear algebra on degree slices; no Groebner bases are used.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Sequence

from .linalg import is_prime, nullspace, rref, solve_membership
from .poly import MonomialIndex, SparsePoly, exponents_of_degree

__all__ = [
    "ResourceLimitExceeded",
    "Caps",
    "HomogeneousIdeal",
    "IdealSlice",
    "Verdict",
    "FrobeniusProbeResult",
    "TightClosureStep",
    "frobenius_power",
    "ideal_slice",
    "colon_slice",
    "fedder_fpure",
    "splitting_probe",
    "tight_closure_probe",
    "verify_witness",
    "presentation_kernel",
    "gamma_presentation",
]

log = logging.getLogger(__name__)


class ResourceLimitExceeded(RuntimeError):
    """A probe would exceed the configured size caps; no verdict is given."""


@dataclass(frozen=True)
class Caps:
    max_vars: int = 9
    max_q: int = 9
    max_degree: int = 64
    max_dim: int = 4000


DEFAULT_CAPS = Caps()


@dataclass(frozen=True, eq=False)
class HomogeneousIdeal:
    """An ideal of F_p[x_1..x_v] given by homogeneous generators.

    ``weights`` assigns a positive degree to each variable (default all 1).
    ``truncation_degree`` is set when the generators are only known to
    generate the intended ideal up to that degree, e.g. a presentation
    computed by :func:`presentation_kernel`; probe results carry it along.
    """

    nvars: int
    p: int
    generators: tuple[SparsePoly, ...] = ()
    weights: tuple[int, ...] | None = None
    truncation_degree: int | None = None
    _slices: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.weights is not None:
            w = tuple(int(x) for x in self.weights)
            if len(w) != self.nvars or any(x < 1 for x in w):
                raise ValueError(f"need {self.nvars} positive weights, got {w}")
            object.__setattr__(self, "weights", None if all(x == 1 for x in w) else w)
        gens = []
        for g in self.generators:
            if g.nvars != self.nvars:
                raise ValueError(f"generator {g} is not in {self.nvars} variables")
            g = g if g.p == self.p else g.reduce_mod(self.p)
            if not g.is_homogeneous(self.weights):
                raise ValueError(f"generator {g} is not homogeneous")
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_strings(
        cls,
        gens: Sequence[str],
        p: int,
        nvars: int | None = None,
        weights: Sequence[int] | None = None,
    ) -> "HomogeneousIdeal":
        from .poly import parse_polys

        polys = parse_polys("\n".join(gens), nvars, p)
        if nvars is None:
            nvars = max((g.nvars for g in polys), default=0)
        return cls(nvars, p, tuple(polys), tuple(weights) if weights else None)

    def degree_of(self, f: SparsePoly) -> int:
        return f.degree(self.weights)

    @property
    def weight_sum(self) -> int:
        return sum(self.weights) if self.weights else self.nvars

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.generators)) + ")"


@dataclass(frozen=True)
class IdealSlice:
    """The degree-d piece of an ideal, as a reduced row-echelon basis."""

    index: MonomialIndex
    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]
    spanning: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Sequence[int], p: int) -> list[int]:
        """Normal form of ``vec`` modulo the slice (zero iff ``vec`` lies in it)."""
        out = [x % p for x in vec]
        for row, c in zip(self.rows, self.pivots):
            lead = out[c]
            if lead:
                for j, x in enumerate(row):
                    if x:
                        out[j] = (out[j] - lead * x) % p
        return out

    def contains(self, vec: Sequence[int], p: int) -> bool:
        return not any(self.reduce(vec, p))


def _check_dim(size: int, what: str, caps: Caps) -> None:
    if size > caps.max_dim:
        raise ResourceLimitExceeded(f"{what} has dimension {size} > cap {caps.max_dim}")


def _check_ring(I: HomogeneousIdeal, caps: Caps) -> None:
    if I.nvars > caps.max_vars:
        raise ResourceLimitExceeded(f"{I.nvars} variables > cap {caps.max_vars}")


def _index(I: HomogeneousIdeal, d: int, caps: Caps) -> MonomialIndex:
    if d > caps.max_degree:
        raise ResourceLimitExceeded(f"degree {d} > cap {caps.max_degree}")
    index = MonomialIndex(I.nvars, d, I.weights)
    _check_dim(len(index), f"degree {d} slice", caps)
    return index


def _q_exponent(p: int, q: int) -> int:
    r, x = 0, 1
    while x < q:
        x *= p
        r += 1
    if x != q or r == 0:
        raise ValueError(f"{q} is not a positive power of {p}")
    return r


def frobenius_power(I: HomogeneousIdeal, q: int, caps: Caps = DEFAULT_CAPS) -> HomogeneousIdeal:
    """The ideal generated by the q-th powers of the generators of ``I``."""
    _q_exponent(I.p, q)
    if q > caps.max_q:
        raise ResourceLimitExceeded(f"q = {q} > cap {caps.max_q}")
    return HomogeneousIdeal(I.nvars, I.p, tuple(g**q for g in I.generators), I.weights)


def ideal_slice(I: HomogeneousIdeal, d: int, caps: Caps = DEFAULT_CAPS) -> IdealSlice:
    """Basis of the degree-d piece of ``I``, spanned by monomial multiples of generators."""
    cached = I._slices.get(d)
    if cached is not None:
        return cached
    index = _index(I, d, caps)
    spanning = []
    for g in I.generators:
        e = d - I.degree_of(g)
        if e < 0:
            continue
        for mono in exponents_of_degree(I.nvars, e, I.weights):
            shifted = {tuple(a + b for a, b in zip(mono, exp)): c for exp, c in g.terms.items()}
            spanning.append(tuple(SparsePoly(shifted, I.nvars, I.p).to_vector(index)))
    _check_dim(len(spanning), f"generator multiples in degree {d}", caps)
    if spanning:
        reduced, pivots, r = rref(spanning, I.p, len(index))
        rows = tuple(tuple(row) for row in reduced[:r])
    else:
        rows, pivots = (), []
    result = IdealSlice(index, rows, tuple(pivots), tuple(spanning))
    I._slices[d] = result
    return result


def colon_slice(
    J: HomogeneousIdeal, I: HomogeneousIdeal, e: int, caps: Caps = DEFAULT_CAPS
) -> tuple[MonomialIndex, list[list[int]]]:
    """Basis of the degree-e piece of ``(J : I)``.

    A form f of degree e lies in the colon iff ``f * g`` reduces to zero
    modulo ``J`` in degree ``e + deg g`` for every generator g of ``I``.
    The map ``f -> (normal forms of f * g)_g`` is linear; its kernel is
    the answer.
    """
    index = _index(I, e, caps)
    if not len(index):
        return index, []
    if not I.generators:
        return index, [[1 if i == k else 0 for i in range(len(index))] for k in range(len(index))]
    images: list[list[int]] = [[] for _ in range(len(index))]
    for g in I.generators:
        target = ideal_slice(J, e + I.degree_of(g), caps)
        for k, mono in enumerate(index.exponents):
            shifted = {tuple(a + b for a, b in zip(mono, exp)): c for exp, c in g.terms.items()}
            vec = SparsePoly(shifted, I.nvars, I.p).to_vector(target.index)
            images[k].extend(target.reduce(vec, I.p))
    # kernel of f -> f @ images, i.e. the null space of images transposed
    width = len(images[0])
    transposed = [[images[k][j] for k in range(len(index))] for j in range(width)]
    basis = nullspace(transposed, I.p, len(index))
    return index, basis


def _low_exponent(exp: Sequence[int], q: int) -> bool:
    return all(x < q for x in exp)


class Verdict(str, enum.Enum):
    SPLIT = "Split"
    NOT_DETECTED = "NotDetected"
    FPURE = "FPure"
    NOT_FPURE = "NotFPure"


@dataclass(frozen=True)
class FrobeniusProbeResult:
    """Verdict of a splitting probe.

    ``witness`` is ``c * h`` with ``h`` in ``(I^[q] : I)`` and some monomial
    of ``witness`` having all exponents below q; ``colon_element`` is ``h``.
    ``degree_bound`` is the largest degree of ``h`` searched.
    """

    verdict: Verdict
    q: int
    degree_bound: int
    witness: SparsePoly | None = None
    colon_element: SparsePoly | None = None
    multiplier: SparsePoly | None = None
    truncation_degree: int | None = None
    note: str = ""

    @property
    def positive(self) -> bool:
        return self.verdict in (Verdict.SPLIT, Verdict.FPURE)


def _search(
    I: HomogeneousIdeal, c: SparsePoly, q: int, caps: Caps
) -> tuple[SparsePoly | None, SparsePoly | None, int]:
    J = frobenius_power(I, q, caps)
    bound = (q - 1) * I.weight_sum - max(c.min_degree(I.weights), 0)
    for e in range(bound + 1):
        index, basis = colon_slice(J, I, e, caps)
        for vec in basis:
            h = SparsePoly.from_vector(vec, index, I.p)
            f = c * h
            if any(_low_exponent(exp, q) for exp in f.terms):
                log.debug("witness in degree %d: %s", e, f)
                return f, h, bound
    return None, None, bound


def verify_witness(
    I: HomogeneousIdeal, h: SparsePoly, q: int, c: SparsePoly | None = None, caps: Caps = DEFAULT_CAPS
) -> bool:
    """Independently re-check a splitting witness.

    ``h * g`` must lie in ``I^[q]`` for every generator g, tested by solving
    for coefficients against the raw generator multiples (not the reduced
    basis used by the search), and ``c * h`` must have a monomial with all
    exponents below q.
    """
    c = c if c is not None else SparsePoly.constant(1, I.nvars, I.p)
    f = c * h
    if not any(all(x < q for x in exp) for exp in f.terms):
        return False
    J = frobenius_power(I, q, caps)
    for g in I.generators:
        prod = h * g
        for d, part in prod.homogeneous_components(I.weights).items():
            sl = ideal_slice(J, d, caps)
            target = part.to_vector(sl.index)
            if solve_membership(target, [list(r) for r in sl.spanning], I.p) is None:
                return False
    return True


def fedder_fpure(I: HomogeneousIdeal, caps: Caps = DEFAULT_CAPS) -> FrobeniusProbeResult:
    """Decide F-purity of S/I by an exhaustive degree-bounded colon search."""
    _check_ring(I, caps)
    one = SparsePoly.constant(1, I.nvars, I.p)
    f, h, bound = _search(I, one, I.p, caps)
    note = ""
    if I.truncation_degree is not None:
        note = f"ideal known only up to degree {I.truncation_degree}"
    if f is None:
        return FrobeniusProbeResult(
            Verdict.NOT_FPURE, I.p, bound, truncation_degree=I.truncation_degree, note=note
        )
    if not verify_witness(I, h, I.p, None, caps):
        raise AssertionError(f"witness {f} failed re-verification")
    return FrobeniusProbeResult(
        Verdict.FPURE, I.p, bound, f, h, one, I.truncation_degree, note
    )


def splitting_probe(
    I: HomogeneousIdeal, c: SparsePoly, r: int, caps: Caps = DEFAULT_CAPS
) -> FrobeniusProbeResult:
    """Test whether ``x -> c * x^(p^r)`` splits for R = S/I.

    ``NotDetected`` means no splitting exists for this particular ``(c, r)``;
    it says nothing about other multipliers or larger r.
    """
    _check_ring(I, caps)
    if r < 1:
        raise ValueError("r must be positive")
    if c.nvars != I.nvars:
        raise ValueError("multiplier lives in a different ring")
    c = c if c.p == I.p else c.reduce_mod(I.p)
    q = I.p**r
    f, h, bound = _search(I, c, q, caps)
    if f is None:
        return FrobeniusProbeResult(
            Verdict.NOT_DETECTED,
            q,
            bound,
            multiplier=c,
            truncation_degree=I.truncation_degree,
            note=f"no splitting of c*F^{r} for this c and r; other (c, r) untested",
        )
    if not verify_witness(I, h, q, c, caps):
        raise AssertionError(f"witness {f} failed re-verification")
    return FrobeniusProbeResult(Verdict.SPLIT, q, bound, f, h, c, I.truncation_degree)


@dataclass(frozen=True)
class TightClosureStep:
    r: int
    q: int
    member: bool


def tight_closure_probe(
    I: HomogeneousIdeal,
    x: SparsePoly,
    c: SparsePoly,
    r_max: int,
    caps: Caps = DEFAULT_CAPS,
) -> list[TightClosureStep]:
    """For r = 1..r_max, whether ``c * x^(p^r)`` lies in ``I^[p^r]``.

    All-true rows are evidence toward ``x`` being in the tight closure of
    ``I``, never a proof.
    """
    _check_ring(I, caps)
    x = x if x.p == I.p else x.reduce_mod(I.p)
    c = c if c.p == I.p else c.reduce_mod(I.p)
    steps = []
    for r in range(1, r_max + 1):
        q = I.p**r
        J = frobenius_power(I, q, caps)
        f = c * x**q
        member = True
        for d, part in f.homogeneous_components(I.weights).items():
            sl = ideal_slice(J, d, caps)
            if not sl.contains(part.to_vector(sl.index), I.p):
                member = False
                break
        steps.append(TightClosureStep(r, q, member))
    return steps


def presentation_kernel(
    generators: Sequence[SparsePoly],
    degree_bound: int,
    p: int | None = None,
    degrees: Sequence[int] | None = None,
    minimal: bool = True,
) -> list[SparsePoly]:
    """Relations among homogeneous generators, degree by degree up to ``degree_bound``.

    Variable ``y_k`` stands for ``generators[k]`` and gets its degree.  In
    each degree the kernel of ``y-monomial -> product of generators`` is
    computed as an exact null space.  With ``minimal=True`` only relations
    not already generated by lower-degree ones are returned; otherwise a
    full basis of every kernel slice is returned.
    """
    gens = [g if p is None or g.p == p else g.reduce_mod(p) for g in generators]
    k = len(gens)
    if degrees is None:
        degrees = [g.degree() for g in gens]
    degrees = tuple(degrees)
    weights = None if all(w == 1 for w in degrees) else degrees
    found: list[SparsePoly] = []
    if k == 0:
        return found
    ambient = gens[0].nvars
    for e in range(1, degree_bound + 1):
        index = MonomialIndex(k, e, weights)
        if not len(index):
            continue
        images = []
        support: dict[tuple[int, ...], int] = {}
        for exp in index.exponents:
            img = SparsePoly.constant(1, ambient, p)
            for g, a in zip(gens, exp):
                if a:
                    img = img * g**a
            images.append(img)
            for t in img.terms:
                support.setdefault(t, len(support))
        # rows: target monomials, columns: y-monomials
        matrix = [[0] * len(index) for _ in support]
        for col, img in enumerate(images):
            for t, c in img.terms.items():
                matrix[support[t]][col] = c
        if not support:
            kernel = nullspace([], p, len(index))
        else:
            kernel = nullspace(matrix, p, len(index))
        if not kernel:
            continue
        if not minimal or not found:
            fresh = kernel
        else:
            fresh = _new_relations(found, kernel, index, k, p)
        found.extend(SparsePoly.from_vector(v, index, p) for v in fresh)
    return found


def _new_relations(
    lower: Sequence[SparsePoly], kernel: list[list], index: MonomialIndex, k: int, p: int | None
) -> list[list]:
    span = []
    for rel in lower:
        d = rel.degree(index.weights)
        for mono in exponents_of_degree(k, index.degree - d, index.weights):
            shift = SparsePoly.monomial(mono, 1, p)
            span.append((shift * rel).to_vector(index))
    fresh: list[list] = []
    current = rref(span, p, len(index))[2] if span else 0
    for vec in kernel:
        trial = span + fresh + [vec]
        r = rref(trial, p, len(index))[2]
        if r > current:
            fresh.append(vec)
            current = r
    return fresh


def gamma_presentation(b, n: int, degree_bound: int, p: int) -> HomogeneousIdeal:
    """Defining ideal of K[gamma] over F_p, from relations up to ``degree_bound``.

    Variable ``y_k`` corresponds to the k-th minor of ``gamma_poset(b, n)``
    (linear-extension order) and has that minor's size as its weight.  The
    result records ``degree_bound`` as its truncation degree.
    """
    from .gamma import gamma_poset
    from .straighten import minor_polynomial

    gamma = gamma_poset(b, n)
    gens = [minor_polynomial(a, b.m, n, p) for a in gamma]
    degrees = tuple(a.size for a in gamma)
    relations = presentation_kernel(gens, degree_bound, p, degrees)
    return HomogeneousIdeal(len(gens), p, tuple(relations), degrees, degree_bound)
