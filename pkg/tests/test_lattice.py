import random
from collections import Counter
from itertools import product
from math import comb

import pytest

from aslkit.combinatorics import ssyt_count
from aslkit.lattice import (
    Minor,
    StandardMonomial,
    build_sigma,
    coheight,
    count_by_shape,
    count_multichains,
    is_standard,
    join,
    leq,
    meet,
    monomial_weight,
    parse_minor,
    parse_minors,
    shape_of,
    standard_monomials,
)

from oracles import brute_coheight, brute_glb, brute_lub, brute_multichains, minors_of, order


def M(text: str) -> Minor:
    return parse_minor(text)


def as_pair(a: Minor):
    return (a.rows, a.cols)


SMALL = [(m, n) for m in range(1, 4) for n in range(1, 4)]


def test_minor_validation_and_printing():
    a = Minor((1, 2), (1, 3))
    assert str(a) == "[12|13]" and repr(a) == "Minor([12|13])"
    assert a.size == 2 and a.fits(2, 3) and not a.fits(2, 2)
    assert str(Minor((1, 10), (2, 11))) == "[1,10|2,11]"
    for bad in [((2, 1), (1, 2)), ((1,), (1, 2)), ((), ()), ((0,), (1,))]:
        with pytest.raises(ValueError):
            Minor(*bad)


def test_parse_minors():
    assert parse_minors("[2|1],[1|2] [12|12]") == [M("[2|1]"), M("[1|2]"), M("[12|12]")]
    assert parse_minor("[1,10|2,11]") == Minor((1, 10), (2, 11))
    for bad in ["[1|1] junk", "[12|1]", "1|1"]:
        with pytest.raises(ValueError):
            parse_minors(bad)


@pytest.mark.parametrize("m, n, count", [(1, 1, 1), (2, 2, 5), (3, 3, 19)])
def test_sigma_examples(m, n, count):
    assert len(build_sigma(m, n)) == count


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_sigma_element_count(m, n):
    assert len(build_sigma(m, n)) == comb(m + n, m) - 1


def test_leq_examples():
    assert leq(M("[12|12]"), M("[1|1]"))
    assert not leq(M("[1|2]"), M("[2|1]")) and not leq(M("[2|1]"), M("[1|2]"))
    assert leq(M("[1|2]"), M("[1|2]"))


def test_meet_join_examples():
    assert meet(M("[1|2]"), M("[2|1]")) == M("[1|1]")
    assert join(M("[1|2]"), M("[2|1]")) == M("[2|2]")
    assert meet(M("[12|12]"), M("[1|1]")) == M("[12|12]")
    assert meet(M("[1|3]"), M("[12|23]")) == M("[12|23]")


@pytest.mark.parametrize("m, n", SMALL)
def test_order_matches_definition(m, n):
    elems = list(build_sigma(m, n))
    for a, b in product(elems, repeat=2):
        assert leq(a, b) == order(as_pair(a), as_pair(b))


@pytest.mark.parametrize("m, n", SMALL)
def test_partial_order_axioms(m, n):
    elems = list(build_sigma(m, n))
    for a in elems:
        assert leq(a, a)
    for a, b in product(elems, repeat=2):
        if leq(a, b) and leq(b, a):
            assert a == b
    for a, b, c in product(elems, repeat=3):
        if leq(a, b) and leq(b, c):
            assert leq(a, c)


@pytest.mark.parametrize("m, n", SMALL)
def test_meet_join_are_glb_lub(m, n):
    elems = minors_of(m, n)
    for a, b in product(build_sigma(m, n), repeat=2):
        assert as_pair(meet(a, b)) == brute_glb(elems, as_pair(a), as_pair(b))
        assert as_pair(join(a, b)) == brute_lub(elems, as_pair(a), as_pair(b))


@pytest.mark.parametrize("m, n", SMALL)
def test_lattice_axioms_and_distributivity(m, n):
    elems = list(build_sigma(m, n))
    for a, b in product(elems, repeat=2):
        assert meet(a, b) == meet(b, a) and join(a, b) == join(b, a)
        assert meet(a, join(a, b)) == a and join(a, meet(a, b)) == a
    for a, b, c in product(elems, repeat=3):
        assert meet(a, meet(b, c)) == meet(meet(a, b), c)
        assert join(a, join(b, c)) == join(join(a, b), c)
        assert meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
        assert join(a, meet(b, c)) == meet(join(a, b), join(a, c))


@pytest.mark.parametrize("text, expected", [("[2|2]", 0), ("[1|1]", 2), ("[12|12]", 3)])
def test_coheight_examples(text, expected):
    assert coheight(build_sigma(2, 2), M(text)) == expected


@pytest.mark.parametrize("m, n", SMALL)
def test_coheight_matches_longest_chain(m, n):
    sigma = build_sigma(m, n)
    elems = minors_of(m, n)
    for a in sigma:
        assert sigma.coheight(a) == brute_coheight(elems, as_pair(a))
    for a, b in product(sigma, repeat=2):
        if a != b and leq(a, b):
            assert sigma.coheight(a) > sigma.coheight(b)


def test_monomial_weight_examples():
    sigma = build_sigma(2, 2)
    assert monomial_weight(sigma, []) == 0
    assert monomial_weight(sigma, [M("[2|1]"), M("[1|2]")]) == 6
    assert monomial_weight(sigma, [M("[12|12]")]) == 27


def test_monomial_weight_additive():
    rng = random.Random(7)
    sigma = build_sigma(3, 3)
    elems = list(sigma)
    for _ in range(200):
        u = [rng.choice(elems) for _ in range(rng.randint(0, 4))]
        v = [rng.choice(elems) for _ in range(rng.randint(0, 4))]
        assert monomial_weight(sigma, u + v) == monomial_weight(sigma, u) + monomial_weight(sigma, v)


def test_standard_monomial_validation():
    v = StandardMonomial((M("[12|12]"), M("[1|1]"), M("[2|2]")))
    assert v.degree == 4 and str(v) == "[12|12][1|1][2|2]"
    assert str(StandardMonomial(())) == "1"
    assert StandardMonomial.from_factors([M("[2|2]"), M("[1|1]")]).factors == (M("[1|1]"), M("[2|2]"))
    assert not is_standard([M("[2|1]"), M("[1|2]")])
    with pytest.raises(ValueError):
        StandardMonomial((M("[2|1]"), M("[1|2]")))
    with pytest.raises(ValueError):
        StandardMonomial.from_factors([M("[2|1]"), M("[1|2]")])


@pytest.mark.parametrize("d, count", [(0, 1), (1, 4), (2, 10)])
def test_standard_monomials_examples(d, count):
    got = standard_monomials(2, 2, d)
    assert len(got) == count
    if d == 0:
        assert got == [StandardMonomial(())]


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (2, 3)])
@pytest.mark.parametrize("d", range(0, 4))
def test_standard_monomials_match_brute_force(m, n, d):
    got = {tuple(as_pair(a) for a in v) for v in standard_monomials(m, n, d)}
    expected = {tuple(sorted(c, key=lambda e: (-len(e[0]), e))) for c in brute_multichains(minors_of(m, n), d)}
    assert {tuple(sorted(v, key=lambda e: (-len(e[0]), e))) for v in got} == expected
    assert len(got) == len(expected)


@pytest.mark.parametrize("m, n", SMALL)
@pytest.mark.parametrize("d", range(0, 7))
def test_asl_basis_cardinality(m, n, d):
    assert len(standard_monomials(m, n, d)) == comb(m * n + d - 1, d)
    assert count_multichains(build_sigma(m, n), d) == comb(m * n + d - 1, d)


def test_shape_examples():
    assert shape_of(StandardMonomial(())) == ()
    assert shape_of([M("[123|123]")]) == (1, 1, 1)
    assert shape_of([M("[1|1]"), M("[2|2]")]) == (2,)


def test_count_by_shape_examples():
    assert count_by_shape(2, 2, 2) == {(2,): 9, (1, 1): 1}
    assert count_by_shape(2, 2, 1) == {(1,): 4}
    assert count_by_shape(3, 2, 0) == {(): 1}


@pytest.mark.parametrize("m, n", SMALL)
@pytest.mark.parametrize("d", range(0, 6))
def test_counts_by_shape_match_tableaux(m, n, d):
    counts = count_by_shape(m, n, d)
    direct = Counter(shape_of(v) for v in standard_monomials(m, n, d))
    assert counts == dict(direct)
    for lam, c in counts.items():
        assert c == ssyt_count(lam, m) * ssyt_count(lam, n)


@pytest.mark.parametrize("m, n", SMALL)
def test_sigma_poset_helpers(m, n):
    sigma = build_sigma(m, n)
    assert sigma.is_sublattice()
    pairs = sigma.incomparable_pairs()
    assert all(not leq(a, b) and not leq(b, a) for a, b in pairs)
    expected = sum(1 for a, b in product(sigma, repeat=2) if a < b and not leq(a, b) and not leq(b, a))
    assert len(pairs) == expected
