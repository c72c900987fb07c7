from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from natorder import relations as rel
from natorder.errors import DimensionMismatch, ParseError
from natorder.relations import Relation

from conftest import R, pairs, set_compose, set_converse, set_universe

I2, W2, E2 = rel.identity(2), rel.universal(2), rel.empty(2)


@st.composite
def relations(draw, n=None, max_n=5):
    if n is None:
        n = draw(st.integers(0, max_n))
    code = draw(st.integers(0, (1 << (n * n)) - 1))
    return Relation.from_code(n, code)


@st.composite
def relation_pairs(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    return draw(relations(n)), draw(relations(n))


def test_constants():
    assert I2 == R("10/01")
    assert W2 == R("11/11")
    assert E2 == R("00/00")
    assert rel.empty(0) == rel.identity(0) == rel.universal(0)
    with pytest.raises(ValueError):
        rel.constant("diagonal", 2)


def test_compose_examples(B2):
    for a in B2:
        assert rel.compose(I2, a) == a
        assert rel.compose(a, I2) == a
    assert rel.compose(R("01/00"), R("00/10")) == R("10/00")
    assert rel.compose(W2, W2) == W2


def test_converse_examples(B2):
    assert rel.converse(R("01/00")) == R("00/10")
    assert rel.converse(I2) == I2
    for a, b in product(B2, repeat=2):
        assert rel.converse(rel.compose(a, b)) == rel.compose(rel.converse(b), rel.converse(a))


def test_complement_examples():
    assert rel.complement(I2) == R("01/10")
    assert rel.complement(E2) == W2
    assert rel.complement(R("10/00")) == R("01/11")


def test_subset_examples(B2):
    for a in B2:
        assert rel.is_subset(E2, a)
        assert rel.is_subset(a, W2)
    assert not rel.is_subset(I2, R("01/10"))


def test_union_intersect_examples(B2):
    assert rel.union(I2, R("01/10")) == W2
    for a in B2:
        assert rel.intersect(a, W2) == a
    assert rel.intersect(I2, R("01/10")) == E2
    assert (I2 | R("01/10")) == W2 and (I2 & W2) == I2 and ~I2 == R("01/10")


def test_associativity_exhaustive(B2):
    for a, b, c in product(B2, repeat=3):
        assert rel.compose(rel.compose(a, b), c) == rel.compose(a, rel.compose(b, c))


def _greatest_right_solution_brute(b, a, universe):
    """Union of every x with b x ⊆ a, found by enumeration."""
    acc = rel.empty(a.n)
    for x in universe:
        if rel.is_subset(rel.compose(b, x), a):
            acc = rel.union(acc, x)
    return acc


def test_max_right_solution_examples(B2):
    for a in B2:
        assert rel.max_right_solution(I2, a) == a
    assert rel.max_right_solution(W2, W2) == W2


def test_max_right_solution_matches_enumeration(B2):
    for a, b in product(B2, repeat=2):
        best = _greatest_right_solution_brute(b, a, B2)
        assert rel.max_right_solution(b, a) == best
        assert rel.is_subset(rel.compose(b, best), a)


def test_residual_identity_exhaustive(B2):
    for a, b, x in product(B2, repeat=3):
        lhs = rel.is_subset(rel.compose(b, x), a)
        assert lhs == rel.is_subset(x, rel.max_right_solution(b, a))
        assert lhs == rel.is_subset(b, rel.complement(rel.compose(rel.complement(a), rel.converse(x))))


def test_max_left_solution(B2):
    for a in B2:
        assert rel.max_left_solution(I2, a) == a
    assert rel.max_left_solution(W2, E2) == E2
    for a, b in product(B2, repeat=2):
        mirrored = rel.converse(rel.max_right_solution(rel.converse(b), rel.converse(a)))
        assert rel.max_left_solution(b, a) == mirrored
    for a, b, x in product(B2, repeat=3):
        assert rel.is_subset(rel.compose(x, b), a) == rel.is_subset(x, rel.max_left_solution(b, a))


def test_residual_maximality_exhaustive(B2):
    for a, b in product(B2, repeat=2):
        r = rel.max_right_solution(b, a)
        for x in B2:
            if rel.compose(b, x) == a:
                assert rel.is_subset(x, r)


def test_residual_maximality_sampled_b3(B3):
    import random

    rng = random.Random(3)
    elems = list(B3)
    for _ in range(300):
        a, b = rng.choice(elems), rng.choice(elems)
        if not rel.divides_right(b, a):
            continue
        r = rel.max_right_solution(b, a)
        for x in elems:
            if rel.compose(b, x) == a:
                assert rel.is_subset(x, r)


def test_divides(B2):
    assert rel.divides_right(E2, E2) and rel.divides_left(E2, E2)
    for a in B2:
        assert rel.divides_right(I2, a) and rel.divides_left(I2, a)
    for a, b in product(B2, repeat=2):
        assert rel.divides_right(b, a) == any(rel.compose(b, x) == a for x in B2)
        assert rel.divides_left(b, a) == any(rel.compose(x, b) == a for x in B2)


def test_structural_predicates():
    assert rel.is_preorder(W2) and rel.is_preorder(I2)
    assert not rel.is_preorder(R("01/00"))
    assert rel.is_partial_injection(I2) and rel.is_permutation(I2)
    assert rel.is_partial_injection(R("10/00")) and not rel.is_permutation(R("10/00"))
    assert not rel.is_partial_injection(W2) and not rel.is_permutation(W2)
    assert not rel.is_partial_injection(R("10/10"))  # column clash
    assert rel.is_permutation(R("01/10"))


def test_degenerate_ground_sets():
    z = rel.identity(0)
    assert rel.compose(z, z) == z
    assert rel.is_preorder(z) and rel.is_permutation(z)
    assert list(rel.all_relations(0)) == [z]
    assert [str(a) for a in rel.all_relations(1)] == ["0", "1"]


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rel.compose(I2, rel.identity(3))
    with pytest.raises(DimensionMismatch):
        rel.is_subset(I2, rel.identity(1))
    with pytest.raises(DimensionMismatch):
        rel.max_right_solution(I2, rel.identity(3))


def test_canonical_code_order():
    codes = [a.code for a in rel.all_relations(2)]
    assert codes == list(range(16))
    assert R("10/00").code == 0b1000
    assert Relation.from_code(3, 0b100010001) == rel.identity(3)


def test_text_format_roundtrip(B2):
    for a in B2:
        assert rel.parse_relation(rel.format_relation(a)) == a
    assert rel.format_relation(I2) == "2\n10\n01\n"
    assert rel.parse_relation("0\n") == rel.empty(0)


@pytest.mark.parametrize(
    "text",
    ["", "x\n", "2\n10\n", "2\n10\n011\n", "2\n10\n0\n", "2\n1a\n01\n", "-1\n"],
)
def test_parser_rejects(text):
    with pytest.raises(ParseError):
        rel.parse_relation(text)


@settings(max_examples=200, deadline=None)
@given(relation_pairs())
def test_kernels_match_pair_sets(ab):
    a, b = ab
    n = a.n
    assert pairs(rel.compose(a, b)) == set_compose(pairs(a), pairs(b))
    assert pairs(rel.converse(a)) == set_converse(pairs(a))
    assert pairs(rel.complement(a)) == set_universe(n) - pairs(a)
    assert rel.is_subset(a, b) == (pairs(a) <= pairs(b))
    assert Relation.from_pairs(n, a.pairs()) == a


@settings(max_examples=200, deadline=None)
@given(relation_pairs())
def test_lattice_and_involution_laws(ab):
    a, b = ab
    assert rel.converse(rel.converse(a)) == a
    assert rel.complement(rel.complement(a)) == a
    assert rel.complement(rel.union(a, b)) == rel.intersect(rel.complement(a), rel.complement(b))
    assert rel.complement(rel.intersect(a, b)) == rel.union(rel.complement(a), rel.complement(b))
    assert rel.converse(rel.union(a, b)) == rel.union(rel.converse(a), rel.converse(b))
    assert rel.union(a, rel.intersect(a, b)) == a


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_residual_is_greatest_right_solution(data):
    n = data.draw(st.integers(1, 4))
    a, b, x = (data.draw(relations(n)) for _ in range(3))
    r = rel.max_right_solution(b, a)
    assert rel.is_subset(rel.compose(b, r), a)
    assert rel.is_subset(rel.compose(b, x), a) == rel.is_subset(x, r)
    if rel.compose(b, x) == a:
        assert rel.divides_right(b, a)
