from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiangfloer.gamma import A, B, ELEMENTS, IDENTITY, GammaElement, element_order, inverse, word

elements = st.sampled_from(ELEMENTS)


def test_twelve_distinct_elements():
    assert len(set(ELEMENTS)) == 12


def test_defining_relations():
    assert A ** 6 == IDENTITY
    assert B * B == A ** 3
    assert A * B == B * inverse(A)


@given(elements, elements, elements)
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements)
def test_inverse_and_identity(x):
    assert x * inverse(x) == IDENTITY == inverse(x) * x
    assert x * IDENTITY == x == IDENTITY * x


@given(elements)
def test_order_divides_group_order(x):
    assert 12 % element_order(x) == 0


def test_element_orders():
    orders = sorted(element_order(x) for x in ELEMENTS)
    # binary dihedral group of order 12: one element of order 2, six of order 4
    assert orders == [1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6]


def test_cayley_table_is_latin_square():
    for x in ELEMENTS:
        assert {x * y for y in ELEMENTS} == set(ELEMENTS)
        assert {y * x for y in ELEMENTS} == set(ELEMENTS)


@given(elements)
def test_print_parse_round_trip(x):
    assert GammaElement.parse(str(x)) == x


def test_printing():
    assert [str(x) for x in ELEMENTS[:2]] == ["e", "a"]
    assert str(GammaElement(2, 1)) == "a^2 b"
    assert str(B) == "b"


def test_words():
    for letters in ("", "a", "ab", "bab", "aaaaaa"):
        expected = IDENTITY
        for ch in letters:
            expected = expected * (A if ch == "a" else B)
        assert word(letters) == expected
    assert word("bab") == A ** 2


def test_normal_form_validation():
    with pytest.raises(ValueError):
        GammaElement(6, 0)
    with pytest.raises(ValueError):
        GammaElement.parse("c")


def test_centre_is_a_cubed_subgroup():
    centre = [z for z in ELEMENTS if all(z * x == x * z for x in ELEMENTS)]
    assert set(centre) == {IDENTITY, A ** 3}


def test_exhaustive_multiplication_matches_word_reduction():
    for x, y in itertools.product(ELEMENTS, ELEMENTS):
        wx = "a" * x.i + "b" * x.j
        wy = "a" * y.i + "b" * y.j
        assert x * y == word(wx + wy)
