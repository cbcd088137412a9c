from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiangfloer.gf2 import (
    BitMatrix,
    GF2Error,
    direct_sum,
    hstack,
    inverse,
    kernel_basis,
    random_invertible,
    rank,
    row_space_basis,
    vstack,
)
from oracles import naive_apply, naive_matmul, naive_rank


def bit_rows(rows: int, cols: int):
    return st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


@st.composite
def matrices(draw, max_dim: int = 9):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return BitMatrix.from_rows(draw(bit_rows(r, c)))


@st.composite
def product_pair(draw):
    n, k, m = (draw(st.integers(1, 8)) for _ in range(3))
    return BitMatrix.from_rows(draw(bit_rows(n, k))), BitMatrix.from_rows(draw(bit_rows(k, m)))


@given(product_pair())
def test_matmul_matches_naive(pair):
    x, y = pair
    assert (x @ y).to_rows() == naive_matmul(x.to_rows(), y.to_rows())


@given(matrices())
def test_rank_matches_naive(m):
    assert rank(m) == naive_rank(m.to_rows())


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert len(ker) + rank(m) == m.cols
    assert all(m.apply(v) == 0 for v in ker)
    # kernel vectors are independent
    assert len(row_space_basis(ker)) == len(ker)


@given(matrices())
def test_apply_matches_naive(m):
    v = random.Random(m.cols).getrandbits(m.cols)
    bits = [(v >> j) & 1 for j in range(m.cols)]
    got = m.apply(v)
    assert [(got >> i) & 1 for i in range(m.rows)] == naive_apply(m.to_rows(), bits)


@given(matrices())
def test_transpose_is_involution_and_rank_preserving(m):
    assert m.T.T == m
    assert rank(m.T) == rank(m)


@given(matrices())
def test_string_round_trip(m):
    assert BitMatrix.from_strings(m.to_strings()) == m


@given(matrices())
def test_columns_round_trip(m):
    assert BitMatrix.from_columns(m.columns(), m.rows) == m


@given(st.integers(1, 12), st.integers(0, 10_000))
def test_inverse(n, seed):
    m = random_invertible(n, seed)
    assert m @ inverse(m) == BitMatrix.identity(n)
    assert inverse(m) @ m == BitMatrix.identity(n)


@given(st.integers(1, 6), st.integers(0, 100))
def test_power_agrees_with_repeated_product(n, seed):
    m = random_invertible(n, seed)
    assert m ** 3 == m @ m @ m
    assert m ** -1 == inverse(m)
    assert m ** 0 == BitMatrix.identity(n)


@given(matrices(6), matrices(6))
def test_direct_sum_rank_is_additive(x, y):
    assert rank(direct_sum([x, y])) == rank(x) + rank(y)


def test_stacking_shapes():
    x = BitMatrix.from_strings(["10", "01"])
    assert hstack([x, x]).to_strings() == ["1010", "0101"]
    assert vstack([x, x]).shape == (4, 2)
    with pytest.raises(GF2Error):
        hstack([x, BitMatrix.zeros(3, 2)])


def test_singular_inverse_raises():
    with pytest.raises(GF2Error):
        inverse(BitMatrix.from_strings(["11", "11"]))


def test_rejects_bad_literals():
    with pytest.raises(GF2Error):
        BitMatrix.from_strings(["10", "2"])
    with pytest.raises(GF2Error):
        BitMatrix.from_rows([[1, 0], [1]])
    with pytest.raises(GF2Error):
        BitMatrix(1, 2, [0b100])
    with pytest.raises(GF2Error):
        BitMatrix.from_strings(["10"]) @ BitMatrix.from_strings(["10"])


def test_immutable():
    m = BitMatrix.identity(2)
    with pytest.raises(AttributeError):
        m.rows = 3


def test_wide_rows_beyond_one_word():
    n = 150
    m = random_invertible(n, 7)
    assert rank(m) == n
    assert m @ inverse(m) == BitMatrix.identity(n)
