from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiangfloer import pearl
from chiangfloer.gamma import ELEMENTS
from chiangfloer.gf2 import random_invertible, random_matrix, rank
from chiangfloer.reps import (
    INDECOMPOSABLE_NAMES,
    Multiplicities,
    build_from,
    conjugate_rep,
    flatten,
    indecomposable,
    load_rep,
    m0_of_rep,
)
from strategies import conjugated_reps, multiplicities


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10_000))
def test_hom_map_matches_matrix_product(r1, r0, seed):
    import random
    rng = random.Random(seed)
    left, right = random_matrix(r1, r1, rng), random_matrix(r0, r0, rng)
    alpha = random_matrix(r1, r0, rng)
    H = pearl.hom_map(left, right)
    assert H.apply(flatten(alpha)) == flatten(left @ alpha @ right)


def test_term_tables_have_expected_shape():
    assert len(pearl.D0_TERMS) > 0 and len(pearl.D1_TERMS) > 0
    for t in pearl.D0_TERMS:
        assert t.src in pearl.EVEN and t.dst in pearl.ODD
    for t in pearl.D1_TERMS:
        assert t.src in pearl.ODD and t.dst in pearl.EVEN


def test_theorem_numbers_for_d():
    cx = pearl.build_differentials(indecomposable("D"))
    assert cx.D0.shape == cx.D1.shape == (16, 16)
    assert (rank(cx.D0), rank(cx.D1)) == (6, 8)
    assert pearl.floer_ranks(cx) == (2, 2)


@pytest.mark.parametrize("name", INDECOMPOSABLE_NAMES)
def test_d_squared_is_the_m0_anticommutator(name):
    cx = pearl.build_differentials(indecomposable(name))
    report = pearl.verify_d_squared(cx)
    assert all(report["even_blocks"]) and all(report["odd_blocks"])
    assert report["even_zero"] == report["odd_zero"] == report["anticommutator_zero"]


@given(conjugated_reps())
def test_d_squared_identity_on_random_sums(case):
    _, rep = case
    report = pearl.verify_d_squared(pearl.build_differentials(rep))
    assert all(report["even_blocks"]) and all(report["odd_blocks"])


@given(multiplicities(2), multiplicities(2))
def test_pair_complex_squares_to_anticommutator(x, y):
    cx = pearl.build_differentials(build_from(x), build_from(y))
    report = pearl.verify_d_squared(cx)
    assert all(report["even_blocks"]) and all(report["odd_blocks"])


@given(conjugated_reps())
def test_ranks_are_basis_invariant(case):
    mult, rep = case
    base = build_from(mult)
    for sel in pearl.SELECTORS:
        assert pearl.floer_ranks(pearl.build_differentials(rep), sel) == \
            pearl.floer_ranks(pearl.build_differentials(base), sel)
    assert pearl.morse_ranks(rep, coefficients="central") == pearl.morse_ranks(base, coefficients="central")


@given(multiplicities(2), multiplicities(2))
def test_central_floer_is_additive_over_hom_blocks(x, y):
    def hf(E0, E1):
        return pearl.floer_ranks(pearl.build_differentials(E0, E1), "central")
    X, Y = build_from(x), build_from(y)
    blocks = [hf(X, X), hf(X, Y), hf(Y, X), hf(Y, Y)]
    total = hf(build_from(x + y), build_from(x + y))
    assert total == tuple(sum(b[i] for b in blocks) for i in range(2))


@given(st.integers(1, 3), st.integers(0, 1))
def test_monodromy_ranks_ignore_multiplicities(q, which):
    name = ("D", "U4")[which]
    one = pearl.build_differentials(indecomposable(name))
    many = pearl.build_differentials(build_from(_mult(name, q)))
    assert pearl.floer_ranks(one, "monodromy") == pearl.floer_ranks(many, "monodromy")
    assert pearl.morse_ranks(one, coefficients="monodromy") == pearl.morse_ranks(many, coefficients="monodromy")


def _mult(name: str, k: int) -> Multiplicities:
    return Multiplicities(**{{"D": "m", "U4": "n"}[name]: k})


@pytest.mark.parametrize("name", INDECOMPOSABLE_NAMES)
def test_monodromy_subcomplex_is_closed(name):
    # restriction raises if a differential leaves the subcomplex
    cx = pearl.build_differentials(indecomposable(name))
    pearl.restrict(cx, "monodromy")
    pearl.restrict(cx, "central")


def test_trivial_system_morse_is_manifold_cohomology():
    # H*(SU(2)/Gamma; F2) has rank 1 in each degree
    assert pearl.morse_ranks(indecomposable("V1")) == (1, 1, 1, 1)


def test_trivial_system_floer_vanishes():
    assert pearl.floer_ranks(pearl.build_differentials(indecomposable("V1"))) == (0, 0)


def test_obstructed_full_complex():
    cx = pearl.build_differentials(load_rep("V2"))
    assert pearl.floer_ranks(cx, "full") == pearl.OBSTRUCTED
    assert pearl.floer_ranks(cx, "central") == (0, 0)


def test_obstruction_operator_kills_central_basis():
    rep = load_rep("V2+D")
    T = pearl.obstruction_operator(rep)
    cx = pearl.build_differentials(rep)
    for block in pearl.central_basis(cx):
        assert all(T.apply(v) == 0 for v in block)


def test_m0_is_parallel():
    for name in INDECOMPOSABLE_NAMES:
        rep = indecomposable(name)
        m0 = m0_of_rep(rep)
        for g in ELEMENTS:
            assert rep(g) @ m0 == m0 @ rep(g)


def test_regular_dual_route():
    R = load_rep("regular")
    assert pearl.morse_ranks(R, coefficients="monodromy") == (6, 6, 6, 6)
    assert pearl.morse_ranks(load_rep("V1"), load_rep("conjugation")) == (6, 6, 6, 6)
    assert pearl.floer_ranks(pearl.build_differentials(R), "monodromy") == (4, 4)


def test_paper_basis_emission_is_a_relabelling():
    cx = pearl.build_differentials(indecomposable("D"))
    P0, P1 = pearl.emit_paper_basis_matrices(cx)
    assert (rank(P0), rank(P1)) == (rank(cx.D0), rank(cx.D1))


def test_conjugation_preserves_paper_ranks():
    rep = conjugate_rep(indecomposable("D"), random_invertible(2, 5))
    cx = pearl.build_differentials(rep)
    assert pearl.floer_ranks(cx) == (2, 2)
