from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiangfloer.gamma import ELEMENTS
from chiangfloer.gf2 import BitMatrix, inverse, random_invertible
from chiangfloer.reps import (
    INDECOMPOSABLE_NAMES,
    Multiplicities,
    RepError,
    apply,
    build_from,
    classify,
    conjugate_rep,
    enumerate_reps,
    flatten,
    indecomposable,
    load_rep,
    m0_class,
    m0_of_rep,
    make_rep,
    monodromy_basis,
    named_composite,
    parse_sum,
    relation_failures,
    unflatten,
)
from strategies import conjugated_reps, multiplicities

DIMS = {"V1": 1, "V2": 2, "V3": 3, "V4": 4, "D": 2, "U4": 4}


@pytest.mark.parametrize("name", INDECOMPOSABLE_NAMES + ("U8", "regular", "conjugation"))
def test_named_reps_satisfy_relations(name):
    rep = load_rep(name)
    assert relation_failures(rep.A, rep.B) == []


@pytest.mark.parametrize("name", INDECOMPOSABLE_NAMES)
def test_indecomposables_classify_to_themselves(name):
    rep = indecomposable(name)
    assert rep.dim == DIMS[name]
    assert classify(rep).as_dict() == {n: int(n == name) for n in INDECOMPOSABLE_NAMES}


@pytest.mark.parametrize("name", INDECOMPOSABLE_NAMES + ("regular", "conjugation"))
def test_rep_is_a_homomorphism(name):
    rep = load_rep(name)
    for g in ELEMENTS:
        for h in ELEMENTS:
            assert apply(rep, g * h) == apply(rep, g) @ apply(rep, h)


@given(conjugated_reps())
def test_classification_is_basis_invariant(case):
    mult, rep = case
    assert classify(rep) == mult


@given(multiplicities(), multiplicities())
def test_classification_is_additive(x, y):
    assert classify(build_from(x + y)) == x + y


@given(conjugated_reps())
def test_m0_is_central_and_equivariant(case):
    mult, rep = case
    m0 = m0_of_rep(rep)
    for g in ELEMENTS:
        assert apply(rep, g) @ m0 == m0 @ apply(rep, g)
    P = random_invertible(rep.dim, 3)
    assert m0_of_rep(conjugate_rep(rep, P)) == P @ m0 @ inverse(P)


def test_m0_classes_of_indecomposables():
    assert m0_class(indecomposable("V1")) == "Identity"
    assert m0_class(indecomposable("D")) == "Zero"
    assert m0_class(indecomposable("U4")) == "Zero"
    for name in ("V2", "V3", "V4"):
        assert m0_class(indecomposable(name)) == "Other"


def test_known_decompositions():
    assert classify(named_composite("regular")).as_tuple() == (0, 0, 0, 1, 0, 2)
    assert classify(named_composite("U8")).as_tuple() == (0, 0, 0, 0, 0, 2)


@pytest.mark.parametrize("dim", [1, 2])
def test_small_dimensions_have_no_u4_or_v4(dim):
    for rep in enumerate_reps(dim):
        mult = classify(rep)
        assert mult.k4 == mult.n == 0
        assert mult.dim == dim


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2 ** 25))
def test_flatten_round_trip(r, c, bits):
    M = BitMatrix(r, c, [(bits >> (i * c)) & ((1 << c) - 1) for i in range(r)])
    assert unflatten(flatten(M), r, c) == M


@pytest.mark.parametrize("name", INDECOMPOSABLE_NAMES)
def test_monodromy_span_is_spanned_by_transports(name):
    rep = indecomposable(name)
    basis = monodromy_basis(rep)
    assert 1 <= len(basis) <= 12
    assert len(basis) <= rep.dim ** 2


def test_parse_sum_and_json_agree():
    via_sum = parse_sum("V1*2+D")
    via_json = load_rep(json.dumps({"sum": {"V1": 2, "D": 1}}))
    assert via_sum.same_matrices(via_json)
    explicit = load_rep(json.dumps(indecomposable("D").to_json()))
    assert explicit.same_matrices(indecomposable("D"))


@pytest.mark.parametrize("bad", ["V5", "D*0", "X+D", "V1**2"])
def test_bad_sums_are_rejected(bad):
    with pytest.raises((RepError, OSError)):
        load_rep(bad)


def test_relation_violations_are_reported():
    A = BitMatrix.from_strings(["01", "10"])
    B = BitMatrix.identity(2)
    with pytest.raises(RepError, match="relation"):
        make_rep(A, B)
    with pytest.raises(RepError):
        make_rep(BitMatrix.identity(2), BitMatrix.identity(3))


def test_json_dim_mismatch_is_rejected():
    with pytest.raises(RepError):
        load_rep('{"dim": 3, "a": ["1"], "b": ["1"]}')


def test_multiplicities_text():
    assert str(Multiplicities(2, 0, 0, 0, 1, 0)) == "V1*2+D"
    assert Multiplicities(0, 0, 0, 1, 0, 2).dim == 12
