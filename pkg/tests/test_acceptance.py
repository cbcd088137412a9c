"""One test per acceptance criterion; each prints a single verdict line."""

from __future__ import annotations

import pytest

from chiangfloer import checks


def _verdict(capsys, number: int, summary: str, found: list[checks.Check]) -> list[checks.Check]:
    failed = [c for c in found if not c.passed]
    status = "PASS" if not failed else "FAIL"
    detail = f"{len(found) - len(failed)}/{len(found)} checks"
    if failed:
        detail += "; first failure: " + failed[0].name
    with capsys.disabled():
        print(f"\n{status} criterion {number}: {summary} ({detail})")
    return failed


def _group(number: int) -> list[checks.Check]:
    return checks.GROUPS[checks.CRITERIA[number]](seed=0)


def test_criterion_1_bit_exact_matrices(capsys):
    found = _group(1)
    assert not _verdict(capsys, 1, "D0/D1 for W^D match the printed 16x16 matrices", found)


def test_criterion_2_theorem_numbers(capsys):
    found = _group(2)
    assert not _verdict(capsys, 2, "rank D0 = 6, rank D1 = 8, HF(W^D) = (2,2), m0 = 0", found)


def test_criterion_3_transport_coherence(capsys):
    found = _group(3)
    assert not _verdict(capsys, 3, "oracle reproduces every transport under one convention", found)


@pytest.mark.xfail(strict=True, reason=(
    "the literal clause 'obstructed iff k2+k3+k4>0' disagrees with the computed "
    "obstruction on V1+D, V1+U4 and five other mixed sums, where m0 = Id + 0 is "
    "neither 0 nor Id; every other closed form holds (see decisions ledger)"))
def test_criterion_4_closed_form_sweep(capsys):
    found = _group(4)
    closed = [c for c in found if c.name.endswith("closed forms")]
    literal = [c for c in found if "obstructed iff" in c.name]
    assert len(closed) == len(literal) == len(checks.sweep_cases(3))
    # the rest of the sweep must hold outright, independently of the xfail
    assert all(c.passed for c in closed), [c.name for c in closed if not c.passed]
    failed = _verdict(capsys, 4, f"closed forms over all {len(closed)} sums of multiplicity <= 3", found)
    assert not failed


def test_criterion_5_regular_representation(capsys):
    found = _group(5)
    assert not _verdict(capsys, 5, "W_reg: HM_mon = (6,6,6,6), HF_mon = (4,4), distinct and nonzero", found)


def test_criterion_6_classification(capsys):
    found = _group(6)
    assert not _verdict(capsys, 6, "Krull-Schmidt classifier on regular, U8, dims 1-3, random conjugates", found)


def test_criterion_7_structural_properties(capsys):
    found = _group(7)
    assert not _verdict(capsys, 7, "d^2 identity, m0 invariance, additivity, blindness, basis invariance", found)


def test_criterion_8_characteristic_two_vanishing(capsys):
    found = _group(8)
    assert not _verdict(capsys, 8, "trivial rank-1 system has HF = (0,0)", found)
