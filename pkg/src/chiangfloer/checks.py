"""
The embedded acceptance suite shared by ``verify`` and the test-suite.

Each group returns a list of :class:`Check`.  Groups map one to one onto
the acceptance criteria:

    matrices    bit-exact differentials for W^D
    theorem     ranks, HF and m0 for W^D
    transport   geometric transport table under one global convention
    sweep       closed forms over all sums of total multiplicity <= 3
    regular     monodromy invariants of the regular representation
    classify    Krull-Schmidt classifier
    properties  structural identities on random representations
    char2       the trivial rank-1 system
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable

from . import paper_data, pearl, su2
from .gamma import ELEMENTS
from .gf2 import BitMatrix, inverse, random_invertible, rank
from .reps import (
    INDECOMPOSABLE_NAMES,
    GammaRep,
    Multiplicities,
    apply,
    build_from,
    classify,
    conjugate_rep,
    direct_sum_rep,
    enumerate_reps,
    indecomposable,
    m0_class,
    m0_of_rep,
    named_composite,
)


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": _jsonable(self.expected),
                "actual": _jsonable(self.actual), "pass": self.passed}


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def check(name: str, expected, actual, passed: bool | None = None) -> Check:
    return Check(name, expected, actual, expected == actual if passed is None else passed)


# shared computations

def _zero_profile() -> dict:
    z4, z2 = (0, 0, 0, 0), (0, 0)
    return {"morse_end": z4, "morse_central": z4, "morse_monodromy": z4,
            "floer_full": z2, "floer_central": z2, "floer_monodromy": z2}


def rep_profile(rep: GammaRep) -> dict:
    """Every rank the tool computes for ``End(rep)``."""
    if rep.dim == 0:
        return {"m0": "Zero", **_zero_profile()}
    cx = pearl.build_differentials(rep)
    full = pearl.floer_ranks(cx, "full")
    return {
        "m0": m0_class(rep),
        "morse_end": pearl.morse_ranks(cx, coefficients="end"),
        "morse_central": pearl.morse_ranks(cx, coefficients="central"),
        "morse_monodromy": pearl.morse_ranks(cx, coefficients="monodromy"),
        "floer_full": full,
        "floer_central": pearl.floer_ranks(cx, "central"),
        "floer_monodromy": pearl.floer_ranks(cx, "monodromy"),
    }


@lru_cache(maxsize=None)
def _profile_of(mult: tuple[int, ...]) -> dict:
    return rep_profile(build_from(Multiplicities(*mult)))


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _trichotomy(m: int, n: int) -> int:
    return 0 if m == n == 0 else (1 if n == 0 else 2)


def closed_forms(mult: Multiplicities) -> dict:
    """Predictions that depend on the multiplicities alone."""
    k = mult.k
    tri = _trichotomy(mult.m, mult.n)
    kmax = max([i + 1 for i in range(4) if k[i]] + [0])
    if not any(k):
        m0 = "Zero"
    elif not any(k[1:]) and mult.m == mult.n == 0:
        m0 = "Identity"
    else:
        m0 = "Other"
    return {
        "m0": m0,
        "obstructed": sum(k[1:]) > 0,
        "morse_monodromy": (kmax + tri,) * 4,
        "floer_central": (2 * mult.m ** 2,) * 2,
        "floer_monodromy": (2 * tri,) * 2,
    }


def sweep_cases(max_total: int = 3) -> list[Multiplicities]:
    out = []
    for total in range(1, max_total + 1):
        for combo in itertools.combinations_with_replacement(range(6), total):
            k = [0] * 6
            for c in combo:
                k[c] += 1
            out.append(Multiplicities(*k))
    return out


def sweep_case(mult: Multiplicities) -> tuple[dict, dict, dict]:
    """``(expected, actual, obstruction)`` for one symbolic sum.

    ``expected``/``actual`` cover the closed forms and the K/M splittings;
    ``obstruction`` pairs the literal clause with the computed marker.
    """
    t = mult.as_tuple()
    kpart, mpart = t[:4] + (0, 0), (0, 0, 0, 0) + t[4:]
    V, K, M = _profile_of(t), _profile_of(kpart), _profile_of(mpart)
    cf = closed_forms(mult)
    tri, kmax = _trichotomy(mult.m, mult.n), max([i + 1 for i in range(4) if t[i]] + [0])
    expected = {
        "m0": cf["m0"],
        "end splits": _add(K["morse_end"], M["morse_end"]),
        "central Morse splits": _add(K["morse_central"], M["morse_central"]),
        "monodromy Morse splits": _add(K["morse_monodromy"], M["morse_monodromy"]),
        "HM_mon(K)": (kmax,) * 4,
        "HM_mon(M)": (tri,) * 4,
        "central HF(K)": (0, 0),
        "central HF": cf["floer_central"],
        "central HF(M)": cf["floer_central"],
        "HF_mon(K)": (0, 0),
        "HF_mon": cf["floer_monodromy"],
        "HF_mon(M)": cf["floer_monodromy"],
        "HM_mon": cf["morse_monodromy"],
    }
    actual = {
        "m0": V["m0"],
        "end splits": V["morse_end"],
        "central Morse splits": V["morse_central"],
        "monodromy Morse splits": V["morse_monodromy"],
        "HM_mon(K)": K["morse_monodromy"],
        "HM_mon(M)": M["morse_monodromy"],
        "central HF(K)": K["floer_central"],
        "central HF": V["floer_central"],
        "central HF(M)": M["floer_central"],
        "HF_mon(K)": K["floer_monodromy"],
        "HF_mon": V["floer_monodromy"],
        "HF_mon(M)": M["floer_monodromy"],
        "HM_mon": V["morse_monodromy"],
    }
    obstruction = {"expected": cf["obstructed"], "actual": V["floer_full"] == pearl.OBSTRUCTED}
    return expected, actual, obstruction


# groups

def matrices_checks(**_) -> list[Check]:
    cx = pearl.build_differentials(indecomposable("D"))
    D0, D1 = pearl.emit_paper_basis_matrices(cx)
    out = []
    for name, got, want in (("D0", D0, paper_data.D0_ROWS), ("D1", D1, paper_data.D1_ROWS)):
        rows = got.to_strings()
        diff = sum(a != b for r, s in zip(rows, want) for a, b in zip(r, s))
        out.append(check(f"{name} matches the printed matrix bit for bit", 0, diff))
    return out


def theorem_checks(**_) -> list[Check]:
    D = indecomposable("D")
    cx = pearl.build_differentials(D)
    return [
        check("rank D0", paper_data.D0_RANK, rank(cx.D0)),
        check("rank D1", paper_data.D1_RANK, rank(cx.D1)),
        check("HF(W^D)", paper_data.HF_WD, pearl.floer_ranks(cx, "full")),
        check("m0(W^D)", "Zero", m0_class(D)),
        check("Morse End(W^D)", paper_data.MORSE_END_WD, pearl.morse_ranks(cx)),
    ]


def transport_checks(tolerance: float = su2.DEFAULT_TOLERANCE, **_) -> list[Check]:
    direct = su2.full_transport_table("direct", tolerance)
    ref = su2.reference_table()
    out = [check(f"transport {name}", str(want), str(direct.get(name)))
           for name, want in ref.items()]
    mismatches = su2.compare_tables(su2.full_transport_table("inverse", tolerance), ref)
    out.append(check("opposite convention fails somewhere", True, bool(mismatches),
                     passed=bool(mismatches)))
    for rep_name in INDECOMPOSABLE_NAMES:
        rep = indecomposable(rep_name)
        total = BitMatrix.zeros(rep.dim)
        for i in (1, 2, 3):
            total = total + apply(rep, direct[f"du'{i}"])
        out.append(check(f"sum of du' transports is m0 on {rep_name}", True, total == m0_of_rep(rep)))
    return out


def sweep_checks(**_) -> list[Check]:
    out = []
    for mult in sweep_cases(3):
        expected, actual, obstruction = sweep_case(mult)
        bad = {k: actual[k] for k in expected if expected[k] != actual[k]}
        want = {k: expected[k] for k in bad}
        out.append(check(f"sweep {mult}: closed forms", want, bad, passed=not bad))
        out.append(check(f"sweep {mult}: obstructed iff k2+k3+k4>0",
                         obstruction["expected"], obstruction["actual"]))
    return out


def regular_checks(**_) -> list[Check]:
    R = named_composite("regular")
    cx = pearl.build_differentials(R)
    hm = pearl.morse_ranks(cx, coefficients="monodromy")
    hf = pearl.floer_ranks(cx, "monodromy")
    conj = pearl.morse_ranks(indecomposable("V1"), named_composite("conjugation"))
    folded = (hm[0] + hm[2], hm[1] + hm[3])
    return [
        check("HM_mon(W_reg)", paper_data.REGULAR_MORSE_MONODROMY, hm),
        check("HF_mon(W_reg)", paper_data.REGULAR_HF_MONODROMY, hf),
        check("H*(L; W_conj) by direct Morse computation", paper_data.REGULAR_MORSE_MONODROMY, conj),
        check("HF_mon(W_reg) nonzero", True, any(hf)),
        check("HF_mon(W_reg) differs from folded H*(L; W_conj)", True, hf != folded),
    ]


def classification_checks(seed: int = 0, **_) -> list[Check]:
    out = [
        check("classify(regular)", paper_data.REGULAR_CLASSIFICATION,
              classify(named_composite("regular")).as_tuple()),
        check("classify(U8)", paper_data.U8_CLASSIFICATION, classify(named_composite("U8")).as_tuple()),
    ]
    for dim in (1, 2, 3):
        count, bad = 0, []
        for rep in enumerate_reps(dim):
            count += 1
            mult = classify(rep)
            rebuilt = build_from(mult)
            if mult.k4 or mult.n or not _same_profile(rep, rebuilt):
                bad.append(str(mult))
        out.append(check(f"all {count} reps of dim {dim} are sums of V1, V2, V3, D", [], bad))
    rng = random.Random(seed)
    wrong = []
    for trial in range(100):
        mult = random_multiplicities(rng)
        rep = build_from(mult)
        P = random_invertible(rep.dim, rng.randrange(1 << 30))
        got = classify(conjugate_rep(rep, P))
        if got != mult:
            wrong.append(f"{mult} -> {got}")
    out.append(check("100 random conjugates classify back", [], wrong))
    return out


def _same_profile(x: GammaRep, y: GammaRep) -> bool:
    def profile(rep):
        eye = BitMatrix.identity(rep.dim)
        N = rep.B + eye
        ranks, P = [], eye
        for _ in range(4):
            P = P @ N
            ranks.append(rank(P))
        return ranks, rank(rep.C + eye)
    return profile(x) == profile(y)


def random_multiplicities(rng: random.Random, max_total: int = 3) -> Multiplicities:
    k = [0] * 6
    for _ in range(rng.randint(1, max_total)):
        k[rng.randrange(6)] += 1
    return Multiplicities(*k)


def property_checks(seed: int = 0, **_) -> list[Check]:
    rng = random.Random(seed)
    out = []
    reps = [indecomposable(n) for n in INDECOMPOSABLE_NAMES]
    reps += [build_from(random_multiplicities(rng)) for _ in range(10)]
    d2_bad, parallel_bad = [], []
    for rep in reps:
        r = pearl.verify_d_squared(pearl.build_differentials(rep))
        if not (all(r["even_blocks"]) and all(r["odd_blocks"])):
            d2_bad.append(rep.name)
        m0 = m0_of_rep(rep)
        if any(apply(rep, g) @ m0 != m0 @ apply(rep, g) for g in ELEMENTS):
            parallel_bad.append(rep.name)
        P = random_invertible(rep.dim, rng.randrange(1 << 30))
        if m0_of_rep(conjugate_rep(rep, P)) != P @ m0 @ inverse(P):
            parallel_bad.append(rep.name + " (basis change)")
    out.append(check("d^2 equals the m0 anticommutator", [], d2_bad))
    out.append(check("m0 is parallel and basis-equivariant", [], parallel_bad))

    add_bad = []
    for _ in range(10):
        X = build_from(random_multiplicities(rng, 2))
        Y = build_from(random_multiplicities(rng, 2))
        whole = pearl.floer_ranks(pearl.build_differentials(direct_sum_rep([X, Y])), "central")
        parts = (0, 0)
        for E0, E1 in ((X, X), (X, Y), (Y, X), (Y, Y)):
            parts = _add(parts, pearl.floer_ranks(pearl.build_differentials(E0, E1), "central"))
        if whole != parts:
            add_bad.append(f"{X.name} | {Y.name}: {whole} vs {parts}")
    out.append(check("central HF is additive over Hom blocks", [], add_bad))

    blind_bad = []
    for _ in range(10):
        e, f = rng.sample(INDECOMPOSABLE_NAMES, 2)
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        E, F = indecomposable(e), indecomposable(f)
        big = direct_sum_rep([E] * p + [F] * q)
        small = direct_sum_rep([E, F])
        a = _monodromy_ranks(big)
        b = _monodromy_ranks(small)
        if a != b:
            blind_bad.append(f"{e}*{p}+{f}*{q}: {a} vs {b}")
    out.append(check("monodromy ranks ignore multiplicities", [], blind_bad))

    basis_bad = []
    for _ in range(20):
        mult = random_multiplicities(rng)
        rep = build_from(mult)
        P = random_invertible(rep.dim, rng.randrange(1 << 30))
        if rep_profile(rep) != rep_profile(conjugate_rep(rep, P)):
            basis_bad.append(str(mult))
    out.append(check("all ranks are basis-change invariant", [], basis_bad))
    return out


def _monodromy_ranks(rep: GammaRep):
    cx = pearl.build_differentials(rep)
    return pearl.floer_ranks(cx, "monodromy"), pearl.morse_ranks(cx, coefficients="monodromy")


def char2_checks(**_) -> list[Check]:
    V1 = indecomposable("V1")
    cx = pearl.build_differentials(V1)
    return [
        check("HF(V1)", (0, 0), pearl.floer_ranks(cx, "full")),
        check("m0(V1)", "Identity", m0_class(V1)),
        check("Morse H*(L; F2)", (1, 1, 1, 1), pearl.morse_ranks(cx)),
    ]


GROUPS: dict[str, Callable[..., list[Check]]] = {
    "matrices": matrices_checks,
    "theorem": theorem_checks,
    "transport": transport_checks,
    "sweep": sweep_checks,
    "regular": regular_checks,
    "classify": classification_checks,
    "properties": property_checks,
    "char2": char2_checks,
}

CRITERIA = {1: "matrices", 2: "theorem", 3: "transport", 4: "sweep",
            5: "regular", 6: "classify", 7: "properties", 8: "char2"}


def run(groups: list[str] | None = None, seed: int = 0,
        tolerance: float = su2.DEFAULT_TOLERANCE) -> dict[str, list[Check]]:
    names = list(GROUPS) if not groups else groups
    unknown = [g for g in names if g not in GROUPS]
    if unknown:
        raise KeyError(f"unknown check group(s) {unknown}; expected {list(GROUPS)}")
    return {g: GROUPS[g](seed=seed, tolerance=tolerance) for g in names}
