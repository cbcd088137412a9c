"""
Representations of the binary dihedral group of order 12 over GF(2).

A representation is stored as the pair ``(A, B) = (rho(a), rho(b))``
acting on column vectors.  The six indecomposables are ``V1..V4`` (the
cyclic group of order 3 acting trivially, ``b`` acting by a single Jordan
block), the irreducible ``D`` and the faithful ``U4``.  Every
representation splits as

    V1^k1 + V2^k2 + V3^k3 + V4^k4 + D^m + U4^n

and ``classify`` recovers the exponents from rank profiles.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import gamma
from .gamma import GammaElement
from .gf2 import (
    BitMatrix,
    GF2Error,
    direct_sum,
    inverse,
    kernel_basis,
    rank,
    row_space_basis,
)

INDECOMPOSABLE_NAMES = ("V1", "V2", "V3", "V4", "D", "U4")
COMPOSITE_NAMES = ("U8", "regular", "conjugation")


class RepError(ValueError):
    """Invalid representation data."""


@dataclass(frozen=True)
class GammaRep:
    """A validated representation; use :func:`make_rep` to construct."""

    dim: int
    A: BitMatrix
    B: BitMatrix
    name: str = ""

    def __call__(self, g: GammaElement) -> BitMatrix:
        return apply(self, g)

    @property
    def C(self) -> BitMatrix:
        """Image of ``c = a^2``, the generator of the normal subgroup of order 3."""
        return self.A @ self.A

    def same_matrices(self, other: "GammaRep") -> bool:
        return self.A == other.A and self.B == other.B

    def to_json(self) -> dict:
        return {"dim": self.dim, "a": self.A.to_strings(), "b": self.B.to_strings()}


@dataclass(frozen=True)
class Multiplicities:
    k1: int = 0
    k2: int = 0
    k3: int = 0
    k4: int = 0
    m: int = 0
    n: int = 0

    @property
    def k(self) -> tuple[int, int, int, int]:
        return (self.k1, self.k2, self.k3, self.k4)

    @property
    def dim(self) -> int:
        return self.k1 + 2 * self.k2 + 3 * self.k3 + 4 * self.k4 + 2 * self.m + 4 * self.n

    def as_tuple(self) -> tuple[int, ...]:
        return (self.k1, self.k2, self.k3, self.k4, self.m, self.n)

    def as_dict(self) -> dict[str, int]:
        return dict(zip(INDECOMPOSABLE_NAMES, self.as_tuple()))

    def __add__(self, other: "Multiplicities") -> "Multiplicities":
        return Multiplicities(*(x + y for x, y in zip(self.as_tuple(), other.as_tuple())))

    def __str__(self) -> str:
        parts = [f"{name}*{k}" if k > 1 else name
                 for name, k in self.as_dict().items() if k]
        return "+".join(parts) or "0"


def apply(rep: GammaRep, g: GammaElement) -> BitMatrix:
    """``rho(a^i b^j) = A^i B^j``."""
    out = rep.A ** g.i
    if g.j:
        out = out @ rep.B
    return out


def relation_failures(A: BitMatrix, B: BitMatrix) -> list[str]:
    n = A.rows
    eye = BitMatrix.identity(n)
    failures = []
    a3 = A @ A @ A
    if a3 @ a3 != eye:
        failures.append("a^6 != 1")
    if B @ B != a3:
        failures.append("b^2 != a^3")
    if A @ B @ A != B:
        failures.append("ab != ba^-1")
    return failures


def make_rep(A: BitMatrix, B: BitMatrix, name: str = "") -> GammaRep:
    """Validate the defining relations and wrap ``(A, B)``."""
    if A.rows != A.cols or B.rows != B.cols:
        raise RepError(f"matrices must be square, got {A.shape} and {B.shape}")
    if A.shape != B.shape:
        raise RepError(f"dimension mismatch {A.shape} vs {B.shape}")
    failures = relation_failures(A, B)
    if failures:
        raise RepError("relation fails: " + ", ".join(failures))
    # the relations already force invertibility; checked anyway
    if rank(A) != A.rows or rank(B) != B.rows:
        raise RepError("generator images are not invertible")
    return GammaRep(A.rows, A, B, name)


def _from_columns(images: list[list[int]], n: int) -> BitMatrix:
    # images[k] lists the basis indices whose sum is the image of basis vector k
    cols = []
    for img in images:
        v = 0
        for idx in img:
            v ^= 1 << idx
        cols.append(v)
    return BitMatrix.from_columns(cols, n)


def _from_cb(C: BitMatrix, B: BitMatrix, name: str) -> GammaRep:
    # a = b^2 c^2 since a^3 = b^2 and a^2 = c
    return make_rep(B @ B @ C @ C, B, name)


def _jordan_v(i: int) -> GammaRep:
    # b acts on F2[b]/(b+1)^i as one unipotent Jordan block; A = B^2
    B = BitMatrix.from_rows([[1 if c == r or c == r + 1 else 0 for c in range(i)] for r in range(i)])
    return make_rep(B @ B, B, f"V{i}")


def _u4() -> GammaRep:
    # basis 1, c, x, cx
    C = _from_columns([[1], [0, 1], [3], [2, 3]], 4)
    B = _from_columns([[0], [0, 1], [0, 3], [0, 1, 2]], 4)
    return _from_cb(C, B, "U4")


def indecomposable(name: str) -> GammaRep:
    if name in ("V1", "V2", "V3", "V4"):
        return _jordan_v(int(name[1]))
    if name == "D":
        return make_rep(BitMatrix.from_strings(["01", "11"]), BitMatrix.from_strings(["01", "10"]), "D")
    if name == "U4":
        return _u4()
    raise RepError(f"unknown indecomposable {name!r}; expected one of {INDECOMPOSABLE_NAMES}")


def _permutation_rep(perm_a: list[int], perm_b: list[int], name: str) -> GammaRep:
    # perm[k] is the index of the image of basis vector k
    n = len(perm_a)
    return make_rep(_from_columns([[p] for p in perm_a], n), _from_columns([[p] for p in perm_b], n), name)


def _u8() -> GammaRep:
    # basis x^k -> 2k, c x^k -> 2k+1; b cycles 1 -> x -> x^2 -> x^3
    cimg, bimg = [], []
    for k in range(4):
        cimg += [[2 * k + 1], [2 * k, 2 * k + 1]]
        nxt = (k + 1) % 4
        # b(c x^k) = c^2 b(x^k) = x^(k+1) + c x^(k+1)
        bimg += [[2 * nxt], [2 * nxt, 2 * nxt + 1]]
    return _from_cb(_from_columns(cimg, 8), _from_columns(bimg, 8), "U8")


def named_composite(name: str) -> GammaRep:
    els = gamma.ELEMENTS
    idx = {g: k for k, g in enumerate(els)}
    if name == "U8":
        return _u8()
    if name == "regular":
        # right regular: g sends h to h g^-1
        perm = lambda g: [idx[h * gamma.inverse(g)] for h in els]
        return _permutation_rep(perm(gamma.A), perm(gamma.B), "regular")
    if name == "conjugation":
        perm = lambda g: [idx[g * h * gamma.inverse(g)] for h in els]
        return _permutation_rep(perm(gamma.A), perm(gamma.B), "conjugation")
    raise RepError(f"unknown composite {name!r}; expected one of {COMPOSITE_NAMES}")


def direct_sum_rep(reps: Iterable[GammaRep]) -> GammaRep:
    reps = list(reps)
    name = "+".join(r.name or "?" for r in reps)
    return GammaRep(sum(r.dim for r in reps),
                    direct_sum([r.A for r in reps]),
                    direct_sum([r.B for r in reps]), name)


def conjugate_rep(rep: GammaRep, P: BitMatrix) -> GammaRep:
    """Change of basis ``A -> P A P^-1``, ``B -> P B P^-1``."""
    if P.shape != (rep.dim, rep.dim):
        raise RepError(f"basis change {P.shape} does not match dimension {rep.dim}")
    try:
        Pinv = inverse(P)
    except GF2Error as exc:
        raise RepError("basis change is not invertible") from exc
    return GammaRep(rep.dim, P @ rep.A @ Pinv, P @ rep.B @ Pinv, rep.name)


def build_from(mult: Multiplicities) -> GammaRep:
    parts = []
    for name, k in mult.as_dict().items():
        parts += [indecomposable(name)] * k
    if not parts:
        return GammaRep(0, BitMatrix(0, 0), BitMatrix(0, 0), "0")
    return direct_sum_rep(parts)


# obstruction section

def m0_of_rep(rep: GammaRep) -> BitMatrix:
    """``(I + A^2 + A^4) B``, the disc count through the minimum."""
    A2 = rep.A @ rep.A
    return (BitMatrix.identity(rep.dim) + A2 + A2 @ A2) @ rep.B


def m0_class(rep: GammaRep) -> str:
    m0 = m0_of_rep(rep)
    if m0.is_zero():
        return "Zero"
    if m0 == BitMatrix.identity(rep.dim):
        return "Identity"
    return "Other"


# classification

def _restrict(M: BitMatrix, basis: list[int]) -> BitMatrix:
    """Matrix of ``M`` on the invariant subspace spanned by ``basis``.

    Coordinates are read off against a reduced echelon form of the basis.
    """
    ech = row_space_basis(basis)
    pivots = [(w & -w).bit_length() - 1 for w in ech]
    cols = []
    for v in ech:
        img = M.apply(v)
        coords = 0
        for k, (p, w) in enumerate(zip(pivots, ech)):
            if img >> p & 1:
                img ^= w
                coords |= 1 << k
        if img:
            raise RepError("subspace is not invariant")
        cols.append(coords)
    return BitMatrix.from_columns(cols, len(ech))


def c3_split(rep: GammaRep) -> tuple[list[int], list[int]]:
    """Bases of the fixed part ``ker(C + I)`` and ``W = ker(I + C + C^2)``."""
    eye = BitMatrix.identity(rep.dim)
    C = rep.C
    fixed = kernel_basis(C + eye)
    moving = kernel_basis(eye + C + C @ C)
    if len(fixed) + len(moving) != rep.dim or rank(BitMatrix.from_columns(fixed + moving, rep.dim)) != rep.dim:
        raise RepError("fixed and moving parts are not complementary")
    return fixed, moving


def _rank_profile(N: BitMatrix, upto: int) -> list[int]:
    # r_0 = dim, r_j = rank(N^j)
    out = [N.rows]
    P = BitMatrix.identity(N.rows)
    for _ in range(upto):
        P = P @ N
        out.append(rank(P))
    return out


def classify(rep: GammaRep) -> Multiplicities:
    """Krull-Schmidt multiplicities from rank profiles of ``B + I``."""
    fixed, moving = c3_split(rep)
    k = [0, 0, 0, 0]
    if fixed:
        Bf = _restrict(rep.B, fixed)
        N = Bf + BitMatrix.identity(Bf.rows)
        r = _rank_profile(N, 5)
        if r[4] != 0:
            raise RepError("internal inconsistency: (B+I)^4 nonzero on the fixed part")
        for i in range(1, 5):
            k[i - 1] = r[i - 1] - 2 * r[i] + r[i + 1]
    m = n = 0
    if moving:
        Bw = _restrict(rep.B, moving)
        N = Bw + BitMatrix.identity(Bw.rows)
        r1, r2 = rank(N), rank(N @ N)
        if r2 % 2:
            raise RepError("internal inconsistency: odd rank of (B+I)^2 on W")
        n = r2 // 2
        if (len(moving) - 4 * n) % 2 or len(moving) < 4 * n:
            raise RepError("internal inconsistency: dimension of W")
        m = (len(moving) - 4 * n) // 2
        if r1 != m + 3 * n:
            raise RepError("internal inconsistency: rank of (B+I) on W")
    out = Multiplicities(*k, m, n)
    if out.dim != rep.dim or min(out.as_tuple()) < 0:
        raise RepError("internal inconsistency: multiplicities do not rebuild the dimension")
    return out


# monodromy span

def flatten(M: BitMatrix) -> int:
    """Column-major flattening of an ``r x c`` matrix into an ``rc``-bit vector."""
    v = 0
    for i, w in enumerate(M.data):
        j = 0
        while w:
            if w & 1:
                v |= 1 << (j * M.rows + i)
            w >>= 1
            j += 1
    return v


def unflatten(v: int, rows: int, cols: int) -> BitMatrix:
    data = [0] * rows
    for j in range(cols):
        for i in range(rows):
            if v >> (j * rows + i) & 1:
                data[i] |= 1 << j
    return BitMatrix(rows, cols, data)


def monodromy_basis(rep: GammaRep) -> list[int]:
    """Echelon basis of ``Span{rho(g)}`` inside End, as flattened vectors."""
    return row_space_basis(flatten(apply(rep, g)) for g in gamma.ELEMENTS)


# input formats

_TERM = re.compile(r"^(V[1-4]|D|U4|U8|regular|conjugation)(?:\*(\d+))?$")


def parse_sum(text: str) -> GammaRep:
    """Parse symbolic sums such as ``"V1*2+D+U4"``."""
    parts = []
    for term in text.replace(" ", "").split("+"):
        m = _TERM.match(term)
        if not m:
            raise RepError(f"bad summand {term!r} in {text!r}")
        name, k = m.group(1), int(m.group(2) or 1)
        if k < 1:
            raise RepError(f"multiplicity must be positive in {term!r}")
        base = indecomposable(name) if name in INDECOMPOSABLE_NAMES else named_composite(name)
        parts += [base] * k
    rep = direct_sum_rep(parts)
    return GammaRep(rep.dim, rep.A, rep.B, text.replace(" ", ""))


def rep_from_json(obj: Mapping) -> GammaRep:
    """Accept ``{"dim", "a", "b"}`` or ``{"sum": {"V1": k, ...}}``."""
    if "sum" in obj:
        terms = obj["sum"]
        if isinstance(terms, str):
            return parse_sum(terms)
        text = "+".join(f"{name}*{int(k)}" for name, k in terms.items() if int(k) > 0)
        if not text:
            raise RepError("empty sum")
        return parse_sum(text)
    try:
        A = BitMatrix.from_strings(obj["a"])
        B = BitMatrix.from_strings(obj["b"])
    except (KeyError, GF2Error) as exc:
        raise RepError(f"bad matrix data: {exc}") from exc
    if "dim" in obj and (A.rows != obj["dim"]):
        raise RepError(f"declared dim {obj['dim']} but matrices are {A.shape}")
    return make_rep(A, B, obj.get("name", "custom"))


def load_rep(spec: str) -> GammaRep:
    """A file path holding JSON, inline JSON, or a symbolic sum."""
    s = spec.strip()
    if s.startswith("{"):
        return rep_from_json(json.loads(s))
    if _looks_symbolic(s):
        return parse_sum(s)
    with open(s) as fh:
        return rep_from_json(json.load(fh))


def _looks_symbolic(s: str) -> bool:
    return all(_TERM.match(t) for t in s.replace(" ", "").split("+"))


def enumerate_reps(dim: int) -> Iterable[GammaRep]:
    """Every valid ``(A, B)`` pair in dimension ``dim`` (feasible for dim <= 3)."""
    n = dim
    eye = BitMatrix.identity(n)
    mats = [BitMatrix(n, n, rows) for rows in itertools.product(range(1 << n), repeat=n)]
    invertible = [M for M in mats if rank(M) == n]
    b_candidates = [M for M in invertible if (M @ M) @ (M @ M) == eye]
    for B in b_candidates:
        B2 = B @ B
        for A in invertible:
            if A @ A @ A == B2 and A @ B @ A == B:
                yield GammaRep(n, A, B, f"enum{n}")
