"""
Pearl complex of the Chiang Lagrangian with coefficients in Hom(E0, E1).

There are eight critical points.  The even generators are
``[m', x1, x2, x3]`` (indices 0 and 2) and the odd generators are
``[x'1, x'2, x'3, m]`` (indices 1 and 3).  Every contribution to the
differential has the shape ``alpha -> rho1(g) . alpha . rho0(h)`` for
group elements ``g, h``; Morse flowlines give ``g = P^-1, h = P`` and
pearly trajectories give ``g = P(gamma^1), h = P(gamma^0)``.

Internally ``Hom(E0_x, E1_x)`` is flattened column-major (see
:func:`chiangfloer.reps.flatten`); the printed basis is produced only by
:func:`emit_paper_basis_matrices`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import paper_data
from .gamma import GammaElement, inverse
from .gf2 import BitMatrix, direct_sum, kernel_basis, rank, row_space_basis
from .reps import GammaRep, apply, m0_of_rep, monodromy_basis

EVEN = ("m'", "x1", "x2", "x3")
ODD = ("x'1", "x'2", "x'3", "m")
MORSE_INDEX = {"m'": 0, "x'1": 1, "x'2": 1, "x'3": 1, "x1": 2, "x2": 2, "x3": 2, "m": 3}

SELECTORS = ("full", "central", "monodromy")


class ComplexError(RuntimeError):
    """A structural identity failed (closure, d^2)."""


@dataclass(frozen=True)
class Term:
    """``dst += rho1(left) . alpha_src . rho0(right)``."""

    src: str
    dst: str
    left: GammaElement
    right: GammaElement
    kind: str  # "morse" or "disc"


def _t(src: str, dst: str, left: str, right: str, kind: str) -> Term:
    return Term(src, dst, GammaElement.parse(left), GammaElement.parse(right), kind)


def _conj(src: str, dst: str, p: str) -> Term:
    # P^-1 alpha P
    g = GammaElement.parse(p)
    return Term(src, dst, inverse(g), g, "morse")


# The closed-form differentials, term by term.
D0_TERMS: tuple[Term, ...] = (
    # into x'1
    _t("m'", "x'1", "e", "e", "morse"), _conj("m'", "x'1", "b"),
    _t("x1", "x'1", "a^2 b", "e", "disc"), _t("x1", "x'1", "e", "a^4 b", "disc"),
    _t("x2", "x'1", "a^2 b", "e", "disc"), _t("x2", "x'1", "a^5", "a^5 b", "disc"),
    # into x'2
    _t("m'", "x'2", "e", "e", "morse"), _conj("m'", "x'2", "a b"),
    _t("x2", "x'2", "a^2 b", "e", "disc"), _t("x2", "x'2", "e", "b", "disc"),
    _t("x3", "x'2", "a^3 b", "a", "disc"), _t("x3", "x'2", "e", "b", "disc"),
    # into x'3
    _t("m'", "x'3", "e", "e", "morse"), _conj("m'", "x'3", "a^2 b"),
    _t("x3", "x'3", "a^4 b", "e", "disc"), _t("x3", "x'3", "e", "b", "disc"),
    _t("x1", "x'3", "a", "a^3 b", "disc"), _t("x1", "x'3", "a^5 b", "a^5", "disc"),
    # into m
    _t("x1", "m", "e", "e", "morse"), _conj("x1", "m", "a^3 b"),
    _t("x2", "m", "e", "e", "morse"), _conj("x2", "m", "a^4 b"),
    _t("x3", "m", "e", "e", "morse"), _conj("x3", "m", "a^5 b"),
)

D1_TERMS: tuple[Term, ...] = (
    # into m'
    _t("x'1", "m'", "b", "e", "disc"), _t("x'2", "m'", "e", "a^4 b", "disc"),
    _t("x'3", "m'", "a^2 b", "e", "disc"),
    _t("m", "m'", "a", "e", "disc"), _t("m", "m'", "e", "a^5", "disc"),
    # into x1
    _t("x'1", "x1", "e", "e", "morse"), _t("x'2", "x1", "e", "e", "morse"),
    _conj("x'2", "x1", "a"), _conj("x'3", "x1", "a"),
    _t("m", "x1", "e", "b", "disc"),
    # into x2
    _conj("x'1", "x2", "a^2 b"), _t("x'2", "x2", "e", "e", "morse"),
    _conj("x'3", "x2", "a"), _t("x'3", "x2", "e", "e", "morse"),
    _t("m", "x2", "a^4 b", "e", "disc"),
    # into x3
    _conj("x'1", "x3", "a^2 b"), _conj("x'1", "x3", "a^3 b"),
    _conj("x'2", "x3", "a^3 b"), _t("x'3", "x3", "e", "e", "morse"),
    _t("m", "x3", "e", "a^2 b", "disc"),
)


def terms_from_tables() -> tuple[list[Term], list[Term]]:
    """Rebuild both term lists from the transport tables alone."""
    ft = {k: GammaElement.parse(v) for k, v in paper_data.FLOWLINE_TRANSPORTS.items()}
    d0: list[Term] = []
    d1: list[Term] = []

    def morse(src: str, dst: str, p: GammaElement, out: list[Term]):
        out.append(Term(src, dst, inverse(p), p, "morse"))

    def disc(src: str, dst: str, pair: tuple[str, str], out: list[Term]):
        p0, p1 = paper_data.pair(pair)
        out.append(Term(src, dst, p1, p0, "disc"))

    for i in "123":
        # flowlines x'_i -> m' feed End(m') -> End(x'_i)
        for name in (f"gamma'{i}", f"~gamma'{i}"):
            morse("m'", f"x'{i}", ft[name], d0)
        # flowlines m -> x_i feed End(x_i) -> End(m)
        for name in (f"gamma{i}", f"~gamma{i}"):
            morse(f"x{i}", "m", ft[name], d0)
    # flowlines x_i -> x'_j feed End(x'_j) -> End(x_i)
    for name, p in ft.items():
        if "delta" in name:
            i, j = name[-2], name[-1]
            morse(f"x'{j}", f"x{i}", p, d1)
    for label, pair in paper_data.TRAJECTORY_PAIRS.items():
        i, j = label[1], label[2]
        disc(f"x{j}", f"x'{i}", pair, d0)
    for label, pair in paper_data.MINIMUM_DISC_PAIRS.items():
        disc(f"x'{label[-1]}", "m'", pair, d1)
    for label, pair in paper_data.MAXIMUM_DISC_PAIRS.items():
        disc("m", f"x{label[-1]}", pair, d1)
    for pair in paper_data.MASLOV4_PAIRS.values():
        disc("m", "m'", pair, d1)
    return d0, d1


def hom_map(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    """Matrix of ``alpha -> left . alpha . right`` on column-major Hom.

    ``alpha`` is ``r1 x r0`` with ``left`` of size ``r1`` and ``right`` of
    size ``r0``.  The image of the unit ``E_ij`` is the outer product of
    column ``i`` of ``left`` with row ``j`` of ``right``.
    """
    r1, r0 = left.rows, right.rows
    lcols = left.columns()
    cols = []
    for j in range(r0):
        for i in range(r1):
            u = lcols[i]
            row = right.data[j]
            v = 0
            while row:
                low = row & -row
                v |= u << ((low.bit_length() - 1) * r1)
                row ^= low
            cols.append(v)
    return BitMatrix.from_columns(cols, r0 * r1)


@dataclass
class PearlComplex:
    E0: GammaRep
    E1: GammaRep
    D0: BitMatrix
    D1: BitMatrix
    morse_D0: BitMatrix
    morse_D1: BitMatrix
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def block(self) -> int:
        return self.E0.dim * self.E1.dim


def _assemble(terms: Sequence[Term], src_order: Sequence[str], dst_order: Sequence[str],
              E0: GammaRep, E1: GammaRep, kinds: Sequence[str]) -> BitMatrix:
    nb = E0.dim * E1.dim
    blocks = {}
    maps: dict[tuple[GammaElement, GammaElement], BitMatrix] = {}
    for t in terms:
        if t.kind not in kinds:
            continue
        M = maps.get((t.left, t.right))
        if M is None:
            M = maps[t.left, t.right] = hom_map(apply(E1, t.left), apply(E0, t.right))
        key = (dst_order.index(t.dst), src_order.index(t.src))
        blocks[key] = blocks[key] + M if key in blocks else M
    data = [0] * (nb * len(dst_order))
    for (bi, bj), M in blocks.items():
        for r, w in enumerate(M.data):
            data[bi * nb + r] ^= w << (bj * nb)
    return BitMatrix(nb * len(dst_order), nb * len(src_order), data)


def build_differentials(E0: GammaRep, E1: GammaRep | None = None) -> PearlComplex:
    E1 = E0 if E1 is None else E1
    both = ("morse", "disc")
    D0 = _assemble(D0_TERMS, EVEN, ODD, E0, E1, both)
    D1 = _assemble(D1_TERMS, ODD, EVEN, E0, E1, both)
    M0 = _assemble(D0_TERMS, EVEN, ODD, E0, E1, ("morse",))
    M1 = _assemble(D1_TERMS, ODD, EVEN, E0, E1, ("morse",))
    return PearlComplex(E0, E1, D0, D1, M0, M1)


# obstruction and subcomplexes

def obstruction_operator(E0: GammaRep, E1: GammaRep | None = None) -> BitMatrix:
    """``T(alpha) = alpha . m0(E0) + m0(E1) . alpha`` on Hom(E0, E1)."""
    E1 = E0 if E1 is None else E1
    return (hom_map(BitMatrix.identity(E1.dim), m0_of_rep(E0))
            + hom_map(m0_of_rep(E1), BitMatrix.identity(E0.dim)))


def _check_parallel(cx: PearlComplex):
    # m0 is a parallel section: conjugation by every transport fixes it
    from .gamma import ELEMENTS
    for E in (cx.E0, cx.E1):
        m0 = m0_of_rep(E)
        for g in ELEMENTS:
            R = apply(E, g)
            if R @ m0 != m0 @ R:
                raise ComplexError(f"m0 is not parallel under {g}")


def central_basis(cx: PearlComplex) -> list[list[int]]:
    """Per-generator basis of the kernel of the obstruction operator."""
    if "central" not in cx._cache:
        _check_parallel(cx)
        # echelon form, so source and target coordinates agree
        ker = row_space_basis(kernel_basis(obstruction_operator(cx.E0, cx.E1)))
        cx._cache["central"] = [list(ker) for _ in range(8)]
    return cx._cache["central"]


def _block_bases(cx: PearlComplex, sel: str) -> list[list[int]] | None:
    if sel == "full":
        return None
    if sel == "central":
        return central_basis(cx)
    if sel == "monodromy":
        if not cx.E0.same_matrices(cx.E1):
            raise ValueError("monodromy selector needs E0 == E1")
        mb = monodromy_basis(cx.E0)
        return [list(mb) for _ in range(8)]
    raise ValueError(f"unknown selector {sel!r}; expected one of {SELECTORS}")


def _restrict_map(M: BitMatrix, nb: int, src: list[list[int]], dst: list[list[int]]) -> BitMatrix:
    """Write ``M`` in the coordinates of per-block subspaces; checks closure.

    Each basis must be in reduced echelon form sorted by pivot, so that a
    vector's coordinates are the same whether it is read as source or target.
    """
    # echelon bases with pivots for the target, block by block
    dst_ech = []
    for b, basis in enumerate(dst):
        ech = row_space_basis(v << (b * nb) for v in basis)
        dst_ech.append([((w & -w).bit_length() - 1, w) for w in ech])
    offsets = [0]
    for e in dst_ech:
        offsets.append(offsets[-1] + len(e))
    mcols = M.columns()
    cols = []
    for b, basis in enumerate(src):
        for v in basis:
            img = 0
            v <<= b * nb
            while v:
                low = v & -v
                img ^= mcols[low.bit_length() - 1]
                v ^= low
            coords = 0
            for tb, ech in enumerate(dst_ech):
                for k, (p, w) in enumerate(ech):
                    if img >> p & 1:
                        img ^= w
                        coords |= 1 << (offsets[tb] + k)
            if img:
                raise ComplexError("subspace is not closed under the differential")
            cols.append(coords)
    return BitMatrix.from_columns(cols, offsets[-1])


def restrict(cx: PearlComplex, sel: str = "full", morse_only: bool = False) -> tuple[BitMatrix, BitMatrix]:
    D0, D1 = (cx.morse_D0, cx.morse_D1) if morse_only else (cx.D0, cx.D1)
    bases = _block_bases(cx, sel)
    if bases is None:
        return D0, D1
    nb = cx.block
    even, odd = bases[:4], bases[4:]
    return _restrict_map(D0, nb, even, odd), _restrict_map(D1, nb, odd, even)


OBSTRUCTED = "Obstructed"


def floer_ranks(cx: PearlComplex, sel: str = "full"):
    """``(hf0, hf1)`` or :data:`OBSTRUCTED` for the full complex with ``T != 0``."""
    if sel == "full" and not obstruction_operator(cx.E0, cx.E1).is_zero():
        return OBSTRUCTED
    D0, D1 = restrict(cx, sel)
    if not (D1 @ D0).is_zero() or not (D0 @ D1).is_zero():
        raise ComplexError(f"d^2 != 0 on the {sel} complex")
    r0, r1 = rank(D0), rank(D1)
    return (D0.cols - r0 - r1, D1.cols - r0 - r1)


def morse_ranks(E0: GammaRep | PearlComplex, E1: GammaRep | None = None,
                coefficients: str = "end") -> tuple[int, int, int, int]:
    """Cohomology of the flowline-only complex, degrees 0..3.

    Args:
        E0: source representation, or an already built complex.
        E1: target representation (defaults to ``E0``).
        coefficients: ``"end"`` (all of Hom), ``"central"`` or ``"monodromy"``.
    """
    if isinstance(E0, PearlComplex):
        cx = E0
    else:
        cx = build_differentials(E0, E0 if E1 is None else E1)
    sel = {"end": "full", "full": "full"}.get(coefficients, coefficients)
    M0, M1 = restrict(cx, sel, morse_only=True)
    # M0: [m', x1, x2, x3] -> [x'1, x'2, x'3, m]; M1: odd -> even
    bases = _block_bases(cx, sel)
    dims = [cx.block] * 8 if bases is None else [len(b) for b in bases]
    ev, od = dims[:4], dims[4:]

    def sub(M: BitMatrix, rows: range, cols: range, rdims, cdims) -> BitMatrix:
        r0 = sum(rdims[:rows.start]); r1 = sum(rdims[:rows.stop])
        c0 = sum(cdims[:cols.start]); c1 = sum(cdims[:cols.stop])
        mask = ((1 << c1) - 1) ^ ((1 << c0) - 1)
        return BitMatrix(r1 - r0, c1 - c0, [(w & mask) >> c0 for w in M.data[r0:r1]])

    d01 = sub(M0, range(0, 3), range(0, 1), od, ev)   # End(m') -> End(x')
    d23 = sub(M0, range(3, 4), range(1, 4), od, ev)   # End(x) -> End(m)
    d12 = sub(M1, range(1, 4), range(0, 3), ev, od)   # End(x') -> End(x)
    if not (d12 @ d01).is_zero() or not (d23 @ d12).is_zero():
        raise ComplexError("Morse differential does not square to zero")
    c = [ev[0], sum(od[:3]), sum(ev[1:]), od[3]]
    a, b_, d = rank(d01), rank(d12), rank(d23)
    return (c[0] - a, c[1] - a - b_, c[2] - b_ - d, c[3] - d)


def verify_d_squared(cx: PearlComplex) -> dict:
    """Compare both squares with the block anticommutator of ``m0``."""
    T = obstruction_operator(cx.E0, cx.E1)
    TT = direct_sum([T] * 4)
    even = cx.D1 @ cx.D0
    odd = cx.D0 @ cx.D1
    nb = cx.block

    def blocks_equal(M: BitMatrix) -> list[bool]:
        mask = (1 << (4 * nb)) - 1
        out = []
        for b in range(4):
            rows = slice(b * nb, (b + 1) * nb)
            out.append([w & mask for w in M.data[rows]] == list(TT.data[rows]))
        return out

    return {
        "even_blocks": blocks_equal(even),
        "odd_blocks": blocks_equal(odd),
        "even_zero": even.is_zero(),
        "odd_zero": odd.is_zero(),
        "anticommutator_zero": T.is_zero(),
    }


def _paper_permutation(r1: int, r0: int) -> list[int]:
    # column-major index -> row-major index inside one block
    return [i * r0 + j for j in range(r0) for i in range(r1)]


def emit_paper_basis_matrices(cx: PearlComplex) -> tuple[BitMatrix, BitMatrix]:
    """Re-express ``(D0, D1)`` with row-major matrix units in each block."""
    r1, r0 = cx.E1.dim, cx.E0.dim
    nb = r0 * r1
    perm = _paper_permutation(r1, r0)
    full = [b * nb + perm[k] for b in range(4) for k in range(nb)]

    def permute(M: BitMatrix) -> BitMatrix:
        data = [0] * M.rows
        for i, w in enumerate(M.data):
            out = 0
            j = 0
            while w:
                if w & 1:
                    out |= 1 << full[j]
                w >>= 1
                j += 1
            data[full[i]] = out
        return BitMatrix(M.rows, M.cols, data)

    return permute(cx.D0), permute(cx.D1)
