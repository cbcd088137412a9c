"""
Dense linear algebra over GF(2) with bit-packed rows.

Each row is stored as a Python int whose bit ``j`` is the entry in
column ``j``.  Python ints behave as arbitrary-width word arrays, so a
row XOR is a single word-parallel operation regardless of width.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence


class GF2Error(ValueError):
    """Raised on malformed input or incompatible shapes."""


class BitMatrix:
    """Immutable dense matrix over GF(2).

    Args:
        rows: number of rows.
        cols: number of columns.
        data: one int per row; bit ``j`` of ``data[i]`` is entry (i, j).
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Iterable[int] = ()):
        if rows < 0 or cols < 0:
            raise GF2Error(f"negative shape ({rows}, {cols})")
        data = tuple(data) if data else (0,) * rows
        if len(data) != rows:
            raise GF2Error(f"expected {rows} row words, got {len(data)}")
        mask = (1 << cols) - 1
        for word in data:
            if word < 0 or word & ~mask:
                raise GF2Error("row word has bits beyond the column count")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("BitMatrix is immutable")

    # construction

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "BitMatrix":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from nested 0/1 sequences, e.g. ``[[0, 1], [1, 1]]``."""
        if not rows:
            return cls(0, 0)
        ncols = len(rows[0])
        words = []
        for r in rows:
            if len(r) != ncols:
                raise GF2Error("ragged rows")
            w = 0
            for j, bit in enumerate(r):
                if bit not in (0, 1):
                    raise GF2Error(f"entry {bit!r} is not 0 or 1")
                w |= bit << j
            words.append(w)
        return cls(len(rows), ncols, words)

    @classmethod
    def from_strings(cls, rows: Sequence[str], cols: int | None = None) -> "BitMatrix":
        """Parse the literal format ``["01", "11"]``."""
        if not rows:
            return cls(0, cols or 0)
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols or set(r) - {"0", "1"}:
                raise GF2Error(f"bad row literal {r!r}")
        return cls.from_rows([[int(ch) for ch in r] for r in rows])

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "BitMatrix":
        """Build from column vectors packed as ints (bit ``i`` = row ``i``)."""
        for col in columns:
            if col < 0 or col.bit_length() > nrows:
                raise GF2Error("column vector longer than row count")
        return _transpose_words(list(columns), nrows, cls)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.data[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self.cols)] for w in self.data]

    def to_strings(self) -> list[str]:
        return ["".join(str((w >> j) & 1) for j in range(self.cols)) for w in self.data]

    def column(self, j: int) -> int:
        """Column ``j`` packed as an int (bit ``i`` = row ``i``)."""
        out = 0
        for i, w in enumerate(self.data):
            out |= ((w >> j) & 1) << i
        return out

    def columns(self) -> list[int]:
        return self.transpose().data

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols}, {self.to_strings()})"

    def is_zero(self) -> bool:
        return not any(self.data)

    # algebra

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.shape != other.shape:
            raise GF2Error(f"cannot add shapes {self.shape} and {other.shape}")
        return BitMatrix(self.rows, self.cols, [a ^ b for a, b in zip(self.data, other.data)])

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return matmul(self, other)

    def __pow__(self, k: int) -> "BitMatrix":
        if self.rows != self.cols:
            raise GF2Error(f"power of non-square {self.shape}")
        if k < 0:
            return inverse(self) ** (-k)
        result = BitMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "BitMatrix":
        return _transpose_words(list(self.data), self.cols)

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def apply(self, vec: int) -> int:
        """Multiply by a packed column vector."""
        out = 0
        for i, w in enumerate(self.data):
            out |= ((w & vec).bit_count() & 1) << i
        return out

    def rank(self) -> int:
        return rank(self)


def _transpose_words(words: list[int], width: int, cls=None) -> "BitMatrix":
    """Transpose ``len(words)`` packed rows of the given bit width."""
    out = [0] * width
    for i, w in enumerate(words):
        bit = 1 << i
        while w:
            low = w & -w
            out[low.bit_length() - 1] |= bit
            w ^= low
    return (cls or BitMatrix)(width, len(words), out)


def matmul(lhs: BitMatrix, rhs: BitMatrix) -> BitMatrix:
    """Product over GF(2).

    Row ``i`` of the result is the XOR of the rows of ``rhs`` selected by
    the set bits of row ``i`` of ``lhs``.
    """
    if lhs.cols != rhs.rows:
        raise GF2Error(f"cannot multiply shapes {lhs.shape} and {rhs.shape}")
    rdata = rhs.data
    out = []
    for w in lhs.data:
        acc = 0
        while w:
            low = w & -w
            acc ^= rdata[low.bit_length() - 1]
            w ^= low
        out.append(acc)
    return BitMatrix(lhs.rows, rhs.cols, out)


def _echelon(words: list[int]) -> list[tuple[int, int]]:
    """Reduce packed rows to echelon form in place.

    Returns ``(pivot_bit, row)`` pairs; each pivot bit is set in exactly one
    returned row (reduced form).
    """
    pivots: list[tuple[int, int]] = []
    for w in words:
        for bit, row in pivots:
            if w >> bit & 1:
                w ^= row
        if w:
            low = (w & -w).bit_length() - 1
            reduced = []
            for bit, row in pivots:
                if row >> low & 1:
                    row ^= w
                reduced.append((bit, row))
            pivots = reduced
            pivots.append((low, w))
    return pivots


def rank(m: BitMatrix) -> int:
    """Row rank by Gaussian elimination on packed rows."""
    basis: dict[int, int] = {}
    for w in m.data:
        while w:
            top = w.bit_length() - 1
            piv = basis.get(top)
            if piv is None:
                basis[top] = w
                break
            w ^= piv
    return len(basis)


def row_space_basis(vectors: Iterable[int]) -> list[int]:
    """Reduced echelon basis of the span of packed vectors, sorted by pivot."""
    return [row for _, row in sorted(_echelon(list(vectors)))]


def kernel_basis(m: BitMatrix) -> list[int]:
    """Basis of ``{v : m v = 0}`` as packed column vectors.

    Length is ``m.cols - rank(m)``.
    """
    pivots = sorted(_echelon(list(m.data)))
    pivot_cols = {bit for bit, _ in pivots}
    free = [j for j in range(m.cols) if j not in pivot_cols]
    out = []
    for f in free:
        v = 1 << f
        # each pivot row reads x_p + sum over free columns = 0
        for bit, row in pivots:
            if row >> f & 1:
                v |= 1 << bit
        out.append(v)
    return out


def inverse(m: BitMatrix) -> BitMatrix:
    """Inverse by elimination on ``[m | I]``; raises on singular input."""
    if m.rows != m.cols:
        raise GF2Error(f"inverse of non-square {m.shape}")
    n = m.rows
    aug = [w | (1 << (n + i)) for i, w in enumerate(m.data)]
    # reduced echelon with lowest-bit pivots: a full-rank left half is I
    pivots = {bit: row for bit, row in _echelon(aug) if bit < n}
    if len(pivots) != n:
        raise GF2Error("matrix is singular")
    return BitMatrix(n, n, [pivots[j] >> n for j in range(n)])


def direct_sum(blocks: Sequence[BitMatrix]) -> BitMatrix:
    """Block-diagonal assembly; the empty list gives the 0x0 matrix."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = []
    shift = 0
    for b in blocks:
        data.extend(w << shift for w in b.data)
        shift += b.cols
    return BitMatrix(rows, cols, data)


def hstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    if not blocks:
        return BitMatrix(0, 0)
    nrows = blocks[0].rows
    data = [0] * nrows
    shift = 0
    for b in blocks:
        if b.rows != nrows:
            raise GF2Error("hstack row mismatch")
        for i, w in enumerate(b.data):
            data[i] |= w << shift
        shift += b.cols
    return BitMatrix(nrows, shift, data)


def vstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    if not blocks:
        return BitMatrix(0, 0)
    ncols = blocks[0].cols
    if any(b.cols != ncols for b in blocks):
        raise GF2Error("vstack column mismatch")
    return BitMatrix(sum(b.rows for b in blocks), ncols, [w for b in blocks for w in b.data])


def random_matrix(rows: int, cols: int, rng: random.Random) -> BitMatrix:
    return BitMatrix(rows, cols, [rng.getrandbits(cols) if cols else 0 for _ in range(rows)])


def random_invertible(n: int, seed: int) -> BitMatrix:
    """Seeded invertible n x n matrix by rejection sampling."""
    if n < 1:
        raise GF2Error("n must be at least 1")
    rng = random.Random(seed)
    while True:
        m = random_matrix(n, n, rng)
        if rank(m) == n:
            return m
