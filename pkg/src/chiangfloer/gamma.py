"""
The binary dihedral group of order 12.

Presentation ``<a, b | a^6 = 1, b^2 = a^3, ab = ba^-1>``.  Elements are
kept in the normal form ``a^i b^j`` with ``0 <= i < 6`` and ``j in {0, 1}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, order=True)
class GammaElement:
    """The element ``a^i b^j``."""

    i: int = 0
    j: int = 0

    def __post_init__(self):
        if not (0 <= self.i < 6 and self.j in (0, 1)):
            raise ValueError(f"not a normal form: a^{self.i} b^{self.j}")

    @property
    def index(self) -> int:
        return 6 * self.j + self.i

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        return multiply(self, other)

    def __pow__(self, k: int) -> "GammaElement":
        out = IDENTITY
        base = self if k >= 0 else inverse(self)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __str__(self) -> str:
        if self.i == 0 and self.j == 0:
            return "e"
        if self.j == 0:
            return "a" if self.i == 1 else f"a^{self.i}"
        a = "a" if self.i == 1 else f"a^{self.i}"
        return "b" if self.i == 0 else f"{a} b"

    @classmethod
    def parse(cls, text: str) -> "GammaElement":
        """Parse ``"e"``, ``"a^i"``, ``"a^i b"``, ``"b"`` (``"a"`` means ``a^1``)."""
        t = text.strip()
        if t in ("e", "1", "Id"):
            return IDENTITY
        m = re.fullmatch(r"(?:a(?:\^(\d+))?)?\s*(b)?", t)
        if not m or not t:
            raise ValueError(f"cannot parse group element {text!r}")
        has_a = t.startswith("a")
        i = int(m.group(1)) if m.group(1) else (1 if has_a else 0)
        return cls(i % 6, 1 if m.group(2) else 0)


IDENTITY = GammaElement(0, 0)
A = GammaElement(1, 0)
B = GammaElement(0, 1)
ELEMENTS: tuple[GammaElement, ...] = tuple(GammaElement(i, j) for j in (0, 1) for i in range(6))


def _multiply_raw(x: GammaElement, y: GammaElement) -> GammaElement:
    # a^i b^j a^k b^l: move b^j past a^k using b a^k = a^-k b
    k = y.i if x.j == 0 else (-y.i) % 6
    i = x.i + k
    j = x.j + y.j
    if j == 2:
        i += 3  # b^2 = a^3
        j = 0
    return GammaElement(i % 6, j)


@lru_cache(maxsize=1)
def multiplication_table() -> tuple[tuple[GammaElement, ...], ...]:
    return tuple(tuple(_multiply_raw(x, y) for y in ELEMENTS) for x in ELEMENTS)


def multiply(x: GammaElement, y: GammaElement) -> GammaElement:
    return multiplication_table()[x.index][y.index]


def inverse(x: GammaElement) -> GammaElement:
    if x.j == 0:
        return GammaElement((-x.i) % 6, 0)
    # (a^i b)^-1 = b^-1 a^-i = a^3 b a^-i = a^(3+i) b
    return GammaElement((x.i + 3) % 6, 1)


def element_order(x: GammaElement) -> int:
    y, k = x, 1
    while y != IDENTITY:
        y = y * x
        k += 1
    return k


def word(letters: str) -> GammaElement:
    """Evaluate a word in the generators, e.g. ``word("aab")``."""
    out = IDENTITY
    for ch in letters:
        if ch == "a":
            out = out * A
        elif ch == "b":
            out = out * B
        elif ch.strip():
            raise ValueError(f"unknown generator {ch!r}")
    return out
