"""
Published reference values, stored as plain data.

Nothing here is computed.  Group elements are written as strings in the
``a^i b^j`` normal form and parsed on demand.
"""

from __future__ import annotations

from .gamma import GammaElement

# Transports along the index-1 and index-3 flowlines.  Identification
# paths (gamma'_i, gamma_i, sigma) are the identity by construction and
# are listed too so that every flowline has an entry.
FLOWLINE_TRANSPORTS: dict[str, str] = {
    "gamma'1": "e", "gamma'2": "e", "gamma'3": "e",
    "~gamma'1": "b", "~gamma'2": "a b", "~gamma'3": "a^2 b",
    "delta11": "e", "delta21": "a^2 b", "delta31": "a^2 b", "~delta31": "a^3 b",
    "delta12": "e", "~delta12": "a", "delta22": "e", "delta32": "a^3 b",
    "delta13": "a", "delta23": "e", "~delta23": "a", "delta33": "e",
    "gamma1": "e", "gamma2": "e", "gamma3": "e",
    "~gamma1": "a^3 b", "~gamma2": "a^4 b", "~gamma3": "a^5 b",
    "sigma": "e", "~sigma": "a",
}

# The non-identification entries of the printed flowline list.
PRINTED_FLOWLINES = (
    "~gamma'1", "~gamma'2", "~gamma'3",
    "delta11", "delta21", "delta31", "~delta31",
    "delta12", "~delta12", "delta22", "delta32",
    "delta13", "delta23", "~delta23", "delta33",
    "~gamma1", "~gamma2", "~gamma3",
)

# Maslov-2 trajectories from x'_i to x_j: (bottom half gamma^0, top half gamma^1).
TRAJECTORY_PAIRS: dict[str, tuple[str, str]] = {
    "F11": ("e", "a^2 b"), "B11": ("a^4 b", "e"),
    "F12": ("e", "a^2 b"), "B12": ("a^5 b", "a^5"),
    "F22": ("e", "a^2 b"), "B22": ("b", "e"),
    "F23": ("a", "a^3 b"), "B23": ("b", "e"),
    "F33": ("e", "a^4 b"), "B33": ("b", "e"),
    "F31": ("a^3 b", "a"), "B31": ("a^5", "a^5 b"),
}

# Maslov-2 disc boundaries through the minimum, as loops.
MINIMUM_DISC_BOUNDARIES: dict[str, str] = {
    "du'1": "b", "du'2": "a^4 b", "du'3": "a^2 b",
}

# Maslov-2 discs through the maximum, trajectory x_i -> m: (gamma^0, gamma^1).
MAXIMUM_DISC_PAIRS: dict[str, tuple[str, str]] = {
    "u1": ("b", "e"), "u2": ("e", "a^4 b"), "u3": ("a^2 b", "e"),
}

# Maslov-2 discs through the minimum, trajectory m' -> x'_i: (gamma^0, gamma^1).
MINIMUM_DISC_PAIRS: dict[str, tuple[str, str]] = {
    "u'1": ("e", "b"), "u'2": ("a^4 b", "e"), "u'3": ("e", "a^2 b"),
}

# Maslov-4 discs, trajectory m' -> m: (gamma^0, gamma^1).
MASLOV4_PAIRS: dict[str, tuple[str, str]] = {
    "w1": ("e", "a"), "w-1": ("a^5", "e"),
}

# Matrices of d^0 and d^1 for End(W^D) in the basis E (rows are outputs).
D0_ROWS = (
    "1001011000000000",
    "0110000110100000",
    "0110000110100000",
    "1001000011010000",
    "0100000011100101",
    "0000000011011011",
    "1101000000110101",
    "0100000000111110",
    "0010111000001100",
    "1011100000001100",
    "0000011000001011",
    "0010100000000111",
    "0000100101000010",
    "0000011000001011",
    "0000011011010000",
    "0000100101000010",
)

D1_ROWS = (
    "0010110010101110",
    "0001010001011001",
    "1000001100101001",
    "0100000100010111",
    "1000110101010100",
    "0100101111111000",
    "0010011001000001",
    "0001110111000010",
    "1010100011011000",
    "1111010010110100",
    "0010001001101010",
    "0011000111010101",
    "1011000110001000",
    "1101001001001100",
    "0110010000100010",
    "1011100000010011",
)

D0_RANK = 6
D1_RANK = 8
HF_WD = (2, 2)
MORSE_END_WD = (1, 1, 1, 1)

# Regular representation facts.
REGULAR_CLASSIFICATION = (0, 0, 0, 1, 0, 2)
U8_CLASSIFICATION = (0, 0, 0, 0, 0, 2)
REGULAR_MORSE_MONODROMY = (6, 6, 6, 6)
REGULAR_HF_MONODROMY = (4, 4)
REGULAR_MORSE_END = (12, 0, 0, 12)


def element(text: str) -> GammaElement:
    return GammaElement.parse(text)


def pair(texts: tuple[str, str]) -> tuple[GammaElement, GammaElement]:
    return element(texts[0]), element(texts[1])
