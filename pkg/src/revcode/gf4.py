"""Arithmetic in the four-element field and fixed-length vectors over it.

Elements are the integers 0..3 encoding {0, 1, a, a+1} where a is a root of
x^2 + x + 1.  Bit 0 holds the coefficient of 1 and bit 1 the coefficient of
a, so addition of elements is XOR.  Vectors pack one element per 2-bit slot
of a Python int (entry i in bits 2i, 2i+1), which keeps vector addition a
single XOR and makes vectors cheap to hash and compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import BadSymbol, LengthMismatch, OutOfRange, ZeroInverse

ZERO, ONE, ALPHA, ALPHA2 = 0, 1, 2, 3

# Row = first operand.  The nonzero elements form a cyclic group of order 3.
MUL_TABLE = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

INV_TABLE = (None, 1, 3, 2)

SYMBOLS = "01ab"


def add(x: int, y: int) -> int:
    return x ^ y


def mul(x: int, y: int) -> int:
    return MUL_TABLE[x][y]


def inv(x: int) -> int:
    if x == 0:
        raise ZeroInverse("0 has no multiplicative inverse")
    return INV_TABLE[x]


@lru_cache(maxsize=None)
def lo_mask(n: int) -> int:
    """Mask with bit 0 of every 2-bit slot set: 0b...0101."""
    return ((1 << (2 * n)) - 1) // 3


def scale_word(c: int, w: int, n: int) -> int:
    """Multiply every slot of the packed word by the scalar c."""
    if c == 0:
        return 0
    if c == 1:
        return w
    m = lo_mask(n)
    hi = (w >> 1) & m
    lo = w & m
    if c == ALPHA:
        # a * (p*a + q) = (p + q)*a + p
        return ((hi ^ lo) << 1) | hi
    # a^2 * (p*a + q) = q*a + (p + q)
    return (lo << 1) | (hi ^ lo)


def dot_words(u: int, v: int, n: int) -> int:
    """Standard dot product of two packed words (no conjugation)."""
    m = lo_mask(n)
    a = (u >> 1) & m
    b = u & m
    c = (v >> 1) & m
    d = v & m
    ac = a & c
    hi = ac ^ (a & d) ^ (b & c)
    lo = ac ^ (b & d)
    # Summing slots in characteristic 2 is a parity fold per bit plane.
    return ((bin(hi).count("1") & 1) << 1) | (bin(lo).count("1") & 1)


def weight_word(w: int, n: int) -> int:
    return bin(((w >> 1) | w) & lo_mask(n)).count("1")


def entry_of(w: int, i: int) -> int:
    return (w >> (2 * i)) & 3


def entries_of(w: int, n: int) -> tuple[int, ...]:
    return tuple((w >> (2 * i)) & 3 for i in range(n))


def word_from_entries(entries: Iterable[int]) -> int:
    w = 0
    for i, e in enumerate(entries):
        if not 0 <= e <= 3:
            raise OutOfRange(f"element {e} not in 0..3")
        w |= e << (2 * i)
    return w


def reverse_word(w: int, n: int) -> int:
    out = 0
    for i in range(n):
        out |= ((w >> (2 * i)) & 3) << (2 * (n - 1 - i))
    return out


def hat_word(w: int, n: int) -> int:
    """Keep the first floor(n/2) entries, zero the rest."""
    return w & ((1 << (2 * (n // 2))) - 1)


def pivot_of(w: int) -> int:
    """Index of the first nonzero entry; w must be nonzero."""
    return ((w & -w).bit_length() - 1) // 2


@dataclass(frozen=True)
class GfVector:
    """Length-n vector over the four-element field, packed into one int."""

    n: int
    word: int

    def __post_init__(self):
        if self.n < 0:
            raise OutOfRange("negative length")
        if self.word < 0 or self.word >> (2 * self.n):
            raise OutOfRange("packed word wider than n slots")

    @classmethod
    def zero(cls, n: int) -> "GfVector":
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, i: int) -> "GfVector":
        if not 0 <= i < n:
            raise OutOfRange(f"unit index {i} outside 0..{n - 1}")
        return cls(n, 1 << (2 * i))

    @classmethod
    def all_ones(cls, n: int) -> "GfVector":
        return cls(n, lo_mask(n))

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> "GfVector":
        es = tuple(entries)
        return cls(len(es), word_from_entries(es))

    @classmethod
    def from_string(cls, text: str) -> "GfVector":
        try:
            return cls.from_entries(SYMBOLS.index(ch) for ch in text)
        except ValueError:
            raise BadSymbol(f"matrix rows use symbols {SYMBOLS!r}: {text!r}")

    def entries(self) -> tuple[int, ...]:
        return entries_of(self.word, self.n)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise OutOfRange(f"index {i} outside 0..{self.n - 1}")
        return entry_of(self.word, i)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries())

    def __add__(self, other: "GfVector") -> "GfVector":
        if self.n != other.n:
            raise LengthMismatch(f"lengths {self.n} and {other.n}")
        return GfVector(self.n, self.word ^ other.word)

    def scale(self, c: int) -> "GfVector":
        if not 0 <= c <= 3:
            raise OutOfRange(f"scalar {c} not in 0..3")
        return GfVector(self.n, scale_word(c, self.word, self.n))

    def dot(self, other: "GfVector") -> int:
        if self.n != other.n:
            raise LengthMismatch(f"lengths {self.n} and {other.n}")
        return dot_words(self.word, other.word, self.n)

    def weight(self) -> int:
        return weight_word(self.word, self.n)

    def reverse(self) -> "GfVector":
        return GfVector(self.n, reverse_word(self.word, self.n))

    def hat(self) -> "GfVector":
        return GfVector(self.n, hat_word(self.word, self.n))

    def is_zero(self) -> bool:
        return self.word == 0

    def to_string(self) -> str:
        return "".join(SYMBOLS[e] for e in self.entries())

    def __str__(self) -> str:
        return self.to_string()
