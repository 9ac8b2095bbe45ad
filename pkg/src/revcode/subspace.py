"""Subspaces of GF(4)^n with canonical reduced-row-echelon bases.

A Subspace stores its basis as a tuple of packed words in strict reduced
row echelon form (pivots strictly increasing, pivot entries 1, pivot
columns zero elsewhere).  Two Subspace values are equal exactly when they
are the same subspace, so they can sit in sets and be sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import OutOfRange
from .gf4 import GfVector, entries_of, entry_of, inv, pivot_of, scale_word


def rref_words(n: int, words: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis of the span of the given packed words."""
    rows: list[tuple[int, int]] = []  # (pivot column, word)
    for w in words:
        for p, r in rows:
            c = entry_of(w, p)
            if c:
                w ^= scale_word(c, r, n)
        if w == 0:
            continue
        p = pivot_of(w)
        w = scale_word(inv(entry_of(w, p)), w, n)
        rows = [(q, r ^ scale_word(entry_of(r, p), w, n)) for q, r in rows]
        rows.append((p, w))
        rows.sort()
    return tuple(r for _, r in rows)


@dataclass(frozen=True)
class Subspace:
    """Row space over GF(4), kept in canonical RREF basis form."""

    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_words(cls, n: int, words: Iterable[int]) -> "Subspace":
        return cls(n, rref_words(n, words))

    @classmethod
    def from_vectors(cls, vectors: Sequence[GfVector]) -> "Subspace":
        if not vectors:
            raise OutOfRange("cannot infer the ambient length from no vectors")
        n = vectors[0].n
        return cls.from_words(n, (v.word for v in vectors))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(1 << (2 * i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> tuple[GfVector, ...]:
        return tuple(GfVector(self.n, w) for w in self.rows)

    def pivots(self) -> tuple[int, ...]:
        return tuple(pivot_of(w) for w in self.rows)

    def reduce_word(self, w: int) -> int:
        """Remainder of w after reduction against the basis."""
        for r in self.rows:
            c = entry_of(w, pivot_of(r))
            if c:
                w ^= scale_word(c, r, self.n)
        return w

    def contains_word(self, w: int) -> bool:
        return self.reduce_word(w) == 0

    def contains(self, v: GfVector) -> bool:
        if v.n != self.n:
            raise OutOfRange(f"vector length {v.n} in a length-{self.n} space")
        return self.contains_word(v.word)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains_word(w) for w in other.rows)

    def words(self) -> Iterator[int]:
        """All 4^dim span words, deterministic coefficient-lexicographic order."""
        scaled = [
            (0, r, scale_word(2, r, self.n), scale_word(3, r, self.n))
            for r in self.rows
        ]

        def rec(i: int, acc: int) -> Iterator[int]:
            if i == len(scaled):
                yield acc
                return
            for c in range(4):
                yield from rec(i + 1, acc ^ scaled[i][c])

        return rec(0, 0)

    def vectors(self) -> Iterator[GfVector]:
        return (GfVector(self.n, w) for w in self.words())

    def sum(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise OutOfRange("ambient lengths differ")
        return Subspace.from_words(self.n, self.rows + other.rows)

    def dual(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        pivots = set(self.pivots())
        free = [j for j in range(self.n) if j not in pivots]
        out = []
        for f in free:
            w = 1 << (2 * f)
            for r in self.rows:
                # -x = x in characteristic 2
                w |= entry_of(r, f) << (2 * pivot_of(r))
            out.append(w)
        return Subspace.from_words(self.n, out)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.n != other.n:
            raise OutOfRange("ambient lengths differ")
        return self.dual().sum(other.dual()).dual()

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        """Row-major entry tuples; element order 0 < 1 < a < a^2."""
        return tuple(entries_of(w, self.n) for w in self.rows)


def express(n: int, rows: Sequence[int], target: int) -> tuple[int, ...] | None:
    """Coefficients c with sum(c_j * rows[j]) == target, or None.

    Works for dependent rows; returns one solution.
    """
    d = len(rows)
    width = n + d
    aug = [w | (1 << (2 * (n + j))) for j, w in enumerate(rows)]
    # Eliminate with pivots restricted to the first n columns.
    reduced: list[tuple[int, int]] = []
    for w in aug:
        for p, r in reduced:
            c = entry_of(w, p)
            if c:
                w ^= scale_word(c, r, width)
        lead = pivot_of(w) if w else width
        if lead < n:
            w = scale_word(inv(entry_of(w, lead)), w, width)
            reduced = [
                (q, r ^ scale_word(entry_of(r, lead), w, width)) for q, r in reduced
            ]
            reduced.append((lead, w))
            reduced.sort()
    v = target
    for p, r in reduced:
        c = entry_of(v, p)
        if c:
            v ^= scale_word(c, r, width)
    if v & ((1 << (2 * n)) - 1):
        return None
    return tuple(entry_of(v, n + j) for j in range(d))


def gaussian_binomial(m: int, t: int, q: int = 4) -> int:
    """Number of t-dimensional subspaces of an m-dimensional space over GF(q).

    Out-of-range (t < 0 or t > m) returns 0, the counting convention;
    construction APIs do their own range checks.
    """
    if t < 0 or t > m:
        return 0
    result = 1
    for i in range(t):
        result, rem = divmod(result * (q ** (m - i) - 1), q ** (i + 1) - 1)
        assert rem == 0
    return result


def enumerate_subspaces(ambient: Subspace, k: int) -> Iterator[Subspace]:
    """All k-dimensional subspaces of ambient, each exactly once.

    Emits in lexicographic order of the canonical basis (row-major entries,
    element order 0 < 1 < a < a^2).
    """
    m = ambient.dim
    if k < 0 or k > m:
        raise OutOfRange(f"dimension {k} outside 0..{m}")
    if k == 0:
        yield Subspace.zero(ambient.n)
        return
    n = ambient.n
    found = []
    for pivots in combinations(range(m), k):
        pivot_set = set(pivots)
        cells = [
            (i, j)
            for i in range(k)
            for j in range(m)
            if j not in pivot_set and j > pivots[i]
        ]
        for fill in product(range(4), repeat=len(cells)):
            coords = [[0] * m for _ in range(k)]
            for i in range(k):
                coords[i][pivots[i]] = 1
            for (i, j), c in zip(cells, fill):
                coords[i][j] = c
            lifted = []
            for row in coords:
                w = 0
                for c, b in zip(row, ambient.rows):
                    if c:
                        w ^= scale_word(c, b, n)
                lifted.append(w)
            # A coordinate RREF pushed through an RREF basis is again RREF.
            found.append(Subspace(n, tuple(lifted)))
    found.sort(key=Subspace.sort_key)
    yield from found


def subspace_count(ambient_dim: int, k: int) -> int:
    return gaussian_binomial(ambient_dim, k)
