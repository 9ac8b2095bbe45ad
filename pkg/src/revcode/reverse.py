"""Coordinate reversal on GF(4)^n and the module structure it induces.

Write r for the map reversing coordinates and T = r + id.  Then T^2 = 0,
K = ker T is the palindrome subspace (dimension ceil(n/2)), and I = im T
has dimension floor(n/2) with I <= K; K = I exactly when n is even, and
for odd n K splits as I plus the line through the all-ones vector.  K is
also the dual of I under the standard dot product.

A subspace closed under r is a module over F[x]/(x^2 + 1) via
(cx + d) * v = c*r(v) + d*v.  The indecomposables have dimension 2 (free,
written R) and 1 (simple, written F), so every reversal-closed code is
isomorphic to t*R + s*F; (t, s) is its isomorphism type.  The socle of a
module M is M intersected with K, of dimension t + s, which recovers the
type: t = dim M - dim soc M, s = 2 dim soc M - dim M.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvariant, OutOfRange
from .gf4 import GfVector, hat_word, lo_mask, reverse_word
from .subspace import Subspace


def reverse_map(v: GfVector) -> GfVector:
    return v.reverse()


def t_map(v: GfVector) -> GfVector:
    """T(v) = r(v) + v; its image generates the socle of any closed code."""
    return GfVector(v.n, reverse_word(v.word, v.n) ^ v.word)


def hat(v: GfVector) -> GfVector:
    """First floor(n/2) entries kept, the rest zeroed."""
    return GfVector(v.n, hat_word(v.word, v.n))


class ReverseSpace:
    """Precomputed reversal structure of GF(4)^n: K, I, and helpers."""

    def __init__(self, n: int):
        if n < 1:
            raise OutOfRange("length must be >= 1")
        self.n = n
        half = n // 2
        gamma = [(1 << (2 * i)) ^ (1 << (2 * (n - 1 - i))) for i in range(half)]
        self.image = Subspace.from_words(n, gamma)
        fixed = list(gamma)
        if n % 2:
            fixed.append(1 << (2 * half))
        self.kernel = Subspace.from_words(n, fixed)
        self.one = GfVector.all_ones(n)
        self.middle = GfVector.unit(n, half) if n % 2 else None

    def reverse_word(self, w: int) -> int:
        return reverse_word(w, self.n)

    def t_word(self, w: int) -> int:
        return reverse_word(w, self.n) ^ w

    def is_invariant(self, space: Subspace) -> bool:
        """True when the subspace is closed under coordinate reversal."""
        if space.n != self.n:
            raise OutOfRange("ambient lengths differ")
        return all(space.contains_word(self.reverse_word(w)) for w in space.rows)

    def socle(self, space: Subspace) -> Subspace:
        if not self.is_invariant(space):
            raise NotInvariant("socle is defined for reversal-closed subspaces")
        return space.intersect(self.kernel)

    def iso_type(self, space: Subspace) -> tuple[int, int]:
        soc = self.socle(space)
        return space.dim - soc.dim, 2 * soc.dim - space.dim

    def t_image(self, space: Subspace) -> Subspace:
        """T(M); equals the socle of the free part, of dimension t."""
        return Subspace.from_words(self.n, (self.t_word(w) for w in space.rows))

    def contains_one(self, space: Subspace) -> bool:
        return space.contains_word(lo_mask(self.n))


def is_self_orthogonal(space: Subspace) -> bool:
    basis = space.basis()
    return all(
        basis[i].dot(basis[j]) == 0
        for i in range(len(basis))
        for j in range(i, len(basis))
    )


@dataclass(frozen=True)
class ReversibleCode:
    """A reversal-closed code with its socle and isomorphism type attached."""

    space: Subspace
    socle: Subspace
    t: int
    s: int
    contains_one: bool

    @classmethod
    def from_subspace(cls, space: Subspace, rs: ReverseSpace) -> "ReversibleCode":
        soc = rs.socle(space)  # raises NotInvariant when not closed
        t = space.dim - soc.dim
        s = 2 * soc.dim - space.dim
        return cls(space, soc, t, s, rs.contains_one(space))

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def dim(self) -> int:
        return self.space.dim

    def sort_key(self):
        return self.space.sort_key()
