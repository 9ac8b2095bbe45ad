"""DNA strand encoding and hybridization-constraint margins.

Bases map to field elements by A -> 0, T -> 1, C -> a, G -> a + 1, so
Watson-Crick complementation (A <-> T, C <-> G) is addition of the
all-ones vector.  A code is reversible-complementary exactly when it is
closed under reversal and contains the all-ones vector.

For cross-hybridization margins between distinct strands x != y:

* reverse margin: min d(reverse(x), y)
* reverse-complement margin: min d(reverse(x), complement(y))

The self diagnostic min d(reverse(x), x) over nonzero x (stem-loop
proximity) is reported separately, never folded into the margins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BadSymbol, TooLarge, ZeroCode
from .gf4 import GfVector, lo_mask, reverse_word, weight_word
from .reverse import ReverseSpace
from .subspace import Subspace

BASES = "ATCG"  # indexed by field element 0, 1, a, a+1
PAIRING = {"A": "T", "T": "A", "C": "G", "G": "C"}


def encode_strand(strand: str) -> GfVector:
    try:
        return GfVector.from_entries(BASES.index(ch) for ch in strand)
    except ValueError:
        raise BadSymbol(f"strands use symbols {BASES!r}: {strand!r}")


def decode_vector(v: GfVector) -> str:
    return "".join(BASES[e] for e in v.entries())


def wc_complement(strand: str) -> str:
    """Base-wise Watson-Crick complement (no reversal)."""
    try:
        return "".join(PAIRING[ch] for ch in strand)
    except KeyError:
        raise BadSymbol(f"strands use symbols {BASES!r}: {strand!r}")


@dataclass
class ConstraintReport:
    n: int
    k: int
    is_reversible: bool
    is_reversible_complementary: bool
    reverse_margin: int
    reverse_complement_margin: int
    self_reverse_min: int
    strand_count: int

    def to_lines(self) -> list[str]:
        return [
            "report=dna",
            f"n={self.n} k={self.k}",
            f"is_reversible={str(self.is_reversible).lower()}",
            "is_reversible_complementary="
            + str(self.is_reversible_complementary).lower(),
            f"reverse_margin={self.reverse_margin}",
            f"reverse_complement_margin={self.reverse_complement_margin}",
            f"self_reverse_min={self.self_reverse_min}",
            f"strands={self.strand_count}",
        ]

    def to_dict(self) -> dict:
        return {
            "report": "dna",
            "n": self.n,
            "k": self.k,
            "is_reversible": self.is_reversible,
            "is_reversible_complementary": self.is_reversible_complementary,
            "reverse_margin": self.reverse_margin,
            "reverse_complement_margin": self.reverse_complement_margin,
            "self_reverse_min": self.self_reverse_min,
            "strands": self.strand_count,
        }


def _sweep_guard(space: Subspace, ceiling: int | None) -> None:
    from .distance import _sweep_limit

    if space.dim == 0:
        raise ZeroCode("margins are undefined on the zero code")
    if 4**space.dim > (_sweep_limit(ceiling)):
        raise TooLarge(f"{4 ** space.dim} strands exceed the sweep ceiling")


def constraint_report(
    space: Subspace, rs: ReverseSpace, ceiling: int | None = None
) -> ConstraintReport:
    """Pairwise margins by direct sweep over all distinct strand pairs."""
    _sweep_guard(space, ceiling)
    n = space.n
    one = lo_mask(n)
    words = list(space.words())
    rev = [reverse_word(w, n) for w in words]
    r_margin = n + 1
    rc_margin = n + 1
    for i, x in enumerate(rev):
        for j, y in enumerate(words):
            if i == j:
                continue
            d = weight_word(x ^ y, n)
            if d < r_margin:
                r_margin = d
            d = weight_word(x ^ y ^ one, n)
            if d < rc_margin:
                rc_margin = d
    self_min = min(
        weight_word(x ^ y, n)
        for (x, y) in zip(rev, words)
        if y != 0
    )
    return ConstraintReport(
        n=n,
        k=space.dim,
        is_reversible=rs.is_invariant(space),
        is_reversible_complementary=rs.is_invariant(space)
        and space.contains_word(one),
        reverse_margin=r_margin,
        reverse_complement_margin=rc_margin,
        self_reverse_min=self_min,
        strand_count=4**space.dim,
    )


def export_dna(space: Subspace, ceiling: int | None = None) -> Iterator[str]:
    """All strands of the code, deterministic order, no duplicates."""
    _sweep_guard(space, ceiling)
    for v in space.vectors():
        yield decode_vector(v)
