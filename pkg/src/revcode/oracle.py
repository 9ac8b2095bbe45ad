"""Brute-force ground truth for small lengths.

Enumerates every subspace of GF(4)^n (all dimensions), keeps the ones
closed under coordinate reversal, and classifies them.  This is the
arbiter the constructive enumerator and the closed-form counter are
checked against; it deliberately shares only the core linear algebra and
the reversal predicates, never the constructive machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .counter import CountEntry, CountTable, Mode
from .errors import TooLarge
from .reverse import ReverseSpace
from .subspace import Subspace, enumerate_subspaces

MAX_ORACLE_N = 5  # ~12k subspaces at n = 5; the cost explodes beyond that


@dataclass(frozen=True)
class OracleRecord:
    space: Subspace
    t: int
    s: int
    contains_one: bool


def brute_force_reversible(n: int) -> Iterator[OracleRecord]:
    """Every nonzero reversal-closed code of length n, classified."""
    if n > MAX_ORACLE_N:
        raise TooLarge(f"oracle is limited to n <= {MAX_ORACLE_N}")
    rs = ReverseSpace(n)
    full = Subspace.full(n)
    for k in range(1, n + 1):
        for space in enumerate_subspaces(full, k):
            if not rs.is_invariant(space):
                continue
            t, s = rs.iso_type(space)
            yield OracleRecord(space, t, s, rs.contains_one(space))


def oracle_count_table(n: int, contains_one: bool = False) -> CountTable:
    """Census table computed by brute force (mode ORACLE)."""
    cells: dict[tuple[int, int], int] = {}
    for rec in brute_force_reversible(n):
        if contains_one and not rec.contains_one:
            continue
        cells[(rec.t, rec.s)] = cells.get((rec.t, rec.s), 0) + 1
    table = CountTable(n=n, contains_one=contains_one, mode=Mode.ORACLE)
    lo = n // 2
    hi = (n + 1) // 2
    total = 0
    for t in range(lo + 1):
        for s in range(hi - t + 1):
            if t + s == 0:
                continue
            c = cells.get((t, s), 0)
            table.entries.append(CountEntry(t, s, {"oracle": c}))
            total += c
    table.totals = {"oracle": total}
    return table
