"""Closed-form counts of reversal-closed codes by isomorphism type.

Every count is an exact Python int.  Two formula families are exposed:

* PAPER mode evaluates the quoted closed formulas verbatim.  The quoted
  product for the number of k-dimensional complements collapses to a
  Gaussian binomial, i.e. it counts distinct sums N + L rather than
  complement subspaces L, and the type-(t,s) totals built on it do not
  divide out the number of rank-t free submodules per code.
* VERIFIED mode uses the direct complement count
  4^(k * dim soc N) * binom(dim soc M - dim soc N, k) and divides the
  per-type totals by the 4^(t*s) free-submodule multiplicity.  These are
  the values the brute-force oracle confirms for n in 2..5.

The two modes agree on semisimple cells (t = 0), on s = 0 cells, and on
the contains-one s = 0 cells; they differ by exactly 4^(t*s) whenever
t >= 1 and s >= 1.  Totals never include the zero code (t = s = 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InexactDivision, OutOfRange
from .subspace import gaussian_binomial


class Mode(str, Enum):
    PAPER = "paper"
    VERIFIED = "verified"
    BOTH = "both"
    ORACLE = "oracle"


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{what}: {num} / {den} is not an integer")
    return q


def bracket(y: int, q: int = 4) -> int:
    """(q^y - 1) / (q - 1): the number of lines in a y-dimensional space."""
    if y < 0:
        raise OutOfRange("bracket argument must be >= 0")
    return (q**y - 1) // (q - 1)


def count_semisimple(n: int, s: int) -> int:
    """Codes of type (0, s): the s-dimensional subspaces of the palindrome space."""
    m = (n + 1) // 2
    if not 0 <= s <= m:
        raise OutOfRange(f"s={s} outside 0..{m} for n={n}")
    return gaussian_binomial(m, s)


def count_U_paper(dim_soc_m: int, dim_soc_n: int, k: int) -> int:
    """Quoted product for |U_k(N, M)|, evaluated verbatim and exactly.

    U_k(N, M) is the set of k-dimensional L <= soc(M) with L and N
    intersecting trivially; the quoted product actually equals
    binom(dim soc M - dim soc N, k), the number of distinct sums N + L.
    """
    if dim_soc_n < 0 or k < 0 or dim_soc_n + k > dim_soc_m:
        raise OutOfRange(
            f"need 0 <= d, 0 <= k, d + k <= m; got m={dim_soc_m} d={dim_soc_n} k={k}"
        )
    if k == 0:
        return 1  # empty product; needed so the s = 1 / t = 1 ratios evaluate
    num = 1
    den = 1
    for i in range(k):
        num *= 4**dim_soc_m - 4 ** (dim_soc_n + i)
        den *= 4 ** (dim_soc_n + k) - 4 ** (dim_soc_n + i)
    return _exact_div(num, den, "complement-count product")


def count_U_direct(dim_soc_m: int, dim_soc_n: int, k: int) -> int:
    """Direct count of k-dimensional L <= soc(M) with L meeting soc(N) trivially."""
    if dim_soc_n < 0 or k < 0 or dim_soc_n + k > dim_soc_m:
        raise OutOfRange(
            f"need 0 <= d, 0 <= k, d + k <= m; got m={dim_soc_m} d={dim_soc_n} k={k}"
        )
    return 4 ** (k * dim_soc_n) * gaussian_binomial(dim_soc_m - dim_soc_n, k)


def count_extensions_of_simple(dim_soc_ambient: int) -> int:
    """Free rank-1 submodules of the ambient module over a fixed simple socle."""
    if dim_soc_ambient < 1:
        raise OutOfRange("ambient socle must be nonzero")
    return 4 ** (dim_soc_ambient - 1)


def count_R_submodules(dim_m: int, dim_soc_m: int) -> int:
    """Free rank-1 submodules of a module M: (4^dim M - 4^dim soc M) / 12."""
    if not 1 <= dim_soc_m <= dim_m:
        raise OutOfRange("need 1 <= dim soc M <= dim M")
    return _exact_div(4**dim_m - 4**dim_soc_m, 12, "rank-1 free submodule count")


def count_Lt0(n: int, t: int) -> int:
    """Codes of type (t, 0): socle choice times extensions per socle."""
    lo = n // 2
    hi = (n + 1) // 2
    if not 1 <= t <= lo:
        raise OutOfRange(f"t={t} outside 1..{lo} for n={n}")
    return gaussian_binomial(lo, t) * 4 ** (t * hi - t * t)


def count_Lts(n: int, t: int, s: int, mode: Mode = Mode.VERIFIED) -> int:
    """Codes of type (t, s) with t, s >= 1."""
    lo = n // 2
    hi = (n + 1) // 2
    if t < 1 or s < 1 or t > lo or t + s > hi:
        raise OutOfRange(f"(t,s)=({t},{s}) invalid for n={n}")
    if mode is Mode.PAPER:
        num = count_Lt0(n, t) * count_U_paper(hi, t, s)
        return _exact_div(num, count_U_paper(t + s, t, s), "type-(t,s) total")
    if mode is Mode.VERIFIED:
        return (
            gaussian_binomial(lo, t)
            * gaussian_binomial(hi - t, s)
            * 4 ** (t * (hi - t - s))
        )
    raise OutOfRange(f"mode {mode} is not a single counting mode")


def count_Lprime(n: int, t: int, s: int, mode: Mode = Mode.VERIFIED) -> int:
    """Codes of type (t, s) containing the all-ones vector."""
    lo = n // 2
    hi = (n + 1) // 2
    if t < 0 or s < 0 or t > lo or t + s > hi or t + s == 0:
        raise OutOfRange(f"(t,s)=({t},{s}) invalid for n={n}")
    if mode not in (Mode.PAPER, Mode.VERIFIED):
        raise OutOfRange(f"mode {mode} is not a single counting mode")
    u = count_U_paper if mode is Mode.PAPER else count_U_direct

    if t == 0:
        # 1 + W over complements W of the all-ones line in the palindrome space.
        num = u(hi, 1, s - 1)
        return _exact_div(num, u(s, 1, s - 1), "contains-one semisimple total")

    def lprime_t0() -> int:
        # s = 0 needs the all-ones vector inside the image space: n even only.
        if n % 2:
            return 0
        base = _exact_div(u(hi, 1, t - 1), u(t, 1, t - 1), "contains-one (t,0) total")
        return base * 4 ** (t * hi - t * t)

    if s == 0:
        return lprime_t0()

    # Split by whether the all-ones vector lies in the free part's socle.
    if n % 2 == 0:
        with_one = lprime_t0() * _exact_div(
            u(hi, t, s), u(t + s, t, s), "contains-one first ratio"
        )
        without_one = (count_Lt0(n, t) - lprime_t0()) * _exact_div(
            u(hi, t + 1, s - 1), u(t + s, t + 1, s - 1), "contains-one second ratio"
        )
        total = with_one + without_one
    else:
        total = count_Lt0(n, t) * _exact_div(
            u(hi, t + 1, s - 1), u(t + s, t + 1, s - 1), "contains-one ratio"
        )
    if mode is Mode.VERIFIED:
        # Each code holds 4^(t*s) rank-t free submodules over its socle.
        total = _exact_div(total, 4 ** (t * s), "free-submodule multiplicity")
    return total


def count_cell(n: int, t: int, s: int, contains_one: bool, mode: Mode) -> int:
    """One (t, s) cell of the census table."""
    if contains_one:
        return count_Lprime(n, t, s, mode)
    if t == 0:
        return count_semisimple(n, s)
    if s == 0:
        return count_Lt0(n, t)
    return count_Lts(n, t, s, mode)


@dataclass
class CountEntry:
    t: int
    s: int
    counts: dict[str, int]
    discrepancy: bool = False


@dataclass
class CountTable:
    """Census of nonzero reversal-closed codes of length n by type."""

    n: int
    contains_one: bool
    mode: Mode
    entries: list[CountEntry] = field(default_factory=list)
    totals: dict[str, int] = field(default_factory=dict)
    discrepancies: list[tuple[int, int]] = field(default_factory=list)

    def entry(self, t: int, s: int) -> CountEntry:
        for e in self.entries:
            if (e.t, e.s) == (t, s):
                return e
        raise OutOfRange(f"no ({t},{s}) entry in this table")

    def to_lines(self) -> list[str]:
        lines = [
            "report=count",
            f"n={self.n}",
            f"contains_one={str(self.contains_one).lower()}",
            f"mode={self.mode.value}",
        ]
        for e in self.entries:
            cells = " ".join(f"{m}={c}" for m, c in e.counts.items())
            suffix = " discrepancy=true" if e.discrepancy else ""
            lines.append(f"entry t={e.t} s={e.s} {cells}{suffix}")
        lines.append(
            "total " + " ".join(f"{m}={c}" for m, c in self.totals.items())
        )
        lines.append("zero_code=excluded")
        if self.mode is Mode.BOTH:
            lines.append(
                "discrepancies="
                + ",".join(f"({t},{s})" for t, s in self.discrepancies)
            )
        return lines

    def to_dict(self) -> dict:
        # Counts travel as decimal strings: they outgrow doubles quickly.
        return {
            "report": "count",
            "n": self.n,
            "contains_one": self.contains_one,
            "mode": self.mode.value,
            "entries": [
                {
                    "t": e.t,
                    "s": e.s,
                    "counts": {m: str(c) for m, c in e.counts.items()},
                    "discrepancy": e.discrepancy,
                }
                for e in self.entries
            ],
            "totals": {m: str(c) for m, c in self.totals.items()},
            "discrepancies": [list(d) for d in self.discrepancies],
            "zero_code": "excluded",
        }


def count_table(
    n: int, contains_one: bool = False, mode: Mode = Mode.BOTH
) -> CountTable:
    if n < 1:
        raise OutOfRange("length must be >= 1")
    if mode is Mode.ORACLE:
        raise OutOfRange("oracle tables come from the oracle module")
    modes = [Mode.PAPER, Mode.VERIFIED] if mode is Mode.BOTH else [mode]
    table = CountTable(n=n, contains_one=contains_one, mode=mode)
    totals = {m.value: 0 for m in modes}
    lo = n // 2
    hi = (n + 1) // 2
    for t in range(lo + 1):
        for s in range(hi - t + 1):
            if t + s == 0:
                continue
            counts = {m.value: count_cell(n, t, s, contains_one, m) for m in modes}
            entry = CountEntry(t, s, counts)
            if len(modes) == 2 and counts["paper"] != counts["verified"]:
                entry.discrepancy = True
                table.discrepancies.append((t, s))
            for m, c in counts.items():
                totals[m] += c
            table.entries.append(entry)
    table.totals = totals
    return table


def count_iso_types(n: int, contains_one: bool = False) -> int:
    """Number of types (t, s) with a nonzero VERIFIED count."""
    table = count_table(n, contains_one, Mode.VERIFIED)
    return sum(1 for e in table.entries if e.counts["verified"] > 0)
