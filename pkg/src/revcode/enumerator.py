"""Constructive enumeration of reversal-closed codes by isomorphism type.

Type (t, s) codes are built the way the structure theory factors them:
pick a t-dimensional socle W inside the image space I, extend each basis
vector s_i of W to a free rank-1 module spanned by u_i = hat(s_i) + k_i
and r(u_i), then adjoin an s-dimensional semisimple layer from the
palindrome space K taken modulo W.  Dedup is by canonical RREF basis;
output order is lexicographic on that basis, so runs are reproducible
byte for byte.
"""

from __future__ import annotations

import os
from itertools import product
from typing import Iterator

from . import counter
from .errors import BadSocle, OutOfRange, TooLarge
from .gf4 import GfVector, entry_of, lo_mask, scale_word
from .reverse import ReverseSpace, ReversibleCode
from .subspace import Subspace, enumerate_subspaces, express

DEFAULT_ENUM_CEILING = 10**6

ENV_CEILING = "REVCODE_CEILING"


def active_ceiling(default: int) -> int:
    raw = os.environ.get(ENV_CEILING)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise OutOfRange(f"{ENV_CEILING} must be an integer, got {raw!r}")
    if value < 1:
        raise OutOfRange(f"{ENV_CEILING} must be positive")
    return value


def _check_feasible(expected: int, ceiling: int | None) -> None:
    limit = active_ceiling(DEFAULT_ENUM_CEILING) if ceiling is None else ceiling
    if expected > limit:
        raise TooLarge(
            f"enumeration would emit {expected} codes, over the ceiling {limit}"
        )


def enumerate_semisimple(
    rs: ReverseSpace, s: int, contains_one: bool = False, ceiling: int | None = None
) -> Iterator[Subspace]:
    """Semisimple codes of dimension s: the s-dimensional subspaces of K.

    With contains_one, realized as span(all-ones + W) over complements W of
    the all-ones line, deduplicated by canonical form.
    """
    m = rs.kernel.dim
    if not 0 <= s <= m:
        raise OutOfRange(f"s={s} outside 0..{m} for n={rs.n}")
    if s == 0:
        return  # the zero code is never emitted
    if contains_one:
        _check_feasible(
            counter.count_Lprime(rs.n, 0, s, counter.Mode.VERIFIED), ceiling
        )
        one = lo_mask(rs.n)
        seen = set()
        for w in enumerate_subspaces(rs.kernel, s - 1):
            if w.contains_word(one):
                continue
            space = Subspace.from_words(rs.n, w.rows + (one,))
            if space.rows not in seen:
                seen.add(space.rows)
        for rows in sorted(seen, key=lambda r: Subspace(rs.n, r).sort_key()):
            yield Subspace(rs.n, rows)
        return
    _check_feasible(counter.count_semisimple(rs.n, s), ceiling)
    yield from enumerate_subspaces(rs.kernel, s)


def _complement_words(rs: ReverseSpace, socle: Subspace) -> list[int]:
    """Basis of a complement of the socle inside K."""
    comp: list[int] = []
    span = socle
    for row in rs.kernel.rows:
        if not span.contains_word(row):
            comp.append(row)
            span = Subspace.from_words(rs.n, span.rows + (row,))
    return comp


def socle_extensions(rs: ReverseSpace, socle: Subspace) -> Iterator[Subspace]:
    """All free modules of rank t = dim socle whose socle is the given one.

    Emits each extension exactly once: the generators u_i = hat(s_i) + k_i
    sweep k_i over a transversal of K modulo the socle, which indexes the
    extensions bijectively (generators of the same extension differ by
    socle elements once the leading scalar is normalized to 1).
    """
    n = rs.n
    t = socle.dim
    if t == 0:
        raise BadSocle("the socle must be nonzero")
    if not rs.image.contains_space(socle):
        raise BadSocle("the socle must lie inside the image space")
    comp = _complement_words(rs, socle)
    reps = list(Subspace(n, tuple(comp)).words()) if comp else [0]
    hats = [w & ((1 << (2 * (n // 2))) - 1) for w in socle.rows]
    found = []
    for ks in product(reps, repeat=t):
        gens: list[int] = []
        for h, k in zip(hats, ks):
            u = h ^ k
            gens.append(u)
            gens.append(rs.reverse_word(u))
        found.append(Subspace.from_words(n, gens))
    found.sort(key=Subspace.sort_key)
    yield from found


def enumerate_type(
    rs: ReverseSpace,
    t: int,
    s: int,
    contains_one: bool = False,
    ceiling: int | None = None,
) -> Iterator[ReversibleCode]:
    """Canonical codes of isomorphism type (t, s), deduplicated and sorted."""
    n = rs.n
    lo = n // 2
    hi = (n + 1) // 2
    if t < 0 or s < 0 or t > lo or t + s > hi:
        raise OutOfRange(f"(t,s)=({t},{s}) invalid for n={n}")
    if t + s == 0:
        raise OutOfRange("the zero code is not enumerated; query it explicitly")
    if t == 0:
        for space in enumerate_semisimple(rs, s, contains_one, ceiling):
            yield ReversibleCode.from_subspace(space, rs)
        return
    expected = counter.count_cell(n, t, s, contains_one, counter.Mode.VERIFIED)
    _check_feasible(expected, ceiling)
    one = lo_mask(n)
    seen: set[tuple[int, ...]] = set()
    for socle in enumerate_subspaces(rs.image, t):
        comp = _complement_words(rs, socle)
        for free_part in socle_extensions(rs, socle):
            if s == 0:
                candidates = [free_part]
            else:
                candidates = []
                quotient = Subspace(len(comp), tuple(1 << (2 * i) for i in range(len(comp))))
                for coords in enumerate_subspaces(quotient, s):
                    lifted = []
                    for crow in coords.rows:
                        w = 0
                        for j, b in enumerate(comp):
                            c = entry_of(crow, j)
                            if c:
                                w ^= scale_word(c, b, n)
                        lifted.append(w)
                    candidates.append(
                        Subspace.from_words(n, free_part.rows + tuple(lifted))
                    )
            for space in candidates:
                if contains_one and not space.contains_word(one):
                    continue
                if space.rows in seen:
                    continue
                seen.add(space.rows)
    codes = [
        ReversibleCode.from_subspace(Subspace(n, rows), rs)
        for rows in sorted(seen, key=lambda r: Subspace(n, r).sort_key())
    ]
    for code in codes:
        assert (code.t, code.s) == (t, s)
        yield code


def generator_matrix(code: ReversibleCode, rs: ReverseSpace) -> list[GfVector]:
    """Rows in the structured layout: t pairs (hat(s_i)+k_i, r(hat(s_i))+k_i)
    generating the free part, then s palindrome rows l_1..l_s.

    When the code contains the all-ones vector it appears as s_1 if it lies
    in T(code), else as l_1.
    """
    n = rs.n
    one = lo_mask(n)
    t_part = rs.t_image(code.space)
    assert t_part.dim == code.t

    # Basis of T(code), all-ones first when available.
    s_rows: list[int] = []
    span = Subspace.zero(n)
    lead: list[int] = []
    if code.contains_one and t_part.contains_word(one):
        lead = [one]
    for w in lead + list(t_part.rows):
        if not span.contains_word(w):
            s_rows.append(w)
            span = Subspace.from_words(n, span.rows + (w,))

    rows: list[int] = []
    t_images = [rs.t_word(w) for w in code.space.rows]
    for s_word in s_rows:
        coeffs = express(n, t_images, s_word)
        assert coeffs is not None
        u = 0
        for c, b in zip(coeffs, code.space.rows):
            if c:
                u ^= scale_word(c, b, n)
        # u = hat(s_i) + k_i with k_i = u + hat(s_i), a palindrome by construction
        k = u ^ (s_word & ((1 << (2 * (n // 2))) - 1))
        assert rs.kernel.contains_word(k)
        rows.append(u)
        rows.append(rs.reverse_word(u))

    # Palindrome rows completing the socle, all-ones first when it is not s_1.
    span = Subspace(n, t_part.rows)
    l_rows: list[int] = []
    lead = []
    if code.contains_one and not t_part.contains_word(one):
        lead = [one]
    for w in lead + list(code.socle.rows):
        if len(l_rows) == code.s:
            break
        if not span.contains_word(w):
            l_rows.append(w)
            span = Subspace.from_words(n, span.rows + (w,))
    assert len(l_rows) == code.s
    rows.extend(l_rows)

    assert Subspace.from_words(n, rows) == code.space
    return [GfVector(n, w) for w in rows]
