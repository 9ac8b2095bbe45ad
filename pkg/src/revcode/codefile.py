"""Plain-text matrix format for codes.

A code file is a header line `n=<n> k=<k>` followed by k rows of n
contiguous characters from {0, 1, a, b} (b denotes a + 1), each line
newline-terminated with no trailing whitespace.  emit writes the canonical
RREF basis; parse accepts any well-formed row list, canonicalizes it, and
recomputes the isomorphism type, so parse(emit(code)) == code holds on
canonical forms.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .gf4 import GfVector, entries_of
from .reverse import ReverseSpace, ReversibleCode
from .subspace import Subspace

SYMBOLS = "01ab"

_HEADER = re.compile(r"^n=(\d+) k=(\d+)$")


def emit_rows(n: int, rows: list[GfVector]) -> str:
    lines = [f"n={n} k={len(rows)}"]
    for v in rows:
        if v.n != n:
            raise ParseError(f"row length {v.n} under header n={n}")
        lines.append(v.to_string())
    return "\n".join(lines) + "\n"


def emit_code(code: ReversibleCode) -> str:
    """Canonical matrix text for a code (RREF rows)."""
    return emit_rows(code.n, list(code.space.basis()))


def parse_code(text: str, rs: ReverseSpace | None = None) -> ReversibleCode:
    """Parse matrix text, validate closure under reversal, recompute the type."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input")
    m = _HEADER.match(lines[0])
    if not m:
        raise ParseError(f"bad header {lines[0]!r}; expected 'n=<n> k=<k>'")
    n, k = int(m.group(1)), int(m.group(2))
    if n < 1:
        raise ParseError("n must be >= 1")
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != k:
        raise ParseError(f"header says k={k} but found {len(body)} rows")
    words = []
    for ln in body:
        if len(ln) != n or ln != ln.strip():
            raise ParseError(f"row {ln!r} is not {n} contiguous symbols")
        entries = []
        for ch in ln:
            if ch not in SYMBOLS:
                raise ParseError(f"bad symbol {ch!r}; rows use {SYMBOLS!r}")
            entries.append(SYMBOLS.index(ch))
        words.append(GfVector.from_entries(entries).word)
    space = Subspace.from_words(n, words)
    if rs is None:
        rs = ReverseSpace(n)
    return ReversibleCode.from_subspace(space, rs)
