import random

import pytest

from revcode.errors import BadSymbol, LengthMismatch, OutOfRange, ZeroInverse
from revcode.gf4 import (
    ALPHA,
    ALPHA2,
    GfVector,
    add,
    dot_words,
    inv,
    mul,
    scale_word,
    weight_word,
)

ELEMENTS = range(4)


def test_field_axioms_exhaustive():
    for x in ELEMENTS:
        assert add(x, 0) == x
        assert mul(x, 1) == x
        assert mul(x, 0) == 0
        assert add(x, x) == 0  # characteristic 2
        for y in ELEMENTS:
            assert add(x, y) == add(y, x)
            assert mul(x, y) == mul(y, x)
            for z in ELEMENTS:
                assert add(add(x, y), z) == add(x, add(y, z))
                assert mul(mul(x, y), z) == mul(x, mul(y, z))
                assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))


def test_alpha_satisfies_its_polynomial():
    # a^2 = a + 1 and the nonzero elements are cyclic of order 3
    assert mul(ALPHA, ALPHA) == ALPHA2 == add(ALPHA, 1)
    assert mul(ALPHA, ALPHA2) == 1
    assert mul(ALPHA2, ALPHA2) == ALPHA


def test_inverses():
    assert inv(1) == 1
    assert inv(ALPHA) == ALPHA2
    assert inv(ALPHA2) == ALPHA
    for x in (1, ALPHA, ALPHA2):
        assert mul(x, inv(x)) == 1
    with pytest.raises(ZeroInverse):
        inv(0)


def test_vector_add_is_entrywise():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 12)
        u = GfVector.from_entries(rng.randrange(4) for _ in range(n))
        v = GfVector.from_entries(rng.randrange(4) for _ in range(n))
        assert (u + v).entries() == tuple(
            add(a, b) for a, b in zip(u.entries(), v.entries())
        )


def test_scale_matches_elementwise_mul():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 12)
        v = GfVector.from_entries(rng.randrange(4) for _ in range(n))
        for c in ELEMENTS:
            assert v.scale(c).entries() == tuple(mul(c, e) for e in v.entries())


def test_dot_matches_explicit_sum():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randint(1, 10)
        u = [rng.randrange(4) for _ in range(n)]
        v = [rng.randrange(4) for _ in range(n)]
        expected = 0
        for a, b in zip(u, v):
            expected = add(expected, mul(a, b))
        got = dot_words(GfVector.from_entries(u).word, GfVector.from_entries(v).word, n)
        assert got == expected


def test_weight_counts_nonzero_entries():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 12)
        es = [rng.randrange(4) for _ in range(n)]
        v = GfVector.from_entries(es)
        assert v.weight() == sum(1 for e in es if e) == weight_word(v.word, n)


def test_reverse_and_hat():
    v = GfVector.from_string("01ab0")
    assert v.reverse().to_string() == "0ba10"
    assert v.reverse().reverse() == v
    assert v.hat().to_string() == "01000"  # first floor(5/2) entries survive
    w = GfVector.from_string("01ab")
    assert w.hat().to_string() == "0100"


def test_string_round_trip_and_symbols():
    v = GfVector.from_string("0a1b")
    assert v.entries() == (0, 2, 1, 3)
    assert v.to_string() == "0a1b"
    with pytest.raises(BadSymbol):
        GfVector.from_string("01x")


def test_constructors_and_bounds():
    assert GfVector.zero(4).weight() == 0
    assert GfVector.unit(4, 2).entries() == (0, 0, 1, 0)
    assert GfVector.all_ones(3).entries() == (1, 1, 1)
    with pytest.raises(OutOfRange):
        GfVector.unit(3, 3)
    with pytest.raises(LengthMismatch):
        GfVector.zero(3) + GfVector.zero(4)
    with pytest.raises(LengthMismatch):
        GfVector.zero(3).dot(GfVector.zero(4))


def test_scale_word_is_branch_free_consistent():
    # packed scaling by a and a^2 agrees with per-entry table lookups
    rng = random.Random(19)
    for _ in range(100):
        n = rng.randint(1, 16)
        w = rng.getrandbits(2 * n)
        for c in (ALPHA, ALPHA2):
            scaled = scale_word(c, w, n)
            for i in range(n):
                assert (scaled >> (2 * i)) & 3 == mul(c, (w >> (2 * i)) & 3)
