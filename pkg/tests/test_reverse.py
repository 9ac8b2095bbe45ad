import random

import pytest

from revcode.errors import NotInvariant
from revcode.gf4 import GfVector
from revcode.reverse import (
    ReverseSpace,
    ReversibleCode,
    hat,
    is_self_orthogonal,
    reverse_map,
    t_map,
)
from revcode.subspace import Subspace, enumerate_subspaces


def random_vector(rng, n):
    return GfVector.from_entries(rng.randrange(4) for _ in range(n))


def test_kernel_and_image_bases_small():
    rs3 = ReverseSpace(3)
    assert [v.to_string() for v in rs3.kernel.basis()] == ["101", "010"]
    assert [v.to_string() for v in rs3.image.basis()] == ["101"]
    rs4 = ReverseSpace(4)
    assert [v.to_string() for v in rs4.kernel.basis()] == ["1001", "0110"]
    assert rs4.kernel == rs4.image


def test_kernel_image_dimensions_and_containment():
    for n in range(1, 11):
        rs = ReverseSpace(n)
        assert rs.kernel.dim == (n + 1) // 2
        assert rs.image.dim == n // 2
        assert rs.kernel.contains_space(rs.image)
        if n % 2 == 0:
            assert rs.kernel == rs.image
        else:
            assert not rs.image.contains(rs.one)
            assert rs.kernel == rs.image.sum(
                Subspace.from_vectors([rs.one])
            )


def test_kernel_is_dual_of_image():
    for n in range(1, 11):
        rs = ReverseSpace(n)
        assert rs.image.dual() == rs.kernel


def test_t_squared_is_zero_and_image_kernel_membership():
    rng = random.Random(47)
    for _ in range(300):
        n = rng.randint(1, 10)
        rs = ReverseSpace(n)
        v = random_vector(rng, n)
        tv = t_map(v)
        assert t_map(tv).is_zero()
        assert rs.image.contains(tv)
        assert rs.kernel.contains(v) == tv.is_zero()
        assert reverse_map(reverse_map(v)) == v


def test_palindromes_are_exactly_the_kernel():
    rng = random.Random(53)
    for _ in range(200):
        n = rng.randint(1, 9)
        rs = ReverseSpace(n)
        v = random_vector(rng, n)
        assert rs.kernel.contains(v) == (v.reverse() == v)


def test_hat_zeroes_the_back_half():
    v = GfVector.from_string("ab1a0")
    assert hat(v).to_string() == "ab000"
    assert hat(GfVector.from_string("ab1a")).to_string() == "ab00"


def test_socle_requires_invariance():
    rs = ReverseSpace(2)
    line = Subspace.from_vectors([GfVector.from_string("10")])
    assert not rs.is_invariant(line)
    with pytest.raises(NotInvariant):
        rs.socle(line)


def test_socle_is_intersection_with_kernel():
    # over every invariant subspace of small lengths
    for n in range(2, 5):
        rs = ReverseSpace(n)
        full = Subspace.full(n)
        for k in range(n + 1):
            for space in enumerate_subspaces(full, k):
                if not rs.is_invariant(space):
                    continue
                soc = rs.socle(space)
                assert soc == space.intersect(rs.kernel)
                t, s = rs.iso_type(space)
                assert 2 * t + s == space.dim
                assert t + s == soc.dim
                assert rs.t_image(space).dim == t
                assert soc.contains_space(rs.t_image(space))


def test_full_space_type():
    for n in range(1, 8):
        rs = ReverseSpace(n)
        t, s = rs.iso_type(Subspace.full(n))
        assert t == n // 2
        assert s == n % 2


def test_kernel_type_is_semisimple():
    for n in range(1, 8):
        rs = ReverseSpace(n)
        assert rs.iso_type(rs.kernel) == (0, (n + 1) // 2)


def test_contains_one():
    rs = ReverseSpace(3)
    rep = Subspace.from_vectors([rs.one])
    assert rs.contains_one(rep)
    assert rs.contains_one(rs.kernel)
    assert not rs.contains_one(rs.image)


def test_subspaces_of_image_are_self_orthogonal():
    for n in range(2, 9):
        rs = ReverseSpace(n)
        for k in range(rs.image.dim + 1):
            for space in enumerate_subspaces(rs.image, k):
                assert is_self_orthogonal(space)


def test_reversible_code_classification():
    rs = ReverseSpace(3)
    code = ReversibleCode.from_subspace(Subspace.full(3), rs)
    assert (code.t, code.s) == (1, 1)
    assert code.contains_one
    assert code.dim == 3
    with pytest.raises(NotInvariant):
        ReversibleCode.from_subspace(
            Subspace.from_vectors([GfVector.from_string("100")]), rs
        )
