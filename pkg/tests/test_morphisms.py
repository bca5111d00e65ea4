import numpy as np
import pytest

from disingquandle import (
    StructureError,
    builtin,
    closure,
    find_isomorphism,
    is_homomorphism,
    is_subdisingquandle,
)
from disingquandle.morphisms import inverse_mapping


def naive_is_hom(a, b, f):
    for x in range(a.n):
        for y in range(a.n):
            for sa, sb in ((a.star1, b.star1), (a.star2, b.star2), (a.r1, b.r1), (a.r2, b.r2)):
                if f[sa[x, y]] != sb[f[x], f[y]]:
                    return False
    return True


@pytest.fixture(scope="module")
def z10():
    return builtin("z10_canonical")


class TestHomomorphism:
    def test_identity(self, z10):
        assert is_homomorphism(z10, z10, np.arange(10))

    def test_constant_zero(self, z10):
        assert is_homomorphism(z10, z10, np.zeros(10, dtype=int))

    def test_shift_matches_naive(self, z10):
        f = (np.arange(10) + 1) % 10
        assert is_homomorphism(z10, z10, f) == naive_is_hom(z10, z10, f)

    def test_all_constants_match_naive(self, z10):
        for c in range(10):
            f = np.full(10, c)
            assert is_homomorphism(z10, z10, f) == naive_is_hom(z10, z10, f)

    def test_r2_compared_with_r2(self, z10):
        # identity must be a homomorphism even though R1 != R2
        assert not np.array_equal(z10.r1, z10.r2)
        assert is_homomorphism(z10, z10, list(range(10)))

    def test_size_mismatch(self, z10):
        with pytest.raises(StructureError):
            is_homomorphism(z10, z10, np.arange(9))
        with pytest.raises(StructureError):
            is_homomorphism(z10, z10, np.arange(10) + 1)


class TestIsomorphism:
    def test_self(self, z10):
        f = find_isomorphism(z10, z10)
        assert f is not None
        assert is_homomorphism(z10, z10, f) and len(set(f.tolist())) == 10

    def test_affine_relabeling(self, z10):
        perm = (3 * np.arange(10) + 1) % 10
        other = z10.relabel(perm)
        f = find_isomorphism(z10, other)
        assert f is not None and is_homomorphism(z10, other, f)
        assert is_homomorphism(other, z10, inverse_mapping(f))

    def test_random_relabelings(self, z10):
        rng = np.random.default_rng(7)
        for _ in range(5):
            perm = rng.permutation(10)
            other = z10.relabel(perm)
            assert is_homomorphism(z10, other, perm)
            f = find_isomorphism(z10, other)
            assert f is not None and naive_is_hom(z10, other, f)

    def test_canonical_vs_uno_decided(self, z10):
        uno = builtin("z10_uno")
        f = find_isomorphism(z10, uno)
        # R1(x,x) = x everywhere in the canonical structure but not in the other,
        # which no bijection can reconcile
        assert f is None
        assert any(uno.r1[x, x] != x for x in range(10))

    def test_different_orders(self, z10):
        assert find_isomorphism(z10, builtin("z30")) is None

    def test_deterministic(self, z10):
        assert np.array_equal(find_isomorphism(z10, z10), find_isomorphism(z10, z10))


class TestClosure:
    def test_zero(self, z10):
        assert closure(z10, {0}) == frozenset({0})

    def test_one(self, z10):
        assert closure(z10, {1}) == frozenset({1})

    def test_full(self, z10):
        assert closure(z10, range(10)) == frozenset(range(10))

    def test_pair_escapes(self, z10):
        assert z10.star1[0, 1] == 8
        assert not is_subdisingquandle(z10, {0, 1})
        assert closure(z10, {0, 1}) != {0, 1}

    def test_closure_is_closed(self, z10):
        for seed in ({0, 1}, {2, 5}, {3}):
            assert is_subdisingquandle(z10, closure(z10, seed))

    def test_fixed_singletons(self, z10):
        for i in range(10):
            fixed = z10.star1[i, i] == i and z10.r1[i, i] == i and z10.r2[i, i] == i
            assert is_subdisingquandle(z10, {i}) == bool(fixed)

    def test_empty_seed(self, z10):
        with pytest.raises(StructureError):
            closure(z10, set())
        with pytest.raises(StructureError):
            is_subdisingquandle(z10, [])

    def test_out_of_range_seed(self, z10):
        with pytest.raises(StructureError):
            closure(z10, {10})
