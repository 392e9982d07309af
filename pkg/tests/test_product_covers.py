import itertools
import random

import numpy as np
import pytest

from gyrolab.errors import (
    IdentityNotInSubsetError,
    InvalidTableError,
    NotSymmetricError,
    OrderTooLargeError,
    PointUncoveredError,
)
from gyrolab.finite import (
    canonical_form,
    cyclic,
    full_mask,
    is_gyration_invariant,
    is_symmetric,
    klein_four,
    kg_violation,
    members,
    product_gyrogroup,
    relabel,
    set_oplus,
    star_of_point,
    symmetric_subsets,
    translate_cover,
    translate_intersection_holds,
    trivial,
    verify_gyrogroup,
)

from conftest import GYRO8, fixture_tables, group_tables, load
from oracles import brute_is_gyrogroup, brute_isomorphic


# -- products -------------------------------------------------------------

def test_z2_squared_is_klein():
    p = product_gyrogroup(cyclic(2), cyclic(2))
    assert p == klein_four()


def test_trivial_factor_is_neutral():
    for t in group_tables().values():
        assert product_gyrogroup(t, trivial()) == t
        assert product_gyrogroup(trivial(), t) == t


def test_product_encoding():
    t1, t2 = cyclic(3), load("s3")
    p = product_gyrogroup(t1, t2)
    for i1, j1, i2, j2 in itertools.product(range(3), range(6), range(3), range(6)):
        assert p.table[i1 * 6 + j1, i2 * 6 + j2] == t1.table[i1, i2] * 6 + t2.table[j1, j2]


@pytest.mark.parametrize("a,b", [("z2", "gyro8_a"), ("gyro8_c", "z3"), ("s3", "gyro8_f")])
def test_product_with_gyrogroups_verifies(a, b):
    p = product_gyrogroup(load(a), load(b))
    assert verify_gyrogroup(p).passed
    assert brute_is_gyrogroup(p.rows())


def test_product_rejects_non_gyrogroups_and_size():
    with pytest.raises(InvalidTableError):
        product_gyrogroup(load("loop5"), cyclic(2))
    with pytest.raises(OrderTooLargeError):
        product_gyrogroup(cyclic(20), cyclic(20))


def test_relabel_and_canonical_form():
    t = load("gyro8_b")
    perm = [0, 3, 5, 1, 7, 2, 6, 4]
    r = relabel(t, perm)
    assert verify_gyrogroup(r).passed
    assert brute_isomorphic(t.rows(), r.rows())
    assert canonical_form(r) == canonical_form(t) == t


# -- set arithmetic, covers, stars ----------------------------------------

def test_set_oplus_identities():
    t = load("gyro8_e")
    for B in (0b1, 0b1010, 0b11110000, full_mask(8)):
        assert set_oplus(t, 1, B) == B
        assert set_oplus(t, B, 1) == B


def test_translate_cover_examples():
    t = load("s3")
    assert sorted(translate_cover(t, {0})) == [1 << i for i in range(6)]
    assert translate_cover(t, range(6)) == [full_mask(6)]
    with pytest.raises(IdentityNotInSubsetError):
        translate_cover(t, {1, 2})


def test_translate_cover_covers():
    t = load("gyro8_a")
    for u in range(1, 256, 3):
        u |= 1
        cover = translate_cover(t, u)
        union = 0
        for c in cover:
            union |= c
        assert union == full_mask(8)


def test_star_examples():
    t = load("z4")
    singles = translate_cover(t, {0})
    assert all(star_of_point(singles, x) == 1 << x for x in range(4))
    assert star_of_point([full_mask(4)], 2) == full_mask(4)
    with pytest.raises(PointUncoveredError):
        star_of_point([0b0011], 3)


def test_star_by_hand_z4():
    # U = {0,1,3}: translates {0,1,3},{0,1,2},{1,2,3},{0,2,3}; every translate misses one point
    t = load("z4")
    cover = translate_cover(t, {0, 1, 3})
    assert star_of_point(cover, 0) == full_mask(4)


def test_kg_requires_symmetric_u():
    with pytest.raises(NotSymmetricError):
        kg_violation(load("z4"), {0, 1})


@pytest.mark.parametrize("name,t", sorted(fixture_tables(6).items()))
def test_kg_chain_exhaustive_small(name, t):
    for U in symmetric_subsets(t):
        assert kg_violation(t, U) is None


@pytest.mark.parametrize("name", GYRO8)
def test_kg_chain_for_gyration_invariant_symmetric_sets(name):
    t = load(name)
    for U in symmetric_subsets(t):
        if is_gyration_invariant(t, U):
            assert kg_violation(t, U) is None


def test_kg_chain_can_fail_without_gyration_invariance():
    t = load("gyro8_a")
    u = {0, 4}
    assert is_symmetric(t, u) and not is_gyration_invariant(t, u)
    q, p = kg_violation(t, u)
    cover = translate_cover(t, u)
    assert star_of_point(cover, q) >> p & 1
    assert not set_oplus(t, 1 << q, set_oplus(t, u, u)) >> p & 1


def test_symmetric_subsets_are_symmetric():
    t = load("gyro8_d")
    subs = list(symmetric_subsets(t))
    assert len(set(subs)) == len(subs)
    for u in subs:
        assert u & 1 and is_symmetric(t, u)
    naive = [m for m in range(1, 256, 2) if is_symmetric(t, m)]
    assert sorted(subs) == naive


@pytest.mark.parametrize("name,t", sorted(fixture_tables(8).items()))
def test_left_translate_intersection_identity(name, t):
    rng = random.Random(1234)
    full = full_mask(t.n)
    pairs = [(rng.randint(0, full), rng.randint(0, full)) for _ in range(100)]
    for a, b in pairs:
        for x in range(t.n):
            assert translate_intersection_holds(t, x, a, b)


def test_translate_intersection_fails_off_latin_squares():
    # sanity check that the identity is not vacuous: a non-injective row breaks it
    from gyrolab.finite import CayleyTable

    t = CayleyTable(np.array([[0, 0], [1, 1]]))
    assert not translate_intersection_holds(t, 0, 0b01, 0b10)
    assert translate_intersection_holds(t, 1, 0b01, 0b01)
    assert members(set_oplus(t, 0b11, 0b11)) == [0, 1]
