import pytest

from gyrolab.errors import NotASubgyrogroupError, NotAnLSubgyrogroupError
from gyrolab.finite import coset_partition, cyclic, enumerate_subgyrogroups, members

from conftest import GYRO8, fixture_tables, load


def test_trivial_subgroup_gives_singletons():
    p = coset_partition(cyclic(5), {0})
    assert p.cell_members() == [[i] for i in range(5)]
    assert p.is_partition


def test_full_subgroup_gives_one_cell():
    p = coset_partition(cyclic(5), range(5))
    assert p.cell_members() == [[0, 1, 2, 3, 4]]
    assert p.quotient == [0] * 5


def test_z4_mod_two():
    p = coset_partition(cyclic(4), {0, 2})
    assert p.cell_members() == [[0, 2], [1, 3]]
    assert p.representatives == [0, 1]
    assert p.quotient == [0, 1, 0, 1]


def test_cells_are_left_translates():
    t = load("gyro8_d")
    for s in enumerate_subgyrogroups(t):
        if not s.is_l:
            continue
        p = coset_partition(t, s.mask)
        for a in range(t.n):
            assert set(members(p.cells[p.quotient[a]])) == {int(t.table[a, h]) for h in s.elements}
            assert p.fiber(a) == p.cells[p.quotient[a]]


@pytest.mark.parametrize("name,t", sorted(fixture_tables(8).items()))
def test_partition_invariants_for_every_l_subgyrogroup(name, t):
    for s in enumerate_subgyrogroups(t):
        if not s.is_l:
            continue
        p = coset_partition(t, s.mask)
        assert p.checks == {"disjoint": True, "covers": True, "equal_size": True, "fiber_identity": True}
        assert all(len(members(c)) == len(s) for c in p.cells)
        assert len(p.cells) * len(s) == t.n


def test_non_l_requires_flag():
    t = load("gyro8_a")
    with pytest.raises(NotAnLSubgyrogroupError):
        coset_partition(t, {0, 4})


def test_non_l_exploration_reports_overlap():
    t = load("gyro8_a")
    p = coset_partition(t, {0, 4}, allow_non_l=True)
    assert not p.is_l_subgyrogroup
    assert p.checks["covers"] and p.checks["equal_size"]
    assert not p.checks["disjoint"]
    assert not p.checks["fiber_identity"]
    assert not p.is_partition


def test_non_subgyrogroup():
    with pytest.raises(NotASubgyrogroupError):
        coset_partition(cyclic(4), {0, 1})
    p = coset_partition(cyclic(4), {0, 1}, allow_non_l=True)
    assert not p.is_l_subgyrogroup


@pytest.mark.parametrize("name", GYRO8)
def test_every_non_l_subgyrogroup_fails_to_partition(name):
    # exploration: on these tables the L-condition is exactly what makes a partition
    t = load(name)
    for s in enumerate_subgyrogroups(t):
        p = coset_partition(t, s.mask, allow_non_l=True)
        assert p.is_partition == s.is_l
