"""
Finite gyrogroups from Cayley tables
====================================

Verify a table, list its subgyrogroups and split it into cosets. The
table used here is a non-associative gyrogroup of order 8.
"""

from pathlib import Path

from gyrolab.finite import (
    coset_partition,
    cyclic,
    enumerate_subgyrogroups,
    gyr_table,
    read_gyro,
    verify_gyrogroup,
)

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
t = read_gyro(DATA / "gyro8_a.gyro")
print(t.table)

# Every axiom is checked exhaustively.
report = verify_gyrogroup(t)
print("gyrogroup:", report.passed, "associative:", t.is_associative())

# Some gyrations are not the identity map.
for a in range(1, 8):
    for b in range(1, 8):
        g = gyr_table(t, a, b)
        if not g.is_identity:
            print(f"gyr[{a},{b}] =", g.perm)
            break
    else:
        continue
    break

# Subgyrogroups, and whether each is invariant under all gyrations gyr[a, h].
for s in enumerate_subgyrogroups(t):
    print(s.elements, "L" if s.is_l else "-")

# Cosets of an L-subgyrogroup tile the table.
p = coset_partition(t, {0, 1, 2, 3})
print("cells", p.cell_members(), "partition", p.is_partition)

# Cosets of a subgyrogroup that is not gyration invariant can overlap.
q = coset_partition(t, {0, 4}, allow_non_l=True)
print("cells", q.cell_members(), "checks", q.checks)

# A group table fails nothing and has trivial gyrations.
print(verify_gyrogroup(cyclic(6)).meta)
