"""
Counting small gyrogroups
=========================

Backtracking over Latin squares finds every gyrogroup of a given order,
one per relabelling class. Up to order 7 all of them are groups.
"""

import time

from gyrolab.finite import search_gyrogroups

for n in range(1, 9):
    t0 = time.perf_counter()
    res = search_gyrogroups(n, allow_large=True)
    groups = sum(t.is_associative() for t in res.tables)
    dt = time.perf_counter() - t0
    print(f"order {n}: {len(res.tables):2d} classes, {groups:2d} groups, "
          f"{res.subtrees:3d} subtrees, {dt:.2f}s")

# The non-associative ones at order 8.
for t in search_gyrogroups(8, allow_large=True).tables:
    if not t.is_associative():
        print(t.table, end="\n\n")

# A node budget cuts the search short; the result says so.
cut = search_gyrogroups(6, max_nodes=3)
print("complete:", cut.complete, "found:", len(cut.tables))
