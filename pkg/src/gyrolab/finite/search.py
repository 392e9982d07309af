"""Exhaustive search for all gyrogroups of a small order.

The search fills a Latin square whose first row and column are the identity
row and column. Three cheap facts drive the pruning:

* The inverse map is an involution fixing 0. Up to relabelling it can be
  taken to fix ``1..k`` and swap ``(k+1, k+2), (k+3, k+4), ...``, so only
  one inverse pattern per ``k`` is searched.
* Left cancellation ``⊖x ⊕ (x ⊕ y) = y`` pairs cell ``(x, y) = w`` with
  cell ``(⊖x, w) = y``; both are set together.
* Whenever a row completes, every automorphism and left-loop instance whose
  cells are all known is checked.

Finished squares are re-verified exhaustively, reduced to a canonical
representative and deduplicated.
"""

from __future__ import annotations

import hashlib
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ..errors import OrderTooLargeError
from .table import CayleyTable, as_table, format_gyro
from .verify import verify_gyrogroup

DEFAULT_MAX_ORDER = 6
HARD_MAX_ORDER = 8


@lru_cache(maxsize=None)
def _relabelings(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of ``0..n-1`` fixing 0, and their inverses."""
    perms = np.array([(0,) + p for p in itertools.permutations(range(1, n))], dtype=np.int64)
    if n == 1:
        perms = np.zeros((1, 1), dtype=np.int64)
    inv = np.empty_like(perms)
    rows = np.arange(len(perms))[:, None]
    inv[rows, perms] = np.arange(n)[None, :]
    return perms, inv


def canonical_form(t) -> CayleyTable:
    """Lexicographically smallest relabelling of ``t`` with the identity sent to 0.

    Relabelling by ``p`` gives the table ``T'[p[i], p[j]] = p[T[i, j]]``.
    Practical up to order 8 (5040 relabelings).
    """
    t = as_table(t)
    n = t.n
    if n > 9:
        raise OrderTooLargeError(f"canonical form is limited to order 9, got {n}")
    arr = t.table
    e = t.identity
    if e is None:
        raise ValueError("table has no identity")
    if e != 0:
        swap = np.arange(n)
        swap[[0, e]] = swap[[e, 0]]
        out = np.empty_like(arr)
        out[np.ix_(swap, swap)] = swap[arr]
        arr = out
    perms, inv = _relabelings(n)
    # T'[i, j] = p[T[pinv[i], pinv[j]]]
    cand = np.take_along_axis(
        perms, arr[inv[:, :, None], inv[:, None, :]].reshape(len(perms), -1), axis=1
    )
    keep = np.arange(len(cand))
    for col in range(n * n):
        vals = cand[keep, col]
        keep = keep[vals == vals.min()]
        if len(keep) == 1:
            break
    return CayleyTable(cand[keep[0]].reshape(n, n))


def inverse_patterns(n: int) -> list[tuple[int, ...]]:
    """One representative involution per number of self-inverse non-identity elements."""
    out = []
    m = n - 1
    for k in range(m % 2, m + 1, 2):
        inv = list(range(n))
        for x in range(k + 1, n, 2):
            inv[x], inv[x + 1] = x + 1, x
        out.append(tuple(inv))
    return out


class _Search:
    def __init__(self, n, inv):
        self.n = n
        self.inv = inv
        self.full = (1 << n) - 1
        self.t = [-1] * (n * n)
        self.rows = [0] * n
        self.cols = [0] * n
        self.nodes = 0
        self.found = []
        self.cells = [(x, y) for x in range(1, n) for y in range(1, n)]
        for a in range(n):
            self._put(0, a, a)
            if a:
                self._put(a, 0, a)
        for x in range(1, n):
            if self.t[x * n + inv[x]] < 0:
                if self.assign(x, inv[x], 0) is None:
                    raise AssertionError("inverse pattern is inconsistent")

    def _put(self, x, y, w):
        self.t[x * self.n + y] = w
        self.rows[x] |= 1 << w
        self.cols[y] |= 1 << w

    def _unput(self, x, y, w):
        self.t[x * self.n + y] = -1
        self.rows[x] &= ~(1 << w)
        self.cols[y] &= ~(1 << w)

    def _free(self, x, y, w):
        return self.t[x * self.n + y] < 0 and not (self.rows[x] >> w) & 1 and not (self.cols[y] >> w) & 1

    def assign(self, x, y, w):
        """Set ``(x, y) = w`` and its left-cancellation partner; None on conflict."""
        if not self._free(x, y, w):
            return None
        self._put(x, y, w)
        done = [(x, y, w)]
        ix = self.inv[x]
        pv = self.t[ix * self.n + w]
        if pv < 0:
            if not self._free(ix, w, y):
                self.undo(done)
                return None
            self._put(ix, w, y)
            done.append((ix, w, y))
        elif pv != y:
            self.undo(done)
            return None
        return done

    def undo(self, done):
        for x, y, w in reversed(done):
            self._unput(x, y, w)

    def _g(self, a, b, z):
        n, t = self.n, self.t
        ab = t[a * n + b]
        bz = t[b * n + z]
        if ab < 0 or bz < 0:
            return -1
        abz = t[a * n + bz]
        if abz < 0:
            return -1
        return t[self.inv[ab] * n + abz]

    def consistent(self):
        """False if some fully determined automorphism or left-loop instance fails."""
        n, t, g = self.n, self.t, self._g
        rng = range(1, n)
        for a in rng:
            for b in rng:
                ab = t[a * n + b]
                if ab < 0:
                    continue
                gz = [g(a, b, z) for z in range(n)]
                lp = t[ab * n + b] >= 0
                for z1 in rng:
                    g1 = gz[z1]
                    if g1 < 0:
                        continue
                    if lp:
                        h = g(ab, b, z1)
                        if h >= 0 and h != g1:
                            return False
                    row = z1 * n
                    for z2 in rng:
                        s = t[row + z2]
                        if s < 0:
                            continue
                        lhs = gz[s]
                        g2 = gz[z2]
                        if lhs < 0 or g2 < 0:
                            continue
                        rhs = t[g1 * n + g2]
                        if rhs >= 0 and rhs != lhs:
                            return False
        return True

    def _next_cell(self, i):
        t, n, cells = self.t, self.n, self.cells
        while i < len(cells) and t[cells[i][0] * n + cells[i][1]] >= 0:
            i += 1
        return i

    def _branches(self, i):
        """Yield after each consistent assignment at the next empty cell (state applied)."""
        x, y = self.cells[i]
        avail = self.full & ~self.rows[x] & ~self.cols[y]
        while avail:
            w = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            done = self.assign(x, y, w)
            if done is None:
                continue
            if any(self.rows[r] == self.full for r, _, _ in done) and not self.consistent():
                self.undo(done)
                continue
            yield done
            self.undo(done)

    def run(self, max_nodes=None, deadline=None):
        """Depth-first search; returns False if a budget was exhausted."""
        self._budget = (max_nodes, deadline)
        try:
            self._rec(0)
        except _Exhausted:
            return False
        return True

    def _rec(self, i):
        self.nodes += 1
        max_nodes, deadline = self._budget
        if max_nodes is not None and self.nodes > max_nodes:
            raise _Exhausted
        if deadline is not None and (self.nodes & 1023) == 0 and time.monotonic() > deadline:
            raise _Exhausted
        i = self._next_cell(i)
        if i == len(self.cells):
            self.found.append(tuple(self.t))
            return
        for _ in self._branches(i):
            self._rec(i + 1)

    def prefixes(self):
        """Assignments completing the first open row, one list per subtree."""
        i = self._next_cell(0)
        if i == len(self.cells):
            return [[]]
        row = self.cells[i][0]
        out = []

        def walk(j, acc):
            j = self._next_cell(j)
            if j == len(self.cells) or self.cells[j][0] != row:
                out.append(list(acc))
                return
            for done in self._branches(j):
                acc.extend(done)
                walk(j + 1, acc)
                del acc[-len(done):]

        walk(i, [])
        return out


class _Exhausted(Exception):
    pass


@dataclass
class SearchResult:
    order: int
    tables: list[CayleyTable] = field(default_factory=list)
    complete: bool = True
    nodes: int = 0
    subtrees: int = 0
    raw_count: int = 0

    def digest(self) -> str:
        h = hashlib.sha256(f"order {self.order}\n".encode())
        for t in self.tables:
            h.update(format_gyro(t).encode())
        return h.hexdigest()


def _run_task(args):
    n, inv, prefix, max_nodes, deadline = args
    s = _Search(n, inv)
    for x, y, w in prefix:
        s._put(x, y, w)
    ok = s.run(max_nodes, deadline)
    keys = set()
    for flat in s.found:
        t = CayleyTable(np.array(flat).reshape(n, n))
        if verify_gyrogroup(t).passed:
            keys.add(canonical_form(t).table.tobytes())
    return keys, s.nodes, ok, len(s.found)


def search_gyrogroups(
    n: int,
    max_nodes: int | None = None,
    time_limit: float | None = None,
    jobs: int = 1,
    allow_large: bool = False,
    max_order: int = DEFAULT_MAX_ORDER,
) -> SearchResult:
    """All gyrogroups of order ``n`` up to relabellings fixing the identity.

    Returned tables have identity 0, are in canonical form and sorted.
    ``max_nodes`` bounds each subtree (the subtrees are the completions of
    the first open row of each inverse pattern), so a node-bounded result is
    the same for every ``jobs``. ``time_limit`` is a wall-clock cap and makes
    truncated results timing dependent. A truncated search returns what it
    found with ``complete=False``.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    limit = HARD_MAX_ORDER if allow_large else max_order
    if n > limit:
        raise OrderTooLargeError(
            f"order {n} exceeds {limit}" + ("" if allow_large else " (orders up to 8 need allow_large)")
        )
    deadline = None if time_limit is None else time.monotonic() + time_limit
    if n == 1:
        return SearchResult(1, [CayleyTable([[0]])], True, 1, 1, 1)

    tasks = []
    for inv in inverse_patterns(n):
        try:
            root = _Search(n, inv)
        except AssertionError:
            continue
        for prefix in root.prefixes():
            tasks.append((n, inv, prefix, max_nodes, deadline))

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(task) for task in tasks]

    keys = set()
    res = SearchResult(n, subtrees=len(tasks))
    for k, nodes, ok, raw in results:
        keys |= k
        res.nodes += nodes
        res.raw_count += raw
        res.complete &= ok
    res.tables = sorted(
        (CayleyTable(np.frombuffer(k, dtype=np.int64).reshape(n, n)) for k in keys),
    )
    return res
