"""Subgyrogroups and L-subgyrogroups of finite tables."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EmptySubsetError, NotASubgyrogroupError, OrderTooLargeError
from .table import as_mask, members
from .verify import all_gyrations, require_gyrogroup

DEFAULT_MAX_ORDER = 16


def is_subgyrogroup(t, H) -> bool:
    """True iff the nonempty subset ``H`` is closed under ⊖ and ⊕."""
    t = require_gyrogroup(t)
    h = as_mask(H, t.n)
    if not h:
        raise EmptySubsetError("subgyrogroup candidates must be nonempty")
    return _closed(t, h)


def _closed(t, h) -> bool:
    arr = t.table.tolist()
    inv = t.inverse.tolist()
    elems = members(h)
    for a in elems:
        if not h >> inv[a] & 1:
            return False
        row = arr[a]
        for b in elems:
            if not h >> row[b] & 1:
                return False
    return True


def is_l_subgyrogroup(t, H) -> bool:
    """True iff ``gyr[a,h](H) = H`` for every ``a`` in G and ``h`` in H."""
    t = require_gyrogroup(t)
    h = as_mask(H, t.n)
    if not h:
        raise EmptySubsetError("subgyrogroup candidates must be nonempty")
    if not _closed(t, h):
        raise NotASubgyrogroupError(f"{members(h)} is not a subgyrogroup")
    return _l_invariant(t, h, all_gyrations(t))


def _l_invariant(t, h, gyrations) -> bool:
    elems = members(h)
    # gyrations are bijections, so image ⊆ H already gives equality
    for a in range(t.n):
        for x in elems:
            perm = gyrations[a, x]
            for z in elems:
                if not h >> int(perm[z]) & 1:
                    return False
    return True


def closure(t, generators) -> int:
    """Smallest subset containing ``generators`` (and 0) closed under ⊕ and ⊖."""
    arr = t.table.tolist()
    inv = t.inverse.tolist()
    h = as_mask(generators, t.n) | (1 << t.identity)
    todo = members(h)
    elems = list(todo)
    while todo:
        new = []
        for a in todo:
            cands = [inv[a]]
            for b in elems:
                cands.append(arr[a][b])
                cands.append(arr[b][a])
            for c in cands:
                if not h >> c & 1:
                    h |= 1 << c
                    new.append(c)
                    elems.append(c)
        todo = new
    return h


@dataclass(frozen=True)
class Subgyrogroup:
    mask: int
    is_l: bool

    @property
    def elements(self) -> list[int]:
        return members(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")


def enumerate_subgyrogroups(t, max_order: int = DEFAULT_MAX_ORDER) -> list[Subgyrogroup]:
    """All subgyrogroups of ``t``, each flagged with its L-status.

    Grows the lattice from the trivial subgyrogroup by closing
    ``S ∪ {g}`` for every known ``S`` and every ``g`` outside it; every
    subgyrogroup is reached this way one generator at a time. Sorted by
    size, then by element list.
    """
    t = require_gyrogroup(t)
    if t.n > max_order:
        raise OrderTooLargeError(f"order {t.n} exceeds the bound {max_order}")
    n = t.n
    start = closure(t, ())
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for g in range(n):
                if s >> g & 1:
                    continue
                c = closure(t, s | (1 << g))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    gyrations = all_gyrations(t)
    out = [Subgyrogroup(m, _l_invariant(t, m, gyrations)) for m in seen]
    out.sort(key=lambda s: (len(s), s.elements))
    return out
