"""Set arithmetic, translate covers and stars on finite gyrogroups."""

from __future__ import annotations

from ..errors import IdentityNotInSubsetError, NotSymmetricError, PointUncoveredError
from .table import as_mask, as_table, members
from .verify import require_gyrogroup


def set_oplus(t, A, B) -> int:
    """``{a ⊕ b : a in A, b in B}``."""
    t = as_table(t)
    arr = t.table.tolist()
    bs = members(as_mask(B, t.n))
    out = 0
    for a in members(as_mask(A, t.n)):
        row = arr[a]
        for b in bs:
            out |= 1 << row[b]
    return out


def set_inv(t, A) -> int:
    t = require_gyrogroup(t)
    inv = t.inverse.tolist()
    out = 0
    for a in members(as_mask(A, t.n)):
        out |= 1 << inv[a]
    return out


def is_symmetric(t, U) -> bool:
    u = as_mask(U, as_table(t).n)
    return set_inv(t, u) == u


def translate_cover(t, U) -> list[int]:
    """The distinct translates ``x ⊕ U``, in order of first appearance over ``x``."""
    t = require_gyrogroup(t)
    u = as_mask(U, t.n)
    if not u >> t.identity & 1:
        raise IdentityNotInSubsetError("U must contain the identity")
    out = []
    seen = set()
    for x in range(t.n):
        c = set_oplus(t, 1 << x, u)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def star_of_point(cover, x: int) -> int:
    """Union of the members of ``cover`` that contain ``x``."""
    out = 0
    hit = False
    for c in cover:
        if c >> x & 1:
            out |= c
            hit = True
    if not hit:
        raise PointUncoveredError(f"{x} is not covered")
    return out


def kg_violation(t, U):
    """First ``(q, p)`` with ``p`` in ``st(q, {x ⊕ U})`` but not in ``q ⊕ (U ⊕ U)``; None if none.

    ``U`` must be symmetric and contain the identity.
    """
    t = require_gyrogroup(t)
    u = as_mask(U, t.n)
    if not is_symmetric(t, u):
        raise NotSymmetricError(f"{members(u)} is not closed under ⊖")
    cover = translate_cover(t, u)
    uu = set_oplus(t, u, u)
    for q in range(t.n):
        star = star_of_point(cover, q)
        target = set_oplus(t, 1 << q, uu)
        bad = star & ~target
        if bad:
            return (q, members(bad)[0])
    return None


def symmetric_subsets(t, containing_identity: bool = True):
    """Every symmetric subset of ``t`` (as masks), built from ⊖-orbits."""
    t = require_gyrogroup(t)
    inv = t.inverse.tolist()
    e = t.identity
    orbits = []
    seen = 0
    for x in range(t.n):
        if seen >> x & 1 or (containing_identity and x == e):
            continue
        o = (1 << x) | (1 << inv[x])
        seen |= o
        orbits.append(o)
    base = (1 << e) if containing_identity else 0
    for bits in range(1 << len(orbits)):
        m = base
        for i, o in enumerate(orbits):
            if bits >> i & 1:
                m |= o
        yield m


def translate_intersection_holds(t, x: int, A, B) -> bool:
    """``x ⊕ (A ∩ B) == (x ⊕ A) ∩ (x ⊕ B)``."""
    a, b = as_mask(A), as_mask(B)
    sx = 1 << x
    return set_oplus(t, sx, a & b) == set_oplus(t, sx, a) & set_oplus(t, sx, b)



def is_gyration_invariant(t, U) -> bool:
    """``gyr[x,y](U) = U`` for all ``x, y``."""
    from .verify import all_gyrations

    t = require_gyrogroup(t)
    u = as_mask(U, t.n)
    g = all_gyrations(t)
    elems = members(u)
    return all(u >> int(v) & 1 for v in g[:, :, elems].ravel())
