"""Direct products of finite gyrogroups."""

from __future__ import annotations

import numpy as np

from ..errors import OrderTooLargeError
from .table import CayleyTable, as_mask, members
from .verify import require_gyrogroup

DEFAULT_MAX_PRODUCT_ORDER = 256


def product_gyrogroup(t1, t2, max_order: int = DEFAULT_MAX_PRODUCT_ORDER) -> CayleyTable:
    """Coordinatewise product; the pair ``(i, j)`` is encoded as ``i * n2 + j``."""
    t1 = require_gyrogroup(t1)
    t2 = require_gyrogroup(t2)
    n1, n2 = t1.n, t2.n
    if n1 * n2 > max_order:
        raise OrderTooLargeError(f"product order {n1 * n2} exceeds the bound {max_order}")
    a = t1.table[:, None, :, None] * n2 + t2.table[None, :, None, :]
    return CayleyTable(a.reshape(n1 * n2, n1 * n2))


def product_subset(n2: int, A, B) -> int:
    """Mask of ``A × B`` inside a product whose second factor has order ``n2``."""
    out = 0
    for i in members(as_mask(A)):
        for j in members(as_mask(B)):
            out |= 1 << (i * n2 + j)
    return out


def project(n2: int, mask: int) -> tuple[int, int]:
    """Coordinate projections of a subset of a product."""
    left = right = 0
    for x in members(mask):
        left |= 1 << (x // n2)
        right |= 1 << (x % n2)
    return left, right


def relabel(t, perm) -> CayleyTable:
    """The table obtained by renaming element ``x`` to ``perm[x]``."""
    arr = np.asarray(as_table_array(t))
    perm = np.asarray(perm)
    out = np.empty_like(arr)
    out[np.ix_(perm, perm)] = perm[arr]
    return CayleyTable(out)


def as_table_array(t):
    return t.table if isinstance(t, CayleyTable) else np.asarray(t)
