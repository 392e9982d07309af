"""Cayley tables, subset masks and the ``.gyro`` text format."""

from __future__ import annotations

import hashlib
from functools import cached_property
from typing import Iterable

import numpy as np

from ..core import GyroModel
from ..errors import MalformedTableError, TableParseError


class CayleyTable:
    """An ``n x n`` operation table over ``{0..n-1}``; ``table[a, b]`` is ``a ⊕ b``.

    Instances are immutable. Well-formedness (square, entries in range) is
    checked on construction; the gyrogroup axioms are not, see
    :func:`gyrolab.finite.verify_gyrogroup`.
    """

    def __init__(self, table):
        try:
            arr = np.array(table, dtype=np.int64, copy=True)
        except (ValueError, TypeError) as exc:
            raise MalformedTableError(f"table is not a rectangular integer array: {exc}") from None
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise MalformedTableError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            r, c = np.argwhere((arr < 0) | (arr >= n))[0]
            raise MalformedTableError(f"entry ({r}, {c}) = {arr[r, c]} is outside 0..{n - 1}")
        arr.flags.writeable = False
        self._t = arr

    @property
    def n(self) -> int:
        return self._t.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._t

    def rows(self) -> list[list[int]]:
        return self._t.tolist()

    def op(self, a, b):
        return self._t[a, b]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, CayleyTable) and np.array_equal(self._t, other._t)

    def __hash__(self):
        return hash(self._t.tobytes())

    def __lt__(self, other):
        return (self.n, self._t.ravel().tolist()) < (other.n, other._t.ravel().tolist())

    def __repr__(self):
        return f"CayleyTable({self.rows()})"

    def digest(self) -> str:
        return hashlib.sha256(format_gyro(self).encode()).hexdigest()

    @cached_property
    def report(self):
        """Cached exhaustive axiom report."""
        from .verify import verify_gyrogroup

        return verify_gyrogroup(self)

    @cached_property
    def identity(self) -> int | None:
        n = self.n
        ar = np.arange(n)
        for e in range(n):
            if np.array_equal(self._t[e], ar) and np.array_equal(self._t[:, e], ar):
                return e
        return None

    @cached_property
    def inverse(self) -> np.ndarray | None:
        """``inverse[x]`` is the unique two-sided inverse of ``x``; None if some element lacks one."""
        e = self.identity
        if e is None:
            return None
        out = np.empty(self.n, dtype=np.int64)
        for x in range(self.n):
            ys = np.flatnonzero((self._t[x] == e) & (self._t[:, x] == e))
            if len(ys) != 1:
                return None
            out[x] = ys[0]
        out.flags.writeable = False
        return out

    def is_latin(self) -> bool:
        return latin_violation(self) is None

    def is_associative(self) -> bool:
        return _associative(self._t)


def _associative(t):
    # (a⊕b)⊕c against a⊕(b⊕c) for all triples at once
    lhs = t[t[:, :, None], np.arange(len(t))[None, None, :]]
    rhs = t[np.arange(len(t))[:, None, None], t[None, :, :]]
    return bool(np.array_equal(lhs, rhs))


def latin_violation(t: CayleyTable):
    """First repeated entry as ``("row", r, c1, c2)`` or ``("column", c, r1, r2)``; None if Latin."""
    arr = t.table
    for kind, m in (("row", arr), ("column", arr.T)):
        for i, line in enumerate(m):
            seen = {}
            for j, v in enumerate(line.tolist()):
                if v in seen:
                    return (kind, i, seen[v], j)
                seen[v] = j
    return None


def as_table(t) -> CayleyTable:
    return t if isinstance(t, CayleyTable) else CayleyTable(t)


class FiniteModel(GyroModel):
    """A Cayley table seen through the generic :class:`GyroModel` interface."""

    exact = True

    def __init__(self, t: CayleyTable, identity: int | None = None, inverse=None):
        self.t = as_table(t)
        self._e = self.t.identity if identity is None else identity
        if self._e is None:
            raise MalformedTableError("table has no two-sided identity")
        self._inv = self.t.inverse if inverse is None else np.asarray(inverse)
        if self._inv is None:
            raise MalformedTableError("some element has no unique two-sided inverse")

    @property
    def identity(self):
        return self._e

    def op(self, a, b):
        return self.t.table[a, b]

    def inv(self, a):
        return self._inv[a]

    def dist(self, a, b):
        return (np.asarray(a) != np.asarray(b)).astype(float)

    def elements(self):
        return np.arange(self.t.n)

    def validate(self, *elements):
        from ..errors import InvalidElementError

        for x in elements:
            x = np.asarray(x)
            if x.size and (x.min() < 0 or x.max() >= self.t.n):
                raise InvalidElementError(f"element outside 0..{self.t.n - 1}")

    def sample(self, rng, count, radius=None):
        return rng.integers(0, self.t.n, count)


# -- subset masks ---------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << int(e)
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def as_mask(subset, n: int | None = None) -> int:
    """Accept a bitmask or an iterable of elements."""
    m = int(subset) if isinstance(subset, (int, np.integer)) else mask_of(subset)
    if m < 0:
        raise ValueError("subset mask must be non-negative")
    if n is not None and m >> n:
        raise ValueError(f"subset has elements outside 0..{n - 1}: {members(m)}")
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


# -- standard tables -------------------------------------------------------

def trivial() -> CayleyTable:
    return CayleyTable([[0]])


def cyclic(n: int) -> CayleyTable:
    a = np.arange(n)
    return CayleyTable((a[:, None] + a[None, :]) % n)


def klein_four() -> CayleyTable:
    a = np.arange(4)
    return CayleyTable(a[:, None] ^ a[None, :])


def symmetric3() -> CayleyTable:
    """S3 with 0 the identity permutation, elements listed in lexicographic order."""
    from itertools import permutations

    perms = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (p ⊕ q)(i) = p(q(i))
    rows = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return CayleyTable(rows)


# -- .gyro format ----------------------------------------------------------

def parse_gyro(text: str) -> CayleyTable:
    """Parse a ``.gyro`` document.

    Layout: optional ``#`` comment lines, a line holding ``n``, then ``n``
    lines of ``n`` whitespace-separated integers. Blank lines are ignored.
    """
    lines = text.splitlines()
    i = 0
    while i < len(lines) and (not lines[i].strip() or lines[i].lstrip().startswith("#")):
        i += 1
    if i == len(lines):
        raise TableParseError("missing order header", line=i + 1)
    header = lines[i].strip()
    try:
        n = int(header)
    except ValueError:
        raise TableParseError(f"expected the order n, got {header!r}", line=i + 1, column=1) from None
    if n < 1:
        raise TableParseError(f"order must be >= 1, got {n}", line=i + 1, column=1)
    rows = []
    for lineno in range(i + 1, len(lines)):
        raw = lines[lineno]
        if not raw.strip():
            continue
        if len(rows) == n:
            raise TableParseError("unexpected data after the last row", line=lineno + 1, column=1)
        row = []
        col = 0
        for tok in raw.split():
            col = raw.index(tok, col) + 1
            try:
                v = int(tok)
            except ValueError:
                raise TableParseError(f"not an integer: {tok!r}", line=lineno + 1, column=col) from None
            if not 0 <= v < n:
                raise TableParseError(f"entry {v} outside 0..{n - 1}", line=lineno + 1, column=col)
            row.append(v)
            col += len(tok) - 1
        if len(row) != n:
            raise TableParseError(f"expected {n} entries, got {len(row)}", line=lineno + 1)
        rows.append(row)
    if len(rows) != n:
        raise TableParseError(f"expected {n} rows, got {len(rows)}", line=len(lines) + 1)
    return CayleyTable(rows)


def format_gyro(t: CayleyTable, comments: Iterable[str] = ()) -> str:
    t = as_table(t)
    width = len(str(t.n - 1))
    out = [f"# {c}" for c in comments]
    out.append(str(t.n))
    for row in t.rows():
        out.append(" ".join(str(v).rjust(width) for v in row))
    return "\n".join(out) + "\n"


def read_gyro(path) -> CayleyTable:
    with open(path, encoding="utf-8") as fh:
        return parse_gyro(fh.read())


def write_gyro(t: CayleyTable, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_gyro(t, comments))
