"""Left cosets ``a ⊕ H`` and the quotient map G -> G/H."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import EmptySubsetError, NotASubgyrogroupError, NotAnLSubgyrogroupError
from .subgroups import _closed, _l_invariant
from .table import as_mask, full_mask, members
from .verify import all_gyrations, require_gyrogroup


def left_coset(t, a: int, h: int) -> int:
    row = t.table[a].tolist()
    out = 0
    for x in members(h):
        out |= 1 << row[x]
    return out


@dataclass
class CosetPartition:
    """The family ``{a ⊕ H}``.

    ``quotient[a]`` is the index in ``cells`` of ``a ⊕ H``;
    ``representatives[i]`` is the smallest element of ``cells[i]``. The
    ``checks`` dict records the partition properties that were validated.
    """

    subset: int
    cells: list[int]
    representatives: list[int]
    quotient: list[int]
    is_l_subgyrogroup: bool
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def is_partition(self) -> bool:
        return all(self.checks.values())

    def fiber(self, a: int) -> int:
        """``π⁻¹(π(a))`` as a mask."""
        i = self.quotient[a]
        return self.mask_of_indices([x for x, j in enumerate(self.quotient) if j == i])

    @staticmethod
    def mask_of_indices(xs) -> int:
        m = 0
        for x in xs:
            m |= 1 << x
        return m

    def cell_members(self) -> list[list[int]]:
        return [members(c) for c in self.cells]


def coset_partition(t, H, allow_non_l: bool = False) -> CosetPartition:
    """Left cosets of ``H`` with their partition properties validated per instance.

    ``H`` must be an L-subgyrogroup unless ``allow_non_l`` is set, in which
    case the distinct sets ``a ⊕ H`` are returned and any property that
    fails shows up as False in ``checks`` instead of being assumed.
    """
    t = require_gyrogroup(t)
    n = t.n
    h = as_mask(H, n)
    if not h:
        raise EmptySubsetError("H must be nonempty")
    if not _closed(t, h):
        if not allow_non_l:
            raise NotASubgyrogroupError(f"{members(h)} is not a subgyrogroup")
        is_l = False
    else:
        is_l = _l_invariant(t, h, all_gyrations(t))
    if not is_l and not allow_non_l:
        raise NotAnLSubgyrogroupError(f"{members(h)} is not an L-subgyrogroup")

    coset = [left_coset(t, a, h) for a in range(n)]
    cells: list[int] = []
    index: dict[int, int] = {}
    for c in sorted(set(coset), key=lambda m: min(members(m))):
        index[c] = len(cells)
        cells.append(c)
    quotient = [index[c] for c in coset]
    part = CosetPartition(
        subset=h,
        cells=cells,
        representatives=[min(members(c)) for c in cells],
        quotient=quotient,
        is_l_subgyrogroup=is_l,
    )

    size = bin(h).count("1")
    union = 0
    disjoint = True
    for c in cells:
        if union & c:
            disjoint = False
        union |= c
    part.checks["disjoint"] = disjoint
    part.checks["covers"] = union == full_mask(n)
    part.checks["equal_size"] = all(bin(c).count("1") == size for c in cells)
    # π⁻¹(π(a)) = {b : b ⊕ H = a ⊕ H} must be exactly a ⊕ H
    part.checks["fiber_identity"] = all(
        part.mask_of_indices([b for b in range(n) if coset[b] == coset[a]]) == coset[a]
        for a in range(n)
    )
    return part
