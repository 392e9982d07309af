"""
Neighbourhoods, stars and radius chains
=======================================

Translates x ⊕ U of a neighbourhood U of the identity, the star of a
point in that cover, and nested balls in the continuous models.
"""

from pathlib import Path

from gyrolab import EinsteinModel, MobiusModel
from gyrolab.finite import (
    is_gyration_invariant,
    kg_violation,
    members,
    read_gyro,
    set_oplus,
    star_of_point,
    symmetric_subsets,
    translate_cover,
)
from gyrolab.topo import admissible_chain_check, ball_gyr_invariance, collinear_composite

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
t = read_gyro(DATA / "gyro8_a.gyro")

# The star of q is the union of the translates that contain q. When U is
# symmetric and invariant under gyrations, the star sits inside q ⊕ (U ⊕ U).
U = {0, 1, 2, 3}
cover = translate_cover(t, U)
print("cover", [members(c) for c in cover])
print("star of 5", members(star_of_point(cover, 5)))
print("5 ⊕ (U ⊕ U)", members(set_oplus(t, 1 << 5, set_oplus(t, U, U))))

# Drop the invariance and the inclusion can fail.
for V in symmetric_subsets(t):
    bad = kg_violation(t, V)
    if bad is not None:
        print("U =", members(V), "invariant:", is_gyration_invariant(t, V), "(q, p) =", bad)
        break

# Balls around 0 are carried onto themselves by every gyration.
for model in (MobiusModel(), EinsteinModel()):
    res = ball_gyr_invariance(model, 0.8, samples=20_000)
    print(type(model).__name__, "ball invariance deviation", res.max_deviation)

# A chain of radii needs U[n+1] ⊕ (U[n+1] ⊕ U[n+1]) inside U[n]. Three
# parallel elements give the largest sum, so 1/(n+2) shrinks too slowly.
chain = [1 / 2, 1 / 3, 1 / 4, 1 / 5]
rep = admissible_chain_check(MobiusModel(), chain, samples=5000)
for s in rep.steps:
    print(f"{s.outer:.4f} <- {s.inner:.4f}: worst {s.worst:.4f} "
          f"(collinear {collinear_composite(s.inner):.4f}) {s.status}")

# Radii shrinking by a factor of five pass.
print(admissible_chain_check(EinsteinModel(), [0.5, 0.1, 0.02], samples=5000).status)
