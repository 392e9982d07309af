"""
The Möbius gyrogroup on the unit disk
=====================================

Complex numbers of modulus < 1 under a ⊕ b = (a + b) / (1 + conj(a) b).
"""

from gyrolab import MobiusModel, check_axioms, gyr_multiplier, mobius_add, mobius_gyr

# Addition is not commutative. The two orders differ by a rotation.
a, b = 0.5 + 0.2j, -0.1 + 0.6j
print("a ⊕ b =", mobius_add(a, b))
print("b ⊕ a =", mobius_add(b, a))

# The rotation is the gyration gyr[a, b], which is multiplication by a unit
# complex number.
m = gyr_multiplier(a, b)
print("multiplier", m, "modulus", abs(m))
print("gyr[a,b](b ⊕ a) =", mobius_gyr(a, b, mobius_add(b, a)))

# Associativity fails, but it is repaired by the gyration.
c = 0.3 - 0.4j
print("a ⊕ (b ⊕ c)          =", mobius_add(a, mobius_add(b, c)))
print("(a ⊕ b) ⊕ gyr[a,b]c  =", mobius_add(mobius_add(a, b), mobius_gyr(a, b, c)))

# Every axiom and derived law at once, on 100k seeded samples.
report = check_axioms(MobiusModel(), count=100_000, seed=1)
for name, res in report.checks.items():
    print(f"{name:24s} {res.status:8s} {res.residual:.2e}")

# Elements near the boundary are rejected instead of silently losing digits.
try:
    mobius_add(0.9999999 + 0j, 0.1j)
except ValueError as exc:
    print("rejected:", exc)
