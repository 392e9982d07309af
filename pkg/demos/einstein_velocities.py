"""
Relativistic velocity addition
==============================

Velocities in the open ball of radius c, composed the way special
relativity composes them.
"""

import numpy as np

from gyrolab import EinsteinModel, check_axioms, einstein_add, einstein_gyr, gamma

c = 1.0
u = np.array([0.6, 0.0, 0.0])
v = np.array([0.0, 0.7, 0.0])

# Two perpendicular boosts. The composite depends on the order.
print("u ⊕ v =", einstein_add(u, v))
print("v ⊕ u =", einstein_add(v, u))
print("gamma(u ⊕ v) =", gamma(einstein_add(u, v)), "gamma(u) gamma(v) =", gamma(u) * gamma(v))

# The Thomas rotation gyr[u, v] maps one to the other and keeps lengths.
w = einstein_gyr(u, v, einstein_add(v, u))
print("gyr[u,v](v ⊕ u) =", w)
print("|v ⊕ u| =", np.linalg.norm(einstein_add(v, u)), "|image| =", np.linalg.norm(w))

# Along a line the addition is the familiar 1-D formula.
s, t = 0.8, 0.5
print("collinear:", einstein_add(np.array([s, 0, 0]), np.array([t, 0, 0]))[0], (s + t) / (1 + s * t))

# No finite sum reaches c.
x = np.zeros(3)
for _ in range(20):
    x = einstein_add(np.array([0.5, 0, 0]), x)
print("twenty boosts of 0.5c:", x[0])

report = check_axioms(EinsteinModel(c), count=20_000, seed=2)
print("axioms pass:", report.passed, "max residual", report.max_residual)
