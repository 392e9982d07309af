"""Einstein gyrogroup of relativistically admissible velocities in R^3.

Velocities are numpy arrays whose last axis has length 3. The speed bound
``c`` is a model parameter (default 1).
"""

from __future__ import annotations

import numpy as np

from .core import GyroModel, gyr_apply
from .errors import InvalidElementError


def _norm(u):
    u = np.asarray(u, dtype=float)
    return np.hypot(np.hypot(u[..., 0], u[..., 1]), u[..., 2])


def _dot(u, v):
    return np.sum(np.asarray(u) * np.asarray(v), axis=-1)


def _gamma(u, c):
    s = _norm(u) / c
    return 1.0 / np.sqrt((1.0 - s) * (1.0 + s))


def _add(u, v, c):
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    g = _gamma(u, c)[..., None]
    uv = _dot(u, v)[..., None]
    c2 = c * c
    return (u + v / g + (g / (1.0 + g)) * (uv / c2) * u) / (1.0 + uv / c2)


def _check(c, *velocities):
    for u in velocities:
        u = np.asarray(u, dtype=float)
        if u.shape[-1:] != (3,):
            raise InvalidElementError(f"expected 3-vectors, got shape {u.shape}")
        s = _norm(u)
        if not np.all(np.isfinite(s)) or np.any(s >= c):
            raise InvalidElementError(f"velocity with speed >= c={c} is not admissible")


def gamma(u, c: float = 1.0):
    """Lorentz factor ``1 / sqrt(1 - u.u / c^2)``."""
    _check(c, u)
    return _gamma(u, c)


def einstein_add(u, v, c: float = 1.0):
    """Relativistic velocity composition ``u ⊕ v``."""
    _check(c, u, v)
    return _add(u, v, c)


def einstein_inv(u, c: float = 1.0):
    _check(c, u)
    return -np.asarray(u, dtype=float)


def einstein_gyr(u, v, w, c: float = 1.0):
    """``gyr[u,v](w)``, evaluated through ⊕ and ⊖ (there is no closed form here)."""
    return gyr_apply(EinsteinModel(c), u, v, w)


class EinsteinModel(GyroModel):
    def __init__(self, c: float = 1.0):
        if not c > 0:
            raise ValueError("c must be positive")
        self.c = float(c)

    @property
    def bound(self):
        return self.c

    @property
    def identity(self):
        return np.zeros(3)

    def op(self, a, b):
        return _add(a, b, self.c)

    def inv(self, a):
        return -np.asarray(a, dtype=float)

    def dist(self, a, b):
        return _norm(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))

    def norm(self, a):
        return _norm(a)

    def validate(self, *elements):
        _check(self.c, *elements)

    def sample(self, rng, count, radius):
        """Velocities with speed <= radius*c: half volume-uniform, half in the outer 10% shell."""
        return sample_ball(rng, count, radius * self.c)

    def collinear(self, r):
        return np.array([r, 0.0, 0.0])

    def __repr__(self):
        return f"EinsteinModel(c={self.c:g})"


def sample_ball(rng, count, radius, shell=0.1):
    half = count // 2
    mod = np.empty(count)
    mod[:half] = radius * np.cbrt(rng.random(half))
    mod[half:] = radius * (1 - shell * rng.random(count - half))
    d = rng.standard_normal((count, 3))
    d /= _norm(d)[:, None]
    out = d * mod[:, None]
    rng.shuffle(out)
    return out
