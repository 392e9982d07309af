"""Möbius gyrogroup on the complex open unit disk.

Points are plain Python/numpy complex numbers. All functions broadcast over
numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import GyroModel
from .errors import InvalidElementError

DEFAULT_GUARD = 1e-6

DiskPoint = complex


def _check(guard, *points):
    for p in points:
        r = np.abs(np.asarray(p))
        if not np.all(np.isfinite(r)) or np.any(r >= 1.0 - guard):
            bad = np.asarray(p).ravel()[np.argmax(~np.isfinite(r.ravel()) | (r.ravel() >= 1.0 - guard))]
            raise InvalidElementError(
                f"{complex(bad)} is not in the unit disk (|a| must be < 1 - {guard:g})"
            )


def _add(a, b):
    return (a + b) / (1 + np.conj(a) * b)


def _multiplier(a, b):
    return (1 + a * np.conj(b)) / (1 + np.conj(a) * b)


def mobius_add(a, b, guard: float = DEFAULT_GUARD):
    """``a ⊕ b = (a + b) / (1 + conj(a) b)``."""
    _check(guard, a, b)
    return _add(a, b)


def mobius_inv(a, guard: float = DEFAULT_GUARD):
    _check(guard, a)
    return -a


def gyr_multiplier(a, b, guard: float = DEFAULT_GUARD):
    """Unit-modulus factor ``(1 + a conj(b)) / (1 + conj(a) b)`` by which gyr[a,b] rotates."""
    _check(guard, a, b)
    return _multiplier(a, b)


def mobius_gyr(a, b, c, guard: float = DEFAULT_GUARD):
    """Closed-form gyration: rotation of ``c`` by :func:`gyr_multiplier`."""
    _check(guard, a, b, c)
    return _multiplier(a, b) * c


@dataclass(frozen=True)
class Ball:
    """Closed ball ``{x in D : |x| <= radius}`` centred at the identity."""

    radius: float

    def __post_init__(self):
        if not 0 < self.radius < 1:
            raise ValueError(f"ball radius must lie in (0, 1), got {self.radius}")

    def contains(self, z, tol: float = 0.0):
        return np.abs(z) <= self.radius + tol


class MobiusModel(GyroModel):
    """The disk ``{|z| < 1}`` under Möbius addition.

    ``guard`` is the margin inside the unit circle below which inputs are
    accepted. Only inputs handed to :meth:`validate` are checked; the
    intermediate values of composite expressions are not.
    """

    bound = 1.0

    def __init__(self, guard: float = DEFAULT_GUARD):
        self.guard = guard

    @property
    def identity(self):
        return 0j

    def op(self, a, b):
        return _add(a, b)

    def inv(self, a):
        return -a

    def gyr(self, a, b, z):
        return _multiplier(a, b) * z

    def dist(self, a, b):
        return np.abs(np.asarray(a) - np.asarray(b))

    def norm(self, a):
        return np.abs(a)

    def validate(self, *elements):
        _check(self.guard, *elements)

    def sample(self, rng, count, radius):
        """Points in the closed disk of ``radius``: half area-uniform, half in the outer 10% shell."""
        return sample_disk(rng, count, radius)

    def collinear(self, r):
        """A point of modulus ``r`` on the positive real axis."""
        return complex(r)

    def __repr__(self):
        return f"MobiusModel(guard={self.guard:g})"


def sample_disk(rng, count, radius, shell=0.1):
    half = count // 2
    mod = np.empty(count)
    mod[:half] = radius * np.sqrt(rng.random(half))
    mod[half:] = radius * (1 - shell * rng.random(count - half))
    theta = rng.uniform(0, 2 * np.pi, count)
    z = mod * np.exp(1j * theta)
    rng.shuffle(z)
    return z
