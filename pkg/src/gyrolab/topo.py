"""Numeric checks of ball neighbourhoods in the continuous models.

Balls are ``U_r = {x : |x| <= r}`` around the identity. Three checks are
provided: gyration invariance of a ball, the same for a whole family of
radii, and the chain condition ``U_{n+1} ⊕ (U_{n+1} ⊕ U_{n+1}) ⊆ U_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_SAMPLE_RADIUS, GyroModel, _gyr

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


def default_tol(model) -> float:
    """1e-12 when the model has an exact unit-modulus gyration, 1e-9 otherwise."""
    return 1e-12 if type(model).gyr is not GyroModel.gyr else 1e-9


def _gyration(model, a, b, z):
    g = model.gyr(a, b, z)
    return _gyr(model, a, b, z) if g is None else g


def _check_radius(model, r):
    bound = model.bound
    if not 0 < r < bound:
        raise ValueError(f"radius {r} outside (0, {bound})")


def sample_shell_biased(model, rng, count, radius):
    """Elements of norm <= radius, at least half of them with norm in [0.9 r, r]."""
    # the model samplers draw radius*bound, so rescale
    return model.sample(rng, count, radius / model.bound)


@dataclass
class InvarianceResult:
    passed: bool
    max_deviation: float
    radius: float
    samples: int
    seed: int
    tol: float

    def to_dict(self):
        return dict(self.__dict__)


def ball_gyr_invariance(
    model,
    r: float,
    samples: int = 10_000,
    seed: int = 0,
    tol: float | None = None,
    x=None,
    y=None,
) -> InvarianceResult:
    """Check ``gyr[x,y](U_r) = U_r`` on samples.

    ``x, y`` are drawn from the ball of radius 0.95 (times the model bound)
    unless given; ``u`` is drawn shell-biased from ``U_r``. Two things are
    measured: the norm change ``| |gyr[x,y](u)| - |u| |`` (images stay in
    ``U_r``), and for the reverse inclusion the round trip error of
    ``gyr[x,y](gyr[y,x](u)) = u`` together with the norm change of the
    preimage ``gyr[y,x](u)``. The maximum of all three is the deviation.
    """
    _check_radius(model, r)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if tol is None:
        tol = default_tol(model)
    rng = np.random.default_rng(seed)
    xs = model.sample(rng, samples, DEFAULT_SAMPLE_RADIUS) if x is None else _tile(x, samples)
    ys = model.sample(rng, samples, DEFAULT_SAMPLE_RADIUS) if y is None else _tile(y, samples)
    u = sample_shell_biased(model, rng, samples, r)
    model.validate(xs, ys, u)

    nu = model.norm(u)
    image = _gyration(model, xs, ys, u)
    pre = _gyration(model, ys, xs, u)
    back = _gyration(model, xs, ys, pre)
    dev = np.max(np.stack([
        np.abs(model.norm(image) - nu),
        np.abs(model.norm(pre) - nu),
        model.dist(back, u),
    ]))
    escaped = np.any(model.norm(image) > r + tol) or np.any(model.norm(pre) > r + tol)
    dev = float(dev)
    return InvarianceResult(bool(dev <= tol and not escaped), dev, r, samples, seed, tol)


def _tile(e, count):
    e = np.asarray(e)
    return np.broadcast_to(e, (count,) + e.shape).copy()


@dataclass
class BaseResult:
    passed: bool
    max_deviation: float
    per_radius: list[InvarianceResult] = field(default_factory=list)

    def to_dict(self):
        return {
            "passed": self.passed,
            "max_deviation": self.max_deviation,
            "per_radius": [r.to_dict() for r in self.per_radius],
        }


def strongly_topological_base_check(model, radii, samples: int = 10_000, seed: int = 0, tol=None) -> BaseResult:
    """Gyration invariance of every ball in ``radii``; an empty family passes."""
    results = [ball_gyr_invariance(model, r, samples, seed + i, tol) for i, r in enumerate(radii)]
    return BaseResult(
        all(r.passed for r in results),
        max((r.max_deviation for r in results), default=0.0),
        results,
    )


def collinear_composite(r: float, c: float = 1.0) -> float:
    """``|a ⊕ (b ⊕ c)|`` for three parallel elements of norm ``r`` (scalar composition)."""
    s = r / c
    two = 2 * s / (1 + s * s)
    return c * (two + s) / (1 + two * s)


@dataclass
class ChainStep:
    index: int
    outer: float
    inner: float
    status: str
    worst: float
    witness: tuple | None = None

    def to_dict(self):
        return dict(self.__dict__)


@dataclass
class ChainReport:
    steps: list[ChainStep]
    samples: int
    seed: int
    tol: float

    @property
    def status(self) -> str:
        st = [s.status for s in self.steps]
        if FAIL in st:
            return FAIL
        if INCONCLUSIVE in st:
            return INCONCLUSIVE
        return PASS

    def to_dict(self):
        return {
            "status": self.status,
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "steps": [s.to_dict() for s in self.steps],
        }


def validate_chain(chain, bound):
    chain = [float(r) for r in chain]
    if len(chain) < 2:
        raise ValueError("a radius chain needs at least two radii")
    for r in chain:
        if not 0 < r < bound:
            raise ValueError(f"radius {r} outside (0, {bound})")
    if any(b >= a for a, b in zip(chain, chain[1:])):
        raise ValueError("radii must be strictly decreasing")
    return chain


def admissible_chain_check(model, chain, samples: int = 10_000, seed: int = 0, tol: float = 1e-9) -> ChainReport:
    """Estimate ``sup |a ⊕ (b ⊕ c)|`` over ``U_{r[n+1]}`` and compare with ``r[n]``.

    The estimate is the maximum over shell-biased random triples and the
    collinear triple ``(r, r, r)``, which is always included. Verdicts use a
    two-sided margin: pass below ``r[n] - tol``, fail (with a witness triple)
    above ``r[n] + tol``, inconclusive in between.
    """
    chain = validate_chain(chain, model.bound)
    rng = np.random.default_rng(seed)
    steps = []
    for i, (outer, inner) in enumerate(zip(chain, chain[1:])):
        a, b, c = (sample_shell_biased(model, rng, samples, inner) for _ in range(3))
        p = model.collinear(inner)
        a, b, c = (np.concatenate([[p], v]) for v in (a, b, c))
        mods = model.norm(model.op(a, model.op(b, c)))
        k = int(np.argmax(mods))
        worst = float(mods[k])
        if worst <= outer - tol:
            status, witness = PASS, None
        elif worst > outer + tol:
            status = FAIL
            witness = tuple(_plain(v[k]) for v in (a, b, c))
        else:
            status, witness = INCONCLUSIVE, None
        steps.append(ChainStep(i, outer, inner, status, worst, witness))
    return ChainReport(steps, samples, seed, tol)


def _plain(v):
    v = np.asarray(v)
    if np.iscomplexobj(v):
        return (float(v.real), float(v.imag))
    return tuple(float(x) for x in np.atleast_1d(v))
