"""Model-independent gyrogroup machinery.

A model is anything exposing ``identity``, a vectorised ``op``/``inv`` pair
and a ``dist`` used to compare two batches of elements. The evaluators in
this module only ever talk to that interface, so the same axiom suite runs
on the Möbius disk, the Einstein ball and finite Cayley tables.

Batches are numpy arrays whose leading axes index samples. For the
vector-valued Einstein model the trailing axis holds the coordinates.
"""

from __future__ import annotations

import abc
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

import numpy as np

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"

DEFAULT_TOL = 1e-9
DEFAULT_SAMPLE_RADIUS = 0.95

# Order is the order in which reports list them.
CHECK_NAMES = (
    "identity",
    "inverse",
    "left_gyroassociative",
    "gyr_automorphism",
    "left_loop",
    "left_cancellation",
    "right_cancellation",
    "right_cancellation_gyr",
    "gyr_closed_form",
    "right_gyroassociative",
)


class GyroModel(abc.ABC):
    """Interface every concrete gyrogroup plugs into."""

    #: True for exact (finite) models, where ``dist`` is 0/1 and tol is 0.
    exact: bool = False

    @property
    @abc.abstractmethod
    def identity(self) -> Any: ...

    @abc.abstractmethod
    def op(self, a, b):
        """Gyrogroup operation, broadcast over batches."""

    @abc.abstractmethod
    def inv(self, a):
        """Gyrogroup inverse."""

    @abc.abstractmethod
    def dist(self, a, b) -> np.ndarray:
        """Per-sample distance between two batches (0/1 for exact models)."""

    def validate(self, *elements) -> None:
        """Raise :class:`InvalidElementError` if an element is outside the carrier."""

    def gyr(self, a, b, z):
        """Closed-form gyration, if the model has one. ``None`` otherwise."""
        return None

    def eq(self, a, b, tol: float = 0.0) -> np.ndarray:
        return self.dist(a, b) <= tol

    def sample(self, rng: np.random.Generator, count: int, radius: float):
        raise NotImplementedError(f"{type(self).__name__} has no sampler")

    def elements(self):
        """All elements of a finite carrier, ``None`` for continuous models."""
        return None


def gyr_apply(model: GyroModel, a, b, z):
    """Gyration ``gyr[a,b](z) = ⊖(a⊕b) ⊕ (a⊕(b⊕z))`` computed from ⊕ and ⊖ alone."""
    model.validate(a, b, z)
    return _gyr(model, a, b, z)


def _gyr(model, a, b, z):
    op = model.op
    return op(model.inv(op(a, b)), op(a, op(b, z)))


@dataclass
class CheckResult:
    status: str
    witness: tuple | None = None
    residual: float | None = None
    worst_sample: tuple | None = None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"status": self.status}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.residual is not None:
            out["residual"] = self.residual
        if self.worst_sample is not None:
            out["worst_sample"] = _jsonable(self.worst_sample)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        return cls(
            status=d["status"],
            witness=_tupled(d.get("witness")),
            residual=d.get("residual"),
            worst_sample=_tupled(d.get("worst_sample")),
        )


@dataclass
class AxiomReport:
    """Outcome of an axiom run.

    Exact models carry a witness tuple for each failed check. Continuous
    models carry the largest residual seen and the sample that produced it.
    """

    checks: dict[str, CheckResult] = field(default_factory=dict)
    sample_count: int = 0
    seed: int | None = None
    exact: bool = False
    tol: float = 0.0
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, c in self.checks.items() if c.status == FAIL]

    @property
    def max_residual(self) -> float | None:
        vals = [c.residual for c in self.checks.values() if c.residual is not None]
        return max(vals) if vals else None

    def status(self, name: str) -> str:
        return self.checks[name].status

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "exact": self.exact,
            "tol": self.tol,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
            "meta": _jsonable(self.meta),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AxiomReport":
        return cls(
            checks={k: CheckResult.from_dict(v) for k, v in d["checks"].items()},
            sample_count=d["sample_count"],
            seed=d["seed"],
            exact=d["exact"],
            tol=d["tol"],
            meta=dict(d.get("meta", {})),
        )


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


def _tupled(value):
    if value is None:
        return None
    if isinstance(value, list):
        return tuple(_tupled(v) for v in value)
    return value


# Each law returns a list of (lhs, rhs) pairs; the residual is the largest
# distance over the pairs.
def _law_identity(m, x):
    e = m.identity
    return [(m.op(e, x), x), (m.op(x, e), x)]


def _law_inverse(m, x):
    e = m.identity
    ix = m.inv(x)
    return [(m.op(ix, x), e), (m.op(x, ix), e)]


def _law_left_gyroassociative(m, x, y, z):
    return [(m.op(x, m.op(y, z)), m.op(m.op(x, y), _gyr(m, x, y, z)))]


def _law_gyr_automorphism(m, x, y, z, w):
    lhs = _gyr(m, x, y, m.op(z, w))
    rhs = m.op(_gyr(m, x, y, z), _gyr(m, x, y, w))
    return [(lhs, rhs)]


def _law_left_loop(m, x, y, z):
    return [(_gyr(m, m.op(x, y), y, z), _gyr(m, x, y, z))]


def _law_left_cancellation(m, x, y):
    return [(m.op(m.inv(x), m.op(x, y)), y)]


def _law_right_cancellation(m, x, y):
    iy = m.inv(y)
    return [(m.op(m.op(x, iy), _gyr(m, x, iy, y)), x)]


def _law_right_cancellation_gyr(m, x, y):
    return [(m.op(m.op(x, _gyr(m, x, y, m.inv(y))), y), x)]


def _law_gyr_closed_form(m, x, y, z):
    return [(m.gyr(x, y, z), _gyr(m, x, y, z))]


def _law_right_gyroassociative(m, x, y, z):
    return [(m.op(m.op(x, y), z), m.op(x, m.op(y, _gyr(m, y, x, z))))]


LAWS: dict[str, tuple[int, Callable]] = {
    "identity": (1, _law_identity),
    "inverse": (1, _law_inverse),
    "left_gyroassociative": (3, _law_left_gyroassociative),
    "gyr_automorphism": (4, _law_gyr_automorphism),
    "left_loop": (3, _law_left_loop),
    "left_cancellation": (2, _law_left_cancellation),
    "right_cancellation": (2, _law_right_cancellation),
    "right_cancellation_gyr": (2, _law_right_cancellation_gyr),
    "gyr_closed_form": (3, _law_gyr_closed_form),
    "right_gyroassociative": (3, _law_right_gyroassociative),
}


def _has_closed_form(model) -> bool:
    return type(model).gyr is not GyroModel.gyr


def _exhaustive_tuples(elements: np.ndarray, arity: int, chunk: int) -> Iterator[list[np.ndarray]]:
    """Yield every arity-tuple over ``elements`` in lexicographic order, in chunks."""
    n = len(elements)
    total = n**arity
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk))
        cols = []
        for p in range(arity - 1, -1, -1):
            cols.append(elements[(idx // n**p) % n])
        yield cols


def check_axioms(
    model: GyroModel,
    sampler: str | Callable | None = None,
    count: int = 10_000,
    tol: float | None = None,
    seed: int = 0,
    radius: float = DEFAULT_SAMPLE_RADIUS,
    skip: tuple[str, ...] = (),
    chunk: int = 1 << 16,
) -> AxiomReport:
    """Evaluate the gyrogroup axioms and derived identities on ``model``.

    ``sampler="all"`` runs exhaustively over a finite carrier (every tuple,
    exact comparison, lexicographically first witness). Otherwise
    ``count`` tuples are drawn, either by ``sampler(rng, count)`` or by the
    model's own ball sampler at ``radius``. Failures are recorded in the
    report, never raised.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    exhaustive = sampler == "all"
    if exhaustive and model.elements() is None:
        raise ValueError("exhaustive checking needs a finite model")
    if tol is None:
        tol = 0.0 if model.exact else DEFAULT_TOL
    if tol < 0:
        raise ValueError("tol must be >= 0")

    report = AxiomReport(seed=None if exhaustive else seed, exact=model.exact, tol=tol)
    if exhaustive:
        elements = np.asarray(model.elements())
        report.sample_count = len(elements)
    else:
        rng = np.random.default_rng(seed)
        draw = sampler if callable(sampler) else (lambda g, k: model.sample(g, k, radius))
        batches = [draw(rng, count) for _ in range(4)]
        model.validate(*batches)
        report.sample_count = count

    for name in CHECK_NAMES:
        arity, law = LAWS[name]
        if name in skip or (name == "gyr_closed_form" and not _has_closed_form(model)):
            report.checks[name] = CheckResult(SKIPPED)
            continue
        if exhaustive:
            report.checks[name] = _run_exact(model, law, _exhaustive_tuples(elements, arity, chunk))
        else:
            report.checks[name] = _run_sampled(model, law, batches[:arity], tol, chunk)
    return report


def _run_exact(model, law, tuple_chunks) -> CheckResult:
    for args in tuple_chunks:
        bad = np.zeros(len(args[0]), dtype=bool)
        for lhs, rhs in law(model, *args):
            bad |= model.dist(lhs, rhs) > 0
        if bad.any():
            i = int(np.argmax(bad))
            return CheckResult(FAIL, witness=tuple(int(a[i]) for a in args))
    return CheckResult(PASS)


def _run_sampled(model, law, batches, tol, chunk) -> CheckResult:
    worst = -1.0
    worst_sample = None
    count = len(batches[0])
    for start in range(0, count, chunk):
        args = [b[start:start + chunk] for b in batches]
        res = np.zeros(len(args[0]))
        for lhs, rhs in law(model, *args):
            d = np.asarray(model.dist(lhs, rhs), dtype=float)
            d = np.where(np.isnan(d), np.inf, d)
            res = np.maximum(res, d)
        i = int(np.argmax(res))
        if res[i] > worst:
            worst = float(res[i])
            worst_sample = tuple(_element_tuple(a[i]) for a in args)
    status = PASS if worst <= tol else FAIL
    return CheckResult(
        status,
        witness=worst_sample if status == FAIL else None,
        residual=worst if math.isfinite(worst) else float("inf"),
        worst_sample=worst_sample,
    )


def _element_tuple(value):
    value = np.asarray(value)
    if np.iscomplexobj(value):
        return (float(value.real), float(value.imag))
    if value.ndim == 0:
        return value.item()
    return tuple(float(v) for v in value)
