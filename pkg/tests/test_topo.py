import numpy as np
import pytest

from gyrolab import EinsteinModel, MobiusModel
from gyrolab.topo import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    admissible_chain_check,
    ball_gyr_invariance,
    collinear_composite,
    strongly_topological_base_check,
)

from oracles import scalar_compose


@pytest.mark.parametrize("r", [0.1, 0.5, 0.9, 0.999])
def test_mobius_balls_are_gyration_invariant(r):
    res = ball_gyr_invariance(MobiusModel(), r, samples=20_000, seed=1)
    assert res.passed
    assert res.max_deviation <= 1e-12


@pytest.mark.parametrize("c", [1.0, 3.0])
@pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
def test_einstein_balls_are_gyration_invariant(r, c):
    res = ball_gyr_invariance(EinsteinModel(c), r * c, samples=20_000, seed=2)
    assert res.passed
    assert res.max_deviation <= 1e-9


def test_identity_gyration_has_zero_deviation():
    res = ball_gyr_invariance(MobiusModel(), 0.7, samples=1000, x=0j, y=0j)
    assert res.max_deviation == 0.0
    res = ball_gyr_invariance(EinsteinModel(), 0.7, samples=1000, x=np.zeros(3), y=np.zeros(3))
    assert res.max_deviation == 0.0


def test_radius_validation():
    for r in (0.0, -0.1, 1.0, 1.5):
        with pytest.raises(ValueError):
            ball_gyr_invariance(MobiusModel(), r)


def test_base_check():
    assert strongly_topological_base_check(MobiusModel(), []).passed
    res = strongly_topological_base_check(EinsteinModel(), [0.5, 0.25, 0.125], samples=5000)
    assert res.passed
    assert len(res.per_radius) == 3
    assert res.max_deviation == max(r.max_deviation for r in res.per_radius)


@pytest.mark.parametrize("c", [1.0, 2.0])
@pytest.mark.parametrize("r", [1e-3, 0.2, 0.5, 0.8, 0.99])
def test_collinear_composite_against_scalar_composition(r, c):
    rc = r * c
    want = scalar_compose(rc, scalar_compose(rc, rc, c), c)
    assert abs(collinear_composite(rc, c) - float(want)) <= 1e-12 * c


def test_collinear_composite_increasing():
    rs = np.linspace(0.01, 0.99, 99)
    vals = [collinear_composite(r) for r in rs]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert all(v > r for v, r in zip(vals, rs))


@pytest.mark.parametrize("model", [MobiusModel(), EinsteinModel()], ids=["mobius", "einstein"])
def test_harmonic_chain_fails_at_every_step(model):
    chain = [1 / (n + 2) for n in range(4)]
    rep = admissible_chain_check(model, chain, samples=5000, seed=0)
    assert rep.status == FAIL
    for step in rep.steps:
        want = collinear_composite(step.inner)
        assert step.status == FAIL
        # the collinear triple is always sampled, and it is the supremum
        assert step.worst >= want - 1e-12
        assert step.worst <= want + 1e-9
        assert step.witness is not None


@pytest.mark.parametrize("model", [MobiusModel(), EinsteinModel()], ids=["mobius", "einstein"])
def test_fast_chain_passes(model):
    rep = admissible_chain_check(model, [0.5, 0.1, 0.02], samples=5000, seed=0)
    assert rep.status == PASS
    assert all(s.witness is None for s in rep.steps)


def test_chain_inconclusive_band():
    inner = 0.2
    outer = collinear_composite(inner)
    rep = admissible_chain_check(MobiusModel(), [outer, inner], samples=100, tol=1e-6)
    assert rep.status == INCONCLUSIVE


def test_chain_validation():
    m = MobiusModel()
    for chain in ([0.5], [0.3, 0.5], [0.5, 0.5], [1.2, 0.5], [0.5, 0.0]):
        with pytest.raises(ValueError):
            admissible_chain_check(m, chain)


def test_chain_is_seeded():
    a = admissible_chain_check(EinsteinModel(), [0.9, 0.4], samples=2000, seed=5).to_dict()
    b = admissible_chain_check(EinsteinModel(), [0.9, 0.4], samples=2000, seed=5).to_dict()
    assert a == b
