import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gyrolab.core import CHECK_NAMES, AxiomReport, check_axioms, gyr_apply
from gyrolab.einstein import EinsteinModel
from gyrolab.errors import InvalidElementError
from gyrolab.finite import FiniteModel, cyclic
from gyrolab.mobius import MobiusModel

from oracles import mp_mobius_multiplier

MODELS = [MobiusModel(), EinsteinModel()]

disk = st.builds(
    lambda r, t: r * np.exp(1j * t),
    st.floats(0, 0.95),
    st.floats(0, 2 * np.pi),
)


@pytest.mark.parametrize("model", MODELS, ids=repr)
def test_gyr_with_identity_first_argument_is_identity_map(model):
    rng = np.random.default_rng(1)
    b, z = model.sample(rng, 50, 0.9), model.sample(rng, 50, 0.9)
    e = np.broadcast_to(model.identity, np.shape(b))
    assert np.max(model.dist(gyr_apply(model, e, b, z), z)) < 1e-12


@pytest.mark.parametrize("model", MODELS, ids=repr)
def test_gyr_fixes_identity(model):
    rng = np.random.default_rng(2)
    a, b = model.sample(rng, 50, 0.9), model.sample(rng, 50, 0.9)
    e = np.broadcast_to(model.identity, np.shape(a))
    assert np.max(model.dist(gyr_apply(model, a, b, e), e)) < 1e-12


def test_gyr_apply_matches_mobius_closed_form_high_precision():
    a, b, z = 0.5, 0.5j, 0.3
    expected = complex(mp_mobius_multiplier(a, b) * z)
    got = gyr_apply(MobiusModel(), a, b, z)
    assert abs(got - expected) < 1e-14


def test_gyr_apply_rejects_points_outside_disk():
    with pytest.raises(InvalidElementError):
        gyr_apply(MobiusModel(), 1.0, 0.2, 0.1)


def test_gyr_apply_is_injective_on_finite_carrier():
    t = cyclic(5)
    m = FiniteModel(t)
    z = np.arange(5)
    for a in range(5):
        for b in range(5):
            assert len(set(gyr_apply(m, a, b, z).tolist())) == 5


def test_z2_report_all_pass_exhaustive():
    r = check_axioms(FiniteModel(cyclic(2)), "all")
    assert r.passed
    assert r.exact and r.tol == 0
    assert all(c.witness is None for c in r.checks.values())


def test_check_axioms_reports_residuals_and_seed():
    r = check_axioms(MobiusModel(), count=2000, seed=11)
    assert r.seed == 11 and r.sample_count == 2000
    assert list(r.checks) == list(CHECK_NAMES)
    for c in r.checks.values():
        if c.residual is not None:
            assert c.residual >= 0
            assert c.worst_sample is not None


def test_check_axioms_is_deterministic_given_seed():
    a = check_axioms(EinsteinModel(), count=500, seed=3).to_dict()
    b = check_axioms(EinsteinModel(), count=500, seed=3).to_dict()
    assert a == b


def test_chunking_does_not_change_report():
    a = check_axioms(MobiusModel(), count=3000, seed=5).to_dict()
    b = check_axioms(MobiusModel(), count=3000, seed=5, chunk=700).to_dict()
    assert a == b


def test_failure_carries_witness():
    # a deliberately broken "gyrogroup": ordinary addition on the disk
    class Broken(MobiusModel):
        def op(self, a, b):
            return a + 0.5 * b

    r = check_axioms(Broken(), count=200, seed=0)
    assert not r.passed
    for name in r.failures:
        assert r.checks[name].witness is not None


def test_report_round_trip():
    r = check_axioms(MobiusModel(), count=100, seed=0)
    assert AxiomReport.from_dict(r.to_dict()).to_dict() == r.to_dict()


def test_argument_validation():
    with pytest.raises(ValueError):
        check_axioms(MobiusModel(), count=0)
    with pytest.raises(ValueError):
        check_axioms(MobiusModel(), count=10, tol=-1)
    with pytest.raises(ValueError):
        check_axioms(MobiusModel(), "all")


@settings(max_examples=200, deadline=None)
@given(disk, disk)
def test_left_cancellation_property(x, y):
    m = MobiusModel()
    assert abs(m.op(m.inv(x), m.op(x, y)) - y) < 1e-12


@settings(max_examples=200, deadline=None)
@given(disk, disk, disk)
def test_right_gyroassociative_property(x, y, z):
    m = MobiusModel()
    lhs = m.op(m.op(x, y), z)
    rhs = m.op(x, m.op(y, gyr_apply(m, y, x, z)))
    assert abs(lhs - rhs) < 1e-10


@settings(max_examples=200, deadline=None)
@given(disk, disk, disk)
def test_left_loop_property(x, y, z):
    m = MobiusModel()
    assert abs(gyr_apply(m, m.op(x, y), y, z) - gyr_apply(m, x, y, z)) < 1e-9
