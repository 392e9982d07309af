import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gyrolab.core import check_axioms, gyr_apply
from gyrolab.errors import InvalidElementError
from gyrolab.mobius import Ball, MobiusModel, gyr_multiplier, mobius_add, mobius_gyr, mobius_inv

from oracles import mp_mobius_add, mp_mobius_multiplier

disk = st.builds(
    lambda r, t: r * np.exp(1j * t),
    st.floats(0, 0.95),
    st.floats(0, 2 * np.pi),
)


def test_add_identity():
    assert mobius_add(0, 0.3 - 0.2j) == 0.3 - 0.2j


def test_add_inverse_gives_zero():
    a = 0.4 + 0.7j
    assert abs(mobius_add(a, -a)) == 0


def test_add_half_half():
    expected = float(mp_mobius_add(0.5, 0.5).real)
    assert expected == pytest.approx(0.8, abs=1e-30)
    assert abs(mobius_add(0.5, 0.5) - expected) < 1e-15


def test_add_matches_high_precision_oracle():
    rng = np.random.default_rng(0)
    a = MobiusModel().sample(rng, 200, 0.95)
    b = MobiusModel().sample(rng, 200, 0.95)
    got = mobius_add(a, b)
    for x, y, g in zip(a, b, got):
        assert abs(g - complex(mp_mobius_add(x, y))) < 1e-13


def test_gyr_trivial_when_first_argument_zero():
    assert gyr_multiplier(0, 0.3j) == 1
    assert mobius_gyr(0, 0.3j, 0.2 + 0.1j) == 0.2 + 0.1j


def test_gyr_example_multiplier():
    m = gyr_multiplier(0.5, 0.5j)
    expected = complex(mp_mobius_multiplier(0.5, 0.5j))
    assert abs(m - expected) < 1e-15
    assert abs(m - (1 - 0.25j) / (1 + 0.25j)) < 1e-15
    assert abs(abs(m) - 1) < 1e-15


def test_inverse():
    assert mobius_inv(0) == 0
    assert mobius_inv(0.3 + 0.4j) == -0.3 - 0.4j


def test_domain_errors():
    for bad in (1.0, 0.6 + 0.8j, 2j, complex("nan")):
        with pytest.raises(InvalidElementError):
            mobius_add(bad, 0)
    with pytest.raises(InvalidElementError):
        mobius_gyr(0.1, 0.1, 1 - 1e-7)
    # the guard margin is configurable
    assert abs(mobius_add(1 - 1e-7, 0, guard=1e-9)) < 1


def test_ball():
    b = Ball(0.5)
    assert b.contains(0.5) and not b.contains(0.51)
    with pytest.raises(ValueError):
        Ball(1.0)
    with pytest.raises(ValueError):
        Ball(0.0)


@settings(max_examples=300, deadline=None)
@given(disk, disk)
def test_closure(a, b):
    assert abs(mobius_add(a, b)) < 1


@settings(max_examples=300, deadline=None)
@given(disk, disk)
def test_multiplier_has_unit_modulus(a, b):
    assert abs(abs(gyr_multiplier(a, b)) - 1) < 1e-12


@settings(max_examples=300, deadline=None)
@given(disk, disk, disk)
def test_gyr_preserves_modulus(a, b, c):
    assert abs(abs(mobius_gyr(a, b, c)) - abs(c)) < 1e-12


@settings(max_examples=300, deadline=None)
@given(disk, disk, disk)
def test_closed_form_agrees_with_generic_gyration(a, b, c):
    assert abs(mobius_gyr(a, b, c) - gyr_apply(MobiusModel(), a, b, c)) < 1e-9


@settings(max_examples=200, deadline=None)
@given(disk, disk)
def test_left_cancellation_numerically(a, b):
    assert abs(mobius_add(mobius_inv(a), mobius_add(a, b)) - b) < 1e-12


def test_axiom_suite_passes():
    r = check_axioms(MobiusModel(), count=20_000, seed=1)
    assert r.passed, r.failures
    assert r.max_residual < 1e-9
    assert r.status("gyr_closed_form") == "pass"


def test_mobius_is_not_a_group():
    a, b, c = 0.5, 0.5j, 0.3
    assert abs(mobius_add(mobius_add(a, b), c) - mobius_add(a, mobius_add(b, c))) > 1e-3
