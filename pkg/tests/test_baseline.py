import math

import numpy as np
import pytest

from mixorder import DomainError, Exponential, ParameterError, PowerBurr, make_baseline
from conftest import random_baseline


def test_make_baseline_exponential():
    d = make_baseline("exponential", a=0.2)
    assert isinstance(d, Exponential)
    assert d.survival(5.0) == pytest.approx(math.exp(-1.0), rel=1e-15)


def test_make_baseline_power_burr():
    d = make_baseline("power_burr", a=0.2, b=0.5)
    assert isinstance(d, PowerBurr)
    assert d.survival(1.0) == pytest.approx(2.0 ** -0.5, rel=1e-15)


@pytest.mark.parametrize(
    "kind, params",
    [
        ("exponential", {"a": 0.0}),
        ("exponential", {"a": -1.0}),
        ("power_burr", {"a": 0.0, "b": 0.5}),
        ("power_burr", {"a": 0.2, "b": -0.5}),
    ],
)
def test_degenerate_parameters_rejected(kind, params):
    with pytest.raises(ParameterError):
        make_baseline(kind, **params)


def test_unknown_kind_and_wrong_params_rejected():
    with pytest.raises(ParameterError):
        make_baseline("weibull", a=1.0)
    with pytest.raises(ParameterError):
        make_baseline("exponential", a=1.0, b=2.0)
    with pytest.raises(ParameterError):
        make_baseline("power_burr", a=1.0)


def test_exponential_at_origin():
    d = Exponential(rate=1.0)
    assert d.survival(0.0) == 1.0
    assert d.hazard(0.0) == 1.0


def test_evaluate_bundle():
    d = Exponential(rate=1.0)
    out = d.evaluate(0.0)
    assert out["survival"] == 1.0 and out["hazard"] == 1.0 and out["density"] == 1.0


def test_exponential_survival_value():
    # e^{-0.2*5} evaluated directly
    d = Exponential(rate=0.2)
    assert d.survival(5.0) == pytest.approx(0.36787944117144233, rel=1e-12)


def test_power_burr_hand_evaluation():
    # (1+x)^{-1} at x=1 and its derivative
    d = PowerBurr(shape_a=1.0, shape_b=1.0)
    assert d.survival(1.0) == pytest.approx(0.5, rel=1e-14)
    assert d.density(1.0) == pytest.approx(0.25, rel=1e-14)
    assert d.hazard(1.0) == pytest.approx(0.5, rel=1e-14)


def test_negative_x_rejected():
    for d in (Exponential(1.0), PowerBurr(0.2, 0.5)):
        for method in (d.survival, d.density, d.hazard, d.log_survival):
            with pytest.raises(DomainError):
                method(-0.1)


def test_inverse_survival_closed_forms():
    assert Exponential(1.0).inverse_survival(1.0) == 0.0
    assert Exponential(0.2).inverse_survival(math.exp(-1.0)) == pytest.approx(5.0, rel=1e-12)
    assert PowerBurr(1.0, 1.0).inverse_survival(0.5) == pytest.approx(1.0, rel=1e-12)


def test_inverse_survival_domain():
    d = Exponential(1.0)
    for u in (0.0, -0.5, 1.0 + 1e-12, float("nan")):
        with pytest.raises(DomainError):
            d.inverse_survival(u)


def test_hazard_identity_random_pairs():
    # |hazard - density/survival| <= 1e-12 relative over 1000 random (d, x)
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        d = random_baseline(rng)
        x = rng.uniform(0.01, 20.0)
        s, f, h = d.survival(x), d.density(x), d.hazard(x)
        assert abs(h - f / s) <= 1e-12 * abs(h)


def test_survival_round_trip_on_u_grid():
    u = np.linspace(0.01, 0.99, 99)
    for d in (Exponential(0.7), PowerBurr(0.6, 1.3)):
        x = d.inverse_survival(u)
        assert np.max(np.abs(d.survival(x) - u)) <= 1e-10


def test_survival_strictly_decreasing():
    x = np.linspace(0.0, 50.0, 500)
    for d in (Exponential(0.4), PowerBurr(0.8, 0.9)):
        s = d.survival(x)
        assert np.all(np.diff(s) < 0)


def test_survival_underflow_returns_zero():
    d = Exponential(rate=3.0)
    assert d.survival(1e4) == 0.0
    assert np.isfinite(d.log_survival(1e4))
