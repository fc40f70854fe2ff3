import numpy as np
import pytest

from tfnorm.spaces import (
    C0Spec,
    FLpSpec,
    LpSpec,
    operator_norm_translation,
    weight_exponent,
)
from tfnorm.weights import ProductWeight, make_power_weight


def test_unweighted_translation_invariance(grid):
    spec = LpSpec(2.0, make_power_weight(0.0))
    for x0 in (0.5, 1.0, 4.0):
        assert operator_norm_translation(spec, x0, grid) == 1.0


def test_weighted_translation_growth(grid):
    # dense-grid oracle: sup of (1+|t+1|)/(1+|t|) over t is 2, attained at 0
    t = np.linspace(-16, 16, 200001)
    oracle = np.max((1 + np.abs(t + 1.0)) / (1 + np.abs(t)))
    spec = LpSpec(2.0, make_power_weight(1.0))
    assert operator_norm_translation(spec, 1.0, grid) == pytest.approx(oracle, abs=1e-6)
    assert operator_norm_translation(spec, 1.0, grid) == pytest.approx(2.0, abs=1e-6)


def test_reciprocal_weight_growth(grid):
    spec = LpSpec(1.0, make_power_weight(-1.0))
    assert operator_norm_translation(spec, 1.0, grid) == pytest.approx(2.0, abs=1e-6)


def test_closed_form_omega_matches_measurement(grid):
    # omega(x) = (1+|x|)^{|s|} on the grid within 1%
    for s in (0.0, 1.0, -1.0, 2.0):
        spec = LpSpec(2.0, make_power_weight(s))
        for x0 in (1.0, 2.0):
            measured = operator_norm_translation(spec, x0, grid)
            assert measured == pytest.approx(spec.omega(x0), rel=0.01)
    assert LpSpec(2.0, make_power_weight(0.0)).omega(7.0) == 1.0


def test_fourier_side_translation_is_isometric(grid):
    spec = FLpSpec(2.0, make_power_weight(3.0))
    assert operator_norm_translation(spec, 2.0, grid) == 1.0
    # the growth moved to the modulation side
    assert spec.nu(1.0) == pytest.approx(8.0)


def test_c0_spec_growth(grid):
    spec = C0Spec(make_power_weight(1.0))
    assert operator_norm_translation(spec, 1.0, grid) == pytest.approx(2.0, abs=1e-6)


def test_weight_exponent_of_products():
    w = ProductWeight((make_power_weight(1.0), make_power_weight(-0.5)))
    assert weight_exponent(w) == pytest.approx(0.5)
    assert weight_exponent(None) == 0.0
