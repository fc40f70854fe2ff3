import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tfnorm.grid import GridSpec
from tfnorm.weights import (
    PowerWeight,
    ProductWeight,
    RadialWeight2D,
    TensorWeight,
    make_power_weight,
    moderation_check,
)


def test_constant_weight():
    w = make_power_weight(0.0)
    assert np.all(w.eval(np.linspace(-16, 16, 11)) == 1.0)
    assert w.witness == (1.0, 0.0)


def test_power_weight_values():
    w = make_power_weight(2.0)
    assert w.eval(np.array([3.0]))[0] == pytest.approx(16.0)
    assert w.eval(np.array([-3.0]))[0] == pytest.approx(16.0)


def test_make_power_weight_rejects_nonfinite():
    with pytest.raises(ValueError):
        make_power_weight(float("nan"))


@pytest.mark.parametrize("s,tau", [(0.0, 0.0), (1.0, 1.0), (-1.0, 1.0), (2.0, 2.0)])
def test_moderation_exhaustive_scan(grid, s, tau):
    # brute-force max of eta(x+y)/(eta(x)(1+|y|)^tau) over all grid pairs
    c_emp, ok = moderation_check(make_power_weight(s), tau, grid)
    assert ok
    assert c_emp <= 1.0 + 1e-9


def test_moderation_fails_with_too_small_tau(grid):
    c_emp, ok = moderation_check(make_power_weight(2.0), 1.0, grid)
    assert ok  # finite, but far above 1: the witness tau=|s| is the right one
    assert c_emp > 10.0


def test_moderation_rejects_negative_tau(grid):
    with pytest.raises(ValueError):
        moderation_check(make_power_weight(1.0), -1.0, grid)


def test_stored_witness_passes_for_every_kind(grid):
    weights = [
        make_power_weight(1.5),
        make_power_weight(-2.0),
        ProductWeight((make_power_weight(1.0), make_power_weight(0.5))),
    ]
    for w in weights:
        c, tau = w.witness
        c_emp, ok = moderation_check(w, tau, grid)
        assert ok and c_emp <= c + 1e-9


def test_product_weight_evaluates_pointwise():
    w = ProductWeight((make_power_weight(1.0), make_power_weight(-1.0)))
    x = np.linspace(-5, 5, 21)
    assert np.allclose(w.eval(x), 1.0)


def test_tensor_weight_tf_matrix():
    w = TensorWeight(make_power_weight(1.0), make_power_weight(2.0))
    xr = np.array([0.0, 1.0])
    xir = np.array([0.0, 3.0])
    m = w.eval_tf(xr, xir)
    assert m.shape == (2, 2)
    assert m[1, 1] == pytest.approx(2.0 * 16.0)
    assert w.witness == (1.0, 3.0)


def test_radial_weight_tf_matrix():
    w = RadialWeight2D(2.0)
    m = w.eval_tf(np.array([3.0]), np.array([4.0]))
    assert m[0, 0] == pytest.approx(36.0)  # (1 + 5)^2


def test_moderation_d2():
    g2 = GridSpec(2, 8.0, 32)
    c_emp, ok = moderation_check(make_power_weight(1.0), 1.0, g2)
    assert ok and c_emp <= 1.0 + 1e-9


@settings(max_examples=25, deadline=None)
@given(
    s=st.floats(min_value=-3.0, max_value=3.0),
    x=st.floats(min_value=-15.0, max_value=15.0),
    y=st.floats(min_value=-15.0, max_value=15.0),
)
def test_peetre_inequality_pointwise(s, x, y):
    # eta(x+y) <= eta(x) (1+|y|)^{|s|} for the canonical powers
    w = make_power_weight(s)
    lhs = w.eval(np.array([x + y]))[0]
    rhs = w.eval(np.array([x]))[0] * (1.0 + abs(y)) ** abs(s)
    assert lhs <= rhs * (1.0 + 1e-12)
