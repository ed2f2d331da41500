import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from susyq.errors import DomainError, SingularWronskianError
from susyq.seeds import Parity, make_seed
from susyq.wronskian import (
    det_orders,
    log_w_second_deriv,
    scaled_stack,
    sign_log_det_orders,
    wronskian,
    wronskian_minor,
)

EVEN, ODD = Parity.EVEN, Parity.ODD

# fourth-order class-A example: W is proportional to e^{2x^2} (16x^8 - 64x^6 + 120x^4 + 45)
DEEP_SEEDS = [
    make_seed(-5.5, ODD),
    make_seed(-4.5, EVEN),
    make_seed(-3.5, ODD),
    make_seed(-2.5, EVEN),
]


def deep_poly(x):
    return 16 * x**8 - 64 * x**6 + 120 * x**4 + 45


def test_single_seed_wronskian_is_the_seed():
    u = make_seed(0.9, ODD)
    xs = np.linspace(0.3, 4.0, 9)
    from susyq.seeds import seed_value

    np.testing.assert_allclose(wronskian([u], xs), seed_value(u, xs), rtol=1e-13)


def test_two_seed_closed_form():
    # W(e^{-x^2/2}, x e^{-x^2/2}) = e^{-x^2}
    pair = [make_seed(0.5, EVEN), make_seed(1.5, ODD)]
    xs = np.linspace(0.2, 5.0, 13)
    np.testing.assert_allclose(wronskian(pair, xs), np.exp(-xs * xs), rtol=1e-12)
    # swapping the seeds flips the sign
    np.testing.assert_allclose(
        wronskian(pair[::-1], xs), -np.exp(-xs * xs), rtol=1e-12
    )


def test_empty_wronskian_is_one():
    xs = np.linspace(0.5, 2.0, 5)
    np.testing.assert_allclose(wronskian([], xs), np.ones_like(xs))
    assert wronskian([], 1.0) == 1.0


def test_duplicate_seeds_give_numerically_zero_determinant():
    u = make_seed(0.7, EVEN)
    w = wronskian([u, u], np.linspace(0.5, 3.0, 7))
    assert np.all(np.abs(w) < 1e-25)


def test_deep_class_a_wronskian_ratio_is_constant():
    xs = np.linspace(0.3, 4.5, 40)
    w = wronskian(DEEP_SEEDS, xs)
    ratio = w / (np.exp(2 * xs * xs) * deep_poly(xs))
    assert np.all(np.isfinite(ratio))
    np.testing.assert_allclose(ratio, ratio[0], rtol=1e-10)


def test_minor_of_two_seeds_is_the_other_seed():
    from susyq.seeds import seed_value

    pair = [make_seed(0.5, EVEN), make_seed(1.5, ODD)]
    xs = np.linspace(0.2, 3.0, 9)
    np.testing.assert_allclose(
        wronskian_minor(pair, 1, xs), seed_value(pair[1], xs), rtol=1e-13
    )
    np.testing.assert_allclose(
        wronskian_minor(pair, 2, xs), seed_value(pair[0], xs), rtol=1e-13
    )
    with pytest.raises(IndexError):
        wronskian_minor(pair, 3, xs)


def test_log_w_second_deriv_closed_forms():
    xs = np.linspace(0.2, 4.0, 15)
    # k=1, u = x e^{-x^2/2}: (ln u)'' = -1 - 1/x^2
    got = log_w_second_deriv([make_seed(1.5, ODD)], xs)
    np.testing.assert_allclose(got, -1 - 1 / xs**2, rtol=1e-11)
    # k=1, u = e^{-x^2/2}: (ln u)'' = -1
    got = log_w_second_deriv([make_seed(0.5, EVEN)], xs)
    np.testing.assert_allclose(got, np.full_like(xs, -1.0), atol=1e-11)
    # k=2, W = e^{-x^2}: (ln W)'' = -2
    got = log_w_second_deriv([make_seed(0.5, EVEN), make_seed(1.5, ODD)], xs)
    np.testing.assert_allclose(got, np.full_like(xs, -2.0), atol=1e-10)


def test_log_w_second_deriv_matches_finite_difference():
    seeds = [make_seed(0.7, EVEN), make_seed(1.2, ODD)]
    h = 1e-3
    for x in (0.6, 1.3, 2.8):
        pts = x + h * np.array([-2, -1, 0, 1, 2])
        lw = np.log(np.abs(wronskian(seeds, pts)))
        fd = (-lw[0] + 16 * lw[1] - 30 * lw[2] + 16 * lw[3] - lw[4]) / (12 * h * h)
        assert log_w_second_deriv(seeds, x) == pytest.approx(fd, rel=1e-5, abs=1e-5)


def test_deep_class_a_first_log_derivative_decays_at_origin():
    # class-A Wronskians are even in x, so (ln W)' -> 0 as x -> 0+
    k = len(DEEP_SEEDS)
    vals = []
    for x in (1e-2, 1e-3, 1e-4):
        w = wronskian(DEEP_SEEDS, np.asarray(x))
        wp = det_orders(DEEP_SEEDS, list(range(k - 1)) + [k], np.asarray(x))
        vals.append(abs(wp / w))
    assert vals[2] < vals[1] < vals[0]
    assert vals[2] < 1e-3


def test_det_orders_validates_order_list():
    pair = [make_seed(0.5, EVEN), make_seed(1.5, ODD)]
    stack = scaled_stack(pair, np.asarray(1.0), 3)
    with pytest.raises(ValueError):
        sign_log_det_orders(stack, [0])
    with pytest.raises(ValueError):
        sign_log_det_orders(stack, [2, 1])
    with pytest.raises(ValueError):
        sign_log_det_orders(stack, [1, 1])


def test_domain_error_on_nonpositive_x():
    pair = [make_seed(0.5, EVEN), make_seed(1.5, ODD)]
    with pytest.raises(DomainError):
        wronskian(pair, 0.0)
    with pytest.raises(DomainError):
        log_w_second_deriv(pair, np.array([1.0, -1.0]))


def test_singular_wronskian_raises():
    u = make_seed(0.7, EVEN)
    with pytest.raises(SingularWronskianError):
        log_w_second_deriv([u, u], 1.0)


@settings(max_examples=40, deadline=None)
@given(
    e1=st.floats(-4, 0.4),
    de=st.floats(0.1, 2.0),
    x=st.floats(0.2, 4.0),
)
def test_wronskian_antisymmetry_property(e1, de, x):
    a = make_seed(e1, ODD)
    b = make_seed(e1 + de, EVEN)
    w_ab = wronskian([a, b], x)
    w_ba = wronskian([b, a], x)
    assert w_ab == pytest.approx(-w_ba, rel=1e-10, abs=1e-280)
