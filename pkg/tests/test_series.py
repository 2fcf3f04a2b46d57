import pytest

from multiell import (DomainError, IntegralSpec, SeriesId, SeriesSpec,
                      clausen_sum, clausen_sum_da, ellipk,
                      generating_integral_closed_form, integrate,
                      legendre_sum, linear_bridge, ramanujan_sum,
                      ramanujan_target)
from multiell.kernels import weighted_kernel
from multiell.series import bridge_from_data


def test_clausen_empty(ctx):
    assert clausen_sum(0, 10, ctx) == 1


def test_clausen_matches_squared_k_closed_form(ctx):
    # at a = 1/sqrt(8) the sum equals (4/pi^2) [K(m)]^2 with m = (1-sqrt(9/8))/2
    mp = ctx.mp
    a = 1 / mp.sqrt(8)
    lhs = clausen_sum(a, 300, ctx)
    rhs = 4 / mp.pi ** 2 * generating_integral_closed_form(a, ctx)
    m = (1 - mp.sqrt(mp.mpf(9) / 8)) / 2
    direct = 4 / mp.pi ** 2 * ellipk(m, ctx) ** 2
    assert abs(lhs - rhs) <= ctx.pass_tol
    assert abs(lhs - direct) <= ctx.pass_tol


def test_clausen_matches_quadrature(ctx):
    mp = ctx.mp
    a = mp.mpf("0.5")
    spec = IntegralSpec("weighted_kernel", (a, 0), (0, 1),
                        lambda emp, av, ov: weighted_kernel(emp, av, int(ov)),
                        singular_points=(0.5,))
    quad = integrate(spec, ctx)
    assert abs(clausen_sum(a, 300, ctx) - 4 / mp.pi ** 2 * quad.value) <= ctx.pass_tol


def test_clausen_domain(ctx):
    with pytest.raises(DomainError):
        clausen_sum(1, 10, ctx)


@pytest.mark.parametrize("a_str,n_terms", [("0.3", 20), ("0.5", 20),
                                           ("0.9", 20), ("0.5", 40)])
def test_clausen_geometric_tail(ctx, a_str, n_terms):
    mp = ctx.mp
    a = mp.mpf(a_str)
    gap = abs(clausen_sum(a, n_terms, ctx) - clausen_sum(a, 2 * n_terms, ctx))
    assert gap <= abs(a) ** (2 * n_terms)


def test_derivative_series_vanishes_at_origin(ctx):
    assert clausen_sum_da(0, 50, ctx) == 0


def test_derivative_series_against_central_difference(ctx):
    mp = ctx.mp
    a = mp.mpf("0.3")
    h = mp.mpf(10) ** -10
    fd = (clausen_sum(a + h, 300, ctx) - clausen_sum(a - h, 300, ctx)) / (2 * h)
    assert abs(clausen_sum_da(a, 300, ctx) - fd) <= mp.mpf(10) ** -18


@pytest.mark.parametrize("a_str", ["0.1", "0.3", "0.35"])
def test_derivative_consistency_at_spec_step(ctx, a_str):
    mp = ctx.mp
    a = mp.mpf(a_str)
    h = mp.mpf(10) ** (-(ctx.digits // 3))
    fd = (clausen_sum(a + h, 400, ctx) - clausen_sum(a - h, 400, ctx)) / (2 * h)
    assert abs(clausen_sum_da(a, 400, ctx) - fd) <= mp.mpf(10) ** (-(ctx.digits // 2))


def test_ramanujan_leading_terms(ctx):
    mp = ctx.mp
    assert ramanujan_sum(SeriesId.RAMANUJAN_2SQRT2, 0, ctx) == 1
    expected = 7 - 3 * mp.sqrt(3)
    assert abs(ramanujan_sum(SeriesId.RAMANUJAN_4SQRT2, 0, ctx) - expected) \
        <= mp.mpf(10) ** (-ctx.digits + 2)


def test_ramanujan_2sqrt2_value(ctx):
    mp = ctx.mp
    target = 2 * mp.sqrt(2) / mp.pi
    assert abs(ramanujan_sum(SeriesId.RAMANUJAN_2SQRT2, 200, ctx) - target) \
        <= mp.mpf(10) ** (-ctx.digits + 10)
    assert abs(ramanujan_target(SeriesId.RAMANUJAN_2SQRT2, ctx) - target) \
        <= mp.mpf(10) ** (-ctx.digits + 2)


def test_ramanujan_4sqrt2_value(ctx):
    mp = ctx.mp
    target = 4 * mp.sqrt(2) / mp.pi
    assert abs(ramanujan_sum(SeriesId.RAMANUJAN_4SQRT2, 400, ctx) - target) <= ctx.pass_tol


def test_ramanujan_rejects_other_ids(ctx):
    with pytest.raises(DomainError):
        ramanujan_sum(SeriesId.CLAUSEN, 100, ctx)


def test_bridge_coefficients_2sqrt2(ctx):
    mp = ctx.mp
    bridge = linear_bridge(SeriesId.RAMANUJAN_2SQRT2, ctx)
    tol = mp.mpf(10) ** (-ctx.digits + 2)
    assert abs(bridge.a_star - 1 / mp.sqrt(8)) <= tol
    assert abs(bridge.alpha - 1) <= tol
    assert abs(bridge.beta - 3 / (2 * mp.sqrt(2))) <= tol


def test_bridge_coefficients_4sqrt2(ctx):
    mp = ctx.mp
    bridge = linear_bridge(SeriesId.RAMANUJAN_4SQRT2, ctx)
    tol = mp.mpf(10) ** (-ctx.digits + 2)
    assert abs(bridge.a_star - mp.sqrt(26 - 15 * mp.sqrt(3)) / 4) <= tol
    assert abs(bridge.alpha - (7 - 3 * mp.sqrt(3))) <= tol
    assert abs(bridge.beta - (30 - 6 * mp.sqrt(3)) * bridge.a_star / 2) <= tol


@pytest.mark.parametrize("series_id", [SeriesId.RAMANUJAN_2SQRT2,
                                       SeriesId.RAMANUJAN_4SQRT2])
def test_bridged_series_reproduces_ramanujan_sum(ctx, series_id):
    bridge = linear_bridge(series_id, ctx)
    bridged = (bridge.alpha * clausen_sum(bridge.a_star, 400, ctx)
               + bridge.beta * clausen_sum_da(bridge.a_star, 400, ctx))
    assert abs(bridged - ramanujan_sum(series_id, 400, ctx)) <= ctx.pass_tol


def test_degenerate_bridge_is_pure_clausen(ctx):
    mp = ctx.mp
    bridge = bridge_from_data(0, 1, -mp.mpf("0.09"), ctx)
    assert bridge.alpha == 1
    assert bridge.beta == 0
    assert abs(bridge.a_star - mp.mpf("0.3")) <= mp.mpf(10) ** (-ctx.digits + 2)


def test_bridge_requires_negative_base(ctx):
    with pytest.raises(DomainError):
        bridge_from_data(6, 1, ctx.mp.mpf("0.125"), ctx)


def test_legendre_sum_reduces_to_plain_value_at_zero(ctx):
    mp = ctx.mp
    assert abs(legendre_sum(0, 5, ctx) - mp.pi ** 2 / 4) <= mp.mpf(10) ** (-ctx.digits + 2)


def test_series_spec_validation(ctx):
    with pytest.raises(DomainError):
        SeriesSpec(SeriesId.CLAUSEN, 0, 0.5)
    with pytest.raises(DomainError):
        SeriesSpec(SeriesId.CLAUSEN, 10, 1.0)
    SeriesSpec(SeriesId.RAMANUJAN_2SQRT2, 10)  # no parameter needed
