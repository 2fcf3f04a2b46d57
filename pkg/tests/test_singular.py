import pytest

from multiell import (DomainError, IntegralSpec, PrecisionContext, ellipk,
                      ellipk_complementary, gamma,
                      generating_integral_closed_form, integrate, lambda_star,
                      rhs_constant, singular_value_residual)
from multiell.kernels import weighted_kernel

# frozen from the reflection/multiplication-verified library gamma at 70 digits
FROZEN = {
    "I3": "2.430745256919893258306942271172682734616065836968574",
    "I4": "1.27702892945813913378054862643794345071944909268832",
    "I5": "0.3090315375176591710311373105115236027769894162233494",
}


def test_lambda_star_closed_forms(ctx):
    mp = ctx.mp
    assert lambda_star(4, ctx) == +(3 - 2 * mp.sqrt(2))
    assert lambda_star(3, ctx) == +(mp.sqrt(2) * (mp.sqrt(3) - 1) / 4)
    assert lambda_star(7, ctx) == +(mp.sqrt(2) * (3 - mp.sqrt(7)) / 8)


def test_lambda_star_in_unit_interval(ctx):
    for r in (3, 4, 7):
        lam = lambda_star(r, ctx)
        assert 0 < lam < 1


def test_unsupported_r(ctx):
    with pytest.raises(DomainError):
        lambda_star(5, ctx)


@pytest.mark.parametrize("r", [3, 4, 7])
def test_defining_property_residuals(ctx, r):
    assert singular_value_residual(r, ctx) <= ctx.pass_tol


def test_complementary_ratio_at_lambda4(ctx):
    mp = ctx.mp
    m = lambda_star(4, ctx) ** 2
    ratio = ellipk_complementary(m, ctx) / ellipk(m, ctx)
    assert abs(ratio - 2) <= ctx.pass_tol


@pytest.mark.parametrize("identity_id", ["I3", "I4", "I5"])
def test_rhs_constants_against_frozen_oracle(ctx, identity_id):
    mp = ctx.mp
    assert abs(rhs_constant(identity_id, ctx) - mp.mpf(FROZEN[identity_id])) \
        <= mp.mpf(10) ** (-ctx.digits + 5)


def test_unknown_constant_id(ctx):
    with pytest.raises(DomainError):
        rhs_constant("I8", ctx)


def test_gamma_multiplication_formula_seventh(ctx):
    # independent oracle for the gamma values entering the r=7 constant:
    # product of Gamma(k/7), k=1..6, equals (2 pi)^3 / sqrt(7)
    mp = ctx.mp
    product = mp.one
    for k in range(1, 7):
        product *= gamma(mp.mpf(k) / 7, ctx)
    assert abs(product - (2 * mp.pi) ** 3 / mp.sqrt(7)) <= mp.mpf(10) ** (-ctx.digits + 10)


def test_closed_form_bridge_r4(ctx):
    # the a = 1/sqrt(8) closed form equals the r=4 gamma constant
    mp = ctx.mp
    value = generating_integral_closed_form(1 / mp.sqrt(8), ctx)
    assert abs(value - rhs_constant("I3", ctx)) <= ctx.pass_tol


def test_quadrature_bridge_r4(ctx):
    mp = ctx.mp
    a = 1 / mp.sqrt(8)
    spec = IntegralSpec("weighted_kernel", (a, 0), (0, 1),
                        lambda emp, av, ov: weighted_kernel(emp, av, int(ov)),
                        singular_points=(0.5,))
    assert abs(integrate(spec, ctx).value - rhs_constant("I3", ctx)) <= ctx.pass_tol


def test_squared_k_bridge_r3(ctx):
    # [K at parameter lambda*(3)^2]^2 / 2 equals the r=3 gamma constant
    mp = ctx.mp
    m = lambda_star(3, ctx) ** 2
    assert abs(ellipk(m, ctx) ** 2 / 2 - rhs_constant("I4", ctx)) <= ctx.pass_tol


def test_squared_k_bridge_r7(ctx):
    mp = ctx.mp
    m = lambda_star(7, ctx) ** 2
    assert abs(ellipk(m, ctx) ** 2 / 8 - rhs_constant("I5", ctx)) <= ctx.pass_tol
