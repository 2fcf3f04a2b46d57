import pytest

from multiell import (DomainError, EllipticParameter, IntegralSpec,
                      SingularityError, agm, ellipk, ellipk_complementary,
                      ellipk_series, generating_integral_closed_form,
                      integrate)


def test_parameter_regime_tags(ctx):
    mp = ctx.mp
    assert EllipticParameter(mp.mpf("-3")).regime == "negative"
    assert EllipticParameter(mp.mpf("0.5")).regime == "unit_interval"
    assert EllipticParameter(mp.mpf(0)).regime == "unit_interval"
    assert EllipticParameter(mp.mpf(4)).regime == "super_unit"
    with pytest.raises(SingularityError):
        EllipticParameter(mp.one)


def test_ellipk_accepts_parameter_objects(ctx):
    mp = ctx.mp
    p = EllipticParameter(mp.mpf("0.25"))
    assert ellipk(p, ctx) == ellipk(mp.mpf("0.25"), ctx)


def defining_integral(m_str, ctx, singular=()):
    """Quadrature of the defining integral over (0, pi/2), principal branch.

    Independent oracle for the AGM route (and for the m > 1 continuation,
    where the integrand's square root turns negative past asin(1/sqrt(m))).
    """
    spec = IntegralSpec(
        "k_defining", (ctx.mp.mpf(m_str),), (0, lambda mp: mp.pi / 2),
        lambda mp, m: (lambda t: 1 / mp.sqrt(1 - m * mp.sin(t) ** 2)),
        singular_points=singular)
    return integrate(spec, ctx)


def test_agm_fixed_point(ctx):
    assert agm(1, 1, ctx) == 1


def test_agm_one_step_invariance(ctx):
    mp = ctx.mp
    a, b = mp.mpf(3), mp.mpf("0.7")
    direct = agm(a, b, ctx)
    stepped = agm((a + b) / 2, mp.sqrt(a * b), ctx)
    assert abs(direct - stepped) <= mp.mpf(10) ** (-ctx.digits + 2) * direct


def test_agm_domain(ctx):
    with pytest.raises(DomainError):
        agm(0, 1, ctx)
    with pytest.raises(DomainError):
        agm(1, -1, ctx)


def test_agm_sqrt2_matches_quadrature_at_negative_parameter(ctx):
    # pi/(2 agm(1, sqrt 2)) is K at parameter -1; the defining integral
    # (independent route) must agree.
    mp = ctx.mp
    v = agm(1, mp.sqrt(2), ctx)
    quad = defining_integral("-1", ctx)
    assert abs(mp.pi / (2 * v) - quad.value) <= 10 * quad.err_estimate + ctx.pass_tol


def test_ellipk_at_zero(ctx):
    mp = ctx.mp
    assert abs(ellipk(0, ctx) - mp.pi / 2) <= mp.mpf(10) ** (-ctx.digits + 2)


def test_ellipk_singularity():
    from multiell import PrecisionContext
    ctx = PrecisionContext(30)
    with pytest.raises(SingularityError):
        ellipk(1, ctx)


def test_imaginary_modulus_transform_at_k06(ctx):
    mp = ctx.mp
    k = mp.mpf("0.6")
    kp = mp.sqrt(1 - k * k)
    lhs = kp * ellipk(k * k, ctx)
    rhs = ellipk(-k * k / (1 - k * k), ctx)
    assert abs(lhs - rhs) <= ctx.pass_tol


def test_super_unit_real_part(ctx):
    mp = ctx.mp
    val = ellipk(4, ctx)
    # real part equals K(1/m)/sqrt(m)
    assert abs(val.real - ellipk(mp.mpf(1) / 4, ctx) / 2) <= ctx.pass_tol
    assert val.imag <= 0


def test_super_unit_regime_against_quadrature(ctx30):
    # Full complex value against the principal-branch defining integral,
    # split where the root changes sign (asin(1/2) = pi/6).  The integrand
    # has an algebraic (inverse square root) singularity there, which the
    # engine only resolves to a reduced tail margin, so the oracle runs at
    # 30 digits -- far beyond what a branch-convention check needs.
    quad = defining_integral("4", ctx30, singular=((lambda mp_: mp_.pi / 6),))
    val = ellipk(4, ctx30)
    assert abs(val - quad.value) <= 10 * quad.err_estimate + ctx30.pass_tol


def test_series_leading_term(ctx):
    mp = ctx.mp
    for m_str in ("0.9", "-0.4", "0"):
        assert abs(ellipk_series(mp.mpf(m_str), 0, ctx) - mp.pi / 2) \
            <= mp.mpf(10) ** (-ctx.digits + 2)


def test_series_matches_agm_route(ctx):
    mp = ctx.mp
    m = mp.mpf("0.25")
    assert abs(ellipk_series(m, 400, ctx) - ellipk(m, ctx)) <= ctx.pass_tol


def test_series_term_recurrence(ctx):
    mp = ctx.mp
    m = mp.mpf("0.5")
    s10 = ellipk_series(m, 10, ctx)
    s11 = ellipk_series(m, 11, ctx)
    # ((1/2)_11 / (1)_11)^2 m^11 * pi/2
    coeff = mp.one
    for n in range(11):
        r = (2 * n + 1) / mp.mpf(2 * n + 2)
        coeff *= r * r
    expected = mp.pi / 2 * coeff * m ** 11
    assert abs((s11 - s10) - expected) <= mp.mpf(10) ** (-ctx.digits + 5)


def test_series_domain(ctx):
    with pytest.raises(DomainError):
        ellipk_series(1, 10, ctx)
    with pytest.raises(DomainError):
        ellipk_series(-1.5, 10, ctx)


@pytest.mark.parametrize("m_str", ["0.1", "-0.1", "0.5", "-0.5", "0.9"])
def test_series_tail_bound(ctx, m_str):
    # |K - S_N| <= |term_{N+1}| / (1 - |m|): the term ratio is m times a
    # factor below one, so the geometric bound is rigorous.
    mp = ctx.mp
    m = mp.mpf(m_str)
    n_terms = 200
    coeff = mp.one
    for n in range(n_terms + 1):
        r = (2 * n + 1) / mp.mpf(2 * n + 2)
        coeff *= r * r
    term = mp.pi / 2 * coeff * abs(m) ** (n_terms + 1)
    gap = abs(ellipk(m, ctx) - ellipk_series(m, n_terms, ctx))
    assert gap <= term / (1 - abs(m))


def test_complementary_self_dual_point(ctx):
    mp = ctx.mp
    m = mp.mpf("0.5")
    assert ellipk_complementary(m, ctx) == ellipk(m, ctx)


def test_complementary_reflects_parameter(ctx):
    mp = ctx.mp
    assert abs(ellipk_complementary(mp.mpf("0.75"), ctx) - ellipk(mp.mpf("0.25"), ctx)) \
        <= mp.mpf(10) ** (-ctx.digits + 2)


def test_complementary_singular_at_zero(ctx):
    with pytest.raises(SingularityError):
        ellipk_complementary(0, ctx)


def test_logarithmic_blowup_is_compensated(ctx):
    # K(m) + (1/2) log(1-m) approaches 2 log 2 as m -> 1
    mp = ctx.mp
    for j in range(1, 11):
        m = 1 - mp.mpf(10) ** (-j)
        value = ellipk(m, ctx) + mp.log(1 - m) / 2
        assert abs(value) < 2


def test_closed_form_at_zero(ctx):
    mp = ctx.mp
    assert abs(generating_integral_closed_form(0, ctx) - mp.pi ** 2 / 4) \
        <= mp.mpf(10) ** (-ctx.digits + 2)


def test_closed_form_small_a_quadratic(ctx):
    # fit |f(a) - pi^2/4| = C a^2 at a = 1e-3, validate at a = 1e-4
    mp = ctx.mp
    base = mp.pi ** 2 / 4
    a1 = mp.mpf(10) ** -3
    c_fit = abs(generating_integral_closed_form(a1, ctx) - base) / a1 ** 2
    a2 = mp.mpf(10) ** -4
    gap = abs(generating_integral_closed_form(a2, ctx) - base)
    assert gap <= c_fit * a2 ** 2 * mp.mpf("1.001")


def test_closed_form_large_a_decay(ctx):
    mp = ctx.mp
    a = mp.mpf(10) ** 6
    assert abs(a * generating_integral_closed_form(a, ctx) - mp.pi ** 2 / 4) <= mp.mpf(10) ** -10


def test_closed_form_continuous_at_one(ctx):
    mp = ctx.mp
    v = generating_integral_closed_form(1, ctx)
    m = (1 - mp.sqrt(2)) / 2
    assert abs(v - ellipk(m, ctx) ** 2) <= mp.mpf(10) ** (-ctx.digits + 3)


def test_closed_form_domain(ctx):
    with pytest.raises(DomainError):
        generating_integral_closed_form(-0.5, ctx)
