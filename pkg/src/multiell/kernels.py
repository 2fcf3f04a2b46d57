"""Integrand factories for the identity catalog and the operator checks.

Each factory takes the quadrature engine's mpmath context plus the
identity's parameters and returns the integrand as a function of the
abscissa.  Kernels are transcribed exactly as printed in the catalog's
closed forms -- no algebraic pre-simplification -- so that shared code
lives below the integrand layer (K itself, square roots) and nothing can
drift in transcription.
"""

from __future__ import annotations

from .elliptic import ellipk_real_mp, re_k_modulus_mp


def k_of_x(mp):
    """K(2 sqrt(x(1-x))) as a function on (0,1); singular at x = 1/2."""
    def f(x):
        return ellipk_real_mp(mp, 4 * x * (1 - x))
    return f


def plain_kernel(mp):
    """Integrand of the plain K-kernel integral (value pi^2/4)."""
    return k_of_x(mp)


def generating_weight(mp, a, order: int = 0):
    """d^order/da^order of (1 - 2(2x-1)a + a^2)^(-1/2), order in 0..3.

    Closed-form algebraic derivatives in a; cross-checked against finite
    differences of the order-0 weight in the test suite before use.
    """
    if order not in (0, 1, 2, 3):
        raise ValueError(f"order must be 0..3, got {order}")

    def f(x):
        u = 1 - 2 * (2 * x - 1) * a + a * a
        if order == 0:
            return 1 / mp.sqrt(u)
        ua = 2 * (a - (2 * x - 1))
        if order == 1:
            return -ua / (2 * u ** mp.mpf("1.5"))
        if order == 2:
            return 3 * ua * ua / (4 * u ** mp.mpf("2.5")) - u ** mp.mpf("-1.5")
        return (-mp.mpf(15) / 8 * ua ** 3 / u ** mp.mpf("3.5")
                + mp.mpf(9) / 2 * ua / u ** mp.mpf("2.5"))
    return f


def weighted_kernel(mp, a, order: int = 0):
    """K(2 sqrt(x(1-x))) times the generating weight (or its a-derivative)."""
    k = k_of_x(mp)
    g = generating_weight(mp, a, order)
    def f(x):
        return k(x) * g(x)
    return f


def ratio_kernel_2sqrt2(mp):
    """K(2 sqrt(x(1-x))) (4x + 3 sqrt2 - 2) / (4 sqrt2 + 9 - 8 sqrt2 x)^(3/2)."""
    k = k_of_x(mp)
    s2 = mp.sqrt(2)
    def f(x):
        return k(x) * (4 * x + 3 * s2 - 2) / (4 * s2 + 9 - 8 * s2 * x) ** mp.mpf("1.5")
    return f


def singular_value_kernel_r4(mp):
    """K(2 sqrt(x(1-x))) / sqrt(9/8 + (1-2x)/sqrt2)."""
    k = k_of_x(mp)
    s2 = mp.sqrt(2)
    nine_eighth = mp.mpf(9) / 8
    def f(x):
        return k(x) / mp.sqrt(nine_eighth + (1 - 2 * x) / s2)
    return f


def complex_kernel_r3(mp):
    """K(2 sqrt(x(1-x))) / sqrt(3 + 4i(1-2x)), principal branch."""
    k = k_of_x(mp)
    def f(x):
        return k(x) / mp.sqrt(mp.mpc(3, 4 * (1 - 2 * x)))
    return f


def complex_kernel_r7(mp):
    """K(2 sqrt(x(1-x))) / sqrt(63 + 16i(1-2x)), principal branch."""
    k = k_of_x(mp)
    def f(x):
        return k(x) / mp.sqrt(mp.mpc(63, 16 * (1 - 2 * x)))
    return f


def axial_kernel(mp, b, c):
    """K(sqrt(4c tan th / (b^2+(c+tan th)^2))) sin th / sqrt(b^2+(c+tan th)^2)."""
    def f(theta):
        tt = mp.tan(theta)
        den2 = b * b + (c + tt) ** 2
        return ellipk_real_mp(mp, 4 * c * tt / den2) * mp.sin(theta) / mp.sqrt(den2)
    return f


def special_case_kernel(mp):
    """K(2 sqrt(x(1-x))) x(1-x) / (1 - 2x(1-x))^(3/2)."""
    k = k_of_x(mp)
    def f(x):
        p = x * (1 - x)
        return k(x) * p / (1 - 2 * p) ** mp.mpf("1.5")
    return f


def re_k_semi_infinite_kernel(mp, c):
    """Re[K(x)] c x / (1 + c^2 x^2)^(3/2) on (0, inf); modulus convention."""
    def f(x):
        return re_k_modulus_mp(mp, x) * c * x / (1 + c * c * x * x) ** mp.mpf("1.5")
    return f


def axial_x_form_kernel(mp, c):
    """K(2 sqrt(x)/(1+x)) c x / ((1+x)(1+c^2 x^2)^(3/2)) on (0, inf)."""
    def f(x):
        mu = 2 * mp.sqrt(x) / (1 + x)
        return (ellipk_real_mp(mp, mu * mu) * c * x
                / ((1 + x) * (1 + c * c * x * x) ** mp.mpf("1.5")))
    return f


def signed_kernel_4sqrt2(mp):
    """K kernel against the signed rational weight evaluating to -pi/(8 sqrt2)."""
    k = k_of_x(mp)
    s2 = mp.sqrt(2)
    s3 = mp.sqrt(3)
    def f(x):
        num = 24 - 18 * s3 + s2 * (6 * s3 - 11) * (2 * x - 1)
        den = 42 - 15 * s3 - 4 * s2 * (3 * s3 - 5) * (2 * x - 1)
        return k(x) * num / den ** mp.mpf("1.5")
    return f


def axial_integrand_of_bc(mp, theta):
    """The axial kernel at fixed theta as a function of (b, c).

    This is the pointwise object the cylindrical Laplacian annihilates.
    """
    sin_t = mp.sin(theta)
    tan_t = mp.tan(theta)
    def F(b, c):
        den2 = b * b + (c + tan_t) ** 2
        return ellipk_real_mp(mp, 4 * c * tan_t / den2) * sin_t / mp.sqrt(den2)
    return F
