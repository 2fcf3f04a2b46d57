"""Legendre polynomials: recurrence evaluation, generating function,
orthogonality on (0, 1) after x -> 2x-1, and the even-index expansion of
the elliptic kernel K(2 sqrt(x(1-x))).
"""

from __future__ import annotations

from .errors import DomainError
from .precision import PrecisionContext
from .quadrature import IntegralSpec, integrate

GRAM_MAX_ORDER = 20  # cost guard


def legendre_p_mp(mp, n: int, x):
    """P_n(x) by the three-term recurrence inside context mp."""
    if n == 0:
        return mp.one
    p_prev, p_cur = mp.one, x
    for k in range(1, n):
        p_prev, p_cur = p_cur, ((2 * k + 1) * x * p_cur - k * p_prev) / (k + 1)
    return p_cur


def legendre_p(n: int, x, ctx: PrecisionContext):
    """P_n(x) for n >= 0."""
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
    hi = ctx.boosted(10)
    return ctx.reduce(legendre_p_mp(hi.mp, n, hi.mp.convert(x)))


def generating_function_check(a, x, n_terms: int, ctx: PrecisionContext):
    """|closed form - partial sum| for the Legendre generating function.

    Closed form 1/sqrt(1 - 2(2x-1)a + a^2) against sum_{n<=N} P_n(2x-1) a^n;
    the gap must decay geometrically in N since |P_n| <= 1 on [-1, 1].
    """
    hi = ctx.boosted(10)
    mp = hi.mp
    a = mp.convert(a)
    x = mp.convert(x)
    if not abs(a) < 1:
        raise DomainError(f"generating function requires |a| < 1, got {a}")
    y = 2 * x - 1
    closed = 1 / mp.sqrt(1 - 2 * y * a + a * a)
    acc = mp.zero
    p_prev, p_cur = mp.one, y
    apow = mp.one
    for n in range(n_terms + 1):
        if n == 0:
            acc += apow
        elif n == 1:
            acc += p_cur * apow
        else:
            p_prev, p_cur = p_cur, ((2 * n - 1) * y * p_cur - (n - 1) * p_prev) / n
            acc += p_cur * apow
        apow *= a
    return ctx.reduce(abs(closed - acc))


def _pair_factory(mp, n: int, m: int):
    def f(x):
        y = 2 * x - 1
        return legendre_p_mp(mp, n, y) * legendre_p_mp(mp, m, y)
    return f


def orthogonality_gram(order: int, ctx: PrecisionContext):
    """(order+1) x (order+1) matrix of integrals of P_n(2x-1) P_m(2x-1) on (0,1).

    Computed with the same double-exponential engine as every other
    integral in the package; exact values are delta_nm / (2n+1).
    """
    if not isinstance(order, int) or order < 0 or order > GRAM_MAX_ORDER:
        raise DomainError(f"order must be an integer in [0, {GRAM_MAX_ORDER}], got {order!r}")
    gram = [[None] * (order + 1) for _ in range(order + 1)]
    for n in range(order + 1):
        for m in range(n + 1):
            spec = IntegralSpec(f"legendre_pair_{n}_{m}", (n, m), (0, 1), _pair_factory)
            value = integrate(spec, ctx).value
            gram[n][m] = value
            gram[m][n] = value
    return gram


def kernel_expansion_partial_sum(x, n_terms: int, ctx: PrecisionContext):
    """Partial sum of the even-index Legendre expansion of the K kernel.

    sum_{n<=N} (-1)^n ((1/2)_n / (1)_n)^3 (4n+1) P_{2n}(2x-1), which
    converges (slowly, pointwise, away from x = 1/2) to
    4 K(2 sqrt(x(1-x))) / pi^2.
    """
    hi = ctx.boosted(10)
    mp = hi.mp
    x = mp.convert(x)
    y = 2 * x - 1
    acc = mp.one  # n = 0 term: coefficient 1, P_0 = 1
    q = mp.one    # (-1)^n ((1/2)_n/(1)_n)^3
    p_prev, p_cur = mp.one, y  # (P_{k-1}, P_k) with k as below
    k = 1
    for n in range(1, n_terms + 1):
        r = (2 * n - 1) / mp.mpf(2 * n)
        q *= -(r * r * r)
        while k < 2 * n:
            p_prev, p_cur = p_cur, ((2 * k + 1) * y * p_cur - k * p_prev) / (k + 1)
            k += 1
        acc += q * (4 * n + 1) * p_cur
    return ctx.reduce(acc)
