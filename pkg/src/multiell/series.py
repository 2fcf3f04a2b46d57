"""Clausen-type series, its termwise a-derivative, the Legendre-projection
series, and the two level-4 Ramanujan-type series with the linear
combination bridging them back to the Clausen form.

All partial sums run on ratio recurrences: one multiply per term, no
factorials.  The common coefficient is c_n = ((1/2)_n / (1)_n)^3 with
c_{n+1}/c_n = ((n + 1/2)/(n + 1))^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BridgeInconsistencyError, DomainError
from .precision import PrecisionContext


class SeriesId(str, Enum):
    CLAUSEN = "clausen"
    CLAUSEN_DA = "clausen_da"
    LEGENDRE_SUM = "legendre_sum"
    RAMANUJAN_2SQRT2 = "ramanujan_2sqrt2"
    RAMANUJAN_4SQRT2 = "ramanujan_4sqrt2"

    def __str__(self):
        return self.value


_A_DEPENDENT = {SeriesId.CLAUSEN, SeriesId.CLAUSEN_DA, SeriesId.LEGENDRE_SUM}
_RAMANUJAN = {SeriesId.RAMANUJAN_2SQRT2, SeriesId.RAMANUJAN_4SQRT2}


@dataclass(frozen=True)
class SeriesSpec:
    """A series instance: which family, the parameter (if any), term count."""

    series_id: SeriesId
    terms: int
    param_a: object = None

    def __post_init__(self):
        if self.terms < 1:
            raise DomainError(f"terms must be >= 1, got {self.terms}")
        if self.series_id in _A_DEPENDENT:
            if self.param_a is None or not abs(self.param_a) < 1:
                raise DomainError(f"{self.series_id} requires |a| < 1, got {self.param_a!r}")


def _cube_ratio(mp, n):
    r = (2 * n + 1) / mp.mpf(2 * n + 2)
    return r * r * r


def clausen_sum(a, n_terms: int, ctx: PrecisionContext):
    """1 + sum_{n=1..N} c_n (-a^2)^n for |a| < 1."""
    hi = ctx.boosted(10)
    mp = hi.mp
    a = mp.convert(a)
    if not abs(a) < 1:
        raise DomainError(f"clausen_sum requires |a| < 1, got {a}")
    z = -a * a
    term = mp.one
    acc = mp.one
    for n in range(n_terms):
        term *= z * _cube_ratio(mp, n)
        acc += term
    return ctx.reduce(acc)


def clausen_sum_da(a, n_terms: int, ctx: PrecisionContext):
    """Termwise d/da of clausen_sum: sum_{n>=1} c_n (-1)^n 2n a^(2n-1)."""
    hi = ctx.boosted(10)
    mp = hi.mp
    a = mp.convert(a)
    if not abs(a) < 1:
        raise DomainError(f"clausen_sum_da requires |a| < 1, got {a}")
    if a == 0:
        return ctx.reduce(mp.zero)  # every term carries a^(2n-1), n >= 1
    z = -a * a
    base = mp.one  # c_n (-a^2)^n, tracked by recurrence
    acc = mp.zero
    for n in range(1, n_terms + 1):
        base *= z * _cube_ratio(mp, n - 1)
        acc += base * 2 * n / a
    return ctx.reduce(acc)


def legendre_sum(a, n_terms: int, ctx: PrecisionContext):
    """(pi^2/4) [1 + sum_{n=1..N} (-1)^n c_n a^(2n)] for |a| < 1.

    The orthogonality projection of the generating function against the
    even-index expansion of the K kernel; equal to the weighted K-kernel
    integral (identity I13).
    """
    hi = ctx.boosted(10)
    mp = hi.mp
    a = mp.convert(a)
    if not abs(a) < 1:
        raise DomainError(f"legendre_sum requires |a| < 1, got {a}")
    z = -a * a
    term = mp.one
    acc = mp.one
    for n in range(n_terms):
        term *= z * _cube_ratio(mp, n)
        acc += term
    return ctx.reduce(mp.pi ** 2 / 4 * acc)


def _ramanujan_data(series_id, mp):
    """(z, A, B, target) with the series sum_{n>=0} c_n (A n + B) z^n = target."""
    if series_id == SeriesId.RAMANUJAN_2SQRT2:
        z = -mp.one / 8
        return z, mp.mpf(6), mp.one, 2 * mp.sqrt(2) / mp.pi
    if series_id == SeriesId.RAMANUJAN_4SQRT2:
        s3 = mp.sqrt(3)
        z = -(26 - 15 * s3) / 16
        return z, 30 - 6 * s3, 7 - 3 * s3, 4 * mp.sqrt(2) / mp.pi
    raise DomainError(f"not a Ramanujan-type series id: {series_id!r}")


def ramanujan_sum(series_id, n_terms: int, ctx: PrecisionContext):
    """Partial sum of the requested Ramanujan-type series through n = N."""
    hi = ctx.boosted(10)
    mp = hi.mp
    z, big_a, big_b, _ = _ramanujan_data(series_id, mp)
    base = mp.one  # c_n z^n
    acc = big_b  # n = 0 term
    for n in range(1, n_terms + 1):
        base *= z * _cube_ratio(mp, n - 1)
        acc += base * (big_a * n + big_b)
    return ctx.reduce(acc)


def ramanujan_target(series_id, ctx: PrecisionContext):
    """The closed-form value of the series (an algebraic multiple of 1/pi)."""
    hi = ctx.boosted(10)
    return ctx.reduce(_ramanujan_data(series_id, hi.mp)[3])


@dataclass(frozen=True)
class BridgeCoefficients:
    """alpha * clausen + beta * clausen_da at a_star reproduces a Ramanujan sum."""

    alpha: object
    beta: object
    a_star: object


def bridge_from_data(big_a, big_b, z, ctx: PrecisionContext, checked_terms: int = 5):
    """Solve the coefficient match alpha + (2 beta / a*) n = A n + B.

    The n-th term of alpha*clausen + beta*clausen_da at a* is
    c_n (-a*^2)^n (alpha + 2 beta n / a*), so matching against
    c_n (A n + B) z^n requires a* = sqrt(-z), and the constant and
    n-coefficients give the 2x2 system {alpha = B, 2 beta / a* = A}.
    The match is then re-verified termwise through n = checked_terms.
    """
    hi = ctx.boosted(10)
    mp = hi.mp
    z = mp.convert(z)
    big_a = mp.convert(big_a)
    big_b = mp.convert(big_b)
    if not z < 0:
        raise DomainError(f"bridge requires a negative series base, got z = {z}")
    a_star = mp.sqrt(-z)
    alpha = big_b
    beta = big_a * a_star / 2
    tol = mp.mpf(10) ** (-(ctx.digits - 8))
    for n in range(1, checked_terms + 1):
        lhs = alpha * (-a_star * a_star) ** n + beta * 2 * n * (-1) ** n * a_star ** (2 * n - 1)
        rhs = (big_a * n + big_b) * z ** n
        if abs(lhs - rhs) > tol * max(mp.one, abs(rhs)):
            raise BridgeInconsistencyError(
                f"termwise match failed at n = {n}: {mp.nstr(lhs, 20)} vs {mp.nstr(rhs, 20)}")
    return BridgeCoefficients(ctx.reduce(alpha), ctx.reduce(beta), ctx.reduce(a_star))


def linear_bridge(series_id, ctx: PrecisionContext) -> BridgeCoefficients:
    """Coefficients (alpha, beta) and point a* bridging a Ramanujan series
    to the Clausen series and its termwise a-derivative."""
    hi = ctx.boosted(10)
    z, big_a, big_b, _ = _ramanujan_data(series_id, hi.mp)
    return bridge_from_data(big_a, big_b, z, ctx)
