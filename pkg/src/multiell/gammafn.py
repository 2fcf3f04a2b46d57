"""Gamma function for positive real arguments, plus the rising factorial.

Gamma is evaluated with a Spouge-class convergent series whose order is
chosen from the context's precision; coefficients are cached per order.
Only positive real arguments are supported (every closed-form constant in
the identity catalog needs rational positive arguments only).
"""

from __future__ import annotations

import threading

from .errors import DomainError
from .precision import PrecisionContext

_GUARD = 15  # extra digits absorbing alternating-sum cancellation

_coeff_cache: dict = {}
_cache_lock = threading.Lock()


def _spouge_coefficients(mp, order: int):
    """c_0 .. c_{order-1} for the Spouge series at the given order."""
    key = (order, mp.dps)
    with _cache_lock:
        coeffs = _coeff_cache.get(key)
    if coeffs is not None:
        return coeffs
    coeffs = [mp.sqrt(2 * mp.pi)]
    fact = mp.one
    for k in range(1, order):
        ak = mp.mpf(order - k)
        c = ak ** (k - mp.mpf("0.5")) * mp.exp(ak) / fact
        coeffs.append(c if k % 2 else -c)
        fact *= k
    with _cache_lock:
        _coeff_cache[key] = coeffs
    return coeffs


def _gamma_zp1(mp, z, order: int):
    """Gamma(z+1) via the Spouge series; valid for z >= 0."""
    coeffs = _spouge_coefficients(mp, order)
    s = coeffs[0]
    for k in range(1, order):
        s += coeffs[k] / (z + k)
    za = z + order
    return za ** (z + mp.mpf("0.5")) * mp.exp(-za) * s


def gamma(x, ctx: PrecisionContext):
    """Gamma(x) for x > 0, to roughly ctx.digits relative accuracy."""
    hi = ctx.boosted(_GUARD)
    mp = hi.mp
    x = mp.convert(x)
    if not x > 0:
        raise DomainError(f"gamma requires x > 0, got {x}")
    # relative truncation ~ (2*pi)^-(order+1/2); 1.26 ~ ln(10)/ln(2*pi)
    order = int(1.26 * (ctx.digits + 8)) + 2
    if x >= 1:
        value = _gamma_zp1(mp, x - 1, order)
    else:
        value = _gamma_zp1(mp, x, order) / x
    return ctx.reduce(value)


def pochhammer(x, n: int, ctx: PrecisionContext):
    """Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1."""
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"pochhammer requires a nonnegative integer n, got {n!r}")
    mp = ctx.mp
    x = mp.convert(x)
    acc = mp.one
    for k in range(n):
        acc *= x + k
    return +acc
