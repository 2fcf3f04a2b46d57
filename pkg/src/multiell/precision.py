"""Explicit-precision arithmetic contexts.

Every computation in this package is parameterized by a PrecisionContext:
a fixed decimal working precision plus the two tolerances derived from it
(the quadrature absolute-error target and the identity pass tolerance).
There is no ambient global precision; each context owns a private mpmath
context, so instances are independent and safe to use from multiple
threads.  Real values are mpmath ``mpf`` objects, complex values ``mpc``;
both carry arbitrary-precision mantissas, and rounding happens at
operation time inside whichever context performs the operation.
"""

from __future__ import annotations

from mpmath.ctx_mp import MPContext

from .errors import DomainError

MIN_DIGITS = 30


class PrecisionContext:
    """Working precision (decimal digits) and derived tolerances.

    digits      -- decimal digits carried by every operation (>= 30)
    quad_target -- absolute-error target for quadrature: 10^-(digits-10)
    pass_tol    -- identity pass tolerance: 10^-(digits-15); may be
                   overridden (CLI --tol) but then no longer tracks digits
    mp          -- the private mpmath context (pi, sqrt, exp, ... live here)
    """

    __slots__ = ("digits", "mp", "quad_target", "pass_tol", "_boosted")

    def __init__(self, digits: int = 50, pass_tol=None):
        if not isinstance(digits, int) or digits < MIN_DIGITS:
            raise DomainError(f"digits must be an integer >= {MIN_DIGITS}, got {digits!r}")
        self.digits = digits
        mp = MPContext()
        mp.dps = digits
        self.mp = mp
        self.quad_target = mp.mpf(10) ** (-(digits - 10))
        self.pass_tol = mp.mpf(pass_tol) if pass_tol is not None else mp.mpf(10) ** (-(digits - 15))
        if not self.pass_tol > self.quad_target:
            raise DomainError("pass_tol must exceed quad_target")
        self._boosted: dict[int, PrecisionContext] = {}

    def boosted(self, extra: int) -> "PrecisionContext":
        """Context with `extra` more digits, for internal guard precision."""
        ctx = self._boosted.get(extra)
        if ctx is None:
            ctx = PrecisionContext(self.digits + extra)
            self._boosted[extra] = ctx
        return ctx

    def reduce(self, value):
        """Round a value (mpf or mpc, possibly from another context) into this one."""
        return +self.mp.convert(value)

    def __repr__(self):
        return f"PrecisionContext(digits={self.digits})"


def const_pi(ctx: PrecisionContext):
    """pi, correct to ctx.digits digits."""
    return +ctx.mp.pi
