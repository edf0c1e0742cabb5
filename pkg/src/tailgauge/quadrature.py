"""Quadrature for the cdf of a Gaussian divided by a Pareto-type scale.

``Y = X / A`` with ``X`` standard normal and ``A`` on ``[0, inf)`` with
density ``alpha / (a + 1) ** (alpha + 1)``. Its cdf is

    G(x; alpha) = integral_0^inf Phi(a x) q(a; alpha) da.

Substituting ``u = (a + 1) ** -alpha`` maps the integral onto ``(0, 1]``
with unit weight, so truncating ``a`` at ``a* = abs_tol ** (-1/alpha) - 1``
is the same as dropping ``u < abs_tol``. The dropped sliver is added back
at the limiting value of ``Phi(a x)`` as ``a -> inf``.

With ``shifted=True`` the divisor is ``A + 1``, a Pareto(alpha) variable on
``[1, inf)``; the integrand becomes ``Phi((a + 1) x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate, special

from .errors import NumericalError, SpecError


@dataclass(frozen=True)
class QuadratureSettings:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise SpecError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise SpecError("max_subdivisions must be >= 1")


DEFAULT_SETTINGS = QuadratureSettings()


def truncation_point(alpha: float, abs_tol: float) -> float:
    """Upper integration limit ``a*`` with ``P{A > a*} = abs_tol``."""
    return abs_tol ** (-1.0 / alpha) - 1.0


def quotient_cdf(alpha: float, x: float, settings: QuadratureSettings = DEFAULT_SETTINGS,
                 shifted: bool = False) -> float:
    """Evaluate ``P{X / A <= x}`` (or ``P{X / (A + 1) <= x}``) by adaptive quadrature."""
    if not alpha > 2:
        raise SpecError(f"quotient law needs alpha > 2, got {alpha}")
    x = float(x)
    if x == 0.0:
        return 0.5
    if math.isinf(x):
        return 1.0 if x > 0 else 0.0
    inv_alpha = 1.0 / alpha
    offset = 0.0 if shifted else 1.0

    def integrand(u: float) -> float:
        return special.ndtr(x * (u ** -inv_alpha - offset))

    lo = settings.abs_tol
    out = integrate.quad(
        integrand, lo, 1.0,
        epsabs=settings.abs_tol, epsrel=settings.rel_tol,
        limit=settings.max_subdivisions, full_output=1,
    )
    if len(out) > 3:
        raise NumericalError(f"quotient_cdf(alpha={alpha}, x={x}) did not converge: {out[3]}")
    value = out[0] + (lo if x > 0 else 0.0)
    return min(1.0, max(0.0, value))
