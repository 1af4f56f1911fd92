"""Logarithmic mean and power-weighted geometric-path integrals.

geometric_path_moment computes

    integral_0^1 t^alpha * a^(ell*(1-t)) * b^(ell*t) dt

i.e. the alpha-weighted moment of the geometric interpolation from a^ell to
b^ell. Two independent routes are provided: a positive-term series (no
cancellation) and adaptive quadrature; they cross-validate each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import quad

# exp(c) factors in the series stay below overflow for c <= _SERIES_C_MAX;
# beyond that the quadrature route takes over.
_SERIES_C_MAX = 500.0
_SERIES_CUTOFF = 1e-17
_DIAGONAL_U = 1e-6


class NonConvergenceError(ArithmeticError):
    """Quadrature failed to reach the requested tolerance."""


@dataclass(frozen=True)
class MeanContext:
    """An interval 0 < a < b with cached logarithms."""

    a: float
    b: float

    def __post_init__(self):
        if not (0.0 < self.a < self.b) or not math.isfinite(self.b):
            raise ValueError("need finite 0 < a < b, got a=%r b=%r" % (self.a, self.b))

    @property
    def log_gap(self) -> float:
        # ln b - ln a, computed from the ratio to keep it accurate when b/a ~ 1
        return math.log1p((self.b - self.a) / self.a)


def log_mean(x: float, y: float) -> float:
    """(y - x)/(ln y - ln x) extended by continuity on the diagonal.

    Arguments are symmetrized first, so log_mean(x, y) == log_mean(y, x)
    exactly. Relative accuracy is a few ulp everywhere, including y ~ x.
    """
    if not (x > 0.0 and y > 0.0) or not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError("log_mean needs finite positive arguments, got %r, %r" % (x, y))
    if x == y:
        return x
    if y < x:
        x, y = y, x
    r = (y - x) / x
    if not math.isfinite(r):
        u = math.log(y) - math.log(x)
        return (y - x) / u
    u = math.log1p(r)
    if u < _DIAGONAL_U:
        u2 = u * u
        return math.sqrt(x) * math.sqrt(y) * (1.0 + u2 / 24.0 + u2 * u2 / 1920.0)
    return x * math.expm1(u) / u


def _validate_moment_args(alpha: float, ell: float):
    if not (alpha >= 0.0 and math.isfinite(alpha)):
        raise ValueError("alpha must be finite and >= 0, got %r" % (alpha,))
    if not (ell >= 0.0 and math.isfinite(ell)):
        raise ValueError("ell must be finite and >= 0, got %r" % (ell,))


def geometric_path_moment_series(alpha: float, ell: float, ctx: MeanContext) -> float:
    """Series route: a^ell * sum_k c^k / (k! (alpha+k+1)) with c = ell*(ln b - ln a).

    Every term is positive, so there is no cancellation; truncation stops once
    the latest term drops below 1e-17 of the partial sum. Requires c <= 500 to
    keep the summand comfortably inside double range.
    """
    _validate_moment_args(alpha, ell)
    c = ell * ctx.log_gap
    if c > _SERIES_C_MAX:
        raise ValueError("series route needs ell*(ln b - ln a) <= %g, got %g"
                         % (_SERIES_C_MAX, c))
    total = 1.0 / (alpha + 1.0)
    term_c = 1.0  # c^k / k!
    k = 0
    while True:
        k += 1
        term_c *= c / k
        term = term_c / (alpha + k + 1.0)
        total += term
        if term < _SERIES_CUTOFF * total:
            break
    return math.exp(ell * math.log(ctx.a)) * total


def geometric_path_moment_quad(alpha: float, ell: float, ctx: MeanContext,
                               abs_tol: float = 1e-13, rel_tol: float = 1e-12) -> float:
    """Quadrature route, independent of the series."""
    import numpy as np

    _validate_moment_args(alpha, ell)
    la, lb = math.log(ctx.a), math.log(ctx.b)

    def integrand(t):
        return np.power(t, alpha) * np.exp(ell * ((1.0 - t) * la + t * lb))

    res = quad.integrate(integrand, 0.0, 1.0, abs_tol=abs_tol, rel_tol=rel_tol)
    if not res.converged:
        raise NonConvergenceError(
            "path moment quadrature did not converge (error %g)" % res.error_estimate)
    return res.value


def geometric_path_moment(alpha: float, ell: float, ctx: MeanContext) -> float:
    """Preferred route: series when representable, quadrature beyond."""
    _validate_moment_args(alpha, ell)
    if ell * ctx.log_gap > _SERIES_C_MAX:
        return geometric_path_moment_quad(alpha, ell, ctx)
    return geometric_path_moment_series(alpha, ell, ctx)
