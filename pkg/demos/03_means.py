"""
The logarithmic mean and the weighted geometric-path moment
===========================================================

L(x, y) = (y - x)/(ln y - ln x) sits between the geometric and arithmetic
means.  G(alpha, ell) = int_0^1 t^alpha a^(ell(1-t)) b^(ell t) dt is the
weighted moment the integral bounds are built from; it has a positive-term
series and an independent quadrature route.
"""
import math

from gaconvex import (
    MeanContext,
    geometric_path_moment_quad,
    geometric_path_moment_series,
    log_mean,
)

print("L(1, 8) * 3 ln 2 =", log_mean(1.0, 8.0) * 3.0 * math.log(2.0),
      "(exactly 7)")
print("L(1, e)          =", log_mean(1.0, math.e), "(e - 1)")

# the series branch keeps full accuracy through the near-diagonal regime
for dy in (1e-3, 1e-9, 1e-15):
    print("L(1, 1+%g) = %.17g" % (dy, log_mean(1.0, 1.0 + dy)))

ctx = MeanContext(1.0, 2.0)
print("\nalpha  series              quad                |rel diff|")
for alpha in (0.0, 0.5, 1.0, 2.0):
    s = geometric_path_moment_series(alpha, 3.0, ctx)
    q = geometric_path_moment_quad(alpha, 3.0, ctx)
    print("%-5g  %.15g  %.15g  %.2e" % (alpha, s, q, abs(s - q) / q))

# closed forms the series must reproduce
d = math.log(2.0)
print("\nG(0,3) =", geometric_path_moment_series(0.0, 3.0, ctx),
      " L(1,8) =", log_mean(1.0, 8.0))
print("G(1,3) =", geometric_path_moment_series(1.0, 3.0, ctx),
      " closed =", (8.0 - log_mean(1.0, 8.0)) / (3.0 * d))
