"""
Adaptive Gauss-Kronrod quadrature with honest error estimates
=============================================================
"""
import math

import numpy as np

from gaconvex import integrate

# smooth integrand: one 15-point panel is already exact
res = integrate(lambda x: x * x, 0.0, 2.0)
print("int x^2 on [0,2]      = %.17g  (exact 8/3 = %.17g)" % (res.value, 8 / 3))
print("  estimate %.3g, %d evaluations, converged=%s"
      % (res.error_estimate, res.evaluations, res.converged))

# the estimate stays above the true error on harder integrands
res = integrate(lambda x: np.sin(40.0 * x), 0.0, math.pi)
true = (1.0 - math.cos(40.0 * math.pi)) / 40.0
print("oscillatory: err %.3g <= estimate %.3g" % (abs(res.value - true),
                                                  res.error_estimate))

# endpoint singularity t^-0.9: integrable, but the estimator refuses to
# pretend it converged
res = integrate(lambda t: t ** -0.9, 0.0, 1.0, max_depth=12)
print("t^-0.9: value %.6g, converged=%s, estimate %.3g"
      % (res.value, res.converged, res.error_estimate))

# an interior pole is reported with the offending abscissa
try:
    with np.errstate(divide="ignore"):
        integrate(lambda t: 1.0 / (t - 0.5), 0.0, 1.0)
except Exception as exc:
    print("interior pole ->", exc)
