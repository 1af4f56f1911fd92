"""
Expression parsing and dual-number derivatives
==============================================
"""
import numpy as np

from gaconvex import parse

# the grammar covers +, -, *, /, ^ with the usual precedence, plus a
# small set of named functions
f = parse("x*ln(x) - sqrt(x)/2")
print("parsed:", f)

# eval broadcasts over arrays
xs = np.linspace(0.5, 4.0, 8)
print("f(xs) =", f.eval(xs))

# eval_dual carries the derivative along for free
d = f.eval_dual(2.0)
print("f(2)  = %.15g" % d.value)
print("f'(2) = %.15g   (exact: ln 2 + 1 - 1/(4 sqrt 2))" % d.deriv)
print("exact = %.15g" % (np.log(2.0) + 1.0 - 1.0 / (4.0 * np.sqrt(2.0))))

# integer exponents work on negative bases; fractional ones refuse them
g = parse("x^3 - x^-2")
print("g(-2) =", g.eval(-2.0))

try:
    parse("x^0.5").eval(-1.0)
except Exception as exc:
    print("x^0.5 at -1 ->", exc)

# syntax errors carry the offset of the failure
try:
    parse("ln x")
except Exception as exc:
    print("'ln x' ->", exc)
