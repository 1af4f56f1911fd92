"""
Sampling certificates and violation witnesses for the multiplicative
convexity law  h(x^lam * y^(m(1-lam))) <= lam^alpha h(x) + m(1-lam^alpha) h(y)
==============================================================================
"""
from gaconvex import ConvexitySpec, check, parse, witness_gap

spec = ConvexitySpec("ga", alpha=1.0, m=1.0, domain_hi=4.0, domain_lo=0.25)

# ln is multiplicatively affine, so it certifies in both directions
for direction in ("convex", "concave"):
    s = ConvexitySpec("ga", 1.0, 1.0, domain_hi=4.0, domain_lo=0.25,
                      direction=direction)
    print("ln(x) as %-8s ->" % direction, check(parse("ln(x)"), s).status)

# power functions are GA-convex at the unit parameters
for src in ("x", "x^2", "1/x"):
    print("%-4s ->" % src, check(parse(src), spec).status)

# drop alpha below 1 and the identity function already fails
weak = ConvexitySpec("ga", alpha=0.5, m=1.0, domain_hi=4.0, domain_lo=0.25)
v = check(parse("x"), weak)
w = v.witness
print("\nx with alpha=0.5:", v.status)
print("  witness x=%.6g y=%.6g lam=%.6g gap=%.3g" % (w.x, w.y, w.lam, w.gap))

# witnesses replay exactly: same (x, y, lam) in, same gap out
again = witness_gap(parse("x"), weak, w.x, w.y, w.lam)
print("  replayed gap =", again.gap, "(identical:", again == w, ")")

# a positive constant cannot satisfy the law for m < 1 (take lam = 0)
vm = check(parse("1"), ConvexitySpec("ga", 1.0, 0.5, domain_hi=4.0))
print("\nconstant 1 with m=0.5:", vm.status,
      "at lam =", vm.witness.lam, "gap =", vm.witness.gap)
