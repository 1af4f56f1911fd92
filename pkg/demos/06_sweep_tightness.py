"""
Sweeping parameter grids and ranking bound tightness
====================================================

The same machinery the CLI exposes, driven as a library.  Sweeps share one
hypothesis cache so each (function, q, m, domain) certification runs once.
"""
from gaconvex import ParamPoint, parse, verify

f = parse("x*ln(x)")
cache = {}

print("margin of thm31 as alpha varies (m = 1, q = 1, a = 1, b = 2):")
for k in range(11):
    alpha = 0.5 + 0.05 * k
    pt = ParamPoint(alpha=alpha, m=1.0, q=1.0, a=1.0, b=2.0)
    rep = verify(f, None, pt, theorems=["thm31"], hyp_cache=cache)[0]
    bar = "#" * int(rep.margin * 400)
    print("  alpha=%.2f  margin=%8.5f %s" % (alpha, rep.margin, bar))

# smaller alpha weights the larger endpoint derivative more heavily, so the
# bound loosens monotonically as alpha drops

print("\ntightness ranking at alpha=1, q=2, p=1:")
pt = ParamPoint(alpha=1.0, m=1.0, q=2.0, a=1.0, b=2.0, p=1.0)
reps = [r for r in verify(f, None, pt, hyp_cache=cache)
        if r.theorem_id != "lemma21" and r.holds is not None]
reps.sort(key=lambda r: (r.rhs, r.theorem_id))
lhs = reps[0].lhs
print("  lhs = %.10g" % lhs)
for i, rep in enumerate(reps, start=1):
    print("  %d. %-9s rhs = %.10g  (slack %.3g)"
          % (i, rep.theorem_id, rep.rhs, rep.rhs - lhs))
