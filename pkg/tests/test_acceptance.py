"""Acceptance gate: one test per criterion, pass/fail lines via -rA.

Each criterion states its own tolerance and runtime budget; the budgets are
asserted so a regression in speed fails loudly rather than silently.
"""
import math
import time

import numpy as np
import pytest

from gaconvex import bounds, convexity, means
from gaconvex.bounds import ParamPoint
from gaconvex.convexity import ConvexitySpec, check, witness_gap
from gaconvex.expr import parse
from gaconvex.means import (
    MeanContext,
    geometric_path_moment,
    geometric_path_moment_quad,
    geometric_path_moment_series,
    log_mean,
)

CATALOG = ("1", "x", "x^2", "x^3", "ln(x)", "exp(x)", "x*ln(x)", "1/x")
INTERVALS = ((1.0, 2.0), (0.5, 3.0), (1.0, 1.01), (0.01, 10.0))

# restatements with a known regime restriction or prefactor deviation; their
# failures are genuine inequality violations, everything else must hold
DEFECT_IDS = {"cor31_3a", "cor31_3b", "cor35_3", "cor37"}


def test_criterion_1_identity_residual_catalog():
    start = time.perf_counter()
    for src in CATALOG:
        f = parse(src)
        for a, b in INTERVALS:
            pt = ParamPoint(alpha=1.0, m=1.0, q=1.0, a=a, b=b)
            lhs, el = bounds.signed_identity_lhs(f, pt)
            rhs, er = bounds.identity_rhs(f, pt)
            assert abs(lhs - rhs) <= max(1e-8, 10.0 * (el + er)), (src, a, b)
    assert time.perf_counter() - start < 5.0


def test_criterion_2_moment_dual_route_and_closed_forms():
    start = time.perf_counter()
    contexts = [MeanContext(1.0, 2.0), MeanContext(0.5, 3.0),
                MeanContext(1.0, 1.01), MeanContext(2.0, 5.0)]
    checked = 0
    worst = 0.0
    for ctx in contexts:
        for alpha in np.linspace(0.0, 2.0, 21):
            for ell in (0.5, 1.0, 1.5, 3.0, 4.5, 6.0):
                s = geometric_path_moment_series(float(alpha), ell, ctx)
                qd = geometric_path_moment_quad(float(alpha), ell, ctx)
                rel = abs(s - qd) / qd
                worst = max(worst, rel)
                assert rel <= 1e-9, (ctx, alpha, ell, rel)
                checked += 1
    assert checked >= 500

    # first-moment closed form (b^l - L(a^l, b^l)) / (l (ln b - ln a)),
    # exercised at l = 3, 3q, 3p for q = 2, p = 0.5
    for ctx in contexts:
        d = math.log(ctx.b) - math.log(ctx.a)
        for ell in (3.0, 6.0, 1.5):
            closed = (ctx.b ** ell - log_mean(ctx.a ** ell, ctx.b ** ell)) \
                / (ell * d)
            got = geometric_path_moment(1.0, ell, ctx)
            assert got == pytest.approx(closed, rel=1e-10), (ctx, ell)
    assert time.perf_counter() - start < 10.0


def test_criterion_3_equality_witness_seven_sixths():
    start = time.perf_counter()
    f = parse("x")
    pt = ParamPoint(alpha=1.0, m=1.0, q=1.0, a=1.0, b=2.0)
    reps = {r.theorem_id: r
            for r in bounds.verify(f, None, pt,
                                   theorems=["thm31", "cor31_3b"])}
    want = 7.0 / 6.0
    assert reps["thm31"].lhs == pytest.approx(want, rel=1e-10)
    assert reps["thm31"].rhs == pytest.approx(want, rel=1e-10)
    assert reps["cor31_3b"].rhs == pytest.approx(want, rel=1e-10)
    assert reps["thm31"].holds is True and reps["cor31_3b"].holds is True
    assert time.perf_counter() - start < 1.0


def _premise_b_side_dominates(f, pt) -> bool:
    aq = abs(float(f.eval_dual(pt.a_root).deriv)) ** pt.q
    bq = abs(float(f.eval_dual(pt.b).deriv)) ** pt.q
    return bq >= pt.m * aq


def test_criterion_4_soundness_sweep():
    start = time.perf_counter()
    alphas = [round(0.1 * k, 2) for k in range(1, 11)]
    ms = [0.1, 0.4, 0.7, 1.0]
    qs = [1.0, 1.5, 2.0, 4.0]
    points = []
    for a, b in [(1.0, 2.0), (0.5, 3.0)]:
        for alpha in alphas:
            for m in ms:
                for q in qs:
                    for p in [None] + [v for v in (0.5, 1.0) if v < q]:
                        points.append(ParamPoint(alpha=alpha, m=m, q=q,
                                                 a=a, b=b, p=p))
    assert len(points) >= 500

    cache: dict = {}
    rows = certified = defect_failures = 0
    for src in CATALOG:
        f = parse(src)
        for pt in points:
            for rep in bounds.verify(f, None, pt, hyp_cache=cache):
                rows += 1
                if rep.hypothesis is not None \
                        and rep.hypothesis.status == "certified":
                    certified += 1
                if rep.holds is False:
                    # genuine violations happen only in the restatements
                    # whose b-side-dominance premise fails here
                    assert rep.theorem_id in ("cor31_3a", "cor31_3b"), \
                        (src, pt, rep)
                    assert not _premise_b_side_dominates(f, pt), (src, pt)
                    defect_failures += 1
                elif rep.theorem_id == "lemma21":
                    assert rep.holds is True, (src, pt, rep)

    # the product family, swept over nonnegative pairs
    pairs = [("x", "exp(x)"), ("exp(x)", "exp(x)"), ("1/x", "x"),
             ("-ln(x)+2", "-ln(x)+2")]
    for fs, gs in pairs:
        f, g = parse(fs), parse(gs)
        for a, b in [(1.0, 2.0), (0.5, 3.0)]:
            for alpha in (0.5, 1.0):
                for m in (0.5, 1.0):
                    for q in (1.0, 2.0):
                        pt = ParamPoint(alpha=alpha, m=m, q=q, a=a, b=b)
                        for rep in bounds.verify(f, g, pt, hyp_cache=cache):
                            rows += 1
                            if rep.holds is False:
                                assert rep.theorem_id in DEFECT_IDS, (fs, gs,
                                                                      pt, rep)
                                defect_failures += 1

    elapsed = time.perf_counter() - start
    print("soundness sweep: %d points, %d rows, %d certified, %d genuine "
          "restatement failures, %.1fs" % (len(points), rows, certified,
                                           defect_failures, elapsed))
    assert certified >= 500
    assert elapsed < 60.0


def test_criterion_5_convexity_checker_fixtures():
    start = time.perf_counter()

    def spec(alpha=1.0, m=1.0, direction="convex"):
        return ConvexitySpec("ga", alpha, m, domain_hi=2.0, domain_lo=1.0,
                             direction=direction)

    assert check(parse("x"), spec(), 256, 42).status == "certified"

    v = check(parse("-x"), spec(), 256, 42)
    assert v.status == "violated"
    w = v.witness
    assert witness_gap(parse("-x"), spec(), w.x, w.y, w.lam) == w  # replayable
    assert w.gap > convexity.VIOLATION_TOL

    v2 = check(parse("1"), spec(m=0.5), 256, 42)
    assert v2.status == "violated"
    assert v2.witness.lam == 0.0
    assert v2.witness.gap == pytest.approx(0.5, abs=1e-12)

    for direction in ("convex", "concave"):
        assert check(parse("-ln(x)"), spec(direction=direction),
                     256, 42).status == "certified"

    # deterministic: identical verdicts on every rerun under the same seed
    assert check(parse("-x"), spec(), 256, 42) == v
    assert time.perf_counter() - start < 5.0


def test_criterion_6_log_mean_sandwich():
    start = time.perf_counter()
    rng = np.random.default_rng(42)
    xs = 10.0 ** rng.uniform(-5.0, 5.0, size=8000)
    ys = 10.0 ** rng.uniform(-5.0, 5.0, size=8000)
    # plus pairs inside the series branch, |ln(y/x)| < 1e-6
    xn = 10.0 ** rng.uniform(-5.0, 5.0, size=2000)
    yn = xn * np.exp(rng.uniform(-9.9e-7, 9.9e-7, size=2000))
    slack = 1e-13
    for x, y in zip(np.concatenate([xs, xn]), np.concatenate([ys, yn])):
        lm = log_mean(float(x), float(y))
        gm = math.sqrt(x) * math.sqrt(y)
        am = 0.5 * (x + y)
        assert lm >= gm * (1.0 - slack)
        assert lm <= am * (1.0 + slack)
    assert time.perf_counter() - start < 2.0


def test_criterion_7_specialization_identities_and_reports(capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(7)
    fs = [parse(s) for s in ("x", "x^2", "exp(x)", "x*ln(x)", "1/x",
                             "sqrt(x)")]
    for i in range(50):
        q = 1.0 + float(rng.uniform(0.05, 3.0))
        m = float(rng.uniform(0.1, 1.0))
        a = float(rng.uniform(0.2, 1.5))
        b = a * (1.0 + float(rng.uniform(0.05, 2.5)))
        p = q * float(rng.uniform(0.15, 0.85))
        f = fs[i % len(fs)]
        pt = ParamPoint(alpha=1.0, m=m, q=q, a=a, b=b, p=p)
        for restated, parent in [(bounds.rhs_cor31_2, bounds.rhs_thm31),
                                 (bounds.rhs_cor33, bounds.rhs_thm33),
                                 (bounds.rhs_cor34, bounds.rhs_thm34)]:
            x, y = restated(f, pt), parent(f, pt)
            assert abs(x - y) <= 1e-10 * abs(y), (restated.__name__, i)

    # the two cross-check discrepancies stay reported, never asserted equal
    f, g = parse("x"), parse("exp(x)")
    for a, b in [(1.0, 2.0), (0.5, 3.0)]:
        pt = ParamPoint(alpha=1.0, m=1.0, q=2.0, a=a, b=b)
        r1 = bounds.rhs_cor35_3(f, g, pt) / bounds.rhs_thm35(f, g, pt)
        r2 = bounds.rhs_cor36(f, g, pt) / bounds.rhs_thm36(f, g, pt)
        r3 = bounds.rhs_cor37(f, g, pt) / bounds.rhs_thm37(f, g, pt)
        print("report (a=%g b=%g): cor35_3/thm35 = %.12g, cor36/thm36 = "
              "%.12g, cor37/thm37 = %.12g" % (a, b, r1, r2, r3))
        assert math.isfinite(r1) and math.isfinite(r2) and math.isfinite(r3)
    assert time.perf_counter() - start < 5.0


def test_criterion_8_derivative_against_finite_differences():
    start = time.perf_counter()
    corpus = CATALOG + ("sqrt(x)", "sin(x)", "cos(x)", "x^2.5", "x^-2",
                        "abs(x-1)+x", "exp(-x)*sin(x)", "ln(x)/x",
                        "x^3-2*x+1", "exp(x^2/10)")
    for src in corpus:
        f = parse(src)
        for x in (0.3, 0.7, 1.3, 2.1, 3.7):
            d = float(f.eval_dual(x).deriv)
            h = 1e-5 * max(1.0, abs(x))
            fd = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h)
            assert abs(d - fd) <= 1e-6 * (1.0 + abs(d)), (src, x)
    assert time.perf_counter() - start < 2.0
