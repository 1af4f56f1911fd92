import math

import numpy as np
import pytest

from gaconvex.convexity import (
    VIOLATION_TOL,
    ConvexitySpec,
    ConvexityVerdict,
    check,
    check_function,
    check_power_of_abs_deriv,
    witness_gap,
)
from gaconvex.expr import parse


def ga(alpha=1.0, m=1.0, hi=5.0, lo=1e-12, direction="convex"):
    return ConvexitySpec("ga", alpha, m, domain_hi=hi, domain_lo=lo,
                         direction=direction)


def test_log_is_multiplicatively_affine():
    # ln turns the multiplicative combination into the exact convex mix,
    # so both directions certify
    f = parse("ln(x)")
    assert check(f, ga(direction="convex")).status == "certified"
    assert check(f, ga(direction="concave")).status == "certified"
    assert check(parse("-ln(x)"), ga(direction="convex")).status == "certified"
    assert check(parse("-ln(x)"), ga(direction="concave")).status == "certified"


def test_identity_certifies_convex_but_not_concave():
    f = parse("x")
    assert check(f, ga()).status == "certified"  # geometric mean <= mix
    v = check(f, ga(direction="concave"))
    assert v.status == "violated"
    w = v.witness
    assert w is not None and w.gap > VIOLATION_TOL
    # the witness must replay exactly through the scalar evaluator
    again = witness_gap(f, ga(direction="concave"), w.x, w.y, w.lam)
    assert (again.lhs, again.rhs, again.gap) == (w.lhs, w.rhs, w.gap)


def test_negated_identity_violates():
    v = check(parse("-x"), ga())
    assert v.status == "violated"
    assert v.witness.gap > 1.0  # refinement finds a substantial gap


def test_positive_constant_fails_below_unit_m():
    # at lambda = 0 the law demands h(y^m) <= m h(y): impossible for h = 1
    v = check(parse("1"), ga(m=0.5, hi=3.0))
    assert v.status == "violated"
    w = v.witness
    assert w.lam == 0.0
    assert w.lhs == pytest.approx(1.0, abs=1e-12)
    assert w.rhs == pytest.approx(0.5, abs=1e-12)
    assert w.gap == pytest.approx(0.5, abs=1e-9)


def test_zero_function_certifies_everywhere():
    for m in [0.3, 1.0]:
        for alpha in [0.2, 1.0]:
            v = check(parse("0"), ga(alpha=alpha, m=m))
            assert v.status == "certified"
            assert v.samples_checked == 256 * 65


def test_alpha_zero_weight_convention():
    # lambda^0 = 1 even at lambda = 0, so the right side collapses onto h(x)
    assert float(np.power(0.0, 0.0)) == 1.0
    w = witness_gap(parse("x"), ga(alpha=0.0), 1.0, 2.0, 0.0)
    assert w.lhs == pytest.approx(2.0)  # combine(x, y, 0) = y^m = y
    assert w.rhs == pytest.approx(1.0)  # weight sits entirely on h(x)
    assert w.gap == pytest.approx(1.0)


def test_lambda_one_is_exact_equality():
    for src in ["exp(x)", "x^2", "1/x"]:
        w = witness_gap(parse(src), ga(), 1.7, 0.3, 1.0)
        assert w.gap == 0.0  # y^0 == 1 exactly, both sides identical


def test_ordinary_kind():
    spec = ConvexitySpec("ordinary", 1.0, 1.0, domain_hi=4.0)
    assert check(parse("x^2"), spec).status == "certified"
    assert check(parse("exp(x)"), spec).status == "certified"
    v = check(parse("sqrt(x)"), spec)
    assert v.status == "violated"
    concave = ConvexitySpec("ordinary", 1.0, 1.0, domain_hi=4.0,
                            direction="concave")
    assert check(parse("sqrt(x)"), concave).status == "certified"


def test_multiplicative_scaling_covariance():
    # with m = 1 the combination scales multiplicatively, so certifying
    # h(c * .) on domain/c is the same problem
    f = parse("exp(x)")
    base = check(f, ga(hi=2.0, lo=0.1))
    for c in [0.5, 3.0]:
        scaled = check_function(lambda v: f.eval(c * v),
                                ga(hi=2.0 / c, lo=0.1 / c))
        assert scaled.status == base.status == "certified"


def test_power_functions_certify_at_unit_parameters():
    for src in ["x", "x^2", "x^3", "1/x", "x^2.5"]:
        assert check(parse(src), ga(hi=3.0)).status == "certified", src


def test_violations_for_alpha_below_one():
    # reweighting toward h(x) breaks plain power functions once alpha < 1
    v = check(parse("x"), ga(alpha=0.5, hi=3.0, lo=0.5))
    assert v.status == "violated"
    w = v.witness
    # independent recomputation of the reported triple
    lam_a = w.lam ** 0.5
    assert w.rhs == pytest.approx(lam_a * w.x + (1.0 - lam_a) * w.y, rel=1e-12)
    assert w.lhs == pytest.approx(w.x ** w.lam * w.y ** (1.0 - w.lam), rel=1e-12)


def test_determinism():
    f = parse("x*ln(x)")
    a = check(f, ga(alpha=0.5, hi=3.0))
    b = check(f, ga(alpha=0.5, hi=3.0))
    assert a == b  # dataclass equality covers the witness fields


def test_deriv_power_checker():
    # |d/dx x^2|^2 = 4x^2 respects the multiplicative law at unit parameters
    assert check_power_of_abs_deriv(parse("x^2"), 2.0, ga(hi=3.0)).status \
        == "certified"
    # |d/dx x|^q = 1 fails for m < 1
    v = check_power_of_abs_deriv(parse("x"), 1.0, ga(m=0.5, hi=3.0))
    assert v.status == "violated"
    with pytest.raises(ValueError):
        check_power_of_abs_deriv(parse("x"), 0.5, ga())


def test_spec_validation():
    with pytest.raises(ValueError):
        ConvexitySpec("geometric", 1.0, 1.0, domain_hi=2.0)
    with pytest.raises(ValueError):
        ConvexitySpec("ga", 1.0, 1.0, domain_hi=2.0, direction="down")
    with pytest.raises(ValueError):
        ConvexitySpec("ga", 1.5, 1.0, domain_hi=2.0)
    with pytest.raises(ValueError):
        ConvexitySpec("ga", 1.0, -0.1, domain_hi=2.0)
    with pytest.raises(ValueError):
        ConvexitySpec("ga", 1.0, 1.0, domain_hi=1e-13)  # hi below default lo
    with pytest.raises(ValueError):
        ConvexitySpec("ga", 1.0, 1.0, domain_hi=math.inf)


def test_samples_validation():
    with pytest.raises(ValueError):
        check(parse("x"), ga(), samples=0)


def test_verdict_shape():
    v = check(parse("x"), ga(), samples=16, seed=3)
    assert isinstance(v, ConvexityVerdict)
    assert v.samples_checked == 16 * 65
    assert v.witness is None
