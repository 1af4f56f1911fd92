"""Evaluate both sides of logarithmic-mean integral bounds and compare them.

Single-function family (ids lemma21, thm31 .. cor34): for differentiable f on
[a, b] with 0 < a < b, the quantity

    lhs = | (b^2 f(b) - a^2 f(a)) / 2  -  integral_a^b x f(x) dx |

is bounded above by closed-form expressions in log_mean values, the
geometric-path moments and |f'| at b and a^(1/m), provided |f'|^q satisfies
the multiplicative convexity law with parameters (alpha, m). lemma21 is the
underlying exact identity (signed, two-sided residual check).

Product family (ids thm35 .. cor37): integral_a^b f g dx is bounded above
(below, for the concave ids thm37/cor37) in terms of f, g at b and a^(1/m_i).

Every id is evaluated verbatim as printed in its source formula. Some of the
relaxed corollary forms are not universally valid (see README); they are
reported honestly, never patched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from . import convexity, means, quad
from .convexity import ConvexitySpec, ConvexityVerdict, Witness
from .expr import Expression

THEOREM_IDS = (
    "lemma21",
    "thm31", "cor31_1", "cor31_2", "cor31_3a", "cor31_3b",
    "thm32", "cor32",
    "thm33", "cor33",
    "thm34", "cor34",
    "thm35", "cor35_1", "cor35_2", "cor35_3",
    "thm36", "cor36",
    "thm37", "cor37",
)
SINGLE_FUNCTION_IDS = THEOREM_IDS[:12]
PRODUCT_IDS = THEOREM_IDS[12:]
LOWER_BOUND_IDS = ("thm37", "cor37")

DOMAIN_EPS = 1e-12
DEFAULT_TOL = 1e-8
_LOG_MAX = math.log(np.finfo(float).max)


class ParamError(ValueError):
    """Invalid parameter point or theorem selection."""


class NegativityError(ValueError):
    def __init__(self, which: str, x: float, value: float):
        self.which = which
        self.x = x
        self.value = value
        super().__init__("%s must be non-negative on the needed domain; "
                         "found %s(%g) = %g" % (which, which, x, value))


def _root_via_log(a: float, m: float, what: str) -> float:
    t = math.log(a) / m
    if t > _LOG_MAX:
        raise ParamError("%s = a^(1/m) overflows (a=%r, m=%r)" % (what, a, m))
    r = math.exp(t)
    if r == 0.0:
        raise ParamError("%s = a^(1/m) underflows to zero (a=%r, m=%r)" % (what, a, m))
    return r


@dataclass(frozen=True)
class ParamPoint:
    alpha: float
    m: float
    q: float
    a: float
    b: float
    p: Optional[float] = None
    alpha2: Optional[float] = None
    m2: Optional[float] = None

    def __post_init__(self):
        vals = [self.alpha, self.m, self.q, self.a, self.b]
        if any(not math.isfinite(v) for v in vals):
            raise ParamError("parameters must be finite")
        if not (0.0 < self.a < self.b):
            raise ParamError("need 0 < a < b, got a=%r b=%r" % (self.a, self.b))
        if not (0.0 < self.alpha <= 1.0 and 0.0 < self.m <= 1.0):
            raise ParamError("(alpha, m) must lie in (0,1]^2")
        if not self.q >= 1.0:
            raise ParamError("q must be >= 1, got %r" % (self.q,))
        if self.p is not None and not (0.0 < self.p < self.q):
            raise ParamError("p must satisfy 0 < p < q, got p=%r q=%r"
                             % (self.p, self.q))
        for name, v in (("alpha2", self.alpha2), ("m2", self.m2)):
            if v is not None and not (0.0 < v <= 1.0 and math.isfinite(v)):
                raise ParamError("%s must lie in (0,1], got %r" % (name, v))
        _root_via_log(self.a, self.m, "a^(1/m)")
        if self.m2 is not None:
            _root_via_log(self.a, self.m2, "a^(1/m2)")

    @property
    def a_root(self) -> float:
        return _root_via_log(self.a, self.m, "a^(1/m)")

    @property
    def a_root2(self) -> float:
        return _root_via_log(self.a, self.m2 if self.m2 is not None else self.m,
                             "a^(1/m2)")

    @property
    def alpha_2(self) -> float:
        return self.alpha2 if self.alpha2 is not None else self.alpha

    @property
    def m_2(self) -> float:
        return self.m2 if self.m2 is not None else self.m

    def all_ones(self) -> bool:
        return self.alpha == 1.0 and self.m == 1.0 \
            and self.alpha_2 == 1.0 and self.m_2 == 1.0


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    lhs: float
    rhs: float
    margin: float  # rhs - lhs, for every id
    hypothesis: Optional[ConvexityVerdict]
    holds: Optional[bool]  # None: hypothesis violated, bound not applicable
    quad_error: float


# ---------------------------------------------------------------------------
# Shared pieces

def _ctx(pt: ParamPoint) -> means.MeanContext:
    return means.MeanContext(pt.a, pt.b)


def _gap(pt: ParamPoint) -> float:
    return _ctx(pt).log_gap


def _pow_ell(v: float, ell: float) -> float:
    return math.exp(ell * math.log(v))


def _lmean_ell(pt: ParamPoint, ell: float) -> float:
    return means.log_mean(_pow_ell(pt.a, ell), _pow_ell(pt.b, ell))


def _moment(pt: ParamPoint, alpha: float, ell: float) -> float:
    return means.geometric_path_moment(alpha, ell, _ctx(pt))


def _conj_factor(base: float, q: float) -> float:
    # base^(1 - 1/q); the exponent is exactly 0 at q = 1, so skip the factor
    if q == 1.0:
        return 1.0
    if base < 0.0:
        return math.nan
    return base ** (1.0 - 1.0 / q)


def _root_q(v: float, q: float) -> float:
    if q == 1.0:
        return v
    if v < 0.0:
        return math.nan  # the printed bound is undefined here
    return v ** (1.0 / q)


def _abs_deriv_pow(f: Expression, x: float, q: float) -> float:
    return float(np.power(np.abs(f.eval_dual(x).deriv), q))


def signed_identity_lhs(f: Expression, pt: ParamPoint):
    """(b^2 f(b) - a^2 f(a))/2 - integral_a^b x f(x) dx, with quadrature error."""
    a, b = pt.a, pt.b
    boundary = (b * b * float(f.eval(b)) - a * a * float(f.eval(a))) / 2.0
    res = quad.integrate(lambda x: x * f.eval(x), a, b)
    return boundary - res.value, res.error_estimate


def lhs_main(f: Expression, pt: ParamPoint):
    v, e = signed_identity_lhs(f, pt)
    return abs(v), e


def identity_rhs(f: Expression, pt: ParamPoint):
    """Weighted image integral of f' along the geometric path from a to b."""
    la, lb = math.log(pt.a), math.log(pt.b)

    def integrand(t):
        e = (1.0 - t) * la + t * lb
        return np.exp(3.0 * e) * f.eval_dual(np.exp(e)).deriv

    res = quad.integrate(integrand, 0.0, 1.0)
    return (_gap(pt) / 2.0) * res.value, abs(_gap(pt) / 2.0) * res.error_estimate


def product_lhs(f: Expression, g: Expression, pt: ParamPoint):
    res = quad.integrate(lambda x: f.eval(x) * g.eval(x), pt.a, pt.b)
    return res.value, res.error_estimate


# ---------------------------------------------------------------------------
# Right-hand sides, single-function family

def rhs_thm31(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    l3 = _lmean_ell(pt, 3.0)
    g3 = _moment(pt, pt.alpha, 3.0)
    brace = pt.m * (l3 - g3) * aq + g3 * bq
    return (_gap(pt) / 2.0) * _conj_factor(l3, pt.q) * _root_q(brace, pt.q)


def rhs_cor31_1(f: Expression, pt: ParamPoint) -> float:
    # q = 1 case of thm31; identical formula once the conjugate factor drops
    return rhs_thm31(f, pt)


def rhs_cor31_2(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    a3, b3 = pt.a ** 3, pt.b ** 3
    l3 = _lmean_ell(pt, 3.0)
    brace = pt.m * (l3 - a3) * aq + (b3 - l3) * bq
    return _conj_factor(b3 - a3, pt.q) / 6.0 * _root_q(brace, pt.q)


def rhs_cor31_3a(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    l3 = _lmean_ell(pt, 3.0)
    brace = pt.m * ((pt.alpha + 1.0) * l3 - pt.b ** 3) * aq + pt.b ** 3 * bq
    return (_gap(pt) / 2.0) * _conj_factor(l3, pt.q) \
        * _root_q(brace / (pt.alpha + 1.0), pt.q)


def rhs_cor31_3b(f: Expression, pt: ParamPoint) -> float:
    return (_gap(pt) / 2.0) * _lmean_ell(pt, 3.0) \
        * float(np.abs(f.eval_dual(pt.b).deriv))


def rhs_thm32(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    tau = 3.0 * pt.q / (pt.q - 1.0)
    return (_gap(pt) / 2.0) * (1.0 / (pt.alpha + 1.0)) ** (1.0 / pt.q) \
        * _conj_factor(_lmean_ell(pt, tau), pt.q) \
        * _root_q(bq + pt.alpha * pt.m * aq, pt.q)


def rhs_cor32(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    tau = 3.0 * pt.q / (pt.q - 1.0)
    return _gap(pt) / 2.0 ** (1.0 + 1.0 / pt.q) \
        * _conj_factor(_lmean_ell(pt, tau), pt.q) * _root_q(bq + pt.m * aq, pt.q)


def rhs_thm33(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    l3q = _lmean_ell(pt, 3.0 * pt.q)
    g3q = _moment(pt, pt.alpha, 3.0 * pt.q)
    brace = pt.m * (l3q - g3q) * aq + g3q * bq
    return (_gap(pt) / 2.0) * _root_q(brace, pt.q)


def rhs_cor33(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    a3q, b3q = _pow_ell(pt.a, 3.0 * pt.q), _pow_ell(pt.b, 3.0 * pt.q)
    l3q = _lmean_ell(pt, 3.0 * pt.q)
    brace = pt.m * (l3q - a3q) * aq + (b3q - l3q) * bq
    return _conj_factor(_gap(pt), pt.q) / 2.0 \
        * (1.0 / (3.0 * pt.q)) ** (1.0 / pt.q) * _root_q(brace, pt.q)


def rhs_thm34(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    tau = 3.0 * (pt.q - pt.p) / (pt.q - 1.0)
    l3p = _lmean_ell(pt, 3.0 * pt.p)
    g3p = _moment(pt, pt.alpha, 3.0 * pt.p)
    brace = pt.m * (l3p - g3p) * aq + g3p * bq
    return (_gap(pt) / 2.0) * _conj_factor(_lmean_ell(pt, tau), pt.q) \
        * _root_q(brace, pt.q)


def rhs_cor34(f: Expression, pt: ParamPoint) -> float:
    aq = _abs_deriv_pow(f, pt.a_root, pt.q)
    bq = _abs_deriv_pow(f, pt.b, pt.q)
    tau = 3.0 * (pt.q - pt.p) / (pt.q - 1.0)
    a3p, b3p = _pow_ell(pt.a, 3.0 * pt.p), _pow_ell(pt.b, 3.0 * pt.p)
    l3p = _lmean_ell(pt, 3.0 * pt.p)
    brace = pt.m * (l3p - a3p) * aq + (b3p - l3p) * bq
    return _conj_factor(_gap(pt), pt.q) / 2.0 \
        * (1.0 / (3.0 * pt.p)) ** (1.0 / pt.q) \
        * _conj_factor(_lmean_ell(pt, tau), pt.q) * _root_q(brace, pt.q)


# ---------------------------------------------------------------------------
# Right-hand sides, product family

def _pow_q(v: float, q: float) -> float:
    # negative base with fractional exponent yields nan, reported as-is
    with np.errstate(invalid="ignore"):
        return float(np.power(v, q))


def _product_corners(f: Expression, g: Expression, pt: ParamPoint,
                     qf: float, qg: float):
    fa = _pow_q(float(f.eval(pt.a_root)), qf)
    fb = _pow_q(float(f.eval(pt.b)), qf)
    ga = _pow_q(float(g.eval(pt.a_root2)), qg)
    gb = _pow_q(float(g.eval(pt.b)), qg)
    return fa, fb, ga, gb


def rhs_thm35(f: Expression, g: Expression, pt: ParamPoint) -> float:
    fa, fb, ga, gb = _product_corners(f, g, pt, pt.q, pt.q)
    m1, m2 = pt.m, pt.m_2
    l1 = means.log_mean(pt.a, pt.b)
    g1 = _moment(pt, pt.alpha, 1.0)
    g2 = _moment(pt, pt.alpha_2, 1.0)
    g12 = _moment(pt, pt.alpha + pt.alpha_2, 1.0)
    brace = m1 * m2 * (l1 - g1 - g2 + g12) * fa * ga \
        + m1 * (g2 - g12) * fa * gb \
        + m2 * (g1 - g12) * fb * ga \
        + g12 * fb * gb
    return _gap(pt) * _conj_factor(l1, pt.q) * _root_q(brace, pt.q)


def rhs_cor35_1(f: Expression, g: Expression, pt: ParamPoint) -> float:
    # q = 1 case of thm35 (the conjugate factor drops)
    return rhs_thm35(f, g, pt)


def _all_ones_brace(f: Expression, g: Expression, pt: ParamPoint, q: float) -> float:
    fa, fb = _pow_q(float(f.eval(pt.a)), q), _pow_q(float(f.eval(pt.b)), q)
    ga, gb = _pow_q(float(g.eval(pt.a)), q), _pow_q(float(g.eval(pt.b)), q)
    a, b = pt.a, pt.b
    d = _gap(pt)
    l1 = means.log_mean(a, b)
    return (2.0 * l1 - a * d - 2.0 * a) * fa * ga \
        + (a + b - 2.0 * l1) * (fa * gb + fb * ga) \
        + (2.0 * l1 + b * d - 2.0 * b) * fb * gb


def rhs_cor35_2(f: Expression, g: Expression, pt: ParamPoint) -> float:
    return _all_ones_brace(f, g, pt, 1.0) / _gap(pt)


def rhs_cor35_3(f: Expression, g: Expression, pt: ParamPoint) -> float:
    # evaluated verbatim as printed; see README for its known prefactor defect
    l1 = means.log_mean(pt.a, pt.b)
    pref = _conj_factor(l1, pt.q) / _gap(pt) ** (2.0 / (pt.q - 1.0))
    return pref * _root_q(_all_ones_brace(f, g, pt, pt.q), pt.q)


def rhs_thm36(f: Expression, g: Expression, pt: ParamPoint) -> float:
    r = pt.q / (pt.q - 1.0)
    fa, fb, ga, gb = _product_corners(f, g, pt, pt.q, r)
    m1, m2 = pt.m, pt.m_2
    l1 = means.log_mean(pt.a, pt.b)
    bf = m1 * fa * l1 + _moment(pt, pt.alpha, 1.0) * (fb - m1 * fa)
    bg = m2 * ga * l1 + _moment(pt, pt.alpha_2, 1.0) * (gb - m2 * ga)
    return _gap(pt) * _root_q(bf, pt.q) * _conj_factor(bg, pt.q)


def rhs_cor36(f: Expression, g: Expression, pt: ParamPoint) -> float:
    r = pt.q / (pt.q - 1.0)
    fa, fb = _pow_q(float(f.eval(pt.a)), pt.q), _pow_q(float(f.eval(pt.b)), pt.q)
    ga, gb = _pow_q(float(g.eval(pt.a)), r), _pow_q(float(g.eval(pt.b)), r)
    l1 = means.log_mean(pt.a, pt.b)
    bf = fa * (l1 - pt.a) + (pt.b - l1) * fb
    bg = ga * (l1 - pt.a) + (pt.b - l1) * gb
    return _root_q(bf, pt.q) * _conj_factor(bg, pt.q)


def rhs_thm37(f: Expression, g: Expression, pt: ParamPoint) -> float:
    fa, fb, ga, gb = _product_corners(f, g, pt, 1.0, 1.0)
    m1, m2 = pt.m, pt.m_2
    l1 = means.log_mean(pt.a, pt.b)
    g1 = _moment(pt, pt.alpha, 1.0)
    g2 = _moment(pt, pt.alpha_2, 1.0)
    g12 = _moment(pt, pt.alpha + pt.alpha_2, 1.0)
    brace = m1 * m2 * (l1 - g1 - g2 + g12) * fa * ga \
        + m1 * (g2 - g12) * fa * gb \
        + m2 * (g1 - g12) * fb * ga \
        + g12 * fb * gb
    return _gap(pt) * brace


def rhs_cor37(f: Expression, g: Expression, pt: ParamPoint) -> float:
    # verbatim printed form; see README for its known prefactor defect
    return _gap(pt) * _all_ones_brace(f, g, pt, 1.0)


_SINGLE_RHS = {
    "thm31": rhs_thm31, "cor31_1": rhs_cor31_1, "cor31_2": rhs_cor31_2,
    "cor31_3a": rhs_cor31_3a, "cor31_3b": rhs_cor31_3b,
    "thm32": rhs_thm32, "cor32": rhs_cor32,
    "thm33": rhs_thm33, "cor33": rhs_cor33,
    "thm34": rhs_thm34, "cor34": rhs_cor34,
}
_PRODUCT_RHS = {
    "thm35": rhs_thm35, "cor35_1": rhs_cor35_1, "cor35_2": rhs_cor35_2,
    "cor35_3": rhs_cor35_3,
    "thm36": rhs_thm36, "cor36": rhs_cor36,
    "thm37": rhs_thm37, "cor37": rhs_cor37,
}


# ---------------------------------------------------------------------------
# Applicability and hypothesis certification

def _applicable(tid: str, pt: ParamPoint, has_g: bool) -> bool:
    if tid in PRODUCT_IDS and not has_g:
        return False
    if tid in ("thm32", "cor32", "thm33", "cor33", "thm36", "cor36", "cor35_3") \
            and not pt.q > 1.0:
        return False
    if tid in ("thm34", "cor34") and (pt.p is None or not pt.q > 1.0):
        return False
    if tid in ("cor31_1", "cor35_1", "cor35_2") and pt.q != 1.0:
        return False
    if tid in ("cor31_2", "cor32", "cor33", "cor34") and pt.alpha != 1.0:
        return False
    if tid in ("cor35_2", "cor35_3", "cor36", "cor37") and not pt.all_ones():
        return False
    return True


def expand_theorems(theorems: Union[str, Iterable[str]], pt: ParamPoint,
                    has_g: bool) -> tuple:
    """Resolve a theorem selection against a parameter point.

    "all" silently restricts to the applicable ids; naming an inapplicable or
    unknown id explicitly is an error.
    """
    if isinstance(theorems, str):
        if theorems == "all":
            return tuple(t for t in THEOREM_IDS if _applicable(t, pt, has_g))
        requested = [s.strip() for s in theorems.split(",") if s.strip()]
    else:
        requested = list(theorems)
    if not requested:
        raise ParamError("empty theorem selection")
    for tid in requested:
        if tid not in THEOREM_IDS:
            raise ParamError("unknown theorem id %r" % (tid,))
        if not _applicable(tid, pt, has_g):
            raise ParamError("theorem %s is not applicable at this parameter "
                             "point (check q, p, alpha/m and whether g is "
                             "required)" % tid)
    return tuple(t for t in THEOREM_IDS if t in requested)


def _merge_verdicts(vf: ConvexityVerdict, vg: ConvexityVerdict) -> ConvexityVerdict:
    checked = vf.samples_checked + vg.samples_checked
    if vf.status == "violated":
        return ConvexityVerdict("violated", checked, vf.witness)
    if vg.status == "violated":
        return ConvexityVerdict("violated", checked, vg.witness)
    return ConvexityVerdict("certified", checked)


def _assert_nonneg(fn, which: str, lo: float, hi: float, extra: Sequence[float]):
    xs = np.exp(np.linspace(math.log(lo), math.log(hi), 257))
    xs = np.concatenate([xs, np.asarray(extra, dtype=float)])
    vals = np.asarray(fn(xs), dtype=float)
    bad = np.flatnonzero(np.broadcast_to(vals < 0.0, xs.shape))
    if bad.size:
        i = int(bad[0])
        raise NegativityError(which, float(xs[i]), float(vals[i] if vals.shape else vals))


class _Certifier:
    """Caches hypothesis verdicts across theorem ids (and across points when
    shared through verify's hyp_cache argument)."""

    def __init__(self, f, g, samples, seed, eps, cache=None):
        self.f, self.g = f, g
        self.samples, self.seed, self.eps = samples, seed, eps
        self.cache = cache if cache is not None else {}

    def _cached(self, key, build):
        if key not in self.cache:
            self.cache[key] = build()
        return self.cache[key]

    def _spec(self, alpha, m, hi, direction="convex"):
        return ConvexitySpec("ga", alpha, m, domain_hi=hi, domain_lo=self.eps,
                             direction=direction)

    def deriv_power(self, pt: ParamPoint) -> ConvexityVerdict:
        hi = max(pt.a_root, pt.b)
        key = ("deriv", self.f.serialize(), pt.q, pt.alpha, pt.m, hi, self.eps,
               self.samples, self.seed)
        return self._cached(key, lambda: convexity.check_power_of_abs_deriv(
            self.f, pt.q, self._spec(pt.alpha, pt.m, hi), self.samples, self.seed))

    def _fn_power(self, expr, which, power, alpha, m, hi, direction):
        def build():
            _assert_nonneg(expr.eval, which, self.eps, hi, [hi])

            def h(v):
                return np.power(expr.eval(v), power)

            return convexity.check_function(
                h, self._spec(alpha, m, hi, direction), self.samples, self.seed)

        key = ("pow", which, expr.serialize(), power, alpha, m, hi, direction,
               self.eps, self.samples, self.seed)
        return self._cached(key, build)

    def product_pair(self, pt: ParamPoint, qf: float, qg: float,
                     direction="convex") -> ConvexityVerdict:
        vf = self._fn_power(self.f, "f", qf, pt.alpha, pt.m,
                            max(pt.a_root, pt.b), direction)
        vg = self._fn_power(self.g, "g", qg, pt.alpha_2, pt.m_2,
                            max(pt.a_root2, pt.b), direction)
        return _merge_verdicts(vf, vg)

    def hypothesis(self, tid: str, pt: ParamPoint) -> Optional[ConvexityVerdict]:
        if tid == "lemma21":
            return None
        if tid in SINGLE_FUNCTION_IDS:
            return self.deriv_power(pt)
        if tid in ("thm35", "cor35_1", "cor35_2", "cor35_3"):
            return self.product_pair(pt, pt.q, pt.q)
        if tid in ("thm36", "cor36"):
            return self.product_pair(pt, pt.q, pt.q / (pt.q - 1.0))
        return self.product_pair(pt, 1.0, 1.0, direction="concave")


# ---------------------------------------------------------------------------
# verify

def verify(f: Expression, g: Optional[Expression], pt: ParamPoint,
           theorems: Union[str, Iterable[str]] = "all", tol: float = DEFAULT_TOL,
           samples: int = 256, seed: int = 42, eps: float = DOMAIN_EPS,
           hyp_cache: Optional[dict] = None) -> list:
    """Evaluate the selected bounds at one parameter point.

    Returns BoundReports in THEOREM_IDS order. A report with holds=None means
    the convexity hypothesis failed certification, so the bound makes no claim
    there. Otherwise holds compares lhs and rhs at tolerance
    max(tol, 10 * quad_error) in the direction the bound asserts (two-sided
    for the lemma21 identity residual).
    """
    ids = expand_theorems(theorems, pt, g is not None)
    cert = _Certifier(f, g, samples, seed, eps, hyp_cache)
    reports = []
    single_lhs = prod_lhs = None

    for tid in ids:
        if tid == "lemma21":
            lhs, el = signed_identity_lhs(f, pt)
            rhs, er = identity_rhs(f, pt)
            qerr = el + er
            hyp = None
        elif tid in SINGLE_FUNCTION_IDS:
            hyp = cert.hypothesis(tid, pt)  # may raise on invalid input
            if single_lhs is None:
                single_lhs = lhs_main(f, pt)
            lhs, qerr = single_lhs
            rhs = _SINGLE_RHS[tid](f, pt)
        else:
            hyp = cert.hypothesis(tid, pt)  # positivity gate runs first
            if prod_lhs is None:
                prod_lhs = product_lhs(f, g, pt)
            lhs, qerr = prod_lhs
            rhs = _PRODUCT_RHS[tid](f, g, pt)

        margin = rhs - lhs
        tol_compare = max(tol, 10.0 * qerr)
        if hyp is not None and hyp.status == "violated":
            holds = None
        elif tid == "lemma21":
            holds = bool(abs(margin) <= tol_compare)
        elif tid in LOWER_BOUND_IDS:
            holds = bool(lhs - rhs >= -tol_compare)
        else:
            holds = bool(margin >= -tol_compare)
        reports.append(BoundReport(tid, lhs, rhs, margin, hyp, holds, qerr))
    return reports
