"""Sampling-based certification of multiplicative/arithmetic convexity laws.

The tested law, for a function h on (0, hi], parameters (alpha, m) in [0,1]^2
and every lambda in [0,1]:

    kind="ga":        h(x^lambda * y^(m*(1-lambda))) <= lambda^alpha h(x) + m (1-lambda^alpha) h(y)
    kind="ordinary":  h(lambda x + m (1-lambda) y)   <= lambda^alpha h(x) + m (1-lambda^alpha) h(y)

direction="concave" tests the reversed inequality. The checker scans a fixed
lambda grid {i/64} against seeded log-uniform (x, y) pairs, pair-major, and
polishes the first confirmed violation with coordinate-wise golden-section
ascent so the reported witness is near-maximal. All of it is deterministic in
(function, spec, samples, seed).

Conventions: 0^alpha = 0 for alpha > 0, and lambda^alpha at lambda = alpha = 0
is 1 (numpy's power already does both). The witness gap is the signed excess
of the tested inequality (lhs - rhs for convex, rhs - lhs for concave), so
status "violated" always means gap > VIOLATION_TOL.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .expr import Expression

VIOLATION_TOL = 1e-9  # absolute, on the gap; absorbs evaluation rounding
CERTIFY_MARGIN = 0.0  # no extra slack demanded below VIOLATION_TOL
LAMBDA_STEPS = 64
REFINE_ROUNDS = 20
_GOLDEN_STEPS = 28
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

_KINDS = ("ga", "ordinary")
_DIRECTIONS = ("convex", "concave")


@dataclass(frozen=True)
class ConvexitySpec:
    kind: str
    alpha: float
    m: float
    domain_hi: float
    domain_lo: float = 1e-12
    direction: str = "convex"

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError("kind must be one of %r" % (_KINDS,))
        if self.direction not in _DIRECTIONS:
            raise ValueError("direction must be one of %r" % (_DIRECTIONS,))
        if not (0.0 <= self.alpha <= 1.0 and 0.0 <= self.m <= 1.0):
            raise ValueError("(alpha, m) must lie in [0,1]^2, got (%r, %r)"
                             % (self.alpha, self.m))
        if not (0.0 < self.domain_lo < self.domain_hi and math.isfinite(self.domain_hi)):
            raise ValueError("need 0 < domain_lo < domain_hi < inf")


@dataclass(frozen=True)
class Witness:
    x: float
    y: float
    lam: float
    lhs: float
    rhs: float
    gap: float


@dataclass(frozen=True)
class ConvexityVerdict:
    status: str  # "certified" | "violated"
    samples_checked: int
    witness: Optional[Witness] = None


FunctionLike = Union[Expression, Callable]


def _as_callable(f: FunctionLike) -> Callable:
    return f.eval if isinstance(f, Expression) else f


def _combine(spec: ConvexitySpec, x, y, lam):
    if spec.kind == "ga":
        return np.power(x, lam) * np.power(y, spec.m * (1.0 - lam))
    return lam * x + spec.m * (1.0 - lam) * y


def witness_gap(f: FunctionLike, spec: ConvexitySpec, x: float, y: float,
                lam: float) -> Witness:
    """Evaluate the tested inequality at one (x, y, lambda) triple."""
    h = _as_callable(f)
    lhs = float(h(_combine(spec, x, y, lam)))
    la = np.power(lam, spec.alpha)
    rhs = float(la * h(x) + spec.m * (1.0 - la) * h(y))
    gap = (lhs - rhs) if spec.direction == "convex" else (rhs - lhs)
    return Witness(float(x), float(y), float(lam), lhs, rhs, gap)


def _golden_max(fn, lo: float, hi: float):
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(_GOLDEN_STEPS):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
    return (c, fc) if fc >= fd else (d, fd)


def _refine(f: FunctionLike, spec: ConvexitySpec, start: Witness) -> Witness:
    llo, lhi = math.log(spec.domain_lo), math.log(spec.domain_hi)
    best = start
    for _ in range(REFINE_ROUNDS):
        before = best.gap
        t, g = _golden_max(
            lambda t: witness_gap(f, spec, math.exp(t), best.y, best.lam).gap, llo, lhi)
        if g > best.gap:
            best = witness_gap(f, spec, math.exp(t), best.y, best.lam)
        t, g = _golden_max(
            lambda t: witness_gap(f, spec, best.x, math.exp(t), best.lam).gap, llo, lhi)
        if g > best.gap:
            best = witness_gap(f, spec, best.x, math.exp(t), best.lam)
        t, g = _golden_max(
            lambda t: witness_gap(f, spec, best.x, best.y, t).gap, 0.0, 1.0)
        if g > best.gap:
            best = witness_gap(f, spec, best.x, best.y, t)
        # coordinate passes converge geometrically; stop once a full round
        # buys less than a relative ulp or two
        if best.gap - before <= 1e-12 * max(best.gap, 1.0):
            break
    return best


def check_function(h: Callable, spec: ConvexitySpec, samples: int = 256,
                   seed: int = 42) -> ConvexityVerdict:
    """Core checker over an arbitrary callable (must accept numpy arrays)."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    draws = rng.uniform(math.log(spec.domain_lo), math.log(spec.domain_hi),
                        size=(samples, 2))
    x = np.exp(draws[:, 0])
    y = np.exp(draws[:, 1])
    lam = np.linspace(0.0, 1.0, LAMBDA_STEPS + 1)

    # constant expressions come back 0-d; broadcast keeps the grid shape
    hx = np.broadcast_to(np.asarray(h(x), dtype=float), x.shape)
    hy = np.broadcast_to(np.asarray(h(y), dtype=float), y.shape)
    # The matrix evaluation mirrors witness_gap's scalar operations.
    la = np.power(lam, spec.alpha)
    z = _combine(spec, x[:, None], y[:, None], lam[None, :])
    lhs = np.asarray(h(z), dtype=float)
    rhs = la[None, :] * hx[:, None] + (spec.m * (1.0 - la))[None, :] * hy[:, None]
    gap = lhs - rhs if spec.direction == "convex" else rhs - lhs

    checked = samples * (LAMBDA_STEPS + 1)
    flagged = np.flatnonzero(np.ravel(gap > VIOLATION_TOL))  # C-order: pair-major
    for idx in flagged:
        s, i = divmod(int(idx), LAMBDA_STEPS + 1)
        cand = witness_gap(h, spec, float(x[s]), float(y[s]), float(lam[i]))
        if cand.gap > VIOLATION_TOL:  # confirm with the scalar path
            return ConvexityVerdict("violated", checked, _refine(h, spec, cand))
    return ConvexityVerdict("certified", checked)


def check(f: FunctionLike, spec: ConvexitySpec, samples: int = 256,
          seed: int = 42) -> ConvexityVerdict:
    """Check the law for the function itself."""
    return check_function(_as_callable(f), spec, samples, seed)


def check_power_of_abs_deriv(f: Expression, q: float, spec: ConvexitySpec,
                             samples: int = 256, seed: int = 42) -> ConvexityVerdict:
    """Check the law for x -> |f'(x)|^q (q >= 1)."""
    if not q >= 1.0:
        raise ValueError("q must be >= 1, got %r" % (q,))

    def h(v):
        return np.power(np.abs(f.eval_dual(v).deriv), q)

    return check_function(h, spec, samples, seed)
