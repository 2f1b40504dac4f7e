"""Limit distributions of the sojourn fraction and distances to them.

As the walk gets long, the fraction of time spent on the positive side
follows the arcsine law.  Conditioned on finishing on the positive side it
follows instead the Marchenko-Pastur law on [0, 1] with density
(2/pi) sqrt(r / (1-r)), and dually (2/pi) sqrt((1-r) / r) when conditioned
on finishing negative.  The even mixture of the two conditioned laws
recovers the arcsine law exactly.

Closed-form CDFs:

  arcsine       (2/pi) asin(sqrt(r))
  mp-positive   (2/pi) (asin(sqrt(r)) - sqrt(r (1-r)))
  mp-negative   (2/pi) (asin(sqrt(r)) + sqrt(r (1-r)))

Each is validated against an adaptive-Simpson quadrature of its density,
rewritten under r = sin^2(theta) so the endpoint singularities cancel.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import closed_form
from .core import PathClass


class LimitLaw(enum.Enum):
    ARCSINE = "arcsine"
    MP_POSITIVE = "mp-positive"
    MP_NEGATIVE = "mp-negative"

    @classmethod
    def from_token(cls, token: str) -> "LimitLaw":
        for member in cls:
            if member.value == token:
                return member
        raise ValueError(f"unknown limit law {token!r}")


def cdf(law: LimitLaw, r: float) -> float:
    """Closed-form CDF of the law at r in [0, 1]."""
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must lie in [0, 1], got {r}")
    theta = math.asin(math.sqrt(r))
    if law is LimitLaw.ARCSINE:
        return 2.0 / math.pi * theta
    root = math.sqrt(r * (1.0 - r))
    if law is LimitLaw.MP_POSITIVE:
        return 2.0 / math.pi * (theta - root)
    if law is LimitLaw.MP_NEGATIVE:
        return 2.0 / math.pi * (theta + root)
    raise ValueError(f"unknown limit law {law!r}")


def density(law: LimitLaw, r: float) -> float:
    """Density of the law at r in the open interval (0, 1).

    All three densities blow up or vanish at the endpoints, so r = 0 and
    r = 1 are rejected rather than approximated.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie strictly inside (0, 1), got {r}")
    if law is LimitLaw.ARCSINE:
        return 1.0 / (math.pi * math.sqrt(r * (1.0 - r)))
    if law is LimitLaw.MP_POSITIVE:
        return 2.0 / math.pi * math.sqrt(r / (1.0 - r))
    if law is LimitLaw.MP_NEGATIVE:
        return 2.0 / math.pi * math.sqrt((1.0 - r) / r)
    raise ValueError(f"unknown limit law {law!r}")


# Density times dr/dtheta under r = sin^2(theta), simplified by hand; the
# sin and cos factors cancel the endpoint singularities exactly, leaving
# smooth integrands on [0, asin(sqrt(r))].
_SUBSTITUTED = {
    LimitLaw.ARCSINE: lambda t: 2.0 / math.pi,
    LimitLaw.MP_POSITIVE: lambda t: 4.0 / math.pi * math.sin(t) ** 2,
    LimitLaw.MP_NEGATIVE: lambda t: 4.0 / math.pi * math.cos(t) ** 2,
}


def cdf_quadrature(law: LimitLaw, r: float, tol: float = 1e-10) -> float:
    """CDF by adaptive Simpson quadrature of the substituted density.

    Shares no code with cdf(); it exists to cross-check the closed forms.
    """
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must lie in [0, 1], got {r}")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    theta = math.asin(math.sqrt(r))
    if theta == 0.0:
        return 0.0
    return _adaptive_simpson(_SUBSTITUTED[law], 0.0, theta, tol)


def _simpson(f, a, fa, b, fb):
    mid = 0.5 * (a + b)
    fmid = f(mid)
    return mid, fmid, (b - a) / 6.0 * (fa + 4.0 * fmid + fb)


def _adaptive_simpson(f, a, b, tol, max_depth: int = 50) -> float:
    fa, fb = f(a), f(b)
    mid, fmid, whole = _simpson(f, a, fa, b, fb)
    return _refine(f, a, fa, b, fb, mid, fmid, whole, tol, max_depth)


def _refine(f, a, fa, b, fb, mid, fmid, whole, tol, depth):
    lmid, flmid, left = _simpson(f, a, fa, mid, fmid)
    rmid, frmid, right = _simpson(f, mid, fmid, b, fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise RuntimeError("adaptive Simpson recursion failed to converge")
    half = 0.5 * tol
    return (_refine(f, a, fa, mid, fmid, lmid, flmid, left, half, depth - 1)
            + _refine(f, mid, fmid, b, fb, rmid, frmid, right, half, depth - 1))


@dataclass(frozen=True)
class StepCdf:
    """A right-continuous step CDF on [0, 1] with exact rational values."""

    support: tuple[Fraction, ...]
    cumulative: tuple[Fraction, ...]
    path_class: PathClass | None = None

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(Fraction(v) for v in self.support))
        object.__setattr__(self, "cumulative", tuple(Fraction(v) for v in self.cumulative))
        if len(self.support) != len(self.cumulative):
            raise ValueError("support and cumulative must have equal lengths")
        if not self.support:
            raise ValueError("a step CDF needs at least one jump")
        for v in self.support:
            if not 0 <= v <= 1:
                raise ValueError(f"support point {v} outside [0, 1]")
        if any(a >= b for a, b in zip(self.support, self.support[1:])):
            raise ValueError("support must be strictly increasing")
        if any(a > b for a, b in zip(self.cumulative, self.cumulative[1:])):
            raise ValueError("cumulative values must be nondecreasing")
        if self.cumulative[0] < 0 or self.cumulative[-1] != 1:
            raise ValueError("cumulative values must rise from >= 0 to exactly 1")

    @classmethod
    def from_counts(cls, half_steps: int, counts,
                    path_class: PathClass | None = None) -> "StepCdf":
        """CDF of the sojourn fraction k/n from a histogram over k in [0, n]."""
        if half_steps < 1:
            raise ValueError("half_steps must be at least 1")
        counts = [int(c) for c in counts]
        if len(counts) != half_steps + 1:
            raise ValueError(f"expected {half_steps + 1} histogram cells, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("histogram counts must be nonnegative")
        total = sum(counts)
        if total <= 0:
            raise ValueError("histogram is empty")
        support = [Fraction(k, half_steps) for k in range(half_steps + 1)]
        acc = 0
        cumulative = []
        for c in counts:
            acc += c
            cumulative.append(Fraction(acc, total))
        return cls(support=tuple(support), cumulative=tuple(cumulative),
                   path_class=path_class)


def finite_n_cdf(n: int, path_class: PathClass) -> StepCdf:
    """Exact CDF of the sojourn fraction at length 2n for the given class."""
    pmf = closed_form.sojourn_pmf(n, path_class)
    acc = Fraction(0)
    cumulative = []
    for k in range(n + 1):
        acc += pmf[k]
        cumulative.append(acc)
    support = tuple(Fraction(k, n) for k in range(n + 1))
    return StepCdf(support=support, cumulative=tuple(cumulative), path_class=path_class)


def ks_distance(step: StepCdf, law: LimitLaw) -> float:
    """Kolmogorov-Smirnov distance between a step CDF and a continuous law.

    Against a continuous comparison the supremum is attained at a jump of
    the step function, approached from one side or the other, so both
    one-sided gaps are taken at every jump.
    """
    worst = 0.0
    previous = Fraction(0)
    for r, value in zip(step.support, step.cumulative):
        reference = cdf(law, float(r))
        below = abs(float(previous) - reference)
        above = abs(float(value) - reference)
        worst = max(worst, below, above)
        previous = value
    return worst
