"""Wealth measures describing the population of small bettors.

A measure assigns to each belief interval the total initial wealth of the
small bettors whose subjective probability of Outcome 1 lies in it. Every
supported measure has a continuous, everywhere-positive density on [0, 1];
construction rejects anything else, since a vanishing density or an atom
breaks both coverage and uniqueness of the market solution.

Families
--------
wedge(n)              piecewise-linear density, steep near 0 for large n,
                      flat at 1/n beyond the knee at p = 1/n; unit total mass
uniform()             unit density (identical to wedge(1))
symmetrized_wedge(n)  average of wedge(n) and its mirror image
gaussian_mixture(...) positive combination of Gaussian kernels
tabulated(knots)      piecewise-linear interpolation of user knots
scaled(base, factor)  base measure with density multiplied by factor

Interval masses come from a closed-form antiderivative where one exists
(wedge families) and from adaptive Simpson quadrature otherwise.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import DomainError
from .quadrature import QUAD_TOL, adaptive_simpson

POSITIVITY_GRID = 10_001


@dataclass(frozen=True)
class BeliefMeasure:
    """A finite measure on [0, 1] given by a positive continuous density."""

    density: Callable[[float], float]
    total_mass: float
    kind: str
    # closed-form interval mass, when the family admits one
    exact_mass: Optional[Callable[[float, float], float]] = field(
        default=None, repr=False, compare=False)

    def __repr__(self) -> str:  # density callables have no useful repr
        return f"BeliefMeasure(kind={self.kind!r}, total_mass={self.total_mass!r})"


def mass(m: BeliefMeasure, lo: float, hi: float, quad_tol: float = QUAD_TOL) -> float:
    """Wealth held by bettors with beliefs in [lo, hi].

    Endpoint openness is immaterial because the measure has a density.
    """
    if not (0.0 <= lo <= hi <= 1.0):
        raise DomainError(f"mass requires 0 <= lo <= hi <= 1, got [{lo}, {hi}]")
    if lo == hi:
        return 0.0
    if m.exact_mass is not None:
        return m.exact_mass(lo, hi)
    return adaptive_simpson(m.density, lo, hi, tol=quad_tol)


def _validate_density(density: Callable[[float], float], kind: str) -> None:
    # sampling check; continuity is guaranteed by the family constructions
    for i in range(POSITIVITY_GRID):
        p = i / (POSITIVITY_GRID - 1)
        if not density(p) > 0.0:
            raise DomainError(
                f"{kind}: density must be positive on [0,1], got {density(p)} at p={p}")


def _finish(density, kind, exact_mass=None, quad_tol=QUAD_TOL) -> BeliefMeasure:
    _validate_density(density, kind)
    if exact_mass is not None:
        total = exact_mass(0.0, 1.0)
    else:
        total = adaptive_simpson(density, 0.0, 1.0, tol=quad_tol)
    return BeliefMeasure(density=density, total_mass=total, kind=kind,
                         exact_mass=exact_mass)


def from_density(density: Callable[[float], float], kind: str = "custom",
                 quad_tol: float = QUAD_TOL) -> BeliefMeasure:
    """Wrap an arbitrary positive continuous density (validated by sampling)."""
    return _finish(density, kind, quad_tol=quad_tol)


# --------------------------------------------------------------------------
# wedge family
# --------------------------------------------------------------------------

def wedge_density(n: int, p: float) -> float:
    """Density of the wedge family: linear ramp below 1/n, constant 1/n above."""
    _check_wedge_args(n, p)
    if p < 1.0 / n:
        return -2.0 * n * (n - 1) * p + 2.0 * (n - 1) + 1.0 / n
    return 1.0 / n


def _check_wedge_args(n: int, p: float) -> None:
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"wedge order must be an integer >= 1, got {n!r}")
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"belief must lie in [0,1], got {p}")


def _wedge_antiderivative(n: int, p: float) -> float:
    cut = 1.0 / n
    if p <= cut:
        return -n * (n - 1) * p * p + (2.0 * (n - 1) + cut) * p
    head = (n - 1) / n + cut * cut  # integral of the ramp piece up to 1/n
    return head + (p - cut) * cut


def wedge(n: int) -> BeliefMeasure:
    """Wedge measure of order n; total mass 1, wedge(1) is uniform."""
    _check_wedge_args(n, 0.0)

    def exact(lo: float, hi: float) -> float:
        return _wedge_antiderivative(n, hi) - _wedge_antiderivative(n, lo)

    return _finish(lambda p: wedge_density(n, p), f"wedge(n={n})", exact_mass=exact)


def uniform() -> BeliefMeasure:
    """Unit density on [0, 1]."""
    return _finish(lambda p: 1.0, "uniform", exact_mass=lambda lo, hi: hi - lo)


def symmetrized_wedge_density(n: int, p: float) -> float:
    """Average of the order-n wedge density and its reflection about 0.5."""
    _check_wedge_args(n, p)
    return 0.5 * (wedge_density(n, p) + wedge_density(n, 1.0 - p))


def symmetrized_wedge(n: int) -> BeliefMeasure:
    """Symmetric measure splitting the wedge's wealth between both extremes."""
    _check_wedge_args(n, 0.0)

    def exact(lo: float, hi: float) -> float:
        fwd = _wedge_antiderivative(n, hi) - _wedge_antiderivative(n, lo)
        rev = _wedge_antiderivative(n, 1.0 - lo) - _wedge_antiderivative(n, 1.0 - hi)
        return 0.5 * (fwd + rev)

    return _finish(lambda p: symmetrized_wedge_density(n, p),
                   f"symmetrized_wedge(n={n})", exact_mass=exact)


# --------------------------------------------------------------------------
# gaussian mixture
# --------------------------------------------------------------------------

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def gaussian_mixture_density(weights: Sequence[float], means: Sequence[float],
                             stddevs: Sequence[float], p: float) -> float:
    """Weighted sum of Gaussian kernels at p; weights and stddevs must be positive."""
    if not (len(weights) == len(means) == len(stddevs)) or not weights:
        raise DomainError("mixture parameter lists must be nonempty and equal-length")
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"belief must lie in [0,1], got {p}")
    out = 0.0
    for wgt, mu, sd in zip(weights, means, stddevs):
        if wgt <= 0.0:
            raise DomainError(f"mixture weights must be positive, got {wgt}")
        if sd <= 0.0:
            raise DomainError(f"mixture stddevs must be positive, got {sd}")
        z = (p - mu) / sd
        out += wgt * _INV_SQRT_2PI / sd * math.exp(-0.5 * z * z)
    return out


def gaussian_mixture(weights: Sequence[float], means: Sequence[float],
                     stddevs: Sequence[float]) -> BeliefMeasure:
    """Mixture-of-Gaussians measure; masses computed by quadrature."""
    weights = tuple(float(x) for x in weights)
    means = tuple(float(x) for x in means)
    stddevs = tuple(float(x) for x in stddevs)
    gaussian_mixture_density(weights, means, stddevs, 0.0)  # validate parameters
    label = f"gaussian_mixture(k={len(weights)})"
    return _finish(lambda p: gaussian_mixture_density(weights, means, stddevs, p),
                   label)


# --------------------------------------------------------------------------
# tabulated and scaled
# --------------------------------------------------------------------------

def tabulated(knots: Sequence[tuple[float, float]]) -> BeliefMeasure:
    """Piecewise-linear density through (belief, value) knots spanning [0, 1].

    Knot beliefs must be strictly increasing with first 0 and last 1; every
    value must be positive, which keeps the interpolant positive too.
    """
    pts = [(float(p), float(v)) for p, v in knots]
    if len(pts) < 2:
        raise DomainError("tabulated density needs at least two knots")
    xs = [p for p, _ in pts]
    vs = [v for _, v in pts]
    if xs[0] != 0.0 or xs[-1] != 1.0:
        raise DomainError("tabulated knots must start at 0 and end at 1")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise DomainError("tabulated knot beliefs must be strictly increasing")
    if any(v <= 0.0 for v in vs):
        raise DomainError("tabulated knot values must be positive")

    def density(p: float) -> float:
        if not (0.0 <= p <= 1.0):
            raise DomainError(f"belief must lie in [0,1], got {p}")
        i = bisect_right(xs, p)
        if i >= len(xs):
            return vs[-1]
        if i == 0:
            return vs[0]
        t = (p - xs[i - 1]) / (xs[i] - xs[i - 1])
        return vs[i - 1] + t * (vs[i] - vs[i - 1])

    return _finish(density, f"tabulated(k={len(pts)})")


def scaled(base: BeliefMeasure, factor: float) -> BeliefMeasure:
    """The base measure with all wealth multiplied by factor > 0."""
    if not factor > 0.0:
        raise DomainError(f"scale factor must be positive, got {factor}")
    exact = None
    if base.exact_mass is not None:
        base_exact = base.exact_mass
        exact = lambda lo, hi: factor * base_exact(lo, hi)
    return _finish(lambda p: factor * base.density(p),
                   f"scaled({base.kind}, factor={factor})", exact_mass=exact)
