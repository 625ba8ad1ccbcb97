"""Brute-force cross-check: a finite population standing in for the continuum.

The population discretizes the wealth measure into N equal-mass cells, one
small bettor per cell holding the cell's wealth at its mass-median belief.
Damped best-response iteration then hunts for a self-consistent implied
probability: bettors apply the threshold rule at the current value, the large
bettor responds to their totals, and the implied probability is re-averaged.
Agreement with the continuum solver validates both sides; no claim is made
that the finite game itself has this as an equilibrium.

Because cell totals jump whenever a belief crosses a threshold, the iteration
typically settles into a micro-oscillation of order 1/N around the crossing
rather than converging exactly; pick ``tol`` with that floor in mind (and a
smaller ``damping`` for sharply peaked densities, whose response map is too
steep for the default).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .measure import BeliefMeasure, mass
from .response import AtomicBet, DiffuseAggregate, MarketParams, atomic_best_response

_INVERT_ITERS = 60  # bisection steps per quantile, resolves ~1e-18


@dataclass(frozen=True)
class DiscretePopulation:
    """Finite stand-in population: sorted beliefs with per-bettor wealth."""

    beliefs: np.ndarray
    wealths: np.ndarray

    @property
    def size(self) -> int:
        return len(self.beliefs)


@dataclass(frozen=True)
class OracleResult:
    p_approx: float
    converged: bool
    iterations: int
    d1: float
    d2: float
    atomic: AtomicBet


def discretize(measure: BeliefMeasure, N: int) -> DiscretePopulation:
    """Split the measure into N equal-mass cells at their mass-median beliefs."""
    if N < 2:
        raise DomainError(f"population size must be at least 2, got {N}")
    total = measure.total_mass
    beliefs = np.empty(N)
    x_prev = 0.0
    m_prev = 0.0
    for i in range(N):
        target = (i + 0.5) * total / N
        lo, hi = x_prev, 1.0
        # invert the cumulative mass; incremental integrals keep this cheap
        for _ in range(_INVERT_ITERS):
            mid = 0.5 * (lo + hi)
            if m_prev + mass(measure, x_prev, mid) < target:
                lo = mid
            else:
                hi = mid
        beliefs[i] = 0.5 * (lo + hi)
        m_prev += mass(measure, x_prev, beliefs[i])
        x_prev = beliefs[i]
    wealths = np.full(N, total / N)
    return DiscretePopulation(beliefs=beliefs, wealths=wealths)


def discrete_totals(pop: DiscretePopulation, P: float, kappa: float,
                    ) -> tuple[float, float]:
    """Population wagers at implied probability P under the threshold rule.

    Bettors exactly at a threshold abstain, matching the continuum convention.
    """
    t1 = P / kappa
    t2 = 1.0 - (1.0 - P) / kappa
    d1 = float(pop.wealths[pop.beliefs > t1].sum())
    d2 = float(pop.wealths[pop.beliefs < t2].sum())
    return d1, d2


def _atomic_vs_totals(d1: float, d2: float, params: MarketParams) -> AtomicBet:
    # discrete totals can be one-sided early in the iteration; the optimal
    # stake degenerates to zero there, so short-circuit instead of erroring
    if d1 <= 0.0 or d2 <= 0.0:
        return AtomicBet(a1=0.0, a2=0.0)
    return atomic_best_response(DiffuseAggregate(d1=d1, d2=d2), params)


def iterate_best_response(pop: DiscretePopulation, params: MarketParams,
                          max_iters: int = 10_000, tol: float = 1e-8,
                          damping: float = 0.5) -> OracleResult:
    """Damped best-response iteration from the neutral start P = 0.5.

    Stops once the damped update is below tol; returns converged=False rather
    than raising if the budget runs out (e.g. on persistent oscillation).
    """
    if params.kappa <= 0.5:
        raise DomainError(f"iteration needs kappa > 0.5, got {params.kappa}")
    if not 0.0 < damping <= 1.0:
        raise DomainError(f"damping must lie in (0,1], got {damping}")
    P = 0.5
    converged = False
    iterations = max_iters
    for it in range(max_iters):
        d1, d2 = discrete_totals(pop, P, params.kappa)
        bet = _atomic_vs_totals(d1, d2, params)
        pool = d1 + d2 + bet.a1 + bet.a2
        if pool <= 0.0:
            iterations = it
            break
        p_new = (d1 + bet.a1) / pool
        p_next = (1.0 - damping) * P + damping * p_new
        step = abs(p_next - P)
        P = p_next
        if step < tol:
            converged = True
            iterations = it + 1
            break
    # report the population state consistent with the final value
    d1, d2 = discrete_totals(pop, P, params.kappa)
    bet = _atomic_vs_totals(d1, d2, params)
    return OracleResult(p_approx=P, converged=converged, iterations=iterations,
                        d1=d1, d2=d2, atomic=bet)
