"""First-stage take optimization: the organizer picks kappa to maximize revenue.

Revenue as a function of kappa can have kinks (the large bettor's stake
switches between budget-capped and unconstrained) and is not assumed concave,
so a uniform grid scan guards against multimodality and a golden-section pass
refines the best cell. Evaluated candidates are all retained, and the reported
optimum is the best point ever seen, so it can never fall below a grid sample.
"""

import math
from dataclasses import dataclass

from .equilibrium import FP_TOL, solve
from .errors import DomainError
from .measure import BeliefMeasure
from .metrics import house_revenue
from .response import MarketParams

# clamp away from the degenerate limits kappa -> 0.5 and kappa -> 1
KAPPA_SEARCH_LO = 0.5 + 1e-4
KAPPA_SEARCH_HI = 1.0 - 1e-4

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class TakeOptimum:
    """Revenue-maximizing take and the grid profile behind it."""

    kappa_star: float
    revenue_star: float
    profile: tuple[tuple[float, float], ...]  # (kappa, revenue) grid samples


def optimize_take(measure: BeliefMeasure, q: float, w: float,
                  grid_points: int = 256, refine_tol: float = 1e-5,
                  fp_tol: float = FP_TOL) -> TakeOptimum:
    """Maximize take revenue over kappa in the clamped search interval."""
    if grid_points < 16:
        raise DomainError(f"grid_points must be at least 16, got {grid_points}")
    if not refine_tol > 0.0:
        raise DomainError(f"refine_tol must be positive, got {refine_tol}")

    def revenue(kappa: float) -> float:
        params = MarketParams(kappa=kappa, q=q, w=w)
        return house_revenue(solve(params, measure, fp_tol=fp_tol), params)

    span = KAPPA_SEARCH_HI - KAPPA_SEARCH_LO
    grid = [KAPPA_SEARCH_LO + span * i / (grid_points - 1)
            for i in range(grid_points)]
    profile = tuple((k, revenue(k)) for k in grid)

    best_k, best_r = max(profile, key=lambda kr: kr[1])
    i_best = max(range(grid_points), key=lambda i: profile[i][1])
    lo = grid[max(0, i_best - 1)]
    hi = grid[min(grid_points - 1, i_best + 1)]

    # golden-section refinement, keeping the running best across all evals
    c = hi - _INV_GOLDEN * (hi - lo)
    d = lo + _INV_GOLDEN * (hi - lo)
    fc, fd = revenue(c), revenue(d)
    while hi - lo > refine_tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_GOLDEN * (hi - lo)
            fc = revenue(c)
            k_new, r_new = c, fc
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_GOLDEN * (hi - lo)
            fd = revenue(d)
            k_new, r_new = d, fd
        if r_new > best_r:
            best_k, best_r = k_new, r_new

    return TakeOptimum(kappa_star=best_k, revenue_star=best_r, profile=profile)
