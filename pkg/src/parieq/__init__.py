"""Equilibrium solver for parimutuel wagering with one large bettor.

A continuum of small bettors (described by a wealth measure over beliefs)
and a single budget-constrained large bettor wager on a binary outcome under
a proportional-payout scheme with a house take. The package computes the
market's unique equilibrium implied probability, reconstructs all wagers,
evaluates revenue/profit metrics, optimizes the take, and cross-checks the
continuum solution against a brute-force finite population.
"""

from .equilibrium import (Equilibrium, FP_TOL, PhiContext, compute_pbar1,
                          compute_pbar2, d1_of, d2_of, phi, phi_context,
                          solve, zeta1, zeta2)
from .errors import (ConfigError, DomainError, NoEquilibriumError,
                     ParieqError, QuadratureError)
from .measure import (BeliefMeasure, from_density, gaussian_mixture,
                      gaussian_mixture_density, mass, scaled,
                      symmetrized_wedge, symmetrized_wedge_density, tabulated,
                      uniform, wedge, wedge_density)
from .metrics import (MarketReport, atomic_actual_profit,
                      atomic_subjective_profit, diffuse_actual_profit,
                      diffuse_subjective_profit, house_revenue, market_report)
from .oracle import (DiscretePopulation, OracleResult, discrete_totals,
                     discretize, iterate_best_response)
from .response import (AtomicBet, DiffuseAggregate, DiffuseThresholds,
                       MarketParams, atomic_best_response, atomic_profit,
                       diffuse_best_response, diffuse_unit_edge,
                       implied_probability)
from .scenario import (Scenario, SweepSpec, build_measure, bundled_scenarios,
                       dump_scenario, load_scenario, parse_scenario,
                       scenario_to_dict)
from .stackelberg import TakeOptimum, optimize_take

__version__ = "0.1.0"
