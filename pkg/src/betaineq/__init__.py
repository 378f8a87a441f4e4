"""Numerical harness for bounds on ratios and values of the Beta function.

Modules
-------
oracle      log B(x, y) and d/dx log B by two independent routes
catalog     the roster of printed bounds, their domains and comparison remarks
lemma       quadrature check of the integration-by-parts identity
verifier    domain sampling, verdicts and suite reports
regionmap   sign field of two competing upper bounds, PGM/CSV export
cli         ``betaineq`` command-line front end
"""

from .catalog import (
    Claim,
    ClaimId,
    Side,
    Status,
    Target,
    claims_table,
    compare_bounds,
    coeffs,
    dominance_relations,
    eval_bound,
    lookup,
)
from .errors import BetaIneqError, ConfigurationError, DomainError, NumericalError, UsageError
from .lemma import LemmaParams, lemma_residual, lemma_suite
from .oracle import (
    RatioParams,
    SymmetricParams,
    ValueParams,
    beta_difference,
    log_beta,
    log_beta_dx,
    ratio_log,
    symmetric_ratio_log,
)
from .regionmap import Axis, compute_grid, region_F
from .verifier import Verdict, check_claim, dominance_suite, run_suite, sample_domain

__version__ = "0.1.0"
