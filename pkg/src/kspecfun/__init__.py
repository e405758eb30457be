"""k-deformed special functions and the half-line integral identities built on them.

The package has three layers:

* gamma machinery: the one-parameter deformation Gamma_k with
  Gamma_k(z + k) = z Gamma_k(z) and Gamma_k(k) = 1, its logarithm, the
  step-k Pochhammer product, and a slow quadrature oracle for cross-checks.
* series evaluators: the generalized modified k-Bessel function (a
  two-parameter-weighted power series with sign/scale parameter c that
  reduces to Bessel J and modified Bessel I at unit parameters), the
  k-deformed Fox-Wright function with its entirety guard, and plain pFq.
* identity verification: adaptive quadrature of the two kernel integrals
  against two independent closed-form series routes (the term-wise
  canonical series, trusted, and the packaged k-Wright form, audited), with
  a report/record layer the CLI exposes as eval/verify/sweep.
"""

from .errors import DomainError, NonConvergenceError
from .identities import (
    CSV_FIELDS,
    IDENTITY_IDS,
    VERDICTS,
    IdentityReport,
    classical_reduction_check,
    corollary1_rhs,
    corollary3_rhs,
    theorem1_rhs_canonical,
    theorem1_rhs_paper,
    theorem2_rhs_canonical,
    theorem2_rhs_paper,
    to_record,
    verify,
)
from .kbessel import (
    BesselParams,
    SeriesResult,
    eval_gmk_bessel,
    eval_k_bessel_first,
    gmk_bessel_term,
)
from .kgamma import (
    KScale,
    classical_gamma,
    k_gamma,
    k_gamma_oracle,
    k_pochhammer,
    log_classical_gamma,
    log_k_gamma,
    log_k_pochhammer,
)
from .quadrature import (
    ObParams,
    QuadResult,
    integrate_semi_infinite,
    oberhettinger_closed_form,
    oberhettinger_lhs,
    phi,
    theorem1_lhs,
    theorem2_lhs,
)
from .summation import CompensatedSum
from .wright import (
    WrightSpec,
    convergence_margin,
    eval_k_wright,
    eval_pfq,
    eval_wright,
    wright_pfq_reduction_check,
)

__version__ = "0.1.0"

__all__ = [
    "BesselParams",
    "CSV_FIELDS",
    "CompensatedSum",
    "DomainError",
    "IDENTITY_IDS",
    "IdentityReport",
    "KScale",
    "NonConvergenceError",
    "ObParams",
    "QuadResult",
    "SeriesResult",
    "VERDICTS",
    "WrightSpec",
    "classical_gamma",
    "classical_reduction_check",
    "convergence_margin",
    "corollary1_rhs",
    "corollary3_rhs",
    "eval_gmk_bessel",
    "eval_k_bessel_first",
    "eval_k_wright",
    "eval_pfq",
    "eval_wright",
    "gmk_bessel_term",
    "integrate_semi_infinite",
    "k_gamma",
    "k_gamma_oracle",
    "k_pochhammer",
    "log_classical_gamma",
    "log_k_gamma",
    "log_k_pochhammer",
    "oberhettinger_closed_form",
    "oberhettinger_lhs",
    "phi",
    "theorem1_lhs",
    "theorem1_rhs_canonical",
    "theorem1_rhs_paper",
    "theorem2_lhs",
    "theorem2_rhs_canonical",
    "theorem2_rhs_paper",
    "to_record",
    "verify",
    "wright_pfq_reduction_check",
    "__version__",
]
