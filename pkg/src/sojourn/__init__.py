"""Exact combinatorics and seeded simulation for sojourn times of the simple random walk.

The sojourn time of a walk path is how many of its time steps sit on the
positive side.  This package counts paths by sojourn time exactly (closed
forms cross-checked against exhaustive enumeration), evaluates the exact
conditional probability of finishing positive, compares finite-length
distributions with their continuous limits (arcsine and Marchenko-Pastur),
and samples paths reproducibly at lengths far beyond enumeration.
"""

from ._backend import BACKEND_ENV_VAR, active_backend, get_kernels
from .closed_form import (
    ExactDivisionError,
    binomial,
    conditional_positive_probability,
    count_all,
    count_bridges,
    count_bridges_by_sojourn,
    count_by_sojourn,
    count_positive_end_by_sojourn,
    count_positive_end_by_sojourn_sum,
    decimal_string,
    sojourn_pmf,
)
from .core import (
    PathClass,
    SojournTable,
    StepSequence,
    classify,
    is_negative_side,
    is_positive_side,
    position,
    positions,
    sojourn_time,
)
from .enumeration import (
    CAP_ENV_VAR,
    DEFAULT_CAP,
    EnumerationCapError,
    EnumerationConfig,
    count_paths_brute,
    default_cap,
    enumerate_counts,
)
from .limit_laws import (
    LimitLaw,
    StepCdf,
    cdf,
    cdf_quadrature,
    density,
    finite_n_cdf,
    ks_distance,
)
from .monte_carlo import (
    DEFAULT_STREAMS,
    ConditionalEstimate,
    DegenerateSampleError,
    EmpiricalHistogram,
    SamplerConfig,
    estimate_conditional_positive,
    sample_path,
    simulate_sojourn,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_ENV_VAR",
    "CAP_ENV_VAR",
    "DEFAULT_CAP",
    "DEFAULT_STREAMS",
    "ConditionalEstimate",
    "DegenerateSampleError",
    "EmpiricalHistogram",
    "EnumerationCapError",
    "EnumerationConfig",
    "ExactDivisionError",
    "LimitLaw",
    "PathClass",
    "SamplerConfig",
    "SojournTable",
    "StepCdf",
    "StepSequence",
    "active_backend",
    "binomial",
    "cdf",
    "cdf_quadrature",
    "classify",
    "conditional_positive_probability",
    "count_all",
    "count_bridges",
    "count_bridges_by_sojourn",
    "count_by_sojourn",
    "count_paths_brute",
    "count_positive_end_by_sojourn",
    "count_positive_end_by_sojourn_sum",
    "decimal_string",
    "default_cap",
    "density",
    "enumerate_counts",
    "estimate_conditional_positive",
    "finite_n_cdf",
    "get_kernels",
    "is_negative_side",
    "is_positive_side",
    "ks_distance",
    "position",
    "positions",
    "sample_path",
    "simulate_sojourn",
    "sojourn_pmf",
    "sojourn_time",
]
