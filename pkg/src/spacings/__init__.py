"""Spacing statistics of Bernoulli-thinned sequences.

Core objects: the exact conditional law of the i-th spacing of a thinned
uniform grid (:mod:`spacings.distribution`), an exact-rational enumeration
oracle for small grids (:mod:`spacings.oracle`), seedable Monte Carlo
(:mod:`spacings.sampler`), point-set generators (:mod:`spacings.sequences`),
and convergence diagnostics against the geometric limit
(:mod:`spacings.diagnostics`).
"""

from .diagnostics import (
    DistanceReport,
    convergence_sweep,
    ks_between,
    ks_to_geometric,
    scaled_mean_exponential_check,
    tv_between,
)
from .distribution import (
    DistributionTable,
    ModelParams,
    binomial_cdf_tail_check,
    binomial_sum_partial,
    binomial_sum_stop_index,
    cdf_scaled,
    cdf_scaled_closed_i1,
    limit_cdf,
    limit_pmf,
    pmf_delta,
    pmf_scaled,
    size_tail,
    spacing_distribution,
    survivor_index_pmf,
    unconditional_spacing_prob,
)
from .errors import DomainError, EmptySampleError, EnumerationLimitError
from .logprob import LogProb
from .oracle import (
    ExactTable,
    Rational,
    enumerate_conditional_pmf,
    exact_closed_form_pmf,
)
from .sampler import (
    EmpiricalDistribution,
    SampleRun,
    collect_empirical,
    inter_arrival_stream,
    ith_scaled_spacing,
    sample_subset,
)
from .sequences import PointSet, farey, farey_pairs, grid, rotation

__version__ = "0.1.0"

__all__ = [
    "DistanceReport",
    "DistributionTable",
    "DomainError",
    "EmpiricalDistribution",
    "EmptySampleError",
    "EnumerationLimitError",
    "ExactTable",
    "LogProb",
    "ModelParams",
    "PointSet",
    "Rational",
    "SampleRun",
    "binomial_cdf_tail_check",
    "binomial_sum_partial",
    "binomial_sum_stop_index",
    "cdf_scaled",
    "cdf_scaled_closed_i1",
    "collect_empirical",
    "convergence_sweep",
    "enumerate_conditional_pmf",
    "exact_closed_form_pmf",
    "farey",
    "farey_pairs",
    "grid",
    "inter_arrival_stream",
    "ith_scaled_spacing",
    "ks_between",
    "ks_to_geometric",
    "limit_cdf",
    "limit_pmf",
    "pmf_delta",
    "pmf_scaled",
    "rotation",
    "sample_subset",
    "scaled_mean_exponential_check",
    "size_tail",
    "spacing_distribution",
    "survivor_index_pmf",
    "tv_between",
    "unconditional_spacing_prob",
]
