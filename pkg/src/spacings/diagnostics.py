"""Distances between exact, empirical, and limiting spacing distributions.

KS distance for discrete laws is taken as the supremum over support atoms
of the absolute CDF difference, with no continuity correction; the same
atom-wise convention is used against continuous references, so a point
mass at x compares its full CDF jump at x.  Total variation is half the
L1 distance between mass functions over the union of supports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distribution import ModelParams, spacing_distribution
from .errors import DomainError, EmptySampleError
from .sampler import EmpiricalDistribution


@dataclass(frozen=True)
class DistanceReport:
    """KS and (where defined) total-variation distance of a comparison.

    ``n_effective`` is the number of observations behind the empirical
    side, 0 for exact-vs-exact comparisons.  ``tv`` is None when one side
    is a continuous law, where mass-function distance has no meaning.
    """

    ks: float
    tv: float | None
    n_effective: int

    def __post_init__(self) -> None:
        if self.ks < 0.0:
            raise DomainError("KS distance must be >= 0")
        if self.tv is not None and not 0.0 <= self.tv <= 1.0:
            raise DomainError("TV distance must be in [0, 1]")


def _geometric_cdf_curve(p: float, d: np.ndarray) -> np.ndarray:
    if p == 1.0:
        return np.ones(d.size)
    return -np.expm1(d * math.log1p(-p))


def _geometric_pmf_curve(p: float, d: np.ndarray) -> np.ndarray:
    if p == 1.0:
        out = np.zeros(d.size)
        if d.size:
            out[d == 1] = 1.0
        return out
    return p * np.exp((d - 1) * math.log1p(-p))


def ks_to_geometric(emp: EmpiricalDistribution, p) -> DistanceReport:
    """Compare an empirical spacing histogram with the geometric(p) limit.

    KS is the sup over d = 1..max observed of |empirical CDF - geometric
    CDF|; TV additionally charges the geometric mass beyond the observed
    range, where the empirical mass function is zero.
    """
    if not 0.0 < float(p) <= 1.0:
        raise DomainError(f"p={p} must be in (0, 1]")
    p = float(p)
    total = emp.total
    if total <= 0:
        raise EmptySampleError("empirical distribution has no observations")
    d, counts = emp.as_arrays()
    emp_mass = counts / total
    ks = float(np.abs(np.cumsum(emp_mass) - _geometric_cdf_curve(p, d)).max())
    tail = 0.0 if p == 1.0 else math.exp(emp.max_observed * math.log1p(-p))
    tv = 0.5 * (float(np.abs(emp_mass - _geometric_pmf_curve(p, d)).sum()) + tail)
    return DistanceReport(ks=ks, tv=min(tv, 1.0), n_effective=int(total))


def _aligned_masses(a: EmpiricalDistribution, b: EmpiricalDistribution):
    dmax = max(a.max_observed, b.max_observed)
    out = []
    for emp in (a, b):
        m = np.zeros(dmax)
        for val, cnt in emp.counts.items():
            m[val - 1] = cnt
        total = m.sum()
        if total <= 0:
            raise EmptySampleError("empirical distribution has no observations")
        out.append(m / total)
    return out[0], out[1]


def tv_between(a: EmpiricalDistribution, b: EmpiricalDistribution) -> float:
    """Total-variation distance between two empirical histograms."""
    ma, mb = _aligned_masses(a, b)
    return 0.5 * float(np.abs(ma - mb).sum())


def ks_between(a: EmpiricalDistribution, b: EmpiricalDistribution) -> float:
    """Atom-wise KS distance between two empirical histograms."""
    ma, mb = _aligned_masses(a, b)
    return float(np.abs(np.cumsum(ma) - np.cumsum(mb)).max())


def convergence_sweep(p, i, n_list, d_max) -> list[tuple[int, float]]:
    """Exact sup_{d <= d_max} |cdf - geometric limit| for each grid size.

    No sampling is involved: each distance is computed from the tabulated
    conditional cdf.  Output is ordered by n.
    """
    if d_max != int(d_max) or int(d_max) < 1:
        raise DomainError(f"d_max={d_max} must be an integer >= 1")
    d_max = int(d_max)
    ns = [int(n) for n in n_list]
    if not ns:
        raise DomainError("n_list must not be empty")
    for n in ns:
        if n < max(int(i), 1):
            raise DomainError(f"n={n} is below the spacing index i={i}")
    if d_max > min(ns):
        raise DomainError(f"d_max={d_max} exceeds the smallest n={min(ns)}")
    d = np.arange(1, d_max + 1)
    limit = _geometric_cdf_curve(float(p), d)
    out = []
    for n in sorted(ns):
        table = spacing_distribution(ModelParams(n, p, i))
        sup = float(np.abs(table.cdf[:d_max] - limit).max())
        out.append((n, sup))
    return out


def scaled_mean_exponential_check(spacings) -> DistanceReport:
    """KS distance of mean-scaled spacings from the unit exponential law.

    The spacings are divided by their sample mean and the empirical CDF is
    compared with 1 - exp(-x) at the observed atoms.  Needs at least 100
    spacings to say anything meaningful.
    """
    x = np.asarray(spacings, dtype=np.float64)
    if x.ndim != 1 or x.size < 100:
        raise EmptySampleError(
            f"need at least 100 spacings for the exponential check, got {x.size}"
        )
    if np.any(x <= 0.0):
        raise DomainError("spacings must be positive")
    scaled = np.sort(x) / x.mean()
    atoms, counts = np.unique(scaled, return_counts=True)
    emp_cdf = np.cumsum(counts) / x.size
    ks = float(np.abs(emp_cdf - (-np.expm1(-atoms))).max())
    return DistanceReport(ks=ks, tv=None, n_effective=int(x.size))
