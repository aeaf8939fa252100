"""Log-domain probability arithmetic.

Probabilities at large grid sizes underflow double precision (for example
0.9**50001 is about 1e-2288), so sums in this package are carried out on
natural logarithms, with ``-inf`` as the exact representation of
probability zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

_NEG_INF = float("-inf")

# Rounding slack: log-sum-exp over masses that sum to 1 can land a few ulp
# above 0; anything larger than this is a genuine contract violation.
_LOG_SLACK = 1e-9


def logaddexp(a: float, b: float) -> float:
    """log(exp(a) + exp(b)) without overflow; tolerates -inf inputs."""
    if a == _NEG_INF:
        return b
    if b == _NEG_INF:
        return a
    m = a if a >= b else b
    return m + math.log1p(math.exp(-abs(a - b)))


@dataclass(frozen=True, order=True)
class LogProb:
    """A probability stored as its natural logarithm.

    ``log`` is a float <= 0; ``-inf`` encodes exact probability zero.
    Addition uses log-sum-exp and cannot overflow for inputs that are
    genuine probabilities; multiplication is addition of logs.
    """

    log: float

    def __post_init__(self) -> None:
        from .errors import DomainError

        if math.isnan(self.log):
            raise DomainError("log-probability is NaN")
        if self.log > _LOG_SLACK:
            raise DomainError(f"log-probability {self.log} is above log(1)")
        if self.log > 0.0:
            object.__setattr__(self, "log", 0.0)

    @classmethod
    def zero(cls) -> "LogProb":
        return cls(_NEG_INF)

    @classmethod
    def one(cls) -> "LogProb":
        return cls(0.0)

    @classmethod
    def from_prob(cls, value: float) -> "LogProb":
        from .errors import DomainError

        if not 0.0 <= value <= 1.0 + _LOG_SLACK:
            raise DomainError(f"probability {value} outside [0, 1]")
        if value == 0.0:
            return cls.zero()
        return cls(min(math.log(value), 0.0))

    @property
    def prob(self) -> float:
        return math.exp(self.log)

    @property
    def is_zero(self) -> bool:
        return self.log == _NEG_INF

    def __add__(self, other: "LogProb") -> "LogProb":
        return LogProb(logaddexp(self.log, other.log))

    def __mul__(self, other: "LogProb") -> "LogProb":
        return LogProb(self.log + other.log)


def log_pow(log_base: float, k) -> float | np.ndarray:
    """log(b**k) given log(b), with the 0**0 = 1 convention.

    k = 0 yields 0.0 even when log_base is -inf (b = 0), matching the
    convention that a vacuous power contributes a factor of one.
    """
    if np.isscalar(k):
        return 0.0 if k == 0 else k * log_base
    k = np.asarray(k, dtype=np.float64)
    with np.errstate(invalid="ignore"):
        return np.where(k == 0, 0.0, k * log_base)


def log_binomial(m, k) -> float | np.ndarray:
    """log of binomial(m, k) via lgamma; -inf where k < 0 or k > m."""
    m = np.asarray(m, dtype=np.float64)
    k = np.asarray(k, dtype=np.float64)
    valid = (k >= 0) & (k <= m)
    kk = np.where(valid, k, 0.0)
    out = gammaln(m + 1.0) - gammaln(kk + 1.0) - gammaln(m - kk + 1.0)
    out = np.where(valid, out, _NEG_INF)
    if out.ndim == 0:
        return float(out)
    return out


def log_binomial_fixed_k(j, k: int) -> float | np.ndarray:
    """log of binomial(j, k) for a fixed small k, as an exact product.

    Writing C(j, k) = prod_{t=1..k} (j - k + t) / t keeps the absolute error
    of the log near k ulp.  The lgamma route subtracts two numbers of size
    ~j*log(j), which costs ~1e-9 of absolute accuracy at j ~ 1e6 and would
    dominate the error budget of downstream mass sums.  Falls back to
    lgamma for k > 64 where the product form stops being cheap.
    """
    if k > 64:
        return log_binomial(j, k)
    scalar = np.isscalar(j)
    j = np.asarray(j, dtype=np.float64)
    out = np.zeros(j.shape, dtype=np.float64)
    with np.errstate(invalid="ignore", divide="ignore"):
        for t in range(1, k + 1):
            out += np.log(j - k + t)
    out -= math.lgamma(k + 1)
    out = np.where(j >= k, out, _NEG_INF)
    if scalar:
        return float(out)
    return out
