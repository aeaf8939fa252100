"""Seedable Monte Carlo engine for Bernoulli thinning.

Reproducibility contract: a given (parameters, seed) pair produces
bit-identical results on every run of the same build.  Large trial counts
are partitioned into fixed-size blocks; block b draws from a child of
``numpy.random.SeedSequence(seed)``, and block results merge by addition,
so the outcome is independent of how many worker threads are used.

The worker count defaults to 1 and can be raised per call or capped
globally through the ``SPACINGS_THREADS`` environment variable.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .sequences import PointSet

THREADS_ENV = "SPACINGS_THREADS"

_BLOCK_CELLS = 1 << 22  # grid cells simulated per block
_STREAM_CHUNK = 1 << 20


def _check_seed(seed) -> int:
    if seed != int(seed):
        raise DomainError(f"seed={seed} must be an integer")
    seed = int(seed)
    if not 0 <= seed < 1 << 64:
        raise DomainError(f"seed={seed} outside the unsigned 64-bit range")
    return seed


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 < p <= 1.0:
        raise DomainError(f"survival probability p={p} must be in (0, 1]")
    return p


def _resolve_workers(workers) -> int:
    if workers is None:
        env = os.environ.get(THREADS_ENV)
        if env is None:
            return 1
        try:
            workers = int(env)
        except ValueError as exc:
            raise DomainError(f"{THREADS_ENV}={env!r} is not an integer") from exc
    workers = int(workers)
    if workers < 1:
        raise DomainError(f"worker count {workers} must be >= 1")
    return workers


@dataclass(frozen=True)
class SampleRun:
    """One Bernoulli thinning of a point set.

    ``survivors`` holds the indices of the retained points; ``spacings``
    are the gaps between the values of consecutive survivors and sum to
    (last survivor) - (first survivor).
    """

    points: PointSet
    p: float
    seed: int
    survivors: np.ndarray

    @property
    def survivor_values(self) -> np.ndarray:
        return self.points.points[self.survivors]

    @property
    def spacings(self) -> np.ndarray:
        return np.diff(self.survivor_values)


def sample_subset(points: PointSet, p, seed) -> SampleRun:
    """Retain each point independently with probability p."""
    p = _check_p(p)
    seed = _check_seed(seed)
    rng = np.random.default_rng(seed)
    keep = rng.random(len(points)) < p
    survivors = np.flatnonzero(keep)
    survivors.flags.writeable = False
    return SampleRun(points, p, seed, survivors)


def ith_scaled_spacing(run: SampleRun, i, n) -> int | None:
    """Gap between the i-th and (i+1)-th survivors of a grid(n) run, in steps.

    Returns None when the run has at most i survivors (the conditioning
    event failed).
    """
    if i != int(i) or int(i) < 1:
        raise DomainError(f"i={i} must be an integer >= 1")
    if n != int(n) or int(n) < 1:
        raise DomainError(f"n={n} must be an integer >= 1")
    i, n = int(i), int(n)
    if len(run.survivors) <= i:
        return None
    values = run.survivor_values
    return int(round(n * float(values[i] - values[i - 1])))


@dataclass
class EmpiricalDistribution:
    """Observed counts of integer scaled spacings from repeated trials."""

    counts: dict[int, float]
    discarded: int = 0

    @property
    def total(self) -> float:
        return sum(self.counts.values())

    @property
    def max_observed(self) -> int:
        return max(self.counts) if self.counts else 0

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Support 1..max_observed and the count of each value."""
        dmax = self.max_observed
        d = np.arange(1, dmax + 1)
        c = np.zeros(dmax)
        for val, cnt in self.counts.items():
            c[val - 1] = cnt
        return d, c


def _simulate_block(child: np.random.SeedSequence, n: int, p: float, i: int,
                    rows: int) -> tuple[np.ndarray, int]:
    rng = np.random.default_rng(child)
    keep = rng.random((rows, n + 1)) < p
    row_idx, col_idx = np.nonzero(keep)
    per_row = np.bincount(row_idx, minlength=rows)
    qualifying = np.flatnonzero(per_row > i)
    offsets = np.concatenate(([0], np.cumsum(per_row)))
    gaps = col_idx[offsets[qualifying] + i] - col_idx[offsets[qualifying] + i - 1]
    return np.bincount(gaps), rows - qualifying.size


def collect_empirical(n, p, i, trials, seed, workers=None) -> EmpiricalDistribution:
    """Thin grid(n) repeatedly and histogram the i-th scaled spacing.

    Trials whose runs have at most i survivors are counted as discarded.
    The trial partitioning into blocks is a function of n alone, so results
    depend only on (n, p, i, trials, seed), never on the worker count.
    """
    if trials != int(trials) or int(trials) < 1:
        raise DomainError(f"trials={trials} must be an integer >= 1")
    if n != int(n) or int(n) < 1:
        raise DomainError(f"n={n} must be an integer >= 1")
    if i != int(i) or not 1 <= int(i) <= int(n):
        raise DomainError(f"i={i} outside 1..{n}")
    n, i, trials = int(n), int(i), int(trials)
    p = _check_p(p)
    seed = _check_seed(seed)
    workers = _resolve_workers(workers)

    rows_per_block = max(1, _BLOCK_CELLS // (n + 1))
    n_blocks = (trials + rows_per_block - 1) // rows_per_block
    children = np.random.SeedSequence(seed).spawn(n_blocks)
    sizes = [min(rows_per_block, trials - b * rows_per_block) for b in range(n_blocks)]

    if workers == 1:
        results = [
            _simulate_block(children[b], n, p, i, sizes[b]) for b in range(n_blocks)
        ]
    else:
        with ThreadPoolExecutor(max_workers=min(workers, n_blocks)) as pool:
            results = list(
                pool.map(lambda b: _simulate_block(children[b], n, p, i, sizes[b]),
                         range(n_blocks))
            )

    width = max((r[0].size for r in results), default=0)
    merged = np.zeros(max(width, 1), dtype=np.int64)
    discarded = 0
    for bins, missed in results:
        merged[: bins.size] += bins
        discarded += missed
    counts = {int(d): int(c) for d, c in enumerate(merged) if d >= 1 and c > 0}
    return EmpiricalDistribution(counts, discarded)


def inter_arrival_stream(p, seed, count) -> np.ndarray:
    """First ``count`` gaps between successes of an endless Bernoulli(p) process.

    The process is simulated directly: chunks of independent trials are
    drawn and the index differences of successive successes are emitted.
    Each gap is a positive integer and the gaps are i.i.d.
    """
    p = _check_p(p)
    seed = _check_seed(seed)
    if count != int(count) or int(count) < 1:
        raise DomainError(f"count={count} must be an integer >= 1")
    count = int(count)
    rng = np.random.default_rng(seed)
    pieces = []
    collected = 0
    prev = -1  # index of the previous success
    base = 0
    while collected < count:
        hits = rng.random(_STREAM_CHUNK) < p
        positions = np.flatnonzero(hits) + base
        if positions.size:
            gaps = np.diff(positions, prepend=prev)
            pieces.append(gaps)
            collected += gaps.size
            prev = int(positions[-1])
        base += _STREAM_CHUNK
    return np.concatenate(pieces)[:count]
