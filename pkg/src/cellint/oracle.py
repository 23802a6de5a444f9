"""Independent numerical ground truth for xi_l and the Zlobin integrals.

Nothing here touches the symbolic machinery. Expanding every factor
1/(1 - x_i x_{i+1}) geometrically and integrating monomials gives

    xi_l = sum over n_1..n_{l-1} >= 0 of
           1 / ((n_1+1) (n_1+n_2+1) ... (n_{l-2}+n_{l-1}+1) (n_{l-1}+1)),

which is summed one index at a time. Each pass multiplies by the Hankel
matrix 1/(m+n+1), done here with an FFT correlation. Truncating every index
below N leaves a tail with an expansion in log(N)^j / N that is removed by a
least-squares fit across cutoffs N, N/2, N/4, ...

Likewise the Zlobin integral of x_l^{l-2} / prod_{j<l} (1 - x_j x_l) equals
sum_S c_S / (S + l - 1) with c the (l-1)-fold convolution power of 1/(n+1).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict

import numpy as np
from scipy.signal import fftconvolve

from .estimate import Estimate

RNG_ALGORITHM = "numpy PCG64, one SeedSequence.spawn child per chunk"


def default_series_N() -> int:
    return int(float(os.environ.get("CELLINT_SERIES_N", 20000)))


def default_mc_samples() -> int:
    return int(float(os.environ.get("CELLINT_MC_SAMPLES", 1e7)))


@dataclass(frozen=True)
class SeriesConfig:
    """Finest cutoff ``N`` and the number of halvings used in the fit.

    ``levels=None`` picks l + 3 cutoffs, enough to fit the log(N)^j / N
    terms with j <= l - 2, a 1/N^2 term, and one spare level for the error
    estimate.
    """

    N: int = 20000
    levels: int | None = None

    def __post_init__(self):
        if self.N < 2:
            raise ValueError("cutoff N must be at least 2")
        if self.levels is not None and self.levels < 2:
            raise ValueError("need at least two extrapolation levels")


def _hankel_pass(v: np.ndarray, h: np.ndarray) -> np.ndarray:
    """(H v)_m = sum_n v_n / (m + n + 1) for m < N."""
    N = len(v)
    return fftconvolve(h, v[::-1])[N - 1:2 * N - 1]


def xi_partial_sum(l: int, N: int) -> float:
    """The series for xi_l with every index restricted to 0..N-1."""
    if l < 2:
        raise ValueError("l must be at least 2")
    n = np.arange(N, dtype=float)
    h = 1.0 / (np.arange(2 * N - 1, dtype=float) + 1.0)
    v = 1.0 / (n + 1.0)
    for _ in range(l - 2):
        v = _hankel_pass(v, h)
    return float(np.sum(v / (n + 1.0)))


def zlobin_partial_sum(l: int, N: int) -> float:
    """sum_{S < N} c_S / (S + l - 1)."""
    if l < 2:
        raise ValueError("l must be at least 2")
    a = 1.0 / (np.arange(N, dtype=float) + 1.0)
    c = a.copy()
    for _ in range(l - 2):
        c = fftconvolve(c, a)[:N]
    S = np.arange(N, dtype=float)
    return float(np.sum(c / (S + l - 1.0)))


def _extrapolate(partial, l: int, cfg: SeriesConfig) -> tuple[Estimate, dict]:
    levels = cfg.levels or l + 3
    Ns = np.array([cfg.N >> k for k in range(levels)][::-1], dtype=float)
    if Ns[0] < 4:
        raise ValueError(f"cutoff N={cfg.N} too small for {levels} levels")
    S = np.array([partial(l, int(N)) for N in Ns])
    cols = [np.ones_like(Ns)] + [np.log(Ns) ** j / Ns for j in range(l - 1)] + [Ns ** -2.0]
    A = np.array(cols).T
    k = A.shape[1]
    if levels <= k:
        A, k = A[:, :levels - 1], levels - 1
    fine = np.linalg.lstsq(A[-k:], S[-k:], rcond=None)[0][0]
    coarse = np.linalg.lstsq(A[-k - 1:-1], S[-k - 1:-1], rcond=None)[0][0]
    err = abs(fine - coarse) + 1e-13 * abs(fine)
    return Estimate(float(fine), float(err)), {"cutoffs": Ns.astype(int).tolist(), "partial_sums": S.tolist()}


def xi_series(l: int, cfg: SeriesConfig | None = None) -> Estimate:
    """xi_l from the geometric-expansion series, extrapolated in the cutoff."""
    cfg = cfg or SeriesConfig(default_series_N())
    return _extrapolate(xi_partial_sum, l, cfg)[0]


def richardson_residual(l: int, N: int) -> float:
    """|est(2N) - est(N)| for the extrapolated xi_l series."""
    return abs(xi_series(l, SeriesConfig(2 * N)).value - xi_series(l, SeriesConfig(N)).value)


# -- Monte Carlo ---------------------------------------------------------------------

@dataclass(frozen=True)
class MCEstimate:
    value: float
    stderr: float
    samples: int
    seed: int
    chunk: int
    algorithm: str = RNG_ALGORITHM

    def to_dict(self) -> dict:
        return asdict(self)

    def within(self, target: float, k: float = 3.0) -> bool:
        return abs(self.value - target) <= k * self.stderr

    def zscore(self, target: float) -> float:
        return (self.value - target) / self.stderr


def _xi_integrand(x: np.ndarray) -> np.ndarray:
    return 1.0 / np.prod(1.0 - x[:, :-1] * x[:, 1:], axis=1)


def _zlobin_integrand(x: np.ndarray) -> np.ndarray:
    l = x.shape[1]
    last = x[:, -1:]
    return last[:, 0] ** (l - 2) / np.prod(1.0 - x[:, :-1] * last, axis=1)


def _montecarlo(f, l: int, samples: int, seed: int, chunk: int, workers: int) -> MCEstimate:
    if l < 2:
        raise ValueError("l must be at least 2")
    if samples < 10_000:
        raise ValueError("use at least 10^4 samples")
    nchunks = -(-samples // chunk)
    children = np.random.SeedSequence(seed).spawn(nchunks)

    def run(i):
        m = min(chunk, samples - i * chunk)
        x = np.random.Generator(np.random.PCG64(children[i])).random((m, l))
        v = f(x)
        return math.fsum(v), math.fsum(v * v)

    if workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(run, range(nchunks)))
    else:
        parts = [run(i) for i in range(nchunks)]
    s = math.fsum(p[0] for p in parts)
    s2 = math.fsum(p[1] for p in parts)
    mean = s / samples
    var = max(s2 / samples - mean * mean, 0.0) * samples / (samples - 1)
    return MCEstimate(mean, math.sqrt(var / samples), samples, seed, chunk)


def xi_montecarlo(l: int, samples: int | None = None, seed: int = 0,
                  chunk: int = 1 << 20, workers: int = 1) -> MCEstimate:
    """Plain Monte Carlo over [0,1]^l with chunked, seed-derived substreams.

    The result depends only on (l, samples, seed, chunk), never on ``workers``.
    The integrand has a heavy tail near the corner x = (1, ..., 1), so the
    standard error is itself noisy for large l.
    """
    return _montecarlo(_xi_integrand, l, samples or default_mc_samples(), seed, chunk, workers)


def zlobin_exact(l: int) -> Estimate:
    """(l-1)! zeta(l), with zeta from the nested-sum evaluator."""
    from .mzv import zeta_numeric

    return math.factorial(l - 1) * zeta_numeric((l,), 1e-10)


def zlobin_I(l: int, method: str = "series", *, N: int | None = None, samples: int | None = None,
             seed: int = 0, chunk: int = 1 << 20, workers: int = 1):
    """Integral of x_l^{l-2} / prod_{j<l} (1 - x_j x_l) over [0,1]^l."""
    if method == "series":
        return _extrapolate(zlobin_partial_sum, l, SeriesConfig(N or default_series_N()))[0]
    if method == "mc":
        return _montecarlo(_zlobin_integrand, l, samples or default_mc_samples(), seed, chunk, workers)
    raise ValueError(f"unknown method {method!r}; use 'series' or 'mc'")
