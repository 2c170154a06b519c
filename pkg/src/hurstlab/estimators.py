"""Hurst exponent estimators: R/S, MF-DFA (DFA = q=2), DMA, and GHE.

Every estimator takes a series of increments, computes a fluctuation
statistic over a grid of scales, and reads the Hurst exponent off an OLS
regression of log-fluctuation on log-scale:

    R/S     mean rescaled range  (R/S)_s  ~ c * s^H          H = slope
    MF-DFA  F_q(s)               ~ c * s^H(q)                H = slope
    DMA     F^2(window)          ~ c * window^(2H)           H = slope / 2
    GHE     K_q(lag)             ~ c * lag^(q*H(q))          H = slope / q

Windows are contiguous and non-overlapping, taken from the start of the
series; the trailing ``len(x) mod scale`` observations are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DegenerateRegressionError,
    DegenerateSeriesError,
    InsufficientScalesError,
    ParameterError,
)
from .series import INCREMENTS, LEVELS, Series

__all__ = [
    "Method",
    "MethodSpec",
    "EstimatorConfig",
    "ScaleGrid",
    "LogLogFit",
    "HurstEstimate",
    "Series",
    "build_profile",
    "make_scale_grid",
    "loglog_fit",
    "estimate_rs",
    "estimate_mfdfa",
    "estimate_dfa",
    "estimate_dma",
    "ghe_kq",
    "estimate_ghe",
    "estimate",
    "parse_method_spec",
]


class Method(str, Enum):
    RS = "rs"
    MFDFA = "mfdfa"
    DMA = "dma"
    GHE = "ghe"


class MethodSpec(NamedTuple):
    """An estimation method plus its moment order (q = 1 for R/S and DMA)."""

    method: Method
    q: float = 1.0

    def label(self) -> str:
        if self.method in (Method.MFDFA, Method.GHE):
            return f"{self.method.value}:{self.q:g}"
        return self.method.value


@dataclass(frozen=True)
class EstimatorConfig:
    """Scale-selection settings shared by all estimators.

    Defaults: power-of-2 scale grid from 16 up to a quarter of the series
    length (R/S and MF-DFA), moving-average windows 20..40 (DMA), lags 1..19
    (GHE), and linear detrending (MF-DFA).
    """

    scale_base: int = 2
    min_scale: int = 16
    max_scale_fraction: float = 0.25
    dma_lambda_min: int = 20
    dma_lambda_max: int = 40
    ghe_tau_min: int = 1
    ghe_tau_max: int = 19
    detrend_order: int = 1

    def __post_init__(self):
        if self.scale_base < 2:
            raise ParameterError(f"scale_base must be >= 2, got {self.scale_base}")
        if self.min_scale < 2:
            raise ParameterError(f"min_scale must be >= 2, got {self.min_scale}")
        if not (0.0 < self.max_scale_fraction <= 1.0):
            raise ParameterError(
                f"max_scale_fraction must be in (0, 1], got {self.max_scale_fraction}"
            )
        if not (0 < self.dma_lambda_min < self.dma_lambda_max):
            raise ParameterError(
                f"need 0 < dma_lambda_min < dma_lambda_max, got "
                f"[{self.dma_lambda_min}, {self.dma_lambda_max}]"
            )
        if not (0 < self.ghe_tau_min < self.ghe_tau_max):
            raise ParameterError(
                f"need 0 < ghe_tau_min < ghe_tau_max, got "
                f"[{self.ghe_tau_min}, {self.ghe_tau_max}]"
            )
        if self.detrend_order < 1:
            raise ParameterError(f"detrend_order must be >= 1, got {self.detrend_order}")


@dataclass(frozen=True)
class ScaleGrid:
    """Strictly increasing window sizes (or lags) for the fluctuation sweep."""

    scales: tuple[int, ...]

    def __post_init__(self):
        if len(self.scales) < 2:
            raise InsufficientScalesError(
                f"a scaling regression needs at least 2 scales, got {list(self.scales)}"
            )
        arr = np.asarray(self.scales)
        if (arr <= 0).any() or (np.diff(arr) <= 0).any():
            raise ParameterError(f"scales must be strictly increasing positives, got {list(self.scales)}")

    def __iter__(self):
        return iter(self.scales)


@dataclass(frozen=True)
class LogLogFit:
    """OLS fit of log(fluctuation) on log(scale), with its input points."""

    slope: float
    intercept: float
    r_squared: float
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class HurstEstimate:
    method: Method
    q: float
    hurst: float
    fit: LogLogFit


def build_profile(series: Series, subtract_mean: bool = True) -> Series:
    """Cumulate increments into a profile, optionally around their mean.

    With ``subtract_mean`` the profile is the running sum of deviations from
    the series mean, so its last element is exactly zero.
    """
    _require_kind(series, INCREMENTS, "build_profile")
    x = series.values
    if subtract_mean:
        x = x - x.mean()
    return Series(np.cumsum(x), kind=LEVELS)


def make_scale_grid(series_length: int, config: EstimatorConfig) -> ScaleGrid:
    """All powers of ``scale_base`` between ``min_scale`` and
    ``series_length * max_scale_fraction``, ascending."""
    cap = series_length * config.max_scale_fraction
    scales = []
    scale = 1
    while scale < config.min_scale:
        scale *= config.scale_base
    while scale <= cap:
        scales.append(scale)
        scale *= config.scale_base
    if len(scales) < 2:
        raise InsufficientScalesError(
            f"series length {series_length} admits {len(scales)} scale(s) in "
            f"[{config.min_scale}, {cap:g}] at base {config.scale_base}; need at least 2"
        )
    return ScaleGrid(tuple(scales))


def loglog_fit(points: Iterable[tuple[float, float]]) -> LogLogFit:
    """OLS of log(y) on log(x) for positive (x, y) pairs.

    r_squared is reported as 1.0 when the responses are constant (the fit is
    then exact by construction).
    """
    pts = [(float(x), float(y)) for x, y in points]
    if len(pts) < 2:
        raise ParameterError(f"loglog_fit needs at least 2 points, got {len(pts)}")
    arr = np.asarray(pts)
    if not np.isfinite(arr).all() or (arr <= 0.0).any():
        raise ParameterError("loglog_fit needs strictly positive finite coordinates")
    lx = np.log(arr[:, 0])
    ly = np.log(arr[:, 1])
    dx = lx - lx.mean()
    sxx = float(np.dot(dx, dx))
    if sxx == 0.0:
        raise DegenerateRegressionError("all scales identical; slope is undefined")
    slope = float(np.dot(dx, ly) / sxx)
    intercept = float(ly.mean() - slope * lx.mean())
    dy = ly - ly.mean()
    sst = float(np.dot(dy, dy))
    if sst == 0.0:
        r2 = 1.0
    else:
        resid = ly - (intercept + slope * lx)
        r2 = 1.0 - float(np.dot(resid, resid)) / sst
        r2 = min(1.0, max(0.0, r2))
    return LogLogFit(slope, intercept, r2, tuple(zip(lx.tolist(), ly.tolist())))


def estimate_rs(series: Series, config: EstimatorConfig = EstimatorConfig()) -> HurstEstimate:
    """Rescaled range analysis.

    Per scale: split into floor(n/scale) windows, build each window's
    mean-subtracted profile, and average range / population-std over the
    windows; zero-std windows are skipped, and a scale where every window is
    degenerate raises.
    """
    _require_kind(series, INCREMENTS, "estimate_rs")
    x = series.values
    grid = make_scale_grid(x.size, config)
    mean_rs = []
    for scale in grid:
        windows = x[: (x.size // scale) * scale].reshape(-1, scale)
        profile = np.cumsum(windows - windows.mean(axis=1, keepdims=True), axis=1)
        rng = profile.max(axis=1) - profile.min(axis=1)
        std = windows.std(axis=1)
        ok = std > 0.0
        if not ok.any():
            raise DegenerateSeriesError(
                f"every window at scale {scale} has zero standard deviation"
            )
        mean_rs.append(float(np.mean(rng[ok] / std[ok])))
    fit = loglog_fit(zip(grid.scales, mean_rs))
    return HurstEstimate(Method.RS, 1.0, fit.slope, fit)


def estimate_mfdfa(
    series: Series, q: float, config: EstimatorConfig = EstimatorConfig()
) -> HurstEstimate:
    """Multifractal detrended fluctuation analysis with linear detrending.

    Per scale and window: profile the window (mean-subtracted running sum),
    remove an OLS line, and take the mean squared residual m_i; the scale's
    fluctuation is (mean over windows of m_i^(q/2))^(1/q).
    """
    _require_kind(series, INCREMENTS, "estimate_mfdfa")
    if q <= 0.0:
        raise ParameterError(f"q must be positive, got {q}")
    if config.detrend_order != 1:
        raise ParameterError(
            f"only linear detrending is supported, got detrend_order={config.detrend_order}"
        )
    x = series.values
    grid = make_scale_grid(x.size, config)
    fq = []
    for scale in grid:
        windows = x[: (x.size // scale) * scale].reshape(-1, scale)
        profile = np.cumsum(windows - windows.mean(axis=1, keepdims=True), axis=1)
        t = np.arange(scale, dtype=np.float64) - (scale - 1) / 2.0
        slopes = profile @ t / np.dot(t, t)
        resid = profile - profile.mean(axis=1, keepdims=True) - slopes[:, None] * t
        msq = np.mean(resid * resid, axis=1)
        if not (msq > 0.0).any():
            raise DegenerateSeriesError(
                f"every window at scale {scale} detrends to zero residual"
            )
        fq.append(float(np.mean(msq ** (q / 2.0)) ** (1.0 / q)))
    fit = loglog_fit(zip(grid.scales, fq))
    return HurstEstimate(Method.MFDFA, float(q), fit.slope, fit)


def estimate_dfa(series: Series, config: EstimatorConfig = EstimatorConfig()) -> HurstEstimate:
    """Classical DFA: MF-DFA at q = 2 (identical output by construction)."""
    return estimate_mfdfa(series, 2.0, config)


def estimate_dma(series: Series, config: EstimatorConfig = EstimatorConfig()) -> HurstEstimate:
    """Detrending moving average with a simple backward moving average.

    The profile is the plain running sum; for each window length the
    fluctuation is the mean squared deviation of the profile from its
    backward moving average, and log F^2 vs log window has slope 2H.
    """
    _require_kind(series, INCREMENTS, "estimate_dma")
    x = series.values
    if x.size <= config.dma_lambda_max:
        raise ParameterError(
            f"series length {x.size} must exceed dma_lambda_max={config.dma_lambda_max}"
        )
    profile = np.cumsum(x)
    csum = np.concatenate(([0.0], np.cumsum(profile)))
    lambdas = range(config.dma_lambda_min, config.dma_lambda_max + 1)
    f2 = []
    for lam in lambdas:
        ma = (csum[lam:] - csum[:-lam]) / lam
        dev = profile[lam - 1 :] - ma
        f2.append(float(np.mean(dev * dev)))
    if not any(v > 0.0 for v in f2):
        raise DegenerateSeriesError("zero moving-average fluctuation at every window length")
    fit = loglog_fit(zip(lambdas, f2))
    return HurstEstimate(Method.DMA, 1.0, fit.slope / 2.0, fit)


def ghe_kq(series: Series, q: float, tau: int) -> float:
    """Mean q-th absolute moment of lag-tau differences of a level series."""
    _require_kind(series, LEVELS, "ghe_kq")
    if q <= 0.0:
        raise ParameterError(f"q must be positive, got {q}")
    if not (0 < tau < len(series)):
        raise ParameterError(f"tau must be in [1, {len(series) - 1}], got {tau}")
    return _abs_moment(series.values[tau:] - series.values[:-tau], q)


def _abs_moment(diff: np.ndarray, q: float) -> float:
    if q == 2.0:
        return float(np.mean(diff * diff))
    if q == 1.0:
        return float(np.mean(np.abs(diff)))
    return float(np.mean(np.abs(diff) ** q))


def estimate_ghe(
    series: Series, q: float, config: EstimatorConfig = EstimatorConfig()
) -> HurstEstimate:
    """Generalized Hurst exponent: K_q(lag) ~ c * lag^(q*H(q)).

    Increments are cumulated into levels (no mean subtraction) and K_q is
    regressed on the lag grid; H = slope / q.
    """
    _require_kind(series, INCREMENTS, "estimate_ghe")
    if q <= 0.0:
        raise ParameterError(f"q must be positive, got {q}")
    x = series.values
    if x.size <= config.ghe_tau_max:
        raise ParameterError(
            f"series length {x.size} must exceed ghe_tau_max={config.ghe_tau_max}"
        )
    levels = np.cumsum(x)
    taus = range(config.ghe_tau_min, config.ghe_tau_max + 1)
    kq = [_abs_moment(levels[tau:] - levels[:-tau], q) for tau in taus]
    if not any(v > 0.0 for v in kq):
        raise DegenerateSeriesError("K_q vanishes at every lag")
    fit = loglog_fit(zip(taus, kq))
    return HurstEstimate(Method.GHE, float(q), fit.slope / q, fit)


def estimate(
    series: Series, spec: MethodSpec, config: EstimatorConfig = EstimatorConfig()
) -> HurstEstimate:
    """Dispatch to the estimator named by ``spec``."""
    return _ESTIMATORS[spec.method](series, spec, config)


_ESTIMATORS = {
    Method.RS: lambda s, spec, cfg: estimate_rs(s, cfg),
    Method.MFDFA: lambda s, spec, cfg: estimate_mfdfa(s, spec.q, cfg),
    Method.DMA: lambda s, spec, cfg: estimate_dma(s, cfg),
    Method.GHE: lambda s, spec, cfg: estimate_ghe(s, spec.q, cfg),
}


def parse_method_spec(token: str, q: float | None = None) -> MethodSpec:
    """Parse ``name[:q]`` tokens like ``rs``, ``dma``, ``dfa``, ``mfdfa:1``,
    ``ghe:2``; an explicit ``q`` argument overrides a missing suffix."""
    name, sep, qtext = token.strip().lower().partition(":")
    embedded = None
    if sep:
        try:
            embedded = float(qtext)
        except ValueError:
            raise ParameterError(f"bad q in method {token!r}") from None
    if name == "dfa":
        if embedded is not None:
            raise ParameterError(f"dfa takes no q (got {token!r}); use mfdfa:q instead")
        return MethodSpec(Method.MFDFA, 2.0)
    try:
        method = Method(name)
    except ValueError:
        raise ParameterError(
            f"unknown method {token!r}; expected rs, dma, dfa, mfdfa:q or ghe:q"
        ) from None
    if method in (Method.RS, Method.DMA):
        if embedded is not None:
            raise ParameterError(f"{name} takes no q (got {token!r})")
        return MethodSpec(method, 1.0)
    qval = embedded if embedded is not None else q
    if qval is None:
        raise ParameterError(f"method {name!r} needs a moment order, e.g. {name}:2")
    if qval <= 0:
        raise ParameterError(f"q must be positive, got {qval}")
    return MethodSpec(method, float(qval))


def _require_kind(series: Series, kind: str, op: str) -> None:
    if series.kind != kind:
        raise ParameterError(f"{op} expects a {kind} series, got {series.kind}")
