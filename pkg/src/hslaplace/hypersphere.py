"""Measure-level layer: Laplace transforms on hyperspheres and the ensemble exhibit.

The hypersphere M_{n,r} is the set of positive vectors with fixed geometric
mean, prod y_k = r^n.  The Laplace transform of its multiplicative-group
invariant measure depends on the dual vector f only through the geometric
mean rho(f):

    ln D_n(f) = ln F_n(rho(f) * r).

The critical value lambda_cr of the effective argument separates exponential
divergence of F_n from exponential vanishing; the unit-crossing sequence
lambda_n (where F_n = 1 exactly) converges to it.  The ensemble comparison
table shows that no radius schedule r_n makes (ln D_n)/n converge to the
log-Laplace functional ln Psi_theta(f) = -theta int ln f of the limiting
invariant measure, except by pinning rho(f) r_n to lambda_cr where both
sides are driven to zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .logvalue import LogValue
from .oracles import (
    Method,
    OracleResult,
    f1_exact,
    f2_exact,
    fn_contour,
    fn_montecarlo,
    fn_quadrature,
    fn_saddle_asymptotic,
)
from .saddle import critical_point


@dataclass(frozen=True)
class HypersphereSpec:
    """Dimension n, radius r (product constraint prod y_k = r^n), dual vector f."""

    n: int
    r: float
    f: tuple[float, ...]

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError("dimension n must be an integer >= 1")
        if not (math.isfinite(self.r) and self.r > 0.0):
            raise ValueError("radius r must be a positive real")
        if len(self.f) != self.n:
            raise ValueError("f must have exactly n entries")
        if any(not math.isfinite(v) or v <= 0.0 for v in self.f):
            raise ValueError("all entries of f must be positive reals")


@dataclass(frozen=True)
class GrandEnsembleSpec:
    """Discretised log-Laplace functional: theta, samples of f, quadrature weights."""

    theta: float
    f: tuple[float, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        if not (math.isfinite(self.theta) and self.theta > 0.0):
            raise ValueError("theta must be a positive real")
        if len(self.f) != len(self.weights) or not self.f:
            raise ValueError("f and weights must be nonempty and of equal length")
        if any(not math.isfinite(v) or v <= 0.0 for v in self.f):
            raise ValueError("all entries of f must be positive reals")
        if any(w < 0.0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if abs(math.fsum(self.weights) - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1 within 1e-12")


class Regime(str, enum.Enum):
    DIVERGES = "diverges"
    VANISHES = "vanishes"
    CRITICAL_BAND = "critical-band"


@dataclass(frozen=True)
class RegimeReport:
    """Where lambda_eff sits relative to the critical point, with margin."""

    lambda_eff: float
    regime: Regime
    margin: float


@dataclass(frozen=True)
class EnsembleRow:
    n: int
    lambda_eff: float
    ln_dn_per_n: float
    regime: Regime
    ln_psi_theta: float


def geometric_mean(f) -> float:
    """exp(mean(ln f_k)), accumulated in log space.

    Sorting the logs before summation makes the result bitwise independent
    of the input order, which downstream permutation invariance relies on.
    """
    arr = np.asarray(f, dtype=float)
    if arr.size == 0:
        raise ValueError("geometric_mean requires at least one entry")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError("geometric_mean requires positive entries")
    logs = np.sort(np.log(arr))
    return float(np.exp(logs.sum() / arr.size))


def laplace_dn(
    spec: HypersphereSpec,
    method: Method | str = "auto",
    tol: float = 1e-9,
    samples: int = 100_000,
    seed: int = 0,
) -> OracleResult:
    """ln D_n(f) = ln F_n(rho(f) * r) by the selected oracle.

    ``method`` is one of the Method values or "auto" (closed form for
    n <= 2, contour otherwise).  Invariant under permutations of f and
    under rescalings f -> c * f with prod c_k = 1, since only the
    geometric mean enters.
    """
    lam_eff = geometric_mean(spec.f) * spec.r
    name = method.value if isinstance(method, Method) else str(method)
    if name == "auto":
        name = Method.CLOSED_FORM.value if spec.n <= 2 else Method.CONTOUR.value
    if name == Method.CLOSED_FORM.value:
        if spec.n == 1:
            return f1_exact(lam_eff)
        if spec.n == 2:
            return f2_exact(lam_eff)
        raise ValueError("closed form is only available for n in {1, 2}")
    if name == Method.QUADRATURE.value:
        return fn_quadrature(spec.n, lam_eff, tol)
    if name == Method.CONTOUR.value:
        return fn_contour(spec.n, lam_eff)
    if name == Method.ASYMPTOTIC.value:
        return fn_saddle_asymptotic(spec.n, lam_eff)
    if name == Method.MONTE_CARLO.value:
        return fn_montecarlo(spec.n, lam_eff, samples, seed)
    raise ValueError(f"unknown oracle selector {method!r}")


def classify_regime(lambda_eff: float, epsilon: float) -> RegimeReport:
    """Divergence / vanishing / critical band, with margin lambda_eff - lambda_cr.

    The band half-width epsilon is caller-supplied on purpose: the dichotomy
    only holds outside a neighbourhood of lambda_cr and there is no natural
    default for its size.
    """
    lambda_eff = float(lambda_eff)
    epsilon = float(epsilon)
    if not (math.isfinite(lambda_eff) and lambda_eff > 0.0):
        raise ValueError("lambda_eff must be a positive real")
    if not (math.isfinite(epsilon) and epsilon > 0.0):
        raise ValueError("epsilon must be a positive real")
    margin = lambda_eff - critical_point().lambda_cr
    if margin < -epsilon:
        regime = Regime.DIVERGES
    elif margin > epsilon:
        regime = Regime.VANISHES
    else:
        regime = Regime.CRITICAL_BAND
    return RegimeReport(lambda_eff=lambda_eff, regime=regime, margin=margin)


def unit_crossing(n: int, residual_tol: float = 1e-10) -> float:
    """The lambda_n with F_n(lambda_n) = 1, by bisection on the contour oracle.

    ln F_n is strictly decreasing in lambda, so a sign change brackets the
    root; the initial bracket [0.3, 3] * lambda_cr is widened up to ten
    times before giving up.
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError("unit_crossing requires integer n >= 2")
    lam_cr = critical_point().lambda_cr
    lo, hi = 0.3 * lam_cr, 3.0 * lam_cr
    f_lo = fn_contour(n, lo).value.ln_value
    f_hi = fn_contour(n, hi).value.ln_value
    widenings = 0
    while not (f_lo > 0.0 > f_hi):
        if widenings >= 10:
            raise RuntimeError("unit_crossing failed to bracket a sign change")
        widenings += 1
        if f_lo <= 0.0:
            lo *= 0.5
            f_lo = fn_contour(n, lo).value.ln_value
        if f_hi >= 0.0:
            hi *= 2.0
            f_hi = fn_contour(n, hi).value.ln_value
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = fn_contour(n, mid).value.ln_value
        if abs(f_mid) < residual_tol:
            return mid
        if f_mid > 0.0:
            lo = mid
        else:
            hi = mid
    raise RuntimeError("unit_crossing bisection stalled")  # pragma: no cover


def psi_theta(spec: GrandEnsembleSpec) -> LogValue:
    """ln Psi_theta(f) = -theta * sum_k weights_k ln f_k."""
    logs = np.log(np.asarray(spec.f, dtype=float))
    w = np.asarray(spec.weights, dtype=float)
    return LogValue(float(-spec.theta * np.dot(w, logs)) + 0.0)


def ensemble_comparison(
    f,
    theta: float,
    radius_schedule: tuple[float, float] | str,
    n_grid,
    epsilon: float,
) -> list[EnsembleRow]:
    """The non-equivalence exhibit: (ln D_n)/n along a radius schedule vs ln Psi_theta.

    ``radius_schedule`` is (c, alpha) for r_n = c * n^alpha, or the string
    "critical" for the pinned schedule r_n = lambda_cr / rho(f).  Rows use
    the contour oracle (valid at every n, so the exhibit is evidence rather
    than a restatement of the asymptotics).  Unless lambda_eff is pinned at
    lambda_cr, (ln D_n)/n tends to ln L(lambda_eff) != 0 and drifts away
    from the fixed value ln Psi_theta(f).
    """
    rho = geometric_mean(f)
    if isinstance(radius_schedule, str):
        if radius_schedule != "critical":
            raise ValueError("radius_schedule must be (c, alpha) or 'critical'")
        c, alpha = critical_point().lambda_cr / rho, 0.0
    else:
        c, alpha = float(radius_schedule[0]), float(radius_schedule[1])
        if not (math.isfinite(c) and c > 0.0):
            raise ValueError("schedule coefficient c must be positive")
    ns = [int(v) for v in n_grid]
    if any(b <= a for a, b in zip(ns, ns[1:])) or any(v < 1 for v in ns):
        raise ValueError("n_grid must be strictly increasing positive integers")
    weights = tuple(1.0 / len(tuple(f)) for _ in tuple(f))
    ln_psi = psi_theta(GrandEnsembleSpec(theta=theta, f=tuple(f), weights=weights)).ln_value
    rows = []
    for n in ns:
        lam_eff = rho * c * n**alpha
        ln_f = fn_contour(n, lam_eff).value.ln_value
        rows.append(
            EnsembleRow(
                n=n,
                lambda_eff=lam_eff,
                ln_dn_per_n=ln_f / n,
                regime=classify_regime(lam_eff, epsilon).regime,
                ln_psi_theta=ln_psi,
            )
        )
    return rows
