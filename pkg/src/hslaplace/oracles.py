"""Independent evaluators of ln F_n(lambda), pairwise cross-checking.

F_n(lambda) is the integral of exp(-lambda sum_k e^{x_k}) over the
hyperplane sum_k x_k = 0, in the coordinate normalisation that integrates
out x_n (so F_1(lambda) = e^{-lambda}).  Four routes compute its log:

* closed forms for n = 1 and n = 2 (F_2 = 2 K0(2 lambda));
* brute-force nested quadrature over [-X, X]^{n-1} for n in {2, 3, 4};
* the inverse Mellin contour integral (any n), trapezoid on the vertical
  line through the saddle abscissa;
* the Gaussian saddle-point approximation (any n);

plus a seeded importance-sampling Monte Carlo estimator.

The contour route uses F_n(lambda) = (1/2 pi) int Gamma(gamma+it)^n
lambda^{-n(gamma+it)} dt.  The 1/(2 pi) normalisation (with no extra 1/n)
is forced by the Mellin pair int_0^inf n F_n(lambda) lambda^{ns-1} dlambda
= Gamma(s)^n: substituting u = lambda^n shows G(u) = F_n(u^{1/n}) has plain
Mellin transform Gamma(s)^n.  The n = 1 and n = 2 closed forms confirm the
normalisation to machine precision, and the same closed forms fix the
Gaussian prefactor to 1/sqrt(2 pi n sigma):  at large lambda
F_2 ~ sqrt(pi/lambda) e^{-2 lambda} and L^2/sqrt(4 pi sigma) reproduces it
exactly with sigma ~ 1/lambda.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .logvalue import LogValue
from .saddle import solve_saddle
from .specfun import bessel_k0, ln_gamma, ln_gamma_complex, trigamma


class Method(str, enum.Enum):
    """How a ln F_n value was obtained."""

    CLOSED_FORM = "closed-form"
    QUADRATURE = "quadrature"
    CONTOUR = "contour"
    MONTE_CARLO = "monte-carlo"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class OracleResult:
    """A ln F_n estimate, an upper-bound claim on its absolute error, and its route."""

    value: LogValue
    err_ln: float
    method: Method


@dataclass(frozen=True)
class ContourSpec:
    """Vertical integration line Re s = gamma, truncated at |Im s| <= half_width.

    half_width / step must be an integer >= 100 so the trapezoid grid hits
    both endpoints exactly.
    """

    gamma: float
    half_width: float
    step: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 0.0):
            raise ValueError("contour abscissa must be positive")
        if not (0.0 < self.step < self.half_width):
            raise ValueError("need 0 < step < half_width")
        ratio = self.half_width / self.step
        if abs(ratio - round(ratio)) > 1e-9 or round(ratio) < 100:
            raise ValueError("half_width/step must be an integer >= 100")


@dataclass(frozen=True)
class QuadratureDomain:
    """Box truncation [-X, X]^{n-1} for the hyperplane integral.

    X is chosen so that lambda * exp(X / (n-1)) >= ln(1/tol) + n X + margin,
    which implies the cruder sufficient condition lambda e^X >= ln(1/tol) + n X:
    outside the box either some coordinate exceeds X directly or the zero-sum
    constraint forces the remaining coordinates above X/(n-1) on average.
    """

    dimension: int
    half_width: float

    @classmethod
    def for_tolerance(cls, n: int, lam: float, tol: float) -> "QuadratureDomain":
        X = 5.0
        target = lam * n + math.log(1.0 / tol)
        for _ in range(200):
            X_new = (n - 1.0) * math.log((target + n * X + 12.0) / lam)
            if abs(X_new - X) < 1e-9:
                break
            X = X_new
        X = max(X, 3.0)
        dom = cls(dimension=n - 1, half_width=X)
        assert lam * math.exp(X) >= math.log(1.0 / tol) + n * X
        return dom


def f1_exact(lam: float) -> OracleResult:
    """ln F_1(lambda) = -lambda: the hyperplane for n = 1 is the point x = 0."""
    lam = _check_lambda(lam)
    return OracleResult(LogValue(-lam), 5e-16 * (1.0 + lam), Method.CLOSED_FORM)


def f2_exact(lam: float) -> OracleResult:
    """ln F_2(lambda) = ln 2 + ln K0(2 lambda).

    With x_2 = -x_1 the integrand is exp(-lambda (e^x + e^-x)) =
    exp(-2 lambda cosh x), and the even integral over the line is
    2 K0(2 lambda).
    """
    lam = _check_lambda(lam)
    return OracleResult(
        LogValue(math.log(2.0) + bessel_k0(2.0 * lam).ln_value),
        1e-10,
        Method.CLOSED_FORM,
    )


# ---------------------------------------------------------------------------
# nested quadrature
# ---------------------------------------------------------------------------


def _lse(a, w):
    """log(sum(w * exp(a))) with max shift; a is a 1-D array."""
    m = float(np.max(a))
    return m + math.log(float(np.sum(w * np.exp(a - m))))


def _simpson_weights(m):
    w = np.ones(m + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w


def _inner_slab(lam, A, s, X, inner_m=256):
    """Vectorised innermost integrals.

    For each row i, computes ln of

        int_{-X}^{X} exp(-lam (A_i + e^x + B_i e^{-x})) dx,  B_i = e^{-s_i}.

    The integrand is a cosh-type bump centred at x = -s_i/2 with doubly
    exponential shoulders, so a fixed composite Simpson rule on the
    analytically clipped window is geometrically convergent.
    """
    A = np.atleast_1d(np.asarray(A, float))
    s = np.atleast_1d(np.asarray(s, float))
    root_b = np.exp(-0.5 * s)
    centre = -0.5 * s
    spread = np.arccosh(1.0 + 50.0 / (2.0 * lam * root_b))
    spread = np.maximum(spread, 1e-3)
    lo = np.maximum(-X, centre - spread)
    hi = np.minimum(X, centre + spread)
    frac = np.linspace(0.0, 1.0, inner_m + 1)
    x = lo[:, None] + (hi - lo)[:, None] * frac[None, :]
    f = -lam * (A[:, None] + np.exp(x) + np.exp(-s[:, None] - x))
    w = _simpson_weights(inner_m)
    peak = f.max(axis=1)
    vals = peak + np.log(np.exp(f - peak[:, None]) @ w) + np.log((hi - lo) / (3.0 * inner_m))
    return vals


def _doubling_simpson_ln(f_vec, lo, hi, rel_tol, max_segments=1 << 14):
    """ln integral of exp(f) on [lo, hi] by node-reusing doubling Simpson.

    f_vec maps an array of abscissas to an array of ln-integrand values.
    Accepts once the Richardson error estimate |S_2m - S_m|/15 drops below
    rel_tol (an absolute tolerance on the ln value, i.e. relative on the
    integral) and returns the finer estimate.
    """
    m = 32
    x = np.linspace(lo, hi, m + 1)
    fx = np.asarray(f_vec(x), float)
    prev = _lse(fx, _simpson_weights(m)) + math.log((hi - lo) / (3.0 * m))
    while True:
        mid = 0.5 * (x[:-1] + x[1:])
        fmid = np.asarray(f_vec(mid), float)
        x2 = np.empty(2 * m + 1)
        f2 = np.empty(2 * m + 1)
        x2[0::2], x2[1::2] = x, mid
        f2[0::2], f2[1::2] = fx, fmid
        m *= 2
        x, fx = x2, f2
        cur = _lse(fx, _simpson_weights(m)) + math.log((hi - lo) / (3.0 * m))
        if abs(cur - prev) / 15.0 <= rel_tol:
            return cur
        if m >= max_segments:
            raise RuntimeError("quadrature did not reach the requested tolerance")
        prev = cur


def fn_quadrature(n: int, lam: float, tol: float = 1e-9) -> OracleResult:
    """Brute-force ln F_n by nested one-dimensional quadrature, n in {2, 3, 4}.

    Integrates exp(-lambda (sum_{k<n} e^{x_k} + e^{-sum x_k})) over the
    truncated box, innermost dimension vectorised, all accumulation in log
    space with max shift.  Level tolerances are tol / 3^depth.  Each level
    is windowed by an analytic negligibility bound (regions where a single
    exponential term already exceeds the whole error budget are dropped),
    which is what keeps the n = 4 case fast.
    """
    if not isinstance(n, (int, np.integer)) or not 2 <= n <= 4:
        raise ValueError("fn_quadrature supports integer n in [2, 4]")
    lam = _check_lambda(lam)
    if not 1e-12 <= tol <= 1e-3:
        raise ValueError("tol must lie in [1e-12, 1e-3]")
    X = QuadratureDomain.for_tolerance(n, lam, tol).half_width
    # negligibility threshold relative to the peak value exp(-lambda n)
    budget = lam * n + math.log(1.0 / tol) + 35.0

    if n == 2:
        val = float(_inner_slab(lam, 0.0, 0.0, X)[0])
        return OracleResult(LogValue(val), tol + 1e-12, Method.QUADRATURE)

    hi_single = min(X, math.log(budget / lam))

    if n == 3:
        lo1 = max(-X, -2.0 * math.log(budget / (2.0 * lam)))
        val = _doubling_simpson_ln(
            lambda x1: _inner_slab(lam, np.exp(x1), x1, X),
            lo1, hi_single, tol / 3.0,
        )
        return OracleResult(LogValue(val), tol + 1e-12, Method.QUADRATURE)

    # n == 4: scalar outer loop, vectorised middle + inner
    lo1 = max(-X, -3.0 * math.log(budget / (3.0 * lam)))

    def outer(x1_arr):
        out = np.empty_like(x1_arr)
        for i, x1 in enumerate(x1_arr):
            lo2 = max(-X, -x1 - 2.0 * math.log(budget / (2.0 * lam)))
            if lo2 >= hi_single:
                out[i] = -np.inf
                continue
            e1 = math.exp(x1)
            out[i] = _doubling_simpson_ln(
                lambda x2: _inner_slab(lam, e1 + np.exp(x2), x1 + x2, X),
                lo2, hi_single, tol / 9.0,
            )
        return out

    val = _doubling_simpson_ln(outer, lo1, hi_single, tol / 3.0)
    return OracleResult(LogValue(val), tol + 1e-12, Method.QUADRATURE)


# ---------------------------------------------------------------------------
# inverse Mellin contour
# ---------------------------------------------------------------------------


def fn_contour(n: int, lam: float, spec: ContourSpec | None = None) -> OracleResult:
    """ln F_n by trapezoid on the vertical Mellin inversion line.

    With phi(t) = ln Gamma(gamma + it) - (gamma + it) ln lambda,

        F_n(lambda) = (1/2 pi) int_{-T}^{T} exp(n phi(t)) dt.

    In auto mode the line passes through the saddle abscissa and T grows
    until the integrand has dropped by 1e-14 relative to the peak; the step
    is T/2000.  Re phi is maximal at t = 0, so exponentials never overflow
    after shifting by n phi(0).  The imaginary part integrates to zero by
    conjugate symmetry; its residue is folded into the error estimate.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("fn_contour requires integer n >= 1")
    lam = _check_lambda(lam)
    ln_lam = math.log(lam)

    if spec is None:
        sol = solve_saddle(lam)
        gamma = sol.gamma
        phi0 = sol.ln_L
        T = 8.0 / math.sqrt(n * sol.sigma)
        target = math.log(1e-14)
        for _ in range(200):
            edge = (ln_gamma_complex(complex(gamma, T)).real - gamma * ln_lam) - phi0
            if n * edge < target:
                break
            T *= 1.5
        else:  # pragma: no cover
            raise RuntimeError("failed to truncate the contour integrand")
        h = T / 2000.0
    else:
        gamma = spec.gamma
        phi0 = ln_gamma(gamma) - gamma * ln_lam
        T = spec.half_width
        h = spec.step
        edge = (ln_gamma_complex(complex(gamma, T)).real - gamma * ln_lam) - phi0
        if n * edge > math.log(1e-10):
            raise RuntimeError(
                "contour truncation insufficient: integrand at +-T is "
                f"{math.exp(n * edge):.2e} of the peak"
            )

    npts = int(round(T / h))
    t = np.arange(-npts, npts + 1) * h
    z = gamma + 1j * t
    rel = n * (ln_gamma_complex(z) - z * ln_lam - phi0)
    w = np.ones(t.size)
    w[0] = w[-1] = 0.5
    total = np.sum(w * np.exp(rel))
    if total.real <= 0.0:  # pragma: no cover - cannot happen on the saddle line
        raise RuntimeError("contour integral lost positivity")
    ln_f = n * phi0 - math.log(2.0 * math.pi) + math.log(total.real * h)
    tail = math.exp(n * ((ln_gamma_complex(complex(gamma, T)).real - gamma * ln_lam) - phi0))
    err = abs(total.imag) / total.real + 10.0 * tail + 1e-12 * (1.0 + abs(ln_f))
    return OracleResult(LogValue(ln_f), err, Method.CONTOUR)


def fn_saddle_asymptotic(n: int, lam: float) -> OracleResult:
    """Gaussian saddle-point estimate ln F_n ~ n ln L - (1/2) ln(2 pi n sigma).

    The error claim is twice the computed next-order 1/n coefficient
    psi'''/(8 sigma^2) - 5 psi''^2 / (24 sigma^3) (derivatives by central
    differences of trigamma), which cross-oracle tests confirm as an upper
    bound down to n = 1.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("fn_saddle_asymptotic requires integer n >= 1")
    lam = _check_lambda(lam)
    sol = solve_saddle(lam)
    ln_f = n * sol.ln_L - 0.5 * math.log(2.0 * math.pi * n * sol.sigma)
    step = 1e-3 * (1.0 + sol.gamma)
    psi2 = (trigamma(sol.gamma + step) - trigamma(sol.gamma - step)) / (2.0 * step)
    psi3 = (
        trigamma(sol.gamma + step) - 2.0 * sol.sigma + trigamma(sol.gamma - step)
    ) / (step * step)
    coeff = abs(psi3 / (8.0 * sol.sigma**2) - 5.0 * psi2**2 / (24.0 * sol.sigma**3))
    return OracleResult(LogValue(ln_f), 2.0 * coeff / n + 1e-10, Method.ASYMPTOTIC)


def fn_montecarlo(n: int, lam: float, samples: int, seed: int) -> OracleResult:
    """Importance-sampling estimate of ln F_n with a seeded generator.

    Proposal: the projection of sqrt(v) * iid standard normals onto the
    zero-sum hyperplane (in-plane isotropic Gaussian), v = 1/lambda clipped
    to [0.05, 20] -- the Hessian of the integrand at its symmetric maximum.
    In coordinate space u = (x_1 .. x_{n-1}) the proposal covariance is
    v (I - J/n), with inverse (I + J)/v and determinant v^{n-1}/n, so
    u' (I+J) u / v = sum_k x_k^2 / v with x_n = -sum u.  The weights
    g/q are bounded (the integrand decays doubly exponentially in every
    in-plane direction), so the estimator has finite variance.  The error
    field is one standard error of the ln value (delta method).
    """
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ValueError("fn_montecarlo requires integer n >= 2")
    lam = _check_lambda(lam)
    if samples < 10_000:
        raise ValueError("fn_montecarlo requires samples >= 10^4")
    rng = np.random.Generator(np.random.PCG64(int(seed)))
    v = min(max(1.0 / lam, 0.05), 20.0)
    z = rng.standard_normal((int(samples), int(n)))
    x = math.sqrt(v) * (z - z.mean(axis=1, keepdims=True))
    u = x[:, : n - 1]
    x_last = -u.sum(axis=1)
    ln_g = -lam * (np.exp(u).sum(axis=1) + np.exp(x_last))
    sq = (u * u).sum(axis=1) + x_last * x_last
    ln_q = -0.5 * ((n - 1) * math.log(2.0 * math.pi * v) - math.log(n)) - sq / (2.0 * v)
    w = ln_g - ln_q
    m = float(w.max())
    e = np.exp(w - m)
    ess = float(e.sum() ** 2 / np.sum(e * e))
    if ess < 100.0:
        raise RuntimeError(f"degenerate importance weights: effective sample size {ess:.1f}")
    mean = float(e.mean())
    ln_f = m + math.log(mean)
    se_ln = float(e.std(ddof=1)) / (mean * math.sqrt(samples))
    return OracleResult(LogValue(ln_f), se_ln, Method.MONTE_CARLO)


def _check_lambda(lam) -> float:
    lam = float(lam)
    if not math.isfinite(lam) or lam <= 0.0:
        raise ValueError("lambda must be a finite positive real")
    return lam
