"""Special-function kernel: ln Gamma (real and complex), digamma, trigamma, K0.

All four Gamma-family routines use one scheme: shift the argument up by the
recurrence until it is >= 10, then sum a Bernoulli-coefficient asymptotic
series.  That covers the whole positive axis (and the right half plane for
the complex case) without reflection formulas, which is all this package
ever needs.

Accuracy: errors stay within a few ulp of the result, i.e. below
tol * max(1, |f(x)|) with tol = 1e-13 for ln Gamma / digamma and 1e-12 for
trigamma.  Near the blow-up edges (x -> 0+, where psi ~ -1/x) this scaled
bound is the best any fixed-precision evaluation can promise.

K0 is evaluated in log form from its cosh integral representation by a
symmetric trapezoid rule, which converges geometrically because the
integrand itself decays doubly exponentially.
"""

from __future__ import annotations

import math

import numpy as np

from .logvalue import LogValue

#: Euler's constant C;  digamma(1) == -EULER_GAMMA.
EULER_GAMMA = 0.5772156649015329

_HALF_LN_2PI = 0.5 * math.log(2.0 * math.pi)
_SHIFT = 10.0

# B_{2k} / ((2k)(2k-1)) -- ln Gamma series
_LNGAMMA_COEFF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
# B_{2k} / (2k) -- digamma series
_DIGAMMA_COEFF = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)
# B_{2k} -- trigamma series
_TRIGAMMA_COEFF = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)


def _as_positive_array(x, name):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError(f"{name} requires finite positive argument(s)")
    return arr


def _check_positive_scalar(x, name):
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"{name} requires finite positive argument(s)")


def ln_gamma(x):
    """ln Gamma(x) for x > 0; accepts scalars or arrays."""
    if isinstance(x, (float, int)):
        x = float(x)
        _check_positive_scalar(x, "ln_gamma")
        shift = 0.0
        while x < _SHIFT:
            shift += math.log(x)
            x += 1.0
        w = 1.0 / (x * x)
        s = _LNGAMMA_COEFF[-1]
        for c in _LNGAMMA_COEFF[-2::-1]:
            s = s * w + c
        return (x - 0.5) * math.log(x) - x + _HALF_LN_2PI + s / x - shift
    arr = _as_positive_array(x, "ln_gamma")
    scalar = arr.ndim == 0
    z = arr.reshape(-1).copy()
    k = np.maximum(0, np.ceil(_SHIFT - z)).astype(int)
    shift = np.zeros_like(z)
    for j in range(int(k.max(initial=0))):
        m = j < k
        shift[m] += np.log(z[m])
        z[m] += 1.0
    w = 1.0 / (z * z)
    s = np.full_like(z, _LNGAMMA_COEFF[-1])
    for c in _LNGAMMA_COEFF[-2::-1]:
        s = s * w + c
    out = (z - 0.5) * np.log(z) - z + _HALF_LN_2PI + s / z - shift
    return float(out[0]) if scalar else out.reshape(arr.shape)


def digamma(x):
    """psi(x) = d/dx ln Gamma(x) for x > 0; accepts scalars or arrays."""
    if isinstance(x, (float, int)):
        x = float(x)
        _check_positive_scalar(x, "digamma")
        shift = 0.0
        while x < _SHIFT:
            shift += 1.0 / x
            x += 1.0
        w = 1.0 / (x * x)
        s = _DIGAMMA_COEFF[-1]
        for c in _DIGAMMA_COEFF[-2::-1]:
            s = s * w + c
        return math.log(x) - 0.5 / x - s * w - shift
    arr = _as_positive_array(x, "digamma")
    scalar = arr.ndim == 0
    z = arr.reshape(-1).copy()
    k = np.maximum(0, np.ceil(_SHIFT - z)).astype(int)
    shift = np.zeros_like(z)
    for j in range(int(k.max(initial=0))):
        m = j < k
        shift[m] += 1.0 / z[m]
        z[m] += 1.0
    w = 1.0 / (z * z)
    s = np.full_like(z, _DIGAMMA_COEFF[-1])
    for c in _DIGAMMA_COEFF[-2::-1]:
        s = s * w + c
    out = np.log(z) - 0.5 / z - s * w - shift
    return float(out[0]) if scalar else out.reshape(arr.shape)


def trigamma(x):
    """psi'(x), strictly positive on (0, inf); accepts scalars or arrays."""
    if isinstance(x, (float, int)):
        x = float(x)
        _check_positive_scalar(x, "trigamma")
        shift = 0.0
        while x < _SHIFT:
            shift += 1.0 / (x * x)
            x += 1.0
        w = 1.0 / (x * x)
        s = _TRIGAMMA_COEFF[-1]
        for c in _TRIGAMMA_COEFF[-2::-1]:
            s = s * w + c
        return 1.0 / x + 0.5 * w + s * w / x + shift
    arr = _as_positive_array(x, "trigamma")
    scalar = arr.ndim == 0
    z = arr.reshape(-1).copy()
    k = np.maximum(0, np.ceil(_SHIFT - z)).astype(int)
    shift = np.zeros_like(z)
    for j in range(int(k.max(initial=0))):
        m = j < k
        shift[m] += 1.0 / (z[m] * z[m])
        z[m] += 1.0
    w = 1.0 / (z * z)
    s = np.full_like(z, _TRIGAMMA_COEFF[-1])
    for c in _TRIGAMMA_COEFF[-2::-1]:
        s = s * w + c
    out = 1.0 / z + 0.5 * w + s * w / z + shift
    return float(out[0]) if scalar else out.reshape(arr.shape)


def ln_gamma_complex(z):
    """Analytic ln Gamma(z) for Re z > 0; scalars or arrays.

    Continuous along vertical lines gamma + i t (the shift recurrence never
    crosses the negative real axis for Re z > 0) and equal to ln_gamma on
    the real axis.  The imaginary part is unwrapped, so this is the
    continuation of ln Gamma rather than the principal log of Gamma.
    """
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)) or np.any(arr.real <= 0.0):
        raise ValueError("ln_gamma_complex requires finite arguments with Re z > 0")
    scalar = arr.ndim == 0
    zz = arr.reshape(-1).copy()
    k = np.maximum(0, np.ceil(_SHIFT - zz.real)).astype(int)
    shift = np.zeros_like(zz)
    for j in range(int(k.max(initial=0))):
        m = j < k
        shift[m] += np.log(zz[m])
        zz[m] += 1.0
    w = 1.0 / (zz * zz)
    s = np.full_like(zz, _LNGAMMA_COEFF[-1])
    for c in _LNGAMMA_COEFF[-2::-1]:
        s = s * w + c
    out = (zz - 0.5) * np.log(zz) - zz + _HALF_LN_2PI + s / zz - shift
    return complex(out[0]) if scalar else out.reshape(arr.shape)


def bessel_k0(x: float) -> LogValue:
    """ln K0(x) for x > 0, valid far beyond the underflow point of K0.

    Uses K0(x) = integral_0^inf exp(-x cosh t) dt.  The integrand decays
    doubly exponentially in t, so an equispaced trapezoid rule on the even
    extension converges geometrically; 256 panels give ~1e-15 relative
    accuracy over the whole positive axis.  The max-shift by -x keeps the
    sum in range for arbitrarily large x.
    """
    xf = float(x)
    if not np.isfinite(xf) or xf <= 0.0:
        raise ValueError("bessel_k0 requires finite x > 0")
    # truncate where x (cosh T - 1) = 48, relative tail ~ e^-48
    T = float(np.arccosh(1.0 + 48.0 / xf))
    m = 256
    h = T / m
    t = np.arange(m + 1) * h
    expo = -xf * (np.cosh(t) - 1.0)
    weights = np.ones(m + 1)
    weights[0] = 0.5
    return LogValue(float(-xf + np.log(h * np.sum(weights * np.exp(expo)))))
