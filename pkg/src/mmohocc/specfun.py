"""Special functions for converting test statistics into p-values."""

import math

_EPS = 1e-17
_TINY = 1e-300
_MAX_ITER = 100_000
_TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def _erf_series(x: float) -> float:
    # Maclaurin series; only used for |x| < 1.5 where cancellation is mild
    x2 = x * x
    term = x
    total = x
    n = 0
    while True:
        n += 1
        term *= -x2 / n
        delta = term / (2 * n + 1)
        total += delta
        if abs(delta) <= _EPS * abs(total):
            return _TWO_OVER_SQRT_PI * total


def _erfc_cf(x: float) -> float:
    """erfc for x >= 1.5 via the Laplace continued fraction, modified Lentz."""
    # erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    f = x
    c = x
    d = 0.0
    for k in range(1, _MAX_ITER):
        a = k / 2.0
        d = x + a * d
        d = 1.0 / (d if abs(d) > _TINY else _TINY)
        c = x + a / c
        if abs(c) < _TINY:
            c = _TINY
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x * x) / (f * math.sqrt(math.pi))


def erfc(x: float) -> float:
    """Complementary error function."""
    if math.isnan(x):
        return math.nan
    if x < 0.0:
        return 2.0 - erfc(-x)
    if x < 1.5:
        return 1.0 - _erf_series(x)
    if x > 27.3:
        return 0.0
    return _erfc_cf(x)


def normal_cdf(z: float) -> float:
    return 0.5 * erfc(-z / math.sqrt(2.0))


def _log_prefactor(a: float, x: float) -> float:
    """log(x^a e^-x / Gamma(a)), cancellation-free for large a."""
    if a < 20.0:
        return a * math.log(x) - x - math.lgamma(a)
    # Stirling remainder of lgamma(a) and a*(log1p(t) - t) with t = (x - a)/a
    inv = 1.0 / a
    inv2 = inv * inv
    stirling = inv * (1 / 12 - inv2 * (1 / 360 - inv2 * (1 / 1260 - inv2 / 1680)))
    t = (x - a) / a
    return 0.5 * math.log(a / (2 * math.pi)) + a * (math.log1p(t) - t) - stirling


def _igam_series(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x), series form (x < a + 1)."""
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) <= abs(total) * _EPS:
            break
    return total * math.exp(_log_prefactor(a, x))


def _igamc_cf(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x), Legendre continued fraction (x >= a + 1)."""
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(_log_prefactor(a, x)) * h


def igamc(a: float, x: float) -> float:
    """Regularized upper incomplete gamma function Q(a, x) = Gamma(a, x) / Gamma(a)."""
    if not a > 0.0:
        raise ValueError(f"igamc requires a > 0, got a={a}")
    if not x >= 0.0:
        raise ValueError(f"igamc requires x >= 0, got x={x}")
    if x == 0.0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        q = 1.0 - _igam_series(a, x)
    else:
        q = _igamc_cf(a, x)
    return min(1.0, max(0.0, q))
