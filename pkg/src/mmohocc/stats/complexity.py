"""Maurer's universal test, linear complexity, serial and approximate entropy."""

from __future__ import annotations

import math

import numpy as np

from ..specfun import erfc, igamc
from .constants import (LINEAR_COMPLEXITY_EDGES, LINEAR_COMPLEXITY_PROBABILITIES,
                        UNIVERSAL_MIN_LENGTH, UNIVERSAL_MOMENTS)
from .core import BitsLike, TestId, as_bits, inapplicable, result
from .kernels import berlekamp_massey


def universal_parameters(n: int) -> tuple[int, int] | None:
    L = None
    for cand, min_n in UNIVERSAL_MIN_LENGTH:
        if n >= min_n:
            L = cand
    if L is None:
        return None
    return L, 10 * 2**L


def block_values(bits: np.ndarray, L: int) -> np.ndarray:
    nblocks = bits.size // L
    blocks = bits[: nblocks * L].reshape(nblocks, L).astype(np.int64)
    return blocks @ (1 << np.arange(L - 1, -1, -1, dtype=np.int64))


def universal_statistic(values: np.ndarray, Q: int) -> float:
    """Mean log2 distance back to the previous occurrence of each test block.

    Blocks are numbered from 1; a value never seen before is measured against
    position 0.
    """
    idx = np.arange(1, values.size + 1)
    order = np.lexsort((idx, values))
    sv, si = values[order], idx[order]
    prev = np.zeros_like(si)
    same = sv[1:] == sv[:-1]
    prev[1:][same] = si[:-1][same]
    test = si > Q
    return float(np.sum(np.log2(si[test] - prev[test]))) / int(np.count_nonzero(test))


def maurer_universal(s: BitsLike, L: int | None = None, Q: int | None = None):
    bits = as_bits(s)
    n = bits.size
    if L is None:
        params = universal_parameters(n)
        if params is None:
            return inapplicable(TestId.UNIVERSAL, f"n < {UNIVERSAL_MIN_LENGTH[0][1]}")
        L, Q = params
    elif Q is None:
        Q = 10 * 2**L
    K = n // L - Q
    if K < 1 or L not in UNIVERSAL_MOMENTS:
        return inapplicable(TestId.UNIVERSAL, "no test blocks")
    fn = universal_statistic(block_values(bits, L)[: Q + K], Q)
    expected, variance = UNIVERSAL_MOMENTS[L]
    c = 0.7 - 0.8 / L + (4 + 32 / L) * K ** (-3 / L) / 15
    sigma = c * math.sqrt(variance / K)
    p = erfc(abs(fn - expected) / (math.sqrt(2) * sigma))
    return result(TestId.UNIVERSAL, p, fn=fn, L=L, Q=Q, K=K)


def linear_complexity_mean(M: int) -> float:
    return M / 2 + (9 + (-1) ** (M + 1)) / 36 - (M / 3 + 2 / 9) / 2**M


def linear_complexity(s: BitsLike, M: int = 500):
    bits = as_bits(s)
    N = bits.size // M
    if N < 1:
        return inapplicable(TestId.LINEAR_COMPLEXITY, "fewer than one block")
    mu = linear_complexity_mean(M)
    sign = -1 if M % 2 else 1
    blocks = bits[: N * M].reshape(N, M).tolist()
    complexities = np.array([berlekamp_massey(b) for b in blocks])
    T = sign * (complexities - mu) + 2 / 9
    # right-closed bins: T <= -2.5, (-2.5, -1.5], ..., T > 2.5
    cats = np.searchsorted(np.asarray(LINEAR_COMPLEXITY_EDGES), T, side="left")
    counts = np.bincount(cats, minlength=7)
    expected = N * np.asarray(LINEAR_COMPLEXITY_PROBABILITIES)
    chi2 = float(np.sum((counts - expected) ** 2 / expected))
    return result(TestId.LINEAR_COMPLEXITY, igamc(3, chi2 / 2), chi2=chi2,
                  counts=counts.tolist())


def pattern_counts(bits: np.ndarray, m: int) -> np.ndarray:
    """Counts of every m-bit pattern over the sequence with wraparound."""
    if m == 0:
        return np.array([bits.size])
    ext = np.concatenate([bits, bits[: m - 1]])
    n = bits.size
    vals = np.zeros(n, dtype=np.int64)
    for k in range(m):
        vals = (vals << 1) | ext[k:k + n]
    return np.bincount(vals, minlength=1 << m)


def psi_squared_scaled(bits: np.ndarray, m: int) -> int:
    """n * psi^2_m as an exact integer (psi^2_m = 0 for m <= 0)."""
    if m <= 0:
        return 0
    nu = pattern_counts(bits, m)
    n = bits.size
    return (1 << m) * int(np.dot(nu, nu)) - n * n


def psi_squared(bits, m: int) -> float:
    bits = as_bits(bits)
    return psi_squared_scaled(bits, m) / bits.size


def serial(s: BitsLike, m: int = 16):
    bits = as_bits(s)
    n = bits.size
    if m < 3:
        raise ValueError("serial test needs m >= 3")
    if m >= math.log2(n) - 2:
        return inapplicable(TestId.SERIAL, "m >= log2(n) - 2")
    p0, p1, p2 = (psi_squared_scaled(bits, k) for k in (m, m - 1, m - 2))
    del1 = (p0 - p1) / n
    del2 = (p0 - 2 * p1 + p2) / n
    pv1 = igamc(2 ** (m - 2), max(del1, 0.0) / 2)
    pv2 = igamc(2 ** (m - 3), max(del2, 0.0) / 2)
    return result(TestId.SERIAL, (pv1, pv2), del1=del1, del2=del2)


def phi(bits: np.ndarray, m: int) -> float:
    if m == 0:
        return 0.0
    counts = pattern_counts(bits, m)
    c = counts[counts > 0] / bits.size
    return float(np.sum(c * np.log(c)))


def approximate_entropy(s: BitsLike, m: int = 10):
    bits = as_bits(s)
    n = bits.size
    if m + 1 >= math.log2(n):
        return inapplicable(TestId.APPROXIMATE_ENTROPY, "m + 1 >= log2(n)")
    apen = phi(bits, m) - phi(bits, m + 1)
    chi2 = max(0.0, 2 * n * (math.log(2) - apen))
    return result(TestId.APPROXIMATE_ENTROPY, igamc(2 ** (m - 1), chi2 / 2), apen=apen, chi2=chi2)
