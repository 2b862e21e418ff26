"""Frequency-type tests: monobit, block frequency, runs, longest run, cumulative sums."""

from __future__ import annotations

import math

import numpy as np

from ..specfun import erfc, igamc, normal_cdf
from .constants import LONGEST_RUN, longest_run_block_length
from .core import BitsLike, TestId, as_bits, inapplicable, result


def frequency_monobit(s: BitsLike):
    bits = as_bits(s)
    n = bits.size
    if n < 10:
        return inapplicable(TestId.FREQUENCY, "n < 10")
    total = 2 * int(bits.sum()) - n
    s_obs = abs(total) / math.sqrt(n)
    return result(TestId.FREQUENCY, erfc(s_obs / math.sqrt(2)), sum=total)


def block_frequency(s: BitsLike, M: int = 128):
    bits = as_bits(s)
    N = bits.size // M
    if N < 1:
        return inapplicable(TestId.BLOCK_FREQUENCY, "fewer than one block")
    ones = bits[: N * M].reshape(N, M).sum(axis=1, dtype=np.int64)
    # 4M * sum((ones/M - 1/2)^2) kept in integers until the final division
    chi2 = float(np.sum((2 * ones - M) ** 2)) / M
    return result(TestId.BLOCK_FREQUENCY, igamc(N / 2, chi2 / 2), chi2=chi2, blocks=N)


def runs(s: BitsLike):
    bits = as_bits(s)
    n = bits.size
    pi = bits.sum() / n
    if abs(pi - 0.5) >= 2 / math.sqrt(n):
        return inapplicable(TestId.RUNS, "frequency prerequisite failed", (0.0,))
    v_obs = 1 + int(np.count_nonzero(bits[1:] != bits[:-1]))
    num = abs(v_obs - 2 * n * pi * (1 - pi))
    den = 2 * math.sqrt(2 * n) * pi * (1 - pi)
    return result(TestId.RUNS, erfc(num / den), runs=v_obs)


def block_longest_runs(blocks: np.ndarray) -> np.ndarray:
    """Longest run of ones in each row of a 0/1 matrix."""
    nrows, M = blocks.shape
    padded = np.zeros((nrows, M + 2), dtype=np.int8)
    padded[:, 1:-1] = blocks
    edges = np.diff(padded, axis=1)
    r_start, c_start = np.nonzero(edges == 1)
    _, c_end = np.nonzero(edges == -1)
    out = np.zeros(nrows, dtype=np.int64)
    # both nonzero() scans are row-major, so starts and ends pair up in order
    np.maximum.at(out, r_start, c_end - c_start)
    return out


def longest_run_of_ones(s: BitsLike):
    bits = as_bits(s)
    n = bits.size
    if n < 128:
        return inapplicable(TestId.LONGEST_RUN, "n < 128")
    M = longest_run_block_length(n)
    lo, hi, probs = LONGEST_RUN[M]
    N = n // M
    longest = block_longest_runs(bits[: N * M].reshape(N, M))
    counts = np.bincount(np.clip(longest, lo, hi) - lo, minlength=len(probs))
    expected = N * np.asarray(probs)
    chi2 = float(np.sum((counts - expected) ** 2 / expected))
    K = len(probs) - 1
    return result(TestId.LONGEST_RUN, igamc(K / 2, chi2 / 2), chi2=chi2,
                  counts=counts.tolist(), block=M)


def cusum_p_value(z: int, n: int) -> float:
    sq = math.sqrt(n)
    total = 1.0
    for k in range(int((-n / z + 1) / 4), int((n / z - 1) / 4) + 1):
        total -= normal_cdf((4 * k + 1) * z / sq) - normal_cdf((4 * k - 1) * z / sq)
    for k in range(int((-n / z - 3) / 4), int((n / z - 1) / 4) + 1):
        total += normal_cdf((4 * k + 3) * z / sq) - normal_cdf((4 * k + 1) * z / sq)
    return total


def cumulative_sums(s: BitsLike, mode: str = "forward"):
    if mode not in ("forward", "reverse"):
        raise ValueError(f"mode must be 'forward' or 'reverse', got {mode!r}")
    test_id = TestId.CUSUM_FORWARD if mode == "forward" else TestId.CUSUM_REVERSE
    bits = as_bits(s)
    if mode == "reverse":
        bits = bits[::-1]
    walk = np.cumsum(2 * bits.astype(np.int64) - 1)
    z = int(np.max(np.abs(walk)))
    return result(test_id, cusum_p_value(z, bits.size), z=z)
