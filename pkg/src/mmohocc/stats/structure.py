"""Binary matrix rank and discrete Fourier transform (spectral) tests."""

from __future__ import annotations

import math

import numpy as np

from ..specfun import erfc
from .constants import RANK_MIN_MATRICES, RANK_PROBABILITIES
from .core import BitsLike, TestId, as_bits, inapplicable, result
from .kernels import dft_magnitudes, gf2_rank

DFT_MIN_LENGTH = 32


def binary_matrix_rank(s: BitsLike):
    bits = as_bits(s)
    N = bits.size // 1024
    if N < RANK_MIN_MATRICES:
        return inapplicable(TestId.RANK, f"fewer than {RANK_MIN_MATRICES} matrices")
    rows = np.packbits(bits[: N * 1024].reshape(N * 32, 32), axis=1)
    rows = rows.view(">u4").reshape(N, 32)
    ranks = np.array([gf2_rank(m.tolist()) for m in rows])
    counts = np.array([np.sum(ranks == 32), np.sum(ranks == 31), np.sum(ranks <= 30)])
    expected = N * np.asarray(RANK_PROBABILITIES)
    chi2 = float(np.sum((counts - expected) ** 2 / expected))
    return result(TestId.RANK, math.exp(-chi2 / 2), chi2=chi2, counts=counts.tolist())


def dft_spectral(s: BitsLike):
    bits = as_bits(s)
    n = bits.size
    if n % 2 or n < DFT_MIN_LENGTH:
        return inapplicable(TestId.FFT, "odd or too short sequence")
    mags = dft_magnitudes(2.0 * bits - 1.0)
    threshold = math.sqrt(math.log(1 / 0.05) * n)
    n1 = int(np.count_nonzero(mags < threshold))
    n0 = 0.95 * n / 2
    d = (n1 - n0) / math.sqrt(n * 0.95 * 0.05 / 4)
    return result(TestId.FFT, erfc(abs(d) / math.sqrt(2)), below=n1, d=d)
