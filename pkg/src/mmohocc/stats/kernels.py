"""Algorithmic kernels: GF(2) rank, Berlekamp-Massey, DFT magnitudes."""

from __future__ import annotations

import numpy as np


def gf2_rank(rows) -> int:
    """Rank over GF(2) of a matrix given as integer row bitmasks.

    Also accepts a 2-D 0/1 array, each row read most significant bit first.
    """
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        rows = [int("".join(map(str, r)) or "0", 2) for r in rows.astype(np.uint8)]
    basis: list[int] = []  # kept sorted descending, distinct leading bits
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def berlekamp_massey(bits) -> int:
    """Linear complexity over GF(2) of a 0/1 sequence.

    Polynomials and the reversed history are packed into Python integers, so
    each discrepancy is one AND plus a popcount.
    """
    c, b = 1, 1
    L, m = 0, -1
    hist = 0  # bit i holds s_{N-i}
    for N, s in enumerate(bits):
        hist = (hist << 1) | int(s)
        if (c & hist).bit_count() & 1:
            t = c
            c ^= b << (N - m)
            if 2 * L <= N:
                L = N + 1 - L
                m = N
                b = t
    return L


def dft_magnitudes(x: np.ndarray) -> np.ndarray:
    """|X_j| for j = 0 .. n/2 - 1 of the discrete Fourier transform of ``x``."""
    x = np.asarray(x, dtype=np.float64)
    return np.abs(np.fft.rfft(x))[: x.size // 2]
