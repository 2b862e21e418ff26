"""Compiled inner loops for the keystream, used when numba is importable.

Both functions perform the literal per-visit walk with the same binary64
operand order as :func:`mmohocc.chaos.raw_step`; LLVM does not contract
multiply/subtract pairs without fast-math, so results are bit-identical to
the pure Python path. The test-suite compares the two directly.
"""

from __future__ import annotations

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

AVAILABLE = numba is not None

if AVAILABLE:
    _S33 = np.uint64(33)
    _C1 = np.uint64(0xFF51AFD7ED558CCD)
    _C2 = np.uint64(0xC4CEB9FE1A85EC53)
    _MOD = np.uint64((1 << 52) - 1)
    _ONE = np.uint64(1)
    _TWO52 = float(1 << 52)

    @numba.njit(cache=True, inline="always")
    def _mix64(z):
        z = (z ^ (z >> _S33)) * _C1
        z = (z ^ (z >> _S33)) * _C2
        return z ^ (z >> _S33)

    @numba.njit(cache=True, inline="always")
    def _step(x, family, c, map_index, orbit_index, count, entropy):
        """One repaired iteration; returns (x', reseed count')."""
        if family == 0:
            y = (c * x) * (1.0 - x)
        else:
            y = (c * x) * (1.0 - x * x)
        if y <= 0.0 or y >= 1.0 or y == x:
            tweak = np.uint64((map_index << 16) + (orbit_index << 8) + count)
            w = _mix64(entropy ^ tweak)
            return float((w % _MOD) + _ONE) / _TWO52, count + 1
        return y, count

    @numba.njit(cache=True)
    def burn_in(x, counts, family, c, offsets, map_index, entropy):
        """Advance orbit k of one map ``offsets[k]`` times, in place."""
        for k in range(x.shape[0]):
            xk = x[k]
            ck = counts[k]
            for _ in range(offsets[k]):
                xk, ck = _step(xk, family, c, map_index, k + 1, ck, entropy)
            x[k] = xk
            counts[k] = ck

    @numba.njit(cache=True)
    def walk_rounds(x, counts, families, coefs, dwell, patterns, entropy, rounds, out):
        """Emit ``rounds`` whole rounds of keystream into ``out``, updating state in place.

        ``patterns`` holds zero-based orbit indices in visit order.
        """
        maps, orbits = x.shape
        pos = 0
        for _ in range(rounds):
            for i in range(orbits):
                for j in range(maps):
                    k = patterns[j, i]
                    xk = x[j, k]
                    ck = counts[j, k]
                    for _ in range(dwell[j]):
                        xk, ck = _step(xk, families[j], coefs[j], j, k + 1, ck, entropy[j])
                        w = np.int64(xk * _TWO52) & 0xFFFFFFFF
                        out[pos] = ((w >> 24) ^ (w >> 8)) & 0xFF
                        out[pos + 1] = ((w >> 16) ^ w) & 0xFF
                        pos += 2
                    x[j, k] = xk
                    counts[j, k] = ck
else:
    burn_in = walk_rounds = None
