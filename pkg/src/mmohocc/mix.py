"""64-bit mixing finalizer shared by the key schedule, hopping table and reseeder."""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

_C1 = 0xFF51AFD7ED558CCD
_C2 = 0xC4CEB9FE1A85EC53


def mix64(z: int) -> int:
    """Bijective avalanche finalizer on 64-bit words (murmur3 fmix64 constants)."""
    z &= MASK64
    z = ((z ^ (z >> 33)) * _C1) & MASK64
    z = ((z ^ (z >> 33)) * _C2) & MASK64
    return z ^ (z >> 33)


def mix64_array(z: np.ndarray) -> np.ndarray:
    """Elementwise :func:`mix64` over a uint64 array (wrapping multiply)."""
    z = np.asarray(z, dtype=np.uint64)
    s = np.uint64(33)
    z = (z ^ (z >> s)) * np.uint64(_C1)
    z = (z ^ (z >> s)) * np.uint64(_C2)
    return z ^ (z >> s)


def mix64_stream(nbytes: int, start: int = 1) -> bytes:
    """Reference uniform byte source: big-endian ``mix64(start + i)`` words.

    Used as the known-good generator when calibrating the statistical tests.
    """
    words = -(-nbytes // 8)
    counter = np.arange(start, start + words, dtype=np.uint64)
    return mix64_array(counter).astype(">u8").tobytes()[:nbytes]
