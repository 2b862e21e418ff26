"""Keystream assembly: orbit hopping across maps, two-byte extraction, XOR.

The visit schedule never depends on orbit values, so the generator works in
whole *rounds* (``maps * orbits`` visits, after which every scheduler is back
at its starting position). Within a round each orbit of map ``j`` advances
exactly ``dwell_j`` steps, which lets all orbits of a map be iterated as one
numpy vector. The output is identical to visiting orbits one at a time; the
test-suite checks this against a literal scalar walk.

When numba is available the literal walk itself is compiled and used instead
(see ``_kernel``); both paths produce identical bytes.
"""

from __future__ import annotations

import numpy as np

from . import _kernel
from .chaos import OrbitState, TWO52, burn_in, iterate_block, reseed_value
from .hopping import HopScheduler, pattern_for_hpsn
from .keyschedule import DEFAULT_MAPS, DEFAULT_ORBITS, Subkey, expand_key

_MAX_ROUNDS_PER_REFILL = 4096
# read at construction time; tests flip it to exercise the numpy path
_COMPILED = _kernel.AVAILABLE


def extract_pair(x: float) -> tuple[int, int]:
    """Split the low 32 bits of ``floor(x * 2**52)`` into bytes a b c d; return (a^c, b^d)."""
    if not 0.0 < x < 1.0:
        raise ValueError(f"orbit point must lie in (0, 1), got {x!r}")
    w = int(x * TWO52) & 0xFFFFFFFF
    a, b, c, d = w >> 24, (w >> 16) & 0xFF, (w >> 8) & 0xFF, w & 0xFF
    return a ^ c, b ^ d


def extract_pairs(points: np.ndarray) -> np.ndarray:
    """Vectorized :func:`extract_pair`; appends a trailing axis of length 2 (u, v)."""
    w = (points * TWO52).astype(np.uint64) & np.uint64(0xFFFFFFFF)
    w = w.astype(np.uint32)
    out = np.empty(points.shape + (2,), dtype=np.uint8)
    out[..., 0] = ((w >> 24) ^ (w >> 8)).astype(np.uint8)
    out[..., 1] = ((w >> 16) ^ w).astype(np.uint8)
    return out


class _MapOrbits:
    """All orbits of one map, advanced in lockstep."""

    def __init__(self, subkey: Subkey, compiled: bool = False):
        self.subkey = subkey
        self.pattern = pattern_for_hpsn(subkey.hpsn, len(subkey.seeds))
        if compiled:
            self.x = np.array(subkey.seeds, dtype=np.float64)
            counts = np.zeros(len(subkey.seeds), dtype=np.int64)
            _kernel.burn_in(self.x, counts, int(subkey.params.family),
                            subkey.params.coefficient,
                            np.array(subkey.offsets, dtype=np.int64),
                            subkey.map_index, np.uint64(subkey.entropy))
            self.reseeds = counts.tolist()
            return
        states = [
            burn_in(OrbitState(seed, k + 1, 0, subkey.map_index, subkey.entropy),
                    subkey.params, offset)
            for k, (seed, offset) in enumerate(zip(subkey.seeds, subkey.offsets))
        ]
        self.x = np.array([s.x for s in states], dtype=np.float64)
        self.reseeds = [s.reseed_count for s in states]

    def advance(self, steps: int) -> np.ndarray:
        """Iterate every orbit ``steps`` times, repairing degenerate points in order."""
        rows = []
        x = self.x
        remaining = steps
        while remaining:
            block = iterate_block(x, self.subkey.params, remaining)
            prev = np.vstack([x[None, :], block[:-1]])
            bad = (block <= 0.0) | (block >= 1.0) | (block == prev)
            hit = np.flatnonzero(bad.any(axis=1))
            if hit.size == 0:
                rows.append(block)
                x = block[-1]
                break
            s = int(hit[0])
            fixed = block[s].copy()
            for k in np.flatnonzero(bad[s]):
                fixed[k] = reseed_value(self.subkey.map_index, int(k) + 1,
                                        self.reseeds[k], self.subkey.entropy)
                self.reseeds[k] += 1
            rows.append(block[:s])
            rows.append(fixed[None, :])
            x = fixed
            remaining -= s + 1
        self.x = x.copy()
        return np.concatenate(rows) if len(rows) > 1 else rows[0]


class KeystreamGenerator:
    """Stateful Mmohocc keystream generator.

    One instance is one logical stream; do not share it between threads.
    """

    def __init__(self, key: bytes, maps: int = DEFAULT_MAPS,
                 orbits: int = DEFAULT_ORBITS):
        self.key = bytes(key)
        self.subkeys = expand_key(self.key, maps, orbits)
        self.maps = maps
        self.orbits = orbits
        self._compiled = _COMPILED
        self._map_orbits = [_MapOrbits(sk, self._compiled) for sk in self.subkeys]
        self.schedulers = [HopScheduler(m.pattern) for m in self._map_orbits]
        self.current_map = 0
        self._buffer = bytearray()
        self.round_bytes = 2 * orbits * sum(sk.dwell for sk in self.subkeys)

    @property
    def orbit_points(self) -> np.ndarray:
        """Current iterates, shape ``(maps, orbits)`` (ahead of any buffered bytes)."""
        return np.stack([m.x for m in self._map_orbits])

    def _rounds(self, rounds: int) -> bytes:
        if self._compiled:
            return self._rounds_compiled(rounds)
        chunks = []
        for m in self._map_orbits:
            dwell = m.subkey.dwell
            points = m.advance(rounds * dwell)
            uv = extract_pairs(points)  # (rounds*dwell, K, 2)
            uv = uv.reshape(rounds, dwell, self.orbits, 2)
            uv = uv[:, :, np.asarray(m.pattern) - 1, :]  # columns in visit order
            uv = uv.transpose(0, 2, 1, 3).reshape(rounds, self.orbits, 2 * dwell)
            chunks.append(uv)
        return np.concatenate(chunks, axis=2).tobytes()

    def _rounds_compiled(self, rounds: int) -> bytes:
        mo = self._map_orbits
        x = np.stack([m.x for m in mo])
        counts = np.array([m.reseeds for m in mo], dtype=np.int64)
        out = np.empty(rounds * self.round_bytes, dtype=np.uint8)
        _kernel.walk_rounds(
            x, counts,
            np.array([int(m.subkey.params.family) for m in mo], dtype=np.int64),
            np.array([m.subkey.params.coefficient for m in mo]),
            np.array([m.subkey.dwell for m in mo], dtype=np.int64),
            np.array([m.pattern for m in mo], dtype=np.int64) - 1,
            np.array([m.subkey.entropy for m in mo], dtype=np.uint64),
            rounds, out)
        for j, m in enumerate(mo):
            m.x = x[j].copy()
            m.reseeds = counts[j].tolist()
        return out.tobytes()

    def next_bytes(self, n: int) -> bytes:
        if n < 0:
            raise ValueError("byte count must be non-negative")
        while len(self._buffer) < n:
            need = n - len(self._buffer)
            rounds = min(-(-need // self.round_bytes), _MAX_ROUNDS_PER_REFILL)
            self._buffer += self._rounds(rounds)
        out = bytes(self._buffer[:n])
        del self._buffer[:n]
        return out

    def xor(self, data: bytes) -> bytes:
        """Encrypt or decrypt ``data`` with the next ``len(data)`` keystream bytes."""
        data = np.frombuffer(bytes(data), dtype=np.uint8)
        ks = np.frombuffer(self.next_bytes(data.size), dtype=np.uint8)
        return (data ^ ks).tobytes()


def keystream(key: bytes, n: int, maps: int = DEFAULT_MAPS,
              orbits: int = DEFAULT_ORBITS) -> bytes:
    return KeystreamGenerator(key, maps, orbits).next_bytes(n)


def xor_cipher(data: bytes, generator: KeystreamGenerator) -> bytes:
    return generator.xor(data)
