"""Chaotic map families and orbit iteration.

Both families use only correctly rounded binary64 multiply and subtract, in a
fixed operand order, so orbits are reproducible bit-for-bit on any IEEE-754
platform. Degenerate iterates (leaving (0, 1) or locking onto a fixed point)
are replaced by a key-derived reseed value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .mix import mix64

TWO52 = float(1 << 52)
_SEED_MOD = (1 << 52) - 1


class Family(enum.IntEnum):
    LOGISTIC = 0
    CUBIC = 1


COEFFICIENT_RANGE = {
    Family.LOGISTIC: (3.99, 4.0),
    Family.CUBIC: (2.55, 2.598),
}


@dataclass(frozen=True)
class MapParams:
    family: Family
    coefficient: float

    @property
    def in_range(self) -> bool:
        lo, hi = COEFFICIENT_RANGE[self.family]
        if self.family is Family.LOGISTIC:
            return lo <= self.coefficient < hi
        return lo <= self.coefficient <= hi


@dataclass(frozen=True)
class OrbitState:
    x: float
    orbit_index: int
    reseed_count: int = 0
    # identifies the owning map and key material for degenerate-orbit recovery
    map_index: int = 0
    entropy: int = 0


def word_to_unit(word: int) -> float:
    """Map a 64-bit word onto the grid {1, ..., 2^52 - 1} / 2^52, strictly inside (0, 1)."""
    return ((word % _SEED_MOD) + 1) / TWO52


def raw_step(x: float, params: MapParams) -> float:
    """One application of the map with the normative evaluation order, no repair."""
    if params.family is Family.LOGISTIC:
        t1 = params.coefficient * x
        t2 = 1.0 - x
        return t1 * t2
    t1 = x * x
    t2 = 1.0 - t1
    t3 = params.coefficient * x
    return t3 * t2


def reseed_value(map_index: int, orbit_index: int, reseed_count: int,
                 master_entropy: int) -> float:
    tweak = (map_index << 16) + (orbit_index << 8) + reseed_count
    return word_to_unit(mix64(master_entropy ^ tweak))


def reseed(state: OrbitState, map_index: int | None = None,
           master_entropy: int | None = None) -> OrbitState:
    """Replace the iterate with a fresh point derived from the key entropy.

    ``map_index`` and ``master_entropy`` default to the values carried by the
    state itself.
    """
    if map_index is None:
        map_index = state.map_index
    if master_entropy is None:
        master_entropy = state.entropy
    x = reseed_value(map_index, state.orbit_index, state.reseed_count, master_entropy)
    return replace(state, x=x, reseed_count=state.reseed_count + 1)


def iterate(state: OrbitState, params: MapParams) -> OrbitState:
    x_new = raw_step(state.x, params)
    if not 0.0 < x_new < 1.0 or x_new == state.x:
        return reseed(state)
    return replace(state, x=x_new)


def burn_in(state: OrbitState, params: MapParams, n: int) -> OrbitState:
    if n < 0:
        raise ValueError(f"burn-in length must be non-negative, got {n}")
    for _ in range(n):
        state = iterate(state, params)
    return state


def iterate_block(x: np.ndarray, params: MapParams, steps: int) -> np.ndarray:
    """Advance a vector of orbits ``steps`` times without repair.

    Returns an array of shape ``(steps, len(x))`` whose row ``s`` holds the
    iterates after ``s + 1`` applications. The same operand order as
    :func:`raw_step` is used, so every element is bit-identical to the scalar
    path. Callers are responsible for detecting degenerate values.
    """
    out = np.empty((steps, x.shape[0]), dtype=np.float64)
    t1 = np.empty_like(x)
    t2 = np.empty_like(x)
    c = params.coefficient
    cur = x
    if params.family is Family.LOGISTIC:
        for s in range(steps):
            row = out[s]
            np.multiply(c, cur, out=t1)
            np.subtract(1.0, cur, out=t2)
            np.multiply(t1, t2, out=row)
            cur = row
    else:
        for s in range(steps):
            row = out[s]
            np.multiply(cur, cur, out=t1)
            np.subtract(1.0, t1, out=t2)
            np.multiply(c, cur, out=t1)
            np.multiply(t1, t2, out=row)
            cur = row
    return out
