"""Hopping-pattern table and per-map orbit scheduler.

Each 8-bit hpsn selects one of 256 visit orders over the orbits of a map.
Rows are not stored: row ``h`` is a Fisher-Yates shuffle of ``1..K`` driven
by ``mix64(h * 2**32 + i)``, so the whole table is reproducible from nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .mix import mix64


@lru_cache(maxsize=4096)
def pattern_for_hpsn(hpsn: int, orbits: int) -> tuple[int, ...]:
    if not 0 <= hpsn <= 255:
        raise ValueError(f"hpsn must be in 0..255, got {hpsn}")
    if orbits < 2:
        raise ValueError("need at least two orbits")
    order = list(range(1, orbits + 1))
    base = hpsn << 32
    for draw, i in enumerate(range(orbits - 1, 0, -1)):
        j = mix64(base + draw) % (i + 1)
        order[i], order[j] = order[j], order[i]
    return tuple(order)


def full_table(orbits: int) -> list[tuple[int, ...]]:
    return [pattern_for_hpsn(h, orbits) for h in range(256)]


@dataclass
class HopScheduler:
    pattern: tuple[int, ...]
    position: int = 0

    def next_orbit(self) -> int:
        orbit = self.pattern[self.position]
        self.position = (self.position + 1) % len(self.pattern)
        return orbit


def next_orbit(scheduler: HopScheduler) -> tuple[int, HopScheduler]:
    """Functional form: returns the orbit and an advanced copy of ``scheduler``."""
    advanced = HopScheduler(scheduler.pattern, scheduler.position)
    return advanced.next_orbit(), advanced
