"""Random excursions and random excursions variant tests."""

from __future__ import annotations

import math

import numpy as np

from ..specfun import erfc, igamc
from .constants import (EXCURSION_STATES, EXCURSION_VARIANT_STATES, excursion_min_cycles,
                        excursion_probabilities)
from .core import BitsLike, TestId, as_bits, inapplicable, result


def random_walk(bits: np.ndarray) -> np.ndarray:
    return np.cumsum(2 * bits.astype(np.int64) - 1)


def cycle_ids(walk: np.ndarray) -> tuple[np.ndarray, int]:
    """Zero-to-zero cycle index of every walk position, and the cycle count J.

    The walk is treated as starting and ending at 0; a position at 0 closes
    the cycle it belongs to.
    """
    zeros = walk == 0
    ids = np.concatenate([[0], np.cumsum(zeros)[:-1]])
    J = int(zeros.sum()) + (0 if walk.size and walk[-1] == 0 else 1)
    return ids, J


def random_excursions(s: BitsLike, min_cycles: float | None = None):
    bits = as_bits(s)
    walk = random_walk(bits)
    ids, J = cycle_ids(walk)
    if min_cycles is None:
        min_cycles = excursion_min_cycles(bits.size)
    if J < min_cycles:
        return inapplicable(TestId.RANDOM_EXCURSIONS, f"only {J} cycles")
    pvals = []
    for x in EXCURSION_STATES:
        visits = np.bincount(ids[walk == x], minlength=J)
        nu = np.bincount(np.minimum(visits, 5), minlength=6)
        expected = J * np.asarray(excursion_probabilities(x))
        chi2 = float(np.sum((nu - expected) ** 2 / expected))
        pvals.append(igamc(2.5, chi2 / 2))
    return result(TestId.RANDOM_EXCURSIONS, pvals, cycles=J, states=EXCURSION_STATES)


def random_excursions_variant(s: BitsLike, min_cycles: float | None = None):
    bits = as_bits(s)
    walk = random_walk(bits)
    _, J = cycle_ids(walk)
    if min_cycles is None:
        min_cycles = excursion_min_cycles(bits.size)
    if J < min_cycles:
        return inapplicable(TestId.RANDOM_EXCURSIONS_VARIANT, f"only {J} cycles")
    pvals = []
    for x in EXCURSION_VARIANT_STATES:
        xi = int(np.count_nonzero(walk == x))
        pvals.append(erfc(abs(xi - J) / math.sqrt(2 * J * (4 * abs(x) - 2))))
    return result(TestId.RANDOM_EXCURSIONS_VARIANT, pvals, cycles=J,
                  states=EXCURSION_VARIANT_STATES)
