"""Non-overlapping and overlapping template matching tests."""

from __future__ import annotations

import numpy as np

from ..specfun import igamc
from .constants import (OVERLAPPING_BLOCK, OVERLAPPING_M, OVERLAPPING_PROBABILITIES,
                        aperiodic_templates)
from .core import BitsLike, TestId, as_bits, inapplicable, result


def window_values(bits: np.ndarray, m: int) -> np.ndarray:
    """Integer value of every m-bit window bits[i:i+m], i = 0 .. n-m."""
    n = bits.size
    vals = np.zeros(n - m + 1, dtype=np.int64)
    for k in range(m):
        vals = (vals << 1) | bits[k:n - m + 1 + k]
    return vals


def _is_aperiodic(template: int, m: int) -> bool:
    b = format(template, f"0{m}b")
    return all(b[s:] != b[:m - s] for s in range(1, m))


def count_nonoverlapping(block: np.ndarray, template: int, m: int) -> int:
    """Matches of ``template`` in ``block``, skipping m bits after each hit."""
    if block.size < m:
        return 0
    hits = np.flatnonzero(window_values(block, m) == template)
    if _is_aperiodic(template, m):
        return int(hits.size)
    count, nxt = 0, 0
    for h in hits:
        if h >= nxt:
            count += 1
            nxt = h + m
    return count


def nonoverlapping_template(s: BitsLike, template=None, m: int = 9, N: int = 8):
    """Non-overlapping template matching.

    With ``template=None`` every aperiodic m-bit template is tested and one
    p-value per template is reported, in increasing template order. A
    template may be given as an int or a '0'/'1' string (which fixes m).
    """
    if isinstance(template, str):
        m = len(template)
        template = int(template, 2)
    bits = as_bits(s)
    M = bits.size // N
    if M <= m:
        return inapplicable(TestId.NON_OVERLAPPING_TEMPLATE, "block not longer than template")
    templates = aperiodic_templates(m) if template is None else [template]
    mu = (M - m + 1) / 2**m
    var = M * (1 / 2**m - (2 * m - 1) / 2 ** (2 * m))

    if all(_is_aperiodic(t, m) for t in templates):
        # aperiodic matches never overlap: W is a plain count of window hits
        vals = window_values(bits[: N * M], m).reshape(-1)
        pos = np.arange(vals.size)
        keep = (pos % M) <= M - m
        table = np.bincount((pos[keep] // M) * (1 << m) + vals[keep],
                            minlength=N << m).reshape(N, 1 << m)
        W = table[:, templates].T
    else:
        blocks = bits[: N * M].reshape(N, M)
        W = np.array([[count_nonoverlapping(b, t, m) for b in blocks] for t in templates])

    chi2 = ((W - mu) ** 2).sum(axis=1) / var
    pvals = [igamc(N / 2, c / 2) for c in chi2]
    return result(TestId.NON_OVERLAPPING_TEMPLATE, pvals, templates=templates,
                  chi2=chi2.tolist())


def overlapping_template(s: BitsLike):
    bits = as_bits(s)
    M, m = OVERLAPPING_BLOCK, OVERLAPPING_M
    N = bits.size // M
    if N < 1:
        return inapplicable(TestId.OVERLAPPING_TEMPLATE, "fewer than one block")
    blocks = bits[: N * M].reshape(N, M).astype(np.int32)
    csum = np.zeros((N, M + 1), dtype=np.int32)
    np.cumsum(blocks, axis=1, out=csum[:, 1:])
    hits = np.count_nonzero(csum[:, m:] - csum[:, :-m] == m, axis=1)
    K = len(OVERLAPPING_PROBABILITIES) - 1
    counts = np.bincount(np.minimum(hits, K), minlength=K + 1)
    expected = N * np.asarray(OVERLAPPING_PROBABILITIES)
    chi2 = float(np.sum((counts - expected) ** 2 / expected))
    return result(TestId.OVERLAPPING_TEMPLATE, igamc(K / 2, chi2 / 2), chi2=chi2,
                  counts=counts.tolist())
