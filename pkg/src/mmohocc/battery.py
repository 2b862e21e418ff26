"""Run the test suite over many sequences and aggregate the results.

Three analyses are produced per battery row: mean/variance of the p-values,
the proportion of passing p-values against a 3-sigma confidence interval,
and a 10-bin chi-square check of p-value uniformity.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .keyschedule import DEFAULT_MAPS, DEFAULT_ORBITS
from .keystream import KeystreamGenerator
from .mix import mix64_stream
from .specfun import igamc
from .stats import DEFAULT_ALPHA, TEST_NAMES, BitSequence, TestId, TestParams, run_suite
from .stats.core import ORDER

UNIFORMITY_THRESHOLD = 0.0001
UNIFORMITY_MIN_SAMPLES = 10


@dataclass(frozen=True)
class BatteryConfig:
    sequences: int
    bits_per_sequence: int
    alpha: float = DEFAULT_ALPHA
    tests: tuple[str, ...] = TEST_NAMES
    params: TestParams = field(default_factory=TestParams)
    workers: int = 1

    def __post_init__(self):
        if self.sequences < 1:
            raise ValueError("need at least one sequence")
        if self.bits_per_sequence < 1:
            raise ValueError("need at least one bit per sequence")
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        unknown = set(self.tests) - set(TEST_NAMES)
        if unknown:
            raise ValueError(f"unknown tests: {', '.join(sorted(unknown))}")


def proportion_range(alpha: float, m: int) -> tuple[float, float]:
    """Acceptable pass-proportion interval p_hat +/- 3 sqrt(p_hat (1 - p_hat) / m)."""
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if m < 1:
        raise ValueError(f"sample size must be positive, got {m}")
    p_hat = 1 - alpha
    half = 3 * math.sqrt(p_hat * (1 - p_hat) / m)
    return p_hat - half, min(p_hat + half, 1.0)


def summarize(pvalues) -> tuple[float, float]:
    """Mean and population variance."""
    p = np.asarray(pvalues, dtype=np.float64)
    if p.size == 0:
        raise ValueError("cannot summarize an empty list of p-values")
    return float(p.mean()), float(p.var())


def uniformity(pvalues) -> tuple[float, list[int]]:
    """Chi-square p-value over ten equal bins of [0, 1], and the bin counts."""
    p = np.asarray(pvalues, dtype=np.float64)
    if p.size < UNIFORMITY_MIN_SAMPLES:
        warnings.warn(f"uniformity check on only {p.size} p-values is not meaningful",
                      stacklevel=2)
    if p.size == 0:
        return math.nan, [0] * 10
    bins = np.minimum((p * 10).astype(np.int64), 9)
    counts = np.bincount(bins, minlength=10)
    expected = p.size / 10
    chi2 = float(np.sum((counts - expected) ** 2) / expected)
    return igamc(4.5, chi2 / 2), counts.tolist()


@dataclass
class RowReport:
    test_id: TestId
    p_values: list[float]
    sequences_applicable: int
    sequences_total: int
    alpha: float

    @property
    def count(self) -> int:
        return len(self.p_values)

    @property
    def passed(self) -> int:
        return sum(p >= self.alpha for p in self.p_values)

    @property
    def proportion(self) -> float | None:
        return self.passed / self.count if self.count else None

    @property
    def moments(self) -> tuple[float, float] | None:
        return summarize(self.p_values) if self.count else None

    @property
    def uniformity(self) -> tuple[float, list[int]] | None:
        if not self.count:
            return None
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return uniformity(self.p_values)


@dataclass
class BatteryReport:
    config: BatteryConfig
    rows: list[RowReport]
    manifest: dict = field(default_factory=dict)

    @property
    def range(self) -> tuple[float, float]:
        return proportion_range(self.config.alpha, self.config.sequences)

    def row(self, test_id: TestId) -> RowReport:
        return next(r for r in self.rows if r.test_id is test_id)

    def conclusion(self, row: RowReport) -> str:
        if not row.count:
            return "n/a"
        lo, hi = self.range
        ok = lo <= row.proportion <= hi and row.uniformity[0] >= UNIFORMITY_THRESHOLD
        return "Success" if ok else "Failure"

    @property
    def below_range(self) -> list[TestId]:
        lo, _ = self.range
        return [r.test_id for r in self.rows if r.count and r.proportion < lo]

    @property
    def all_success(self) -> bool:
        return all(self.conclusion(r) in ("Success", "n/a") for r in self.rows)


def _evaluate(args):
    seq, tests, params = args
    return run_suite(seq, tests, params)


def run_battery(source: Iterable[BitSequence], cfg: BatteryConfig,
                manifest: dict | None = None) -> BatteryReport:
    """Apply the configured tests to ``cfg.sequences`` sequences drawn from ``source``."""
    seqs = _take(source, cfg)
    jobs = ((s, cfg.tests, cfg.params) for s in seqs)
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            per_seq = list(pool.map(_evaluate, jobs))
    else:
        per_seq = [_evaluate(j) for j in jobs]

    pooled: dict[TestId, list[float]] = {}
    applicable: dict[TestId, int] = {}
    for results in per_seq:
        for r in results:
            pooled.setdefault(r.test_id, [])
            applicable.setdefault(r.test_id, 0)
            if r.applicable:
                pooled[r.test_id].extend(r.p_values)
                applicable[r.test_id] += 1
    rows = [RowReport(t, pooled[t], applicable[t], len(per_seq), cfg.alpha)
            for t in sorted(pooled, key=ORDER.__getitem__)]
    return BatteryReport(cfg, rows, dict(manifest or {}))


def _take(source: Iterable[BitSequence], cfg: BatteryConfig) -> Iterator[BitSequence]:
    count = 0
    for seq in source:
        if count == cfg.sequences:
            return
        if seq.n != cfg.bits_per_sequence:
            raise ValueError(f"sequence {count} has {seq.n} bits, "
                             f"expected {cfg.bits_per_sequence}")
        count += 1
        yield seq
    if count < cfg.sequences:
        raise ValueError(f"source ran out after {count} of {cfg.sequences} sequences")


# ---------------------------------------------------------------- sequence sources

def chunk_bits(read, n_bits: int, count: int) -> Iterator[BitSequence]:
    """Split a byte stream into ``count`` consecutive ``n_bits``-bit sequences.

    ``read(k)`` must return up to ``k`` bytes; a short read means end of data.
    """
    carry = np.zeros(0, dtype=np.uint8)
    for _ in range(count):
        need = n_bits - carry.size
        chunk = read(-(-need // 8)) if need > 0 else b""
        fresh = np.unpackbits(np.frombuffer(chunk, dtype=np.uint8))
        bits = np.concatenate([carry, fresh])
        if bits.size < n_bits:
            return
        yield BitSequence(np.packbits(bits[:n_bits]).tobytes(), n_bits)
        carry = bits[n_bits:]


def keystream_source(key: bytes, n_bits: int, count: int, maps: int = DEFAULT_MAPS,
                     orbits: int = DEFAULT_ORBITS) -> Iterator[BitSequence]:
    """Consecutive segments of one keystream."""
    gen = KeystreamGenerator(key, maps, orbits)
    return chunk_bits(gen.next_bytes, n_bits, count)


def file_source(path, n_bits: int, count: int) -> Iterator[BitSequence]:
    with open(path, "rb") as fh:
        yield from chunk_bits(fh.read, n_bits, count)


def mix64_source(n_bits: int, count: int, start: int = 1) -> Iterator[BitSequence]:
    """Reference-quality sequences from the mix64 counter stream."""
    state = {"pos": start}

    def read(k):
        words = -(-k // 8)
        data = mix64_stream(8 * words, state["pos"])
        state["pos"] += words
        return data[:k]
    return chunk_bits(read, n_bits, count)
