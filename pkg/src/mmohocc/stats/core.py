"""Bit sequences under test and per-test results."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

import numpy as np

DEFAULT_ALPHA = 0.01


@dataclass(frozen=True)
class BitSequence:
    """Packed bits, most significant bit first within each byte."""

    data: bytes
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= 8 * len(self.data):
            raise ValueError(f"bit count {self.n} does not fit {len(self.data)} bytes")

    @classmethod
    def from_bytes(cls, data: bytes, n: int | None = None) -> BitSequence:
        data = bytes(data)
        return cls(data, 8 * len(data) if n is None else n)

    @classmethod
    def from_bits(cls, bits) -> BitSequence:
        """From a ``'0101'`` string or any iterable of 0/1 values."""
        if isinstance(bits, str):
            arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
        else:
            arr = np.asarray(bits, dtype=np.uint8)
        if arr.size == 0 or arr.max(initial=0) > 1:
            raise ValueError("expected a non-empty sequence of 0/1 values")
        return cls(np.packbits(arr).tobytes(), int(arr.size))

    @cached_property
    def bits(self) -> np.ndarray:
        out = np.unpackbits(np.frombuffer(self.data, dtype=np.uint8), count=self.n)
        out.flags.writeable = False
        return out

    def __len__(self) -> int:
        return self.n


BitsLike = Union[BitSequence, str, np.ndarray, list]


def as_bits(s: BitsLike) -> np.ndarray:
    if isinstance(s, BitSequence):
        return s.bits
    return BitSequence.from_bits(s).bits


class TestId(enum.Enum):
    """Battery rows, numbered as in the original NIST result table (Lempel-Ziv, 6, omitted)."""

    __test__ = False  # not a pytest class

    APPROXIMATE_ENTROPY = (1, "Approximate Entropy")
    BLOCK_FREQUENCY = (2, "Block Frequency")
    CUSUM_FORWARD = (3, "Cumulative Sums (Forward)")
    CUSUM_REVERSE = (3, "Cumulative Sums (Reverse)")
    FFT = (4, "Fast Fourier Transform (Spectral)")
    FREQUENCY = (5, "Frequency (Mono-bit)")
    LINEAR_COMPLEXITY = (7, "Linear Complexity")
    LONGEST_RUN = (8, "Longest Runs of Ones")
    UNIVERSAL = (9, "Maurer's Universal Statistical")
    NON_OVERLAPPING_TEMPLATE = (10, "Non-Overlapping Template Matching")
    OVERLAPPING_TEMPLATE = (11, "Overlapping Template Matching")
    RANDOM_EXCURSIONS = (12, "Random Excursions")
    RANDOM_EXCURSIONS_VARIANT = (13, "Random Excursions Variant")
    RANK = (14, "Rank")
    RUNS = (15, "Runs")
    SERIAL = (16, "Serial")

    @property
    def tsn(self) -> int:
        return self.value[0]

    @property
    def title(self) -> str:
        return self.value[1]

    @property
    def key(self) -> str:
        return self.name.lower()


ORDER = {t: i for i, t in enumerate(TestId)}


@dataclass(frozen=True)
class TestResult:
    __test__ = False

    test_id: TestId
    p_values: tuple[float, ...]
    applicable: bool = True
    alpha: float = DEFAULT_ALPHA
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> tuple[bool, ...]:
        if not self.applicable:
            return ()
        return tuple(p >= self.alpha for p in self.p_values)

    @property
    def p_value(self) -> float:
        return self.p_values[0]


def result(test_id: TestId, p_values, applicable: bool = True, **detail) -> TestResult:
    if isinstance(p_values, (int, float)):
        p_values = (p_values,)
    clamped = tuple(min(1.0, max(0.0, float(p))) for p in p_values)
    return TestResult(test_id, clamped, applicable, DEFAULT_ALPHA, detail)


def inapplicable(test_id: TestId, reason: str, p_values=()) -> TestResult:
    return result(test_id, p_values, applicable=False, reason=reason)
