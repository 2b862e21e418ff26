"""NIST SP 800-22 style statistical tests (Lempel-Ziv excluded)."""

from __future__ import annotations

from dataclasses import dataclass

from .complexity import approximate_entropy, linear_complexity, maurer_universal, serial
from .core import DEFAULT_ALPHA, ORDER, BitSequence, TestId, TestResult
from .excursions import random_excursions, random_excursions_variant
from .frequency import (block_frequency, cumulative_sums, frequency_monobit,
                        longest_run_of_ones, runs)
from .kernels import berlekamp_massey, dft_magnitudes, gf2_rank
from .structure import binary_matrix_rank, dft_spectral
from .templates import nonoverlapping_template, overlapping_template

# Battery names accepted on the command line and in BatteryConfig.tests
TEST_NAMES = (
    "approximate_entropy", "block_frequency", "cumulative_sums", "fft", "frequency",
    "linear_complexity", "longest_run", "universal", "non_overlapping_template",
    "overlapping_template", "random_excursions", "random_excursions_variant",
    "rank", "runs", "serial",
)


@dataclass(frozen=True)
class TestParams:
    """Tunable parameters; defaults are the recommendations for 10^6-bit sequences."""

    __test__ = False

    block_frequency_m: int = 128
    template_m: int = 9
    template_blocks: int = 8
    linear_complexity_m: int = 500
    serial_m: int = 16
    apen_m: int = 10


def run_test(name: str, seq: BitSequence, params: TestParams = TestParams()) -> list[TestResult]:
    if name == "approximate_entropy":
        return [approximate_entropy(seq, params.apen_m)]
    if name == "block_frequency":
        return [block_frequency(seq, params.block_frequency_m)]
    if name == "cumulative_sums":
        return [cumulative_sums(seq, "forward"), cumulative_sums(seq, "reverse")]
    if name == "fft":
        return [dft_spectral(seq)]
    if name == "frequency":
        return [frequency_monobit(seq)]
    if name == "linear_complexity":
        return [linear_complexity(seq, params.linear_complexity_m)]
    if name == "longest_run":
        return [longest_run_of_ones(seq)]
    if name == "universal":
        return [maurer_universal(seq)]
    if name == "non_overlapping_template":
        return [nonoverlapping_template(seq, None, params.template_m, params.template_blocks)]
    if name == "overlapping_template":
        return [overlapping_template(seq)]
    if name == "random_excursions":
        return [random_excursions(seq)]
    if name == "random_excursions_variant":
        return [random_excursions_variant(seq)]
    if name == "rank":
        return [binary_matrix_rank(seq)]
    if name == "runs":
        return [runs(seq)]
    if name == "serial":
        return [serial(seq, params.serial_m)]
    raise ValueError(f"unknown test {name!r}; choose from {', '.join(TEST_NAMES)}")


def run_suite(seq: BitSequence, tests=TEST_NAMES,
              params: TestParams = TestParams()) -> list[TestResult]:
    """Apply the selected tests to one sequence; results sorted by battery row."""
    out = []
    for name in tests:
        out.extend(run_test(name, seq, params))
    return sorted(out, key=lambda r: ORDER[r.test_id])


__all__ = [
    "BitSequence", "TestId", "TestResult", "TestParams", "DEFAULT_ALPHA", "TEST_NAMES",
    "run_test", "run_suite", "approximate_entropy", "block_frequency", "cumulative_sums",
    "dft_spectral", "frequency_monobit", "linear_complexity", "longest_run_of_ones",
    "maurer_universal", "nonoverlapping_template", "overlapping_template",
    "random_excursions", "random_excursions_variant", "binary_matrix_rank", "runs",
    "serial", "gf2_rank", "berlekamp_massey", "dft_magnitudes",
]
