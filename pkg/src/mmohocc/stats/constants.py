"""Reference-distribution constants for the statistical tests.

Values are transcribed from NIST SP 800-22 (Rukhin et al., 2001; revision 1a
where a later correction exists). Section numbers refer to that document.
Distributions with a closed form are computed rather than transcribed; the
test-suite audits every table against an exact recomputation.
"""

import math

# 2.4 / 3.4 Longest run of ones in a block. Keyed by block length M:
# (upper bound of the lowest category, lower bound of the highest category, probabilities)
LONGEST_RUN = {
    8: (1, 4, (0.21484375, 0.3671875, 0.23046875, 0.1875)),
    128: (4, 9, (0.1174035788, 0.242955959, 0.249363483, 0.17517706,
                 0.102701071, 0.112398847)),
    10_000: (10, 16, (0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727)),
}


def longest_run_block_length(n: int) -> int:
    """Block length choice of 2.4.2 by sequence length."""
    if n < 6272:
        return 8
    if n < 750_000:
        return 128
    return 10_000


def rank_probability(r: int, rows: int = 32, cols: int = 32) -> float:
    """P(rank = r) for a uniformly random rows x cols GF(2) matrix (3.5)."""
    if r == 0:
        return 2.0 ** (-rows * cols)
    prod = 1.0
    for i in range(r):
        prod *= (1 - 2.0 ** (i - rows)) * (1 - 2.0 ** (i - cols)) / (1 - 2.0 ** (i - r))
    return 2.0 ** (r * (rows + cols - r) - rows * cols) * prod


# 2.5: full rank, rank 31, rank <= 30 for 32 x 32 matrices
RANK_PROBABILITIES = (
    rank_probability(32),
    rank_probability(31),
    1.0 - rank_probability(32) - rank_probability(31),
)
RANK_MIN_MATRICES = 38

# 2.8 Overlapping template (m = 9 ones, M = 1032, K = 5), rev. 1a corrected values
OVERLAPPING_BLOCK = 1032
OVERLAPPING_M = 9
OVERLAPPING_PROBABILITIES = (0.364091, 0.185659, 0.139381, 0.100571, 0.070432, 0.139865)

# 2.9 Maurer's universal test: L -> (expectedValue, variance)
UNIVERSAL_MOMENTS = {
    1: (0.7326495, 0.690),
    2: (1.5374383, 1.338),
    3: (2.4016068, 1.901),
    4: (3.3112247, 2.358),
    5: (4.2534266, 2.705),
    6: (5.2177052, 2.954),
    7: (6.1962507, 3.125),
    8: (7.1836656, 3.238),
    9: (8.1764248, 3.311),
    10: (9.1723243, 3.356),
    11: (10.170032, 3.384),
    12: (11.168765, 3.401),
    13: (12.168070, 3.410),
    14: (13.167693, 3.416),
    15: (14.167488, 3.419),
    16: (15.167379, 3.421),
}

# 2.9.7: minimum n for each L (Q = 10 * 2^L)
UNIVERSAL_MIN_LENGTH = (
    (6, 387_840),
    (7, 904_960),
    (8, 2_068_480),
    (9, 4_654_080),
    (10, 10_342_400),
    (11, 22_753_280),
    (12, 49_643_520),
    (13, 107_560_960),
    (14, 231_669_760),
    (15, 496_435_200),
    (16, 1_059_061_760),
)

# 2.10 Linear complexity: categories T <= -2.5, (-2.5,-1.5], ..., T > 2.5
LINEAR_COMPLEXITY_PROBABILITIES = (0.010417, 0.03125, 0.125, 0.5, 0.25, 0.0625, 0.020833)
LINEAR_COMPLEXITY_EDGES = (-2.5, -1.5, -0.5, 0.5, 1.5, 2.5)


def excursion_probabilities(x: int) -> tuple[float, ...]:
    """pi_k(x), k = 0..4 and k >= 5, for the random excursions test (3.14)."""
    ax = abs(x)
    q = 1 - 1 / (2 * ax)
    probs = [q]
    probs += [1 / (4 * ax * ax) * q ** (k - 1) for k in range(1, 5)]
    probs.append(1 / (2 * ax) * q ** 4)
    return tuple(probs)


EXCURSION_STATES = (-4, -3, -2, -1, 1, 2, 3, 4)
EXCURSION_VARIANT_STATES = tuple(x for x in range(-9, 10) if x)
EXCURSION_MIN_CYCLES = 500


def excursion_min_cycles(n: int) -> float:
    return max(EXCURSION_MIN_CYCLES, 0.005 * math.sqrt(n))


def aperiodic_templates(m: int) -> list[int]:
    """m-bit templates that cannot overlap a shifted copy of themselves (2.7 template library)."""
    out = []
    for t in range(1 << m):
        bits = format(t, f"0{m}b")
        if all(bits[s:] != bits[:m - s] for s in range(1, m)):
            out.append(t)
    return out
