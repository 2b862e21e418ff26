from collections import Counter

import pytest
from hypothesis import given, strategies as st

import oracles
from mmohocc import vectors
from mmohocc.hopping import HopScheduler, full_table, next_orbit, pattern_for_hpsn

EXAMPLE_PATTERN = (7, 3, 9, 1, 6, 10, 4, 5, 2, 11, 8)


@given(st.integers(0, 255), st.integers(2, 40))
def test_pattern_is_permutation_and_matches_oracle(h, K):
    p = pattern_for_hpsn(h, K)
    assert sorted(p) == list(range(1, K + 1))
    assert list(p) == oracles.pattern(h, K)


def test_golden_hpsn0():
    assert pattern_for_hpsn(0, 11) == vectors.PATTERN_HPSN0_K11


@pytest.mark.parametrize("h", [-1, 256])
def test_hpsn_out_of_range(h):
    with pytest.raises(ValueError):
        pattern_for_hpsn(h, 11)


def test_example_pattern_visit_order():
    s = HopScheduler(EXAMPLE_PATTERN)
    orbit, s2 = next_orbit(s)
    assert (orbit, s2.position, s.position) == (7, 1, 0)
    visits = [s.next_orbit() for _ in range(len(EXAMPLE_PATTERN) + 1)]
    assert visits[:3] == [7, 3, 9]
    assert visits[10] == 8 and visits[9] == 11
    assert visits[11] == visits[0]


def test_scheduler_visits_each_orbit_n_times():
    s = HopScheduler(pattern_for_hpsn(77, 13))
    counts = Counter(s.next_orbit() for _ in range(5 * 13))
    assert counts == {k: 5 for k in range(1, 14)}


def test_table_is_valid_for_all_sizes():
    for K in range(2, 33):
        for row in full_table(K):
            assert sorted(row) == list(range(1, K + 1))


def test_table_idempotent_and_mostly_distinct():
    t = full_table(11)
    assert t == full_table(11)
    assert len(set(t)) >= 250
