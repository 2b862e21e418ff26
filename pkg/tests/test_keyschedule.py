import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from mmohocc import vectors
from mmohocc.chaos import Family
from mmohocc.keyschedule import expand_key, mix64, parse_hex_key
from mmohocc.mix import mix64_array

keys = st.sampled_from([16, 32, 64]).flatmap(lambda n: st.binary(min_size=n, max_size=n))


def test_mix64_zero_is_fixed_point():
    assert mix64(0) == 0


def test_mix64_golden():
    assert mix64(1) == vectors.MIX64_OF_1 == oracles.mix64(1)


@given(st.integers(0, 2**64 - 1))
def test_mix64_matches_oracle_and_vector_form(z):
    assert mix64(z) == oracles.mix64(z)
    assert int(mix64_array(np.array([z], dtype=np.uint64))[0]) == mix64(z)


def test_mix64_no_collisions_on_million_inputs():
    rng = np.random.default_rng(7)
    z = np.unique(rng.integers(0, 2**63, size=1_000_000, dtype=np.uint64))
    out = mix64_array(z)
    assert np.unique(out).size == z.size


def test_zero_key_golden_table():
    subkeys = expand_key(vectors.ZERO_KEY_128, 4, 11)
    got = [(sk.params.family.name.lower(), sk.params.coefficient, sk.hpsn, sk.dwell, sk.entropy)
           for sk in subkeys]
    assert got == list(vectors.ZERO_KEY_SUBKEYS)


@settings(max_examples=50)
@given(keys, st.integers(1, 6), st.integers(2, 16))
def test_expand_key_matches_oracle(key, M, K):
    ref = oracles.subkeys(key, M, K)
    for sk, r in zip(expand_key(key, M, K), ref, strict=True):
        assert sk.params.family == Family(r["family"])
        assert sk.params.coefficient == r["coef"]
        assert list(sk.seeds) == r["seeds"]
        assert list(sk.offsets) == r["offsets"]
        assert (sk.hpsn, sk.dwell, sk.entropy) == (r["hpsn"], r["dwell"], r["entropy"])


@pytest.mark.parametrize("n", [0, 8, 15, 17, 24, 65])
def test_bad_key_length_rejected(n):
    with pytest.raises(ValueError):
        expand_key(bytes(n))


def test_one_bit_flip_changes_subkeys():
    a = bytes(16)
    b = bytes(15) + b"\x01"
    assert expand_key(a) != expand_key(b)


def test_subkeys_within_a_key_are_distinct():
    subkeys = expand_key(bytes(range(32)), 8, 11)
    assert len({(sk.params, sk.seeds, sk.offsets, sk.hpsn, sk.dwell) for sk in subkeys}) == 8


def test_expand_key_is_deterministic():
    key = bytes(range(64))
    assert expand_key(key) == expand_key(key)


def check_ranges(subkeys, K):
    for sk in subkeys:
        assert sk.params.in_range
        assert 0 <= sk.hpsn <= 255
        assert 1 <= sk.dwell <= 4
        assert len(sk.seeds) == len(sk.offsets) == K
        assert all(0 < s < 1 for s in sk.seeds)
        assert all(64 <= o <= 255 for o in sk.offsets)
        assert 0 <= sk.entropy < 2**64


@given(keys)
def test_field_ranges(key):
    check_ranges(expand_key(key), 11)


def test_parse_hex_key():
    assert parse_hex_key("00" * 16) == bytes(16)
    assert parse_hex_key("AB" * 32) == b"\xab" * 32
    for bad in ("00" * 15, "zz" * 16, "0" * 33):
        with pytest.raises(ValueError):
            parse_hex_key(bad)
