"""Master key expansion into per-map subkeys."""

from __future__ import annotations

from dataclasses import dataclass

from .chaos import Family, MapParams, word_to_unit
from .mix import GOLDEN_GAMMA, MASK64, mix64

__all__ = ["Subkey", "expand_key", "parse_hex_key", "mix64"]

KEY_LENGTHS = (16, 32, 64)
DEFAULT_MAPS = 4
DEFAULT_ORBITS = 11


@dataclass(frozen=True)
class Subkey:
    map_index: int
    params: MapParams
    seeds: tuple[float, ...]
    offsets: tuple[int, ...]
    hpsn: int
    dwell: int
    entropy: int


def _coefficient(family: Family, word: int) -> float:
    frac = (word % 1024) / 1024
    if family is Family.LOGISTIC:
        return 3.99 + frac * 0.0099
    return 2.55 + frac * 0.048


def expand_key(key: bytes, maps: int = DEFAULT_MAPS,
               orbits: int = DEFAULT_ORBITS) -> list[Subkey]:
    """Derive ``maps`` subkeys, each controlling ``orbits`` orbits of one chaotic map.

    The key is read as big-endian 64-bit words and absorbed through
    :func:`mix64` into a per-map state; every subkey field is then a separate
    ``mix64(state ^ tag)`` draw reduced into its range.
    """
    key = bytes(key)
    if len(key) not in KEY_LENGTHS:
        raise ValueError(f"master key must be 16, 32 or 64 bytes, got {len(key)}")
    if maps < 1:
        raise ValueError("need at least one map")
    if orbits < 2:
        raise ValueError("need at least two orbits per map")
    words = [int.from_bytes(key[i:i + 8], "big") for i in range(0, len(key), 8)]

    subkeys = []
    for j in range(maps):
        tweak = (j * GOLDEN_GAMMA) & MASK64
        state = 0
        for w in words:
            state = mix64(state ^ w ^ tweak)

        def d(t: int) -> int:
            return mix64(state ^ t)

        family = Family(d(0) % 2)
        subkeys.append(Subkey(
            map_index=j,
            params=MapParams(family, _coefficient(family, d(1))),
            seeds=tuple(word_to_unit(d(256 + k)) for k in range(1, orbits + 1)),
            offsets=tuple(64 + d(512 + k) % 192 for k in range(1, orbits + 1)),
            hpsn=d(2) % 256,
            dwell=1 + d(3) % 4,
            entropy=d(4),
        ))
    return subkeys


def parse_hex_key(text: str) -> bytes:
    text = text.strip()
    if len(text) not in (32, 64, 128):
        raise ValueError(f"hex key must have 32, 64 or 128 digits, got {len(text)}")
    if any(ch not in "0123456789abcdefABCDEF" for ch in text):
        raise ValueError("hex key contains non-hexadecimal characters")
    return bytes.fromhex(text)
