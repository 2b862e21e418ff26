"""Multi-map orbit-hopping chaotic stream cipher and a NIST SP 800-22 style battery."""

__version__ = "0.1.0"

from .battery import BatteryConfig, BatteryReport, proportion_range, run_battery, summarize, uniformity
from .chaos import Family, MapParams, OrbitState, burn_in, iterate, reseed
from .hopping import HopScheduler, next_orbit, pattern_for_hpsn
from .keyschedule import Subkey, expand_key, mix64, parse_hex_key
from .keystream import KeystreamGenerator, extract_pair, keystream, xor_cipher
from .specfun import erfc, igamc

__all__ = [
    "BatteryConfig", "BatteryReport", "Family", "HopScheduler", "KeystreamGenerator",
    "MapParams", "OrbitState", "Subkey", "burn_in", "erfc", "expand_key", "extract_pair",
    "igamc", "iterate", "keystream", "mix64", "next_orbit", "parse_hex_key",
    "pattern_for_hpsn", "proportion_range", "reseed", "run_battery", "summarize",
    "uniformity", "xor_cipher",
]
