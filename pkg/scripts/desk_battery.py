"""Desk-scale battery: m keystream sequences of n bits, three report formats.

    python scripts/desk_battery.py --key 00000000000000000000000000000000 --out runs/zero
"""

import argparse
import time
from dataclasses import asdict, dataclass

from mmohocc import __version__
from mmohocc.battery import BatteryConfig, keystream_source, run_battery
from mmohocc.keyschedule import parse_hex_key
from mmohocc.report import to_text, write_reports


@dataclass
class DeskRun:
    key: str = "0" * 32
    sequences: int = 100
    bits: int = 1_000_000
    alpha: float = 0.01
    maps: int = 4
    orbits: int = 11
    out: str = "desk"


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(DeskRun()).items():
        p.add_argument(f"--{name}", type=type(default), default=default)
    run = DeskRun(**vars(p.parse_args()))

    cfg = BatteryConfig(sequences=run.sequences, bits_per_sequence=run.bits, alpha=run.alpha)
    source = keystream_source(parse_hex_key(run.key), run.bits, run.sequences,
                              run.maps, run.orbits)
    start = time.perf_counter()
    report = run_battery(source, cfg, {"command": "desk_battery", "tool_version": __version__,
                                       **asdict(run)})
    print(to_text(report))
    print(f"{time.perf_counter() - start:.0f} s; reports: {', '.join(write_reports(report, run.out))}")


if __name__ == "__main__":
    main()
