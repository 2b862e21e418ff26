"""Run the battery on the mix64 counter stream, the in-repo reference generator.

Every proportion should land in [0.955, 1] at 200 x 10^6 bits; a miss points
at the test implementation rather than at the cipher.
"""

import argparse
from dataclasses import asdict, dataclass

from mmohocc.battery import BatteryConfig, mix64_source, run_battery
from mmohocc.report import to_text, write_reports


@dataclass
class Calibration:
    sequences: int = 200
    bits: int = 1_000_000
    start: int = 1
    out: str = "calibration"


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(Calibration()).items():
        p.add_argument(f"--{name}", type=type(default), default=default)
    run = Calibration(**vars(p.parse_args()))
    cfg = BatteryConfig(sequences=run.sequences, bits_per_sequence=run.bits)
    report = run_battery(mix64_source(run.bits, run.sequences, run.start), cfg, asdict(run))
    print(to_text(report))
    low = [r.test_id.key for r in report.rows if r.count and r.proportion < 0.955]
    print("calibration", "FAILED: " + ", ".join(low) if low else "ok")
    write_reports(report, run.out)


if __name__ == "__main__":
    main()
