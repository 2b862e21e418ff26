"""Text, JSON and CSV renderings of a battery report."""

from __future__ import annotations

import csv
import io
import json
import math

from .battery import BatteryReport


def _fmt(x, fmt=".4f"):
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "-"
    return format(x, fmt)


def to_text(report: BatteryReport) -> str:
    lo, hi = report.range
    cfg = report.config
    lines = [
        f"{cfg.sequences} sequences x {cfg.bits_per_sequence} bits, alpha = {cfg.alpha}",
        f"acceptable proportion range: {lo:.5f} .. {hi:.5f}",
        "",
        f"{'TSN':>3}  {'Test Name':<36}{'Mean':>8}{'Variance':>10}{'Prop.':>8}"
        f"{'P-value_T':>11}{'#p':>7}  Conclusion",
    ]
    for row in report.rows:
        mean, var = row.moments or (None, None)
        p_t = row.uniformity[0] if row.uniformity else None
        lines.append(
            f"{row.test_id.tsn:>3}  {row.test_id.title:<36}{_fmt(mean):>8}{_fmt(var):>10}"
            f"{_fmt(row.proportion):>8}{_fmt(p_t, '.6f'):>11}{row.count:>7}  "
            f"{report.conclusion(row)}")
    return "\n".join(lines) + "\n"


def to_dict(report: BatteryReport) -> dict:
    lo, hi = report.range
    cfg = report.config
    rows = []
    for row in report.rows:
        mean, var = row.moments or (None, None)
        p_t, hist = row.uniformity or (None, [0] * 10)
        rows.append({
            "tsn": row.test_id.tsn,
            "test": row.test_id.key,
            "name": row.test_id.title,
            "p_values": row.count,
            "sequences_applicable": row.sequences_applicable,
            "passed": row.passed,
            "proportion": row.proportion,
            "mean": mean,
            "variance": var,
            "uniformity_p": None if p_t is None or math.isnan(p_t) else p_t,
            "histogram": hist,
            "conclusion": report.conclusion(row),
        })
    return {
        "manifest": report.manifest,
        "config": {
            "sequences": cfg.sequences,
            "bits_per_sequence": cfg.bits_per_sequence,
            "alpha": cfg.alpha,
            "tests": list(cfg.tests),
        },
        "proportion_range": [lo, hi],
        "rows": rows,
    }


def to_json(report: BatteryReport) -> str:
    return json.dumps(to_dict(report), indent=2, sort_keys=True) + "\n"


def to_csv(report: BatteryReport) -> str:
    """One row per histogram bin, one column per battery row."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["bin_lo", "bin_hi"] + [r.test_id.key for r in report.rows])
    hists = [(r.uniformity or (None, [0] * 10))[1] for r in report.rows]
    for b in range(10):
        w.writerow([f"{b / 10:.1f}", f"{(b + 1) / 10:.1f}"] + [h[b] for h in hists])
    return buf.getvalue()


def write_reports(report: BatteryReport, prefix: str) -> list[str]:
    paths = []
    for ext, render in (("txt", to_text), ("json", to_json), ("csv", to_csv)):
        path = f"{prefix}.{ext}"
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render(report))
        paths.append(path)
    return paths
