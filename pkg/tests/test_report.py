import csv
import json

import pytest

from rigidkit.report import Sweep, cone_sweep, loglog_slope, run_report, write_sweep


def test_slope_of_power_law():
    ns = [2 ** e for e in range(4, 9)]
    assert loglog_slope(ns, [n ** 2 * 1e-6 for n in ns]) == pytest.approx(2.0)
    assert loglog_slope(ns, [n * 3e-7 for n in ns]) == pytest.approx(1.0)


def test_write_sweep(tmp_path):
    sw = Sweep("demo", [8, 16, 32], [0.01, 0.02, 0.04], [True] * 3, 1.2, "O(n)")
    csv_path, png_path = write_sweep(sw, tmp_path)
    rows = list(csv.DictReader(csv_path.open()))
    assert [r["n"] for r in rows] == ["8", "16", "32"]
    assert png_path.read_bytes()[:4] == b"\x89PNG"
    assert sw.within


def test_cone_sweep_accepts_family(no_audit):
    sw = cone_sweep(range(2, 5))
    assert all(sw.verdicts) and sw.limit is None and sw.within is None


def test_quick_report(tmp_path, no_audit):
    summary = run_report(tmp_path, quick=True)
    assert set(summary) == {"gamma-image", "ross-decide", "cone-decide"}
    assert all(v["all_accepted"] for v in summary.values())
    on_disk = json.loads((tmp_path / "summary.json").read_text())
    assert on_disk.keys() == summary.keys()
    for name in summary:
        assert (tmp_path / f"{name}.csv").exists() and (tmp_path / f"{name}.png").exists()
