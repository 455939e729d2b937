"""Scaling measurements: CSV tables and log-log plots."""
from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass
from pathlib import Path

import matplotlib
import matplotlib.ticker

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .cone import cone_decide  # noqa: E402
from .fixed_lattice import ross_decide  # noqa: E402
from .gamma import is_trivial_image  # noqa: E402
from .generators import cone_family, path_plus_chords, ross_family  # noqa: E402


@dataclass
class Sweep:
    name: str
    ns: list[int]
    seconds: list[float]
    verdicts: list[bool]
    limit: float | None      # slope bound, or None when only reported
    claim: str

    @property
    def slope(self) -> float:
        return loglog_slope(self.ns, self.seconds)

    @property
    def within(self) -> bool | None:
        return None if self.limit is None else self.slope <= self.limit


def loglog_slope(ns, seconds) -> float:
    x = np.log(np.asarray(ns, dtype=float))
    y = np.log(np.maximum(np.asarray(seconds, dtype=float), 1e-9))
    return float(np.polyfit(x, y, 1)[0])


def _best_of(fn, repeats: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def gamma_sweep(exps=range(16, 21), repeats: int = 2) -> Sweep:
    ns, secs, verdicts = [], [], []
    for e in exps:
        g = path_plus_chords(2 ** e, seed=e)
        t, ok = _best_of(lambda: is_trivial_image(g), repeats)
        ns.append(2 ** e)
        secs.append(t)
        verdicts.append(ok)
    return Sweep("gamma-image", ns, secs, verdicts, 1.2, "O(n + m)")


def ross_sweep(exps=range(7, 12), repeats: int = 1) -> Sweep:
    ns, secs, verdicts = [], [], []
    for e in exps:
        g = ross_family(2 ** e)
        t, ok = _best_of(lambda: ross_decide(g), repeats)
        ns.append(2 ** e)
        secs.append(t)
        verdicts.append(ok)
    return Sweep("ross-decide", ns, secs, verdicts, 2.5, "O(n^2)")


def cone_sweep(exps=range(5, 9), k: int = 5, repeats: int = 1) -> Sweep:
    ns, secs, verdicts = [], [], []
    for e in exps:
        g = cone_family(2 ** e, k)
        t, ok = _best_of(lambda: cone_decide(g), repeats)
        ns.append(2 ** e)
        secs.append(t)
        verdicts.append(ok)
    return Sweep("cone-decide", ns, secs, verdicts, None, "O(n^4)")


def write_sweep(sweep: Sweep, out_dir: Path) -> tuple[Path, Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{sweep.name}.csv"
    with csv_path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["suite", "n", "seconds", "verdict"])
        for n, s, v in zip(sweep.ns, sweep.seconds, sweep.verdicts):
            w.writerow([sweep.name, n, f"{s:.6f}", v])

    fig, ax = plt.subplots(figsize=(4.5, 3.4))
    ax.loglog(sweep.ns, sweep.seconds, "o-", color="C0", label="measured")
    ref = np.asarray(sweep.seconds[0]) * (np.asarray(sweep.ns) / sweep.ns[0]) ** (
        sweep.limit if sweep.limit is not None else sweep.slope)
    ax.loglog(sweep.ns, ref, "--", color="0.5",
              label=f"slope {sweep.limit if sweep.limit is not None else round(sweep.slope, 2)}")
    ax.set_xscale("log", base=2)
    ax.set_xticks(sweep.ns, [f"$2^{{{int(np.log2(n))}}}$" for n in sweep.ns])
    ax.xaxis.set_minor_formatter(matplotlib.ticker.NullFormatter())
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.set_title(f"{sweep.name}: fitted slope {sweep.slope:.2f}")
    ax.legend(frameon=False)
    fig.tight_layout()
    png_path = out_dir / f"{sweep.name}.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path


def run_report(out_dir, quick: bool = False) -> dict:
    """Run the three sweeps, write CSV/PNG per sweep and a summary.json."""
    out = Path(out_dir)
    if quick:
        sweeps = [gamma_sweep(range(12, 16), 1), ross_sweep(range(5, 9)),
                  cone_sweep(range(3, 6))]
    else:
        sweeps = [gamma_sweep(), ross_sweep(), cone_sweep()]
    summary = {}
    for sw in sweeps:
        csv_path, png_path = write_sweep(sw, out)
        summary[sw.name] = {
            "n": sw.ns, "seconds": sw.seconds, "slope": sw.slope, "limit": sw.limit,
            "within_limit": sw.within, "claim": sw.claim,
            "all_accepted": all(sw.verdicts), "csv": str(csv_path), "png": str(png_path),
        }
    (out / "summary.json").write_text(json.dumps(summary, indent=2))
    return summary
