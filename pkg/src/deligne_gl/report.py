"""File reports for verification suites and benchmarks.

Writes a delimited (CSV) table and a rendered PNG figure side by side in the
requested directory, named after the suite or benchmark op.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .verify import SuiteResult


def write_delimited(path: Path, header: list[str], rows: list[tuple]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def write_suite_report(out_dir: str | Path, result: SuiteResult) -> tuple[Path, Path]:
    """CSV of per-case outcomes plus a timing figure colored by status."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"verify_{result.suite}.csv"
    png_path = out / f"verify_{result.suite}.png"
    write_delimited(
        csv_path,
        ["case", "status", "seconds"],
        [(c.label, "pass" if c.ok else "fail", f"{c.seconds:.6f}") for c in result.cases],
    )
    fig, ax = plt.subplots(figsize=(10, 4))
    xs = range(len(result.cases))
    ys = [c.seconds for c in result.cases]
    colors = ["tab:green" if c.ok else "tab:red" for c in result.cases]
    ax.bar(xs, ys, color=colors, width=1.0)
    ax.set_xlabel("case index")
    ax.set_ylabel("seconds")
    status = "PASS" if result.passed else "FAIL"
    ax.set_title(f"verify {result.suite} [{result.params}]: {status}, {len(result.cases)} cases")
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path


def write_bench_report(out_dir: str | Path, op: str, rows: list[tuple[int, int, float]]) -> tuple[Path, Path]:
    """CSV of (size, cases, seconds) plus a seconds-vs-size curve."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"bench_{op}.csv"
    png_path = out / f"bench_{op}.png"
    write_delimited(csv_path, ["size", "cases", "seconds"], rows)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot([r[0] for r in rows], [r[2] for r in rows], marker="o")
    ax.set_xlabel("size")
    ax.set_ylabel("seconds")
    ax.set_title(f"bench {op}")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return csv_path, png_path
