"""Timing harness for the expensive kernels.

Caches are cleared before each size so numbers measure real work, not
memo hits.
"""

from __future__ import annotations

import time

from . import grothendieck, oracle, partitions as pt, symfunc


def clear_caches() -> None:
    for fn in (
        symfunc._skew_expand,
        symfunc._lr_pair,
        symfunc._horizontal_additions,
        symfunc._vertical_additions,
        symfunc.complete_to_schur,
        symfunc.elementary_to_schur,
        grothendieck._s_class,
        grothendieck._h_det,
        grothendieck._h_det_monomials,
        oracle.schur_poly,
        oracle.skew_schur_poly,
        pt.partitions_of,
    ):
        fn.cache_clear()


def _workload(op: str, size: int) -> int:
    ps = pt.partitions_of(size)
    count = 0
    if op == "lr":
        for l in ps:
            for m in ps:
                symfunc.multiply(symfunc.schur(l), symfunc.schur(m))
                count += 1
    elif op == "sclass":
        for l in ps:
            for m in ps:
                grothendieck.s_class(l, m)
                count += 1
    elif op == "det":
        for l in ps:
            for m in ps:
                grothendieck.mixed_jacobi_trudi(l, m)
                count += 1
    else:
        raise ValueError(f"unknown op {op!r}; choose from lr, sclass, det")
    return count


def run_bench(op: str, max_size: int) -> list[tuple[int, int, float]]:
    """Rows of (size, cases, seconds) for sizes 1..max_size."""
    rows = []
    for size in range(1, max_size + 1):
        clear_caches()
        t0 = time.perf_counter()
        count = _workload(op, size)
        rows.append((size, count, time.perf_counter() - t0))
    return rows


def format_rows(op: str, rows: list[tuple[int, int, float]]) -> str:
    lines = [f"bench {op}", "size  cases  seconds"]
    for size, count, secs in rows:
        lines.append(f"{size:>4}  {count:>5}  {secs:.4f}")
    return "\n".join(lines)
