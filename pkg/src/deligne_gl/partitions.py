"""Integer partitions, skew shapes and semistandard tableaux.

A partition is a plain tuple of weakly decreasing positive ints; ``()`` is the
empty partition.  Trailing zeros are never stored.  The canonical order used
everywhere (enumeration, serialization) is by size first, then parts in
reverse-lexicographic order, so ``(2,) < (1, 1)`` inside size 2.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]
# A tableau is stored row by row; row r holds the entries of the skew cells
# inner[r]..outer[r]-1 in column order.
Tableau = tuple[tuple[int, ...], ...]


class SkewShape(NamedTuple):
    """A skew diagram outer/inner.  Validity (inner inside outer) is checked
    by the consumers that require it, so invalid pairs can still be built and
    then treated as empty/zero where the algebra wants that."""

    outer: Partition
    inner: Partition


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts`` into a partition tuple.

    Drops trailing zeros, rejects negative or increasing data.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p!r}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1,1"`` style text; ``""`` and ``"[]"`` denote the empty
    partition.  A surrounding ``[...]`` is allowed."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1].strip()
    if not s:
        return ()
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "[]"


def canonical_key(p: Partition) -> tuple:
    """Sort key realizing the canonical order: size, then reverse-lex."""
    return (sum(p), tuple(-x for x in p))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths of ``p``."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams, row by row."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of exactly ``n``, largest first part first (reverse-lex)."""
    if n < 0:
        return ()

    def gen(rem: int, maxpart: int) -> Iterator[Partition]:
        if rem == 0:
            yield ()
            return
        for k in range(min(rem, maxpart), 0, -1):
            for rest in gen(rem - k, k):
                yield (k,) + rest

    return tuple(gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size at most ``n``, in canonical order."""
    out: list[Partition] = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def partitions_in_rectangle(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a ``rows x cols`` box, in canonical order."""
    if rows < 0 or cols < 0:
        raise ValueError("rectangle dimensions must be nonnegative")
    out: list[Partition] = []
    for n in range(rows * cols + 1):
        for p in partitions_of(n):
            if len(p) <= rows and (not p or p[0] <= cols):
                out.append(p)
    return out


def subpartitions(p: Partition) -> Iterator[Partition]:
    """All partitions contained in ``p`` (not in canonical order)."""

    def gen(i: int, prev: int) -> Iterator[Partition]:
        if i == len(p):
            yield ()
            return
        for v in range(min(p[i], prev), -1, -1):
            if v == 0:
                yield ()
                return
            for rest in gen(i + 1, v):
                yield (v,) + rest

    if not p:
        yield ()
        return
    yield from gen(0, p[0])


def skew_cells(shape: SkewShape) -> list[tuple[int, int]]:
    """Cells of the skew diagram in row-major order, as (row, col) pairs."""
    outer, inner = shape
    pad = list(inner) + [0] * (len(outer) - len(inner))
    return [(r, c) for r in range(len(outer)) for c in range(pad[r], outer[r])]


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> list[Tableau]:
    """All semistandard fillings of ``shape`` with entries in 1..max_entry.

    Rows weakly increase left to right, columns strictly increase downwards.
    The result is deterministic: tableaux appear in lexicographic order of
    their row-major reading.
    """
    outer, inner = shape
    if not contains(outer, inner):
        raise ValueError(f"invalid skew shape {outer}/{inner}")
    rows = len(outer)
    pad = list(inner) + [0] * (rows - len(inner))
    cells = skew_cells(shape)
    if not cells:
        return [tuple(() for _ in range(rows))]
    if max_entry <= 0:
        return []
    grid = [[0] * outer[r] for r in range(rows)]
    out: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(tuple(tuple(grid[r][pad[r]:outer[r]]) for r in range(rows)))
            return
        r, c = cells[k]
        lo = 1
        if c > pad[r]:
            lo = max(lo, grid[r][c - 1])
        if r > 0 and c >= pad[r - 1]:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            grid[r][c] = v
            fill(k + 1)

    fill(0)
    return out


def tableau_content(t: Tableau, max_entry: int) -> tuple[int, ...]:
    """Multiplicity vector: how many times each of 1..max_entry occurs."""
    counts = [0] * max_entry
    for row in t:
        for e in row:
            counts[e - 1] += 1
    return tuple(counts)
