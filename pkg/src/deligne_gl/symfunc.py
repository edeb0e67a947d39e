"""The ring of symmetric functions over the integers, in the Schur basis.

Elements are sparse integer vectors keyed by partitions.  Products are
computed by Littlewood-Richardson enumeration (lattice-word skew tableaux);
Pieri rules and Jacobi-Trudi determinants are implemented separately so the
test suite can confront independent routes with each other and with the
monomial-expansion oracle.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations

from . import partitions as pt
from .partitions import Partition, SkewShape, Tableau


class SymFunc:
    """A finite integer combination of Schur functions.

    Immutable by convention: every operation returns a fresh object and no
    method mutates ``coeffs``.  Zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Partition, int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymFunc) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, 0) + v
        return SymFunc(acc)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, 0) - v
        return SymFunc(acc)

    def __neg__(self) -> "SymFunc":
        return SymFunc({k: -v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar: int) -> "SymFunc":
        return SymFunc({k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        return multiply(self, other)

    def terms(self) -> list[tuple[Partition, int]]:
        """Terms sorted in the canonical partition order."""
        return sorted(self.coeffs.items(), key=lambda kv: pt.canonical_key(kv[0]))

    def degree(self) -> int:
        """Largest |partition| with nonzero coefficient, -1 for zero."""
        return max((sum(k) for k in self.coeffs), default=-1)

    def to_json_obj(self) -> list[dict]:
        return [
            {"partition": list(k), "coeff": str(v)} for k, v in self.terms()
        ]

    @staticmethod
    def from_json_obj(obj: list[dict]) -> "SymFunc":
        acc: dict[Partition, int] = {}
        for item in obj:
            k = pt.partition(item["partition"])
            acc[k] = acc.get(k, 0) + int(item["coeff"])
        return SymFunc(acc)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for k, v in self.terms():
            mono = "s(%s)" % ",".join(str(x) for x in k) if k else "1"
            bits.append(f"{v}*{mono}" if v != 1 or not k else mono)
        return " + ".join(bits).replace("+ -", "- ")


ZERO = SymFunc()
UNIT = SymFunc({(): 1})


def schur(p) -> SymFunc:
    """The Schur function s_p as a basis element."""
    return SymFunc({pt.partition(p): 1})


def unit() -> SymFunc:
    return UNIT


def zero() -> SymFunc:
    return ZERO


def _is_lattice(t: Tableau) -> bool:
    # Reading word: each row right to left, rows top to bottom.  Every prefix
    # must contain at least as many k's as (k+1)'s.
    counts: dict[int, int] = {}
    for row in t:
        for e in reversed(row):
            if e > 1 and counts.get(e - 1, 0) <= counts.get(e, 0):
                return False
            counts[e] = counts.get(e, 0) + 1
    return True


def _content_partition(t: Tableau, max_entry: int) -> Partition:
    counts = pt.tableau_content(t, max_entry)
    p = list(counts)
    while p and p[-1] == 0:
        p.pop()
    # For a lattice word the multiplicities are weakly decreasing already.
    return tuple(p)


@cache
def _skew_expand(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    """Schur expansion of the skew function s_{outer/inner}.

    Counts lattice-word fillings; a filling with content nu contributes to the
    coefficient of s_nu.  Entries never exceed the number of rows of outer.
    """
    if not pt.contains(outer, inner):
        return ()
    bound = len(outer)
    acc: dict[Partition, int] = {}
    for t in pt.enumerate_ssyt(SkewShape(outer, inner), bound):
        if _is_lattice(t):
            nu = _content_partition(t, bound)
            acc[nu] = acc.get(nu, 0) + 1
    return tuple(sorted(acc.items(), key=lambda kv: pt.canonical_key(kv[0])))


def skew_schur(shape: SkewShape) -> SymFunc:
    """s_{outer/inner} in the Schur basis; zero when inner is not inside outer."""
    return SymFunc(dict(_skew_expand(shape.outer, shape.inner)))


@cache
def _lr_pair(a: Partition, b: Partition) -> tuple[tuple[Partition, int], ...]:
    # Coefficient of s_nu in s_a*s_b equals the multiplicity of b in the
    # expansion of s_{nu/a}; sharing _skew_expand keeps one enumeration per
    # (nu, a) across every b.
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out = []
    for nu in pt.partitions_of(sum(a) + sum(b)):
        if len(nu) > len(a) + len(b) or nu[0] > a[0] + b[0]:
            continue
        if not pt.contains(nu, a):
            continue
        c = dict(_skew_expand(nu, a)).get(b, 0)
        if c:
            out.append((nu, c))
    return tuple(out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the ring, by bilinear extension of the LR rule."""
    acc: dict[Partition, int] = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            c = ca * cb
            for nu, k in _lr_pair(a, b):
                acc[nu] = acc.get(nu, 0) + c * k
    return SymFunc(acc)


@cache
def _horizontal_additions(p: Partition, i: int) -> tuple[Partition, ...]:
    # Shapes nu with nu/p a horizontal i-strip: interlacing
    # nu_1 >= p_1 >= nu_2 >= p_2 >= ...
    res: list[Partition] = []
    n = len(p)

    def rec(r: int, rem: int, acc: list[int]) -> None:
        if r == n + 1:
            if rem == 0:
                res.append(tuple(x for x in acc if x))
            return
        base = p[r] if r < n else 0
        hi = base + rem if r == 0 else min(base + rem, p[r - 1])
        for v in range(base, hi + 1):
            acc.append(v)
            rec(r + 1, rem - (v - base), acc)
            acc.pop()

    rec(0, i, [])
    return tuple(res)


@cache
def _vertical_additions(p: Partition, i: int) -> tuple[Partition, ...]:
    # Shapes nu with nu/p a vertical i-strip: at most one new cell per row.
    res: list[Partition] = []
    n = len(p)
    total = n + i

    def rec(r: int, rem: int, acc: list[int]) -> None:
        if rem == 0:
            tail = list(p[r:n])
            if not tail or not acc or acc[-1] >= tail[0]:
                res.append(tuple(x for x in acc + tail if x))
            return
        if r == total:
            return
        base = p[r] if r < n else 0
        for d in (0, 1):
            v = base + d
            if acc and v > acc[-1]:
                continue
            acc.append(v)
            rec(r + 1, rem - d, acc)
            acc.pop()

    rec(0, i, [])
    return tuple(res)


def pieri_row(f: SymFunc, i: int) -> SymFunc:
    """Multiply by the complete homogeneous h_i (horizontal strips)."""
    if i <= 0:
        raise ValueError("strip size must be positive")
    acc: dict[Partition, int] = {}
    for p, c in f.coeffs.items():
        for nu in _horizontal_additions(p, i):
            acc[nu] = acc.get(nu, 0) + c
    return SymFunc(acc)


def pieri_column(f: SymFunc, i: int) -> SymFunc:
    """Multiply by the elementary e_i (vertical strips)."""
    if i <= 0:
        raise ValueError("strip size must be positive")
    acc: dict[Partition, int] = {}
    for p, c in f.coeffs.items():
        for nu in _vertical_additions(p, i):
            acc[nu] = acc.get(nu, 0) + c
    return SymFunc(acc)


@cache
def complete_to_schur(m: Partition) -> SymFunc:
    """Schur expansion of h_m = h_{m_1} h_{m_2} ... (iterated row Pieri)."""
    m = pt.partition(m)
    if not m:
        return UNIT
    return pieri_row(complete_to_schur(m[:-1]), m[-1])


@cache
def elementary_to_schur(m: Partition) -> SymFunc:
    """Schur expansion of e_m = e_{m_1} e_{m_2} ... (iterated column Pieri)."""
    m = pt.partition(m)
    if not m:
        return UNIT
    return pieri_column(elementary_to_schur(m[:-1]), m[-1])


def h_monomial(indices: tuple[int, ...]) -> SymFunc:
    """Product of h_d over ``indices``; zero if any index is negative, h_0 = 1."""
    if any(d < 0 for d in indices):
        return ZERO
    parts = tuple(sorted((d for d in indices if d > 0), reverse=True))
    return complete_to_schur(parts)


def e_monomial(indices: tuple[int, ...]) -> SymFunc:
    """Product of e_d over ``indices``; zero if any index is negative, e_0 = 1."""
    if any(d < 0 for d in indices):
        return ZERO
    parts = tuple(sorted((d for d in indices if d > 0), reverse=True))
    return elementary_to_schur(parts)


def omega(f: SymFunc) -> SymFunc:
    """The involution swapping e and h; on Schur functions it transposes."""
    return SymFunc({pt.conjugate(k): v for k, v in f.coeffs.items()})


def _perm_sign(perm: tuple[int, ...]) -> int:
    inv = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inv % 2 else 1


def jacobi_trudi(p, basis: str = "h") -> SymFunc:
    """Determinantal expression for s_p.

    basis "h": det(h_{p_i - i + j}) of size l(p); basis "e": same with
    elementary functions and the conjugate partition.  Expanded by the
    Leibniz rule with h-/e-monomials converted through the Pieri chains, so
    the result is an independent route to the Schur function itself.
    """
    if basis not in ("h", "e"):
        raise ValueError(f"basis must be 'h' or 'e', got {basis!r}")
    p = pt.partition(p)
    idx = p if basis == "h" else pt.conjugate(p)
    expand = h_monomial if basis == "h" else e_monomial
    k = len(idx)
    if k == 0:
        return UNIT
    rows = [[idx[i] - i + j for j in range(k)] for i in range(k)]
    acc: dict[Partition, int] = {}
    for perm in permutations(range(k)):
        d = tuple(rows[i][perm[i]] for i in range(k))
        if any(x < 0 for x in d):
            continue
        term = expand(d)
        sgn = _perm_sign(perm)
        for nu, c in term.coeffs.items():
            acc[nu] = acc.get(nu, 0) + sgn * c
    return SymFunc(acc)
