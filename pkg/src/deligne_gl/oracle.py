"""Monomial-level oracle: exact multivariate polynomials in named alphabets.

Symmetric-function identities are confirmed here by brute force.  A Schur
function in n variables is the plain sum of content monomials over its
semistandard tableaux, so any identity of total degree d can be checked as a
polynomial identity in d variables.  Nothing in this module knows about the
Schur basis; that independence is the point.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations

from . import partitions as pt
from .partitions import Partition, SkewShape

Alphabets = tuple[tuple[str, int], ...]
ExpKey = tuple[int, ...]


@cache
def _offsets(alphabets: Alphabets) -> dict[str, tuple[int, int]]:
    # name -> (start, nvars) in the concatenated exponent vector
    out = {}
    pos = 0
    for name, nv in alphabets:
        if name in out:
            raise ValueError(f"duplicate alphabet {name!r}")
        if nv < 0:
            raise ValueError(f"alphabet {name!r} has negative size")
        out[name] = (pos, nv)
        pos += nv
    return out


def _width(alphabets: Alphabets) -> int:
    return sum(nv for _, nv in alphabets)


class MultiPoly:
    """Sparse integer polynomial over a fixed tuple of named alphabets.

    Keys are dense exponent tuples over the concatenation of the alphabets in
    declared order.  All arithmetic requires identical layouts; use
    ``embed`` to move a polynomial into a larger layout first.
    """

    __slots__ = ("alphabets", "terms")

    def __init__(self, alphabets: Alphabets, terms: dict[ExpKey, int] | None = None):
        self.alphabets = tuple(alphabets)
        _offsets(self.alphabets)
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    def _check(self, other: "MultiPoly") -> None:
        if self.alphabets != other.alphabets:
            raise ValueError(
                f"alphabet mismatch: {self.alphabets} vs {other.alphabets}"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.alphabets == other.alphabets
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.alphabets, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return MultiPoly(self.alphabets, acc)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) - v
        return MultiPoly(self.alphabets, acc)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.alphabets, {k: -v for k, v in self.terms.items()})

    def __rmul__(self, scalar: int) -> "MultiPoly":
        return MultiPoly(self.alphabets, {k: scalar * v for k, v in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        acc: dict[ExpKey, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                acc[k] = acc.get(k, 0) + v1 * v2
        return MultiPoly(self.alphabets, acc)

    def degree_in(self, key: ExpKey, names: tuple[str, ...]) -> int:
        off = _offsets(self.alphabets)
        total = 0
        for name in names:
            start, nv = off[name]
            total += sum(key[start : start + nv])
        return total

    def truncated(self, names: tuple[str, ...], max_degree: int) -> "MultiPoly":
        """Drop terms whose joint degree in ``names`` exceeds ``max_degree``."""
        return MultiPoly(
            self.alphabets,
            {
                k: v
                for k, v in self.terms.items()
                if self.degree_in(k, names) <= max_degree
            },
        )

    def __repr__(self) -> str:
        return f"MultiPoly({poly_str(self)})"


def one(alphabets: Alphabets) -> MultiPoly:
    return MultiPoly(alphabets, {(0,) * _width(alphabets): 1})


def zero(alphabets: Alphabets) -> MultiPoly:
    return MultiPoly(alphabets)


def variable(alphabets: Alphabets, name: str, index: int, power: int = 1) -> MultiPoly:
    """The monomial name_{index+1}^power as a polynomial."""
    start, nv = _offsets(alphabets)[name]
    if not 0 <= index < nv:
        raise ValueError(f"variable {name}{index + 1} outside alphabet of size {nv}")
    key = [0] * _width(alphabets)
    key[start + index] = power
    return MultiPoly(alphabets, {tuple(key): 1})


def embed(poly: MultiPoly, target: Alphabets) -> MultiPoly:
    """Reinterpret ``poly`` inside a larger layout, matching alphabets by name."""
    src_off = _offsets(poly.alphabets)
    tgt_off = _offsets(target)
    for name, (_, nv) in src_off.items():
        if name not in tgt_off or tgt_off[name][1] != nv:
            raise ValueError(f"target layout lacks alphabet {name!r} of size {nv}")
    width = _width(target)
    acc: dict[ExpKey, int] = {}
    for k, v in poly.terms.items():
        key = [0] * width
        for name, (start, nv) in src_off.items():
            tstart = tgt_off[name][0]
            key[tstart : tstart + nv] = k[start : start + nv]
        acc[tuple(key)] = acc.get(tuple(key), 0) + v
    return MultiPoly(target, acc)


@cache
def schur_poly(p: Partition, alphabet: str, nvars: int) -> MultiPoly:
    """s_p in ``nvars`` variables: sum of content monomials over SSYT.

    Zero when l(p) > nvars (no column-strict filling exists).
    """
    return skew_schur_poly(SkewShape(pt.partition(p), ()), alphabet, nvars)


@cache
def skew_schur_poly(shape: SkewShape, alphabet: str, nvars: int) -> MultiPoly:
    """s_{outer/inner} in ``nvars`` variables; zero for non-nested shapes."""
    alphabets = ((alphabet, nvars),)
    if not pt.contains(shape.outer, shape.inner):
        return zero(alphabets)
    acc: dict[ExpKey, int] = {}
    for t in pt.enumerate_ssyt(shape, nvars):
        key = pt.tableau_content(t, nvars)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(alphabets, acc)


def expand_symfunc(f, alphabet: str, nvars: int) -> MultiPoly:
    """Evaluate a SymFunc as a polynomial in ``nvars`` variables."""
    acc = zero(((alphabet, nvars),))
    for p, c in f.coeffs.items():
        acc = acc + c * schur_poly(p, alphabet, nvars)
    return acc


def expand_bisym(f, nx: int, ny: int) -> MultiPoly:
    """Evaluate a BiSymFunc in alphabets x (nx variables) and y (ny)."""
    alphabets = (("x", nx), ("y", ny))
    acc = zero(alphabets)
    for (l, m), c in f.coeffs.items():
        px = schur_poly(l, "x", nx)
        if not px:
            continue
        py = schur_poly(m, "y", ny)
        if not py:
            continue
        acc = acc + c * (embed(px, alphabets) * embed(py, alphabets))
    return acc


def _leibniz_det(alphabets: Alphabets, exps: list[int], nvars: int) -> MultiPoly:
    # det(x_i ^ exps[j]) over i, j < nvars
    acc: dict[ExpKey, int] = {}
    for perm in permutations(range(nvars)):
        inv = sum(
            1
            for i in range(nvars)
            for j in range(i + 1, nvars)
            if perm[i] > perm[j]
        )
        key = tuple(exps[perm[i]] for i in range(nvars))
        acc[key] = acc.get(key, 0) + (-1 if inv % 2 else 1)
    return MultiPoly(alphabets, acc)


def _exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Long division in lexicographic order; the remainder must vanish.

    Used only where the numerator is an exact multiple by construction, so a
    nonzero remainder (or a non-dividing leading term) means the library is
    internally inconsistent and raises.
    """
    num._check(den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    quot: dict[ExpKey, int] = {}
    rem = dict(num.terms)
    dlead = max(den.terms)
    dcoeff = den.terms[dlead]
    while rem:
        rlead = max(rem)
        rcoeff = rem[rlead]
        dkey = tuple(a - b for a, b in zip(rlead, dlead))
        if any(e < 0 for e in dkey) or rcoeff % dcoeff:
            raise ArithmeticError(
                "inexact polynomial division: the alternant is not a multiple "
                "of the Vandermonde, which must never happen"
            )
        c = rcoeff // dcoeff
        quot[dkey] = quot.get(dkey, 0) + c
        for k, v in den.terms.items():
            key = tuple(a + b for a, b in zip(dkey, k))
            nv = rem.get(key, 0) - c * v
            if nv:
                rem[key] = nv
            else:
                rem.pop(key, None)
    return MultiPoly(num.alphabets, quot)


def bialternant_schur(p: Partition, nvars: int, alphabet: str = "x") -> MultiPoly:
    """s_p in ``nvars`` variables as a ratio of alternants.

    det(x_i^{p_j + n - j}) divided exactly by the Vandermonde determinant
    det(x_i^{n - j}).  A second, tableau-free definition of the Schur
    polynomial, used to cross-check ``schur_poly``.
    """
    p = pt.partition(p)
    if len(p) > nvars:
        raise ValueError(f"partition {p} has more parts than variables ({nvars})")
    if nvars == 0:
        return one(())
    alphabets = ((alphabet, nvars),)
    padded = list(p) + [0] * (nvars - len(p))
    num = _leibniz_det(alphabets, [padded[j] + nvars - 1 - j for j in range(nvars)], nvars)
    den = _leibniz_det(alphabets, [nvars - 1 - j for j in range(nvars)], nvars)
    return _exact_div(num, den)


def _var_order(alphabets: Alphabets) -> list[tuple[str, int, int]]:
    # (name, index, position) sorted alphabetically then by index
    off = _offsets(alphabets)
    out = []
    for name in sorted(off):
        start, nv = off[name]
        for i in range(nv):
            out.append((name, i, start + i))
    return out


def _monomial_str(alphabets: Alphabets, key: ExpKey) -> str:
    bits = []
    for name, i, pos in _var_order(alphabets):
        e = key[pos]
        if e:
            bits.append(f"{name}{i + 1}" + (f"^{e}" if e != 1 else ""))
    return "*".join(bits) if bits else "1"


def poly_str(poly: MultiPoly) -> str:
    """Readable form, variables alphabetical, terms in descending lex order."""
    if not poly.terms:
        return "0"
    bits = []
    for key in sorted(poly.terms, reverse=True):
        c = poly.terms[key]
        mono = _monomial_str(poly.alphabets, key)
        if mono == "1":
            bits.append(str(c))
        elif c == 1:
            bits.append(mono)
        elif c == -1:
            bits.append(f"-{mono}")
        else:
            bits.append(f"{c}*{mono}")
    return " + ".join(bits).replace("+ -", "- ")


def first_difference(a: MultiPoly, b: MultiPoly) -> str | None:
    """Smallest monomial where the two polynomials disagree, or None."""
    a._check(b)
    keys = sorted(set(a.terms) | set(b.terms))
    for key in keys:
        ca, cb = a.terms.get(key, 0), b.terms.get(key, 0)
        if ca != cb:
            return f"{_monomial_str(a.alphabets, key)}: {ca} vs {cb}"
    return None
