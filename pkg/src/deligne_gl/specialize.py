"""Specialization to ordinary GL_n characters.

At integer rank n the indecomposable X_{lambda,mu} maps to the irreducible
rational representation with the mixed-signature highest weight
(lambda_1, ..., lambda_r, 0, ..., 0, -mu_s, ..., -mu_1), provided n is at
least l(lambda) + l(mu).  Characters live in the Laurent ring
Z[x_1^{+-1}, ..., x_n^{+-1}]; the y alphabet specializes to inverses.
"""

from __future__ import annotations

from functools import cache

from . import oracle as orc, partitions as pt
from .bisym import BiSymFunc
from .partitions import Partition


class LaurentPoly:
    """Sparse integer Laurent polynomial in n variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return LaurentPoly(self.nvars, acc)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) - v
        return LaurentPoly(self.nvars, acc)

    def __rmul__(self, scalar: int) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {k: scalar * v for k, v in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        acc: dict[tuple[int, ...], int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                acc[k] = acc.get(k, 0) + v1 * v2
        return LaurentPoly(self.nvars, acc)

    def invert_variables(self) -> "LaurentPoly":
        """Substitute x_i -> 1/x_i."""
        return LaurentPoly(
            self.nvars, {tuple(-e for e in k): v for k, v in self.terms.items()}
        )

    def det_power(self, q: int) -> "LaurentPoly":
        """Multiply by (x_1 ... x_n)^q."""
        return LaurentPoly(
            self.nvars, {tuple(e + q for e in k): v for k, v in self.terms.items()}
        )

    def is_symmetric(self) -> bool:
        """Invariance under all permutations of the variables."""
        from itertools import permutations

        for perm in permutations(range(self.nvars)):
            permuted = {tuple(k[perm[i]] for i in range(self.nvars)): v for k, v in self.terms.items()}
            if permuted != self.terms:
                return False
        return True

    def to_text(self) -> str:
        """Terms in descending exponent order; negative powers written out."""
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, reverse=True):
            c = self.terms[key]
            mono = "*".join(
                f"x{i + 1}^{e}" for i, e in enumerate(key) if e
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"


def one(nvars: int) -> LaurentPoly:
    return LaurentPoly(nvars, {(0,) * nvars: 1})


def from_multipoly(poly: orc.MultiPoly) -> LaurentPoly:
    """A single-alphabet polynomial reread as a Laurent polynomial."""
    if len(poly.alphabets) != 1:
        raise ValueError("expected a single-alphabet polynomial")
    return LaurentPoly(poly.alphabets[0][1], dict(poly.terms))


def signature_of(lam, mu, n: int) -> tuple[int, ...]:
    """Highest weight of the rank-n image of X_{lambda,mu}.

    lambda's parts, a pad of zeros, then mu's parts negated in reverse.
    Requires n >= l(lambda) + l(mu); below that the object need not map to a
    single irreducible and no weight is defined, so this raises.
    """
    lam, mu = pt.partition(lam), pt.partition(mu)
    if n < len(lam) + len(mu):
        raise ValueError(
            f"need n >= l(lambda) + l(mu) = {len(lam) + len(mu)}, got n = {n}"
        )
    pad = n - len(lam) - len(mu)
    return lam + (0,) * pad + tuple(-x for x in reversed(mu))


def _validate_signature(sig: tuple[int, ...]) -> tuple[int, ...]:
    sig = tuple(int(x) for x in sig)
    if any(sig[i] < sig[i + 1] for i in range(len(sig) - 1)):
        raise ValueError(f"signature must be weakly decreasing: {sig!r}")
    return sig


@cache
def rational_schur_char(sig: tuple[int, ...], shift: int | None = None) -> LaurentPoly:
    """Character of the irreducible GL_n representation with signature ``sig``.

    Shift the signature into a partition by adding q = max(0, -last part),
    take the Schur polynomial, divide by det^q.  The result is independent of
    any larger shift; ``shift`` overrides q so tests can confirm that.
    """
    sig = _validate_signature(sig)
    n = len(sig)
    q = max(0, -(sig[-1] if sig else 0))
    if shift is not None:
        if shift < q:
            raise ValueError(f"shift {shift} does not clear the signature {sig!r}")
        q = shift
    shifted = pt.partition(x + q for x in sig)
    return from_multipoly(orc.schur_poly(shifted, "x", n)).det_power(-q)


def specialize_to_gl_n(f: BiSymFunc, n: int) -> LaurentPoly:
    """Evaluate x at (x_1..x_n) and y at the inverses (1/x_1..1/x_n)."""
    acc = LaurentPoly(n)
    for (l, m), c in f.coeffs.items():
        px = from_multipoly(orc.schur_poly(l, "x", n))
        if not px:
            continue
        py = from_multipoly(orc.schur_poly(m, "x", n)).invert_variables()
        if not py:
            continue
        acc = acc + c * (px * py)
    return acc


def check_detshift(i: int, n: int) -> bool:
    """Dualizing one exterior power against tensoring with the inverse
    determinant: e_i(1/x) == e_{n-i}(x) * (x_1...x_n)^{-1} in rank n."""
    if not 0 <= i <= n:
        raise ValueError(f"need 0 <= i <= n, got i={i}, n={n}")
    e_i = from_multipoly(orc.schur_poly((1,) * i, "x", n))
    lhs = e_i.invert_variables()
    rhs = from_multipoly(orc.schur_poly((1,) * (n - i), "x", n)).det_power(-1)
    return lhs == rhs
