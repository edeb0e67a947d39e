"""Tensor square of the symmetric functions: the ring Lambda(x) (x) Lambda(y).

Basis elements are pairs of partitions (lambda, mu) standing for
s_lambda(x) s_mu(y); coefficients are exact integers.
"""

from __future__ import annotations

from . import partitions as pt
from . import symfunc as sf
from .partitions import Partition
from .symfunc import SymFunc

BiKey = tuple[Partition, Partition]


def term_key(k: BiKey) -> tuple:
    """Canonical term order: total degree descending, then lambda, then mu."""
    lam, mu = k
    return (-(sum(lam) + sum(mu)), pt.canonical_key(lam), pt.canonical_key(mu))


class BiSymFunc:
    """Sparse integer combination of s_lambda(x) s_mu(y) basis elements."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[BiKey, int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiSymFunc) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "BiSymFunc") -> "BiSymFunc":
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, 0) + v
        return BiSymFunc(acc)

    def __sub__(self, other: "BiSymFunc") -> "BiSymFunc":
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, 0) - v
        return BiSymFunc(acc)

    def __neg__(self) -> "BiSymFunc":
        return BiSymFunc({k: -v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar: int) -> "BiSymFunc":
        return BiSymFunc({k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other: "BiSymFunc") -> "BiSymFunc":
        return multiply(self, other)

    def terms(self) -> list[tuple[BiKey, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: term_key(kv[0]))

    def degree(self) -> int:
        """Largest |lambda|+|mu| present, -1 for zero."""
        return max((sum(l) + sum(m) for l, m in self.coeffs), default=-1)

    def to_json_obj(self) -> list[dict]:
        return [
            {"lambda": list(l), "mu": list(m), "coeff": str(v)}
            for (l, m), v in self.terms()
        ]

    @staticmethod
    def from_json_obj(obj: list[dict]) -> "BiSymFunc":
        acc: dict[BiKey, int] = {}
        for item in obj:
            k = (pt.partition(item["lambda"]), pt.partition(item["mu"]))
            acc[k] = acc.get(k, 0) + int(item["coeff"])
        return BiSymFunc(acc)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for (l, m), v in self.terms():
            xs = "s(%s|x)" % ",".join(map(str, l)) if l else ""
            ys = "s(%s|y)" % ",".join(map(str, m)) if m else ""
            mono = "*".join(b for b in (xs, ys) if b) or "1"
            bits.append(f"{v}*{mono}" if (v != 1 or mono == "1") else mono)
        return " + ".join(bits).replace("+ -", "- ")


ZERO = BiSymFunc()
UNIT = BiSymFunc({((), ()): 1})


def unit() -> BiSymFunc:
    return UNIT


def zero() -> BiSymFunc:
    return ZERO


def basis(lam, mu) -> BiSymFunc:
    return BiSymFunc({(pt.partition(lam), pt.partition(mu)): 1})


def tensor(f: SymFunc, g: SymFunc) -> BiSymFunc:
    """f(x) g(y) as an element of the tensor square."""
    acc: dict[BiKey, int] = {}
    for l, a in f.coeffs.items():
        for m, b in g.coeffs.items():
            acc[(l, m)] = a * b
    return BiSymFunc(acc)


def multiply(f: BiSymFunc, g: BiSymFunc) -> BiSymFunc:
    """Componentwise product: LR rule on the x side and on the y side."""
    acc: dict[BiKey, int] = {}
    for (l1, m1), c1 in f.coeffs.items():
        for (l2, m2), c2 in g.coeffs.items():
            c = c1 * c2
            for l, kl in sf._lr_pair(l1, l2):
                for m, km in sf._lr_pair(m1, m2):
                    k = (l, m)
                    acc[k] = acc.get(k, 0) + c * kl * km
    return BiSymFunc(acc)


def omega_xy(f: BiSymFunc) -> BiSymFunc:
    """The involution omega applied simultaneously in x and in y."""
    return BiSymFunc(
        {(pt.conjugate(l), pt.conjugate(m)): v for (l, m), v in f.coeffs.items()}
    )
