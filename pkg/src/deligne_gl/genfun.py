"""Truncated generating-function checks.

The classes S_{lambda,mu} are characterized by one master identity: summing
s_lambda(alpha) s_mu(beta) S_{lambda,mu}(x,y) over all pairs equals

    prod 1/(1 - x_i alpha_j) * prod 1/(1 - y_i beta_j) * prod (1 - alpha_i beta_j).

Everything here works with finitely many variables per alphabet and exact
truncation in the joint alpha/beta degree, so both sides are honest
polynomials and equality is byte-for-byte.  The Cauchy-type identities the
master identity factors through are checkable on their own.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import grothendieck, oracle as orc, partitions as pt
from .oracle import MultiPoly
from .partitions import Partition, SkewShape

MAX_DEGREE = 8


@dataclass(frozen=True)
class TruncationSpec:
    """Variable counts per alphabet and the joint alpha/beta degree cutoff.

    ``degree`` beyond 8 is refused: the point of the check is exactness, not
    stress, and the term counts blow up quickly.
    """

    a: int = 2
    b: int = 2
    nx: int = 3
    ny: int = 3
    degree: int = 6

    def __post_init__(self):
        for name in ("a", "b", "nx", "ny", "degree"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.degree > MAX_DEGREE:
            raise ValueError(f"degree {self.degree} exceeds the sanity bound {MAX_DEGREE}")

    def layout(self) -> orc.Alphabets:
        return (("alpha", self.a), ("beta", self.b), ("x", self.nx), ("y", self.ny))


def genfun_pairs(spec: TruncationSpec) -> list[tuple[Partition, Partition]]:
    """The (lambda, mu) pairs that survive the truncation: degrees fit under
    the cutoff and the Schur factors have few enough rows not to vanish."""
    out = []
    for d in range(spec.degree + 1):
        for dl in range(d + 1):
            for lam in pt.partitions_of(dl):
                if len(lam) > spec.a:
                    continue
                for mu in pt.partitions_of(d - dl):
                    if len(mu) > spec.b:
                        continue
                    out.append((lam, mu))
    return out


def genfun_lhs(spec: TruncationSpec, class_fn=None) -> MultiPoly:
    """Sum of s_lambda(alpha) s_mu(beta) S_{lambda,mu}(x,y) over all pairs
    within the truncation.  ``class_fn`` substitutes a different source for
    the classes; the default is ``grothendieck.s_class``."""
    layout = spec.layout()
    acc = orc.zero(layout)
    for lam, mu in genfun_pairs(spec):
        pa = orc.schur_poly(lam, "alpha", spec.a)
        if not pa:
            continue
        pb = orc.schur_poly(mu, "beta", spec.b)
        if not pb:
            continue
        cls = (class_fn or grothendieck.s_class)(lam, mu)
        body = orc.expand_bisym(cls, spec.nx, spec.ny)
        if not body:
            continue
        acc = acc + orc.embed(pa, layout) * orc.embed(pb, layout) * orc.embed(body, layout)
    return acc


def _geometric(layout: orc.Alphabets, v1: tuple[str, int], v2: tuple[str, int], budget: int) -> MultiPoly:
    # Truncated 1/(1 - v1 v2): powers up to the remaining alpha/beta budget.
    acc = orc.zero(layout)
    for k in range(budget + 1):
        acc = acc + orc.variable(layout, v1[0], v1[1], k) * orc.variable(layout, v2[0], v2[1], k)
    return acc


def genfun_rhs(spec: TruncationSpec) -> MultiPoly:
    """The product side, truncated in the joint alpha/beta degree after every
    factor so intermediate objects stay small."""
    layout = spec.layout()
    cut = ("alpha", "beta")
    acc = orc.one(layout)
    for i, j in product(range(spec.nx), range(spec.a)):
        acc = (acc * _geometric(layout, ("x", i), ("alpha", j), spec.degree)).truncated(cut, spec.degree)
    for i, j in product(range(spec.ny), range(spec.b)):
        acc = (acc * _geometric(layout, ("y", i), ("beta", j), spec.degree)).truncated(cut, spec.degree)
    for i, j in product(range(spec.a), range(spec.b)):
        factor = orc.one(layout) - orc.variable(layout, "alpha", i) * orc.variable(layout, "beta", j)
        acc = (acc * factor).truncated(cut, spec.degree)
    return acc


def verify_genfun(spec: TruncationSpec) -> tuple[bool, str | None]:
    """Master identity under ``spec``; returns (ok, first differing monomial)."""
    lhs = genfun_lhs(spec)
    rhs = genfun_rhs(spec)
    if lhs == rhs:
        return True, None
    return False, orc.first_difference(lhs, rhs)


def _cauchy_side(tau: Partition, nv_sym: int, nv_skew: int, sym_name: str, skew_name: str, degree: int) -> tuple[MultiPoly, MultiPoly]:
    layout = ((sym_name, nv_sym), (skew_name, nv_skew)) if sym_name < skew_name else ((skew_name, nv_skew), (sym_name, nv_sym))
    lhs = orc.zero(layout)
    for d in range(degree + 1):
        for lam in pt.partitions_of(d):
            ps = orc.schur_poly(lam, sym_name, nv_sym)
            if not ps:
                continue
            pk = orc.skew_schur_poly(SkewShape(lam, tau), skew_name, nv_skew)
            if not pk:
                continue
            lhs = lhs + orc.embed(ps, layout) * orc.embed(pk, layout)
    rhs = orc.embed(orc.schur_poly(tau, sym_name, nv_sym), layout)
    for i in range(nv_sym):
        for j in range(nv_skew):
            rhs = (rhs * _geometric(layout, (sym_name, i), (skew_name, j), degree)).truncated((sym_name,), degree)
    return lhs, rhs


def verify_cauchy(tau, spec: TruncationSpec) -> bool:
    """Skew Cauchy identity for a fixed tau, both flavors:

    sum_lambda s_lambda(alpha) s_{lambda/tau}(x)  ==  s_tau(alpha) prod 1/(1-alpha_i x_j)

    and the same in (beta, y) with tau conjugated, which is how tau enters
    the master identity on the dual side.
    """
    tau = pt.partition(tau)
    lhs, rhs = _cauchy_side(tau, spec.a, spec.nx, "alpha", "x", spec.degree)
    if lhs != rhs:
        return False
    lhs, rhs = _cauchy_side(pt.conjugate(tau), spec.b, spec.ny, "beta", "y", spec.degree)
    return lhs == rhs


def verify_dual_cauchy(spec: TruncationSpec) -> bool:
    """Alternating dual Cauchy identity:

    sum_tau (-1)^{|tau|} s_tau(alpha) s_{tau'}(beta)  ==  prod (1 - alpha_i beta_j),

    truncated at joint degree ``spec.degree``.
    """
    layout = (("alpha", spec.a), ("beta", spec.b))
    cut = ("alpha", "beta")
    lhs = orc.zero(layout)
    for tau in pt.partitions_in_rectangle(spec.a, spec.b):
        if 2 * sum(tau) > spec.degree:
            continue
        pa = orc.schur_poly(tau, "alpha", spec.a)
        pb = orc.schur_poly(pt.conjugate(tau), "beta", spec.b)
        term = orc.embed(pa, layout) * orc.embed(pb, layout)
        lhs = lhs + ((-1) ** sum(tau)) * term
    rhs = orc.one(layout)
    for i in range(spec.a):
        for j in range(spec.b):
            factor = orc.one(layout) - orc.variable(layout, "alpha", i) * orc.variable(layout, "beta", j)
            rhs = (rhs * factor).truncated(cut, spec.degree)
    return lhs == rhs.truncated(cut, spec.degree)
