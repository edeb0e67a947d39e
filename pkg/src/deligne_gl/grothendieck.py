"""Classes of indecomposable objects in the Grothendieck ring of Rep(GL_t).

The split Grothendieck ring of the Deligne category Rep(GL_t) is the tensor
square of the symmetric functions: exterior powers of the fundamental object
map to e_i(x), those of its dual to e_i(y).  The class of the indecomposable
X_{lambda,mu} is written S_{lambda,mu} and computed here by two genuinely
independent routes:

* ``s_class``: the alternating sum over partitions tau contained in lambda
  with tau' contained in mu of (-1)^{|tau|} s_{lambda/tau}(x) s_{mu/tau'}(y);

* ``mixed_jacobi_trudi``: an (m+n) x (m+n) determinant, m = l(mu) rows of
  complete homogeneous functions in y and n = l(lambda) rows in x, expanded
  by Laplace along the row split.  Column splittings are encoded as patterns
  of m crosses and n circles; the sign of a splitting is the sign of the
  minimal-length representative of the corresponding coset in S_{m+n}, a
  circle/cross inversion count.

Both routes land in ``BiSymFunc`` and must agree; the verification suite and
the acceptance tests insist on it.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations, permutations

from . import bisym, partitions as pt, symfunc as sf
from .bisym import BiKey, BiSymFunc
from .partitions import Partition, SkewShape

CROSS = "×"
CIRCLE = "∘"

_SYMBOL_ALIASES = {
    CROSS: CROSS,
    "x": CROSS,
    "X": CROSS,
    CIRCLE: CIRCLE,
    "o": CIRCLE,
    "O": CIRCLE,
}


def normalize_pattern(pattern: str) -> str:
    """Map ASCII aliases (x/o) onto the canonical cross/circle symbols."""
    try:
        return "".join(_SYMBOL_ALIASES[ch] for ch in pattern)
    except KeyError as exc:
        raise ValueError(
            f"pattern may only contain cross/circle symbols (x/o): {pattern!r}"
        ) from exc


def coset_patterns(m: int, n: int) -> list[str]:
    """All arrangements of m crosses and n circles, in positional order."""
    out = []
    for cross_cols in combinations(range(m + n), m):
        chosen = set(cross_cols)
        out.append("".join(CROSS if i in chosen else CIRCLE for i in range(m + n)))
    return out


def coset_tau(pattern: str) -> tuple[Partition, int]:
    """Partition statistic and sign of a cross/circle pattern.

    Part k of tau is contributed by each circle with exactly k crosses to its
    right (zeros dropped); scanning circles left to right already yields the
    parts weakly decreasing.  The sign is (-1)^{|tau|}.
    """
    s = normalize_pattern(pattern)
    parts = []
    crosses_right = s.count(CROSS)
    for ch in s:
        if ch == CROSS:
            crosses_right -= 1
        elif crosses_right:
            parts.append(crosses_right)
    tau = tuple(parts)
    return tau, (-1) ** sum(tau)


def cross_statistic(pattern: str) -> Partition:
    """Same statistic read from the cross side: circles to the left of each
    cross, scanned right to left.  Always the conjugate of the circle-side
    tau."""
    s = normalize_pattern(pattern)
    parts = []
    circles_left = 0
    seen = []
    for ch in s:
        if ch == CIRCLE:
            circles_left += 1
        else:
            seen.append(circles_left)
    parts = [k for k in reversed(seen) if k]
    return tuple(parts)


def pattern_sign(pattern: str) -> int:
    """Sign of the minimal-length coset representative for a pattern.

    Independent of ``coset_tau``: counts circle-before-cross inversions
    directly.  Kept as its own function so the determinant below consumes
    exactly this rule.
    """
    s = normalize_pattern(pattern)
    inv = 0
    circles = 0
    for ch in s:
        if ch == CIRCLE:
            circles += 1
        else:
            inv += circles
    return -1 if inv % 2 else 1


@cache
def _s_class(lam: Partition, mu: Partition) -> BiSymFunc:
    acc: dict[BiKey, int] = {}
    for tau in pt.subpartitions(lam):
        tc = pt.conjugate(tau)
        if not pt.contains(mu, tc):
            continue
        sgn = (-1) ** sum(tau)
        fx = sf.skew_schur(SkewShape(lam, tau))
        fy = sf.skew_schur(SkewShape(mu, tc))
        for l, a in fx.coeffs.items():
            for m, b in fy.coeffs.items():
                k = (l, m)
                acc[k] = acc.get(k, 0) + sgn * a * b
    return BiSymFunc(acc)


def s_class(lam, mu, all_tau: bool = False) -> BiSymFunc:
    """The class S_{lambda,mu} of the indecomposable X_{lambda,mu}.

    Alternating sum of s_{lambda/tau}(x) s_{mu/tau'}(y) over tau.  By default
    tau runs over subpartitions of lambda whose conjugate fits in mu; with
    ``all_tau=True`` it runs over the whole l(lambda) x l(mu) rectangle of
    partitions, which must give the same answer because the extra skew terms
    vanish.
    """
    lam, mu = pt.partition(lam), pt.partition(mu)
    if not all_tau:
        return _s_class(lam, mu)
    acc = bisym.zero()
    for tau in pt.partitions_in_rectangle(len(lam), len(mu)):
        sgn = (-1) ** sum(tau)
        term = bisym.tensor(
            sf.skew_schur(SkewShape(lam, tau)),
            sf.skew_schur(SkewShape(mu, pt.conjugate(tau))),
        )
        acc = acc + sgn * term
    return acc


def _top_rows(mu: Partition, width: int) -> tuple[tuple[int, ...], ...]:
    # Row i (1-based, i <= m): h-indices mu_{m+1-i} + i - j for j = 1..width,
    # so indices decrease left to right.
    m = len(mu)
    return tuple(
        tuple(mu[m - i] + i - j for j in range(1, width + 1)) for i in range(1, m + 1)
    )


def _bottom_rows(lam: Partition, m: int, width: int) -> tuple[tuple[int, ...], ...]:
    # Row m+k (1-based, k <= n): h-indices lam_k - k + j - m, increasing left
    # to right and calibrated so the main diagonal carries lam_k.
    return tuple(
        tuple(lam[k - 1] - k + j - m for j in range(1, width + 1))
        for k in range(1, len(lam) + 1)
    )


@cache
def _h_det(rows: tuple[tuple[int, ...], ...]) -> sf.SymFunc:
    """Determinant of a matrix of h-indices, as a symmetric function."""
    k = len(rows)
    if k == 0:
        return sf.unit()
    acc: dict[Partition, int] = {}
    for perm in permutations(range(k)):
        d = tuple(rows[i][perm[i]] for i in range(k))
        if any(x < 0 for x in d):
            continue
        sgn = sf._perm_sign(perm)
        for nu, c in sf.h_monomial(d).coeffs.items():
            acc[nu] = acc.get(nu, 0) + sgn * c
    return sf.SymFunc(acc)


@cache
def _h_det_monomials(
    rows: tuple[tuple[int, ...], ...]
) -> tuple[tuple[Partition, int], ...]:
    """Leibniz expansion of the same determinant kept as h-monomials."""
    k = len(rows)
    if k == 0:
        return (((), 1),)
    acc: dict[Partition, int] = {}
    for perm in permutations(range(k)):
        d = tuple(rows[i][perm[i]] for i in range(k))
        if any(x < 0 for x in d):
            continue
        key = tuple(sorted((x for x in d if x > 0), reverse=True))
        acc[key] = acc.get(key, 0) + sf._perm_sign(perm)
    return tuple(sorted(((k_, v) for k_, v in acc.items() if v), key=lambda kv: pt.canonical_key(kv[0])))


def _column_split_terms(lam: Partition, mu: Partition):
    """Shared Laplace skeleton: yields (sign, cross_cols, circle_cols,
    top submatrix rows, bottom submatrix rows) per column splitting."""
    m, n = len(mu), len(lam)
    width = m + n
    top = _top_rows(mu, width)
    bottom = _bottom_rows(lam, m, width)
    for cross_cols in combinations(range(width), m):
        chosen = set(cross_cols)
        circle_cols = tuple(j for j in range(width) if j not in chosen)
        pattern = "".join(CROSS if j in chosen else CIRCLE for j in range(width))
        sgn = pattern_sign(pattern)
        top_sub = tuple(tuple(row[j] for j in cross_cols) for row in top)
        bot_sub = tuple(tuple(row[j] for j in circle_cols) for row in bottom)
        yield sgn, top_sub, bot_sub


def mixed_jacobi_trudi(lam, mu) -> BiSymFunc:
    """S_{lambda,mu} via the mixed determinant.

    The (m+n) x (m+n) matrix has m rows of h(y) indexed by mu (reversed, with
    indices decreasing along rows) above n rows of h(x) indexed by lambda.
    Laplace expansion along that row split runs over cross/circle patterns;
    each pattern contributes sign x det(h(y) minor) x det(h(x) minor).
    """
    lam, mu = pt.partition(lam), pt.partition(mu)
    acc: dict[BiKey, int] = {}
    for sgn, top_sub, bot_sub in _column_split_terms(lam, mu):
        fy = _h_det(top_sub)
        if not fy:
            continue
        fx = _h_det(bot_sub)
        if not fx:
            continue
        for l, a in fx.coeffs.items():
            for m_, b in fy.coeffs.items():
                k = (l, m_)
                acc[k] = acc.get(k, 0) + sgn * a * b
    return BiSymFunc(acc)


def mixed_determinant_h_monomials(lam, mu) -> dict[tuple[Partition, Partition], int]:
    """The same determinant expanded into products h_a(x) h_b(y).

    Keys are pairs (hx, hy) of partitions listing the h-indices on each side;
    substituting the Schur expansions of h recovers ``s_class``.
    """
    lam, mu = pt.partition(lam), pt.partition(mu)
    acc: dict[tuple[Partition, Partition], int] = {}
    for sgn, top_sub, bot_sub in _column_split_terms(lam, mu):
        for hy, cy in _h_det_monomials(top_sub):
            for hx, cx in _h_det_monomials(bot_sub):
                k = (hx, hy)
                acc[k] = acc.get(k, 0) + sgn * cy * cx
    return {k: v for k, v in acc.items() if v}


def expand_in_s_basis(f: BiSymFunc) -> dict[BiKey, int]:
    """Coordinates of ``f`` in the basis of indecomposable classes.

    The classes are unitriangular against s_lambda(x) s_mu(y) with respect to
    total degree, so peeling the top filtration layer and subtracting the
    corresponding classes terminates.
    """
    rem = dict(f.coeffs)
    out: dict[BiKey, int] = {}
    while rem:
        d = max(sum(l) + sum(m) for l, m in rem)
        layer = [(k, c) for k, c in rem.items() if sum(k[0]) + sum(k[1]) == d]
        for k, c in layer:
            out[k] = out.get(k, 0) + c
            for k2, c2 in _s_class(*k).coeffs.items():
                rem[k2] = rem.get(k2, 0) - c * c2
                if rem[k2] == 0:
                    del rem[k2]
    return {k: v for k, v in out.items() if v}


def tensor_structure_constants(a: BiKey, b: BiKey) -> dict[BiKey, int]:
    """Multiplicities of indecomposables in X_a (x) X_b.

    Multiplies the two classes in the ring and re-expands the product in the
    basis of classes.
    """
    lam_a, mu_a = pt.partition(a[0]), pt.partition(a[1])
    lam_b, mu_b = pt.partition(b[0]), pt.partition(b[1])
    product = bisym.multiply(_s_class(lam_a, mu_a), _s_class(lam_b, mu_b))
    return expand_in_s_basis(product)
