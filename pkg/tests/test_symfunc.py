import pytest
from hypothesis import given, settings

from deligne_gl import oracle as orc, partitions as pt, symfunc as sf
from deligne_gl.partitions import SkewShape

from conftest import partitions


def test_multiply_s1_s1():
    # derived from the oracle: (x1+x2)(x1+x2) = (x1^2+x1x2+x2^2) + x1x2
    assert sf.multiply(sf.schur((1,)), sf.schur((1,))) == sf.SymFunc(
        {(2,): 1, (1, 1): 1}
    )


def test_multiply_s21_s21():
    # frozen from the oracle: polynomial product in 6 variables, then peeling
    # Schur polynomials off the lex-leading terms
    want = {
        (4, 2): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
        (3, 2, 1): 2,
        (3, 1, 1, 1): 1,
        (2, 2, 2): 1,
        (2, 2, 1, 1): 1,
    }
    assert sf.multiply(sf.schur((2, 1)), sf.schur((2, 1))).coeffs == want


def test_multiply_by_unit_and_zero():
    f = sf.schur((3, 1))
    assert sf.multiply(f, sf.unit()) == f
    assert sf.multiply(f, sf.zero()) == sf.zero()


def test_multiply_matches_oracle_exhaustively():
    # every product of basis elements up to size 4 each, expanded into
    # |lambda|+|mu| variables, equals the product of the oracle polynomials
    ps = pt.partitions_up_to(4)
    for l in ps:
        for m in ps:
            nv = max(sum(l) + sum(m), 1)
            lhs = orc.expand_symfunc(sf.multiply(sf.schur(l), sf.schur(m)), "x", nv)
            rhs = orc.schur_poly(l, "x", nv) * orc.schur_poly(m, "x", nv)
            assert lhs == rhs, (l, m)


@given(partitions(max_total=4), partitions(max_total=3))
def test_lr_symmetry(l, m):
    # both orders run genuinely different tableau enumerations
    assert sf.multiply(sf.schur(l), sf.schur(m)) == sf.multiply(sf.schur(m), sf.schur(l))


@settings(max_examples=40)
@given(partitions(max_total=3), partitions(max_total=3), partitions(max_total=2))
def test_multiply_associative(a, b, c):
    fa, fb, fc = sf.schur(a), sf.schur(b), sf.schur(c)
    assert sf.multiply(sf.multiply(fa, fb), fc) == sf.multiply(fa, sf.multiply(fb, fc))


def test_skew_schur_examples():
    assert sf.skew_schur(SkewShape((2, 1), (1,))) == sf.SymFunc({(2,): 1, (1, 1): 1})
    assert sf.skew_schur(SkewShape((3, 2, 1), (3, 2, 1))) == sf.unit()
    # inner not contained in outer: the zero function
    assert sf.skew_schur(SkewShape((2,), (1, 1))) == sf.zero()


@given(partitions(max_total=5), partitions(max_total=5))
def test_skew_schur_matches_oracle(outer, inner):
    nv = max(sum(outer), 1)
    lhs = orc.expand_symfunc(sf.skew_schur(SkewShape(outer, inner)), "x", nv)
    rhs = orc.skew_schur_poly(SkewShape(outer, inner), "x", nv)
    assert lhs == rhs


def test_pieri_column_example():
    assert sf.pieri_column(sf.schur((1,)), 2) == sf.SymFunc({(2, 1): 1, (1, 1, 1): 1})
    with pytest.raises(ValueError):
        sf.pieri_column(sf.unit(), 0)


def test_pieri_row_example():
    assert sf.pieri_row(sf.schur((2,)), 2) == sf.SymFunc(
        {(4,): 1, (3, 1): 1, (2, 2): 1}
    )


@given(partitions(max_total=5))
def test_pieri_agrees_with_lr_multiply(p):
    # column Pieri against LR multiplication by e_i = s_{(1^i)}, and row
    # Pieri against h_i: two independent product routes
    f = sf.schur(p)
    for i in range(1, 4):
        assert sf.pieri_column(f, i) == sf.multiply(f, sf.schur((1,) * i))
        assert sf.pieri_row(f, i) == sf.multiply(f, sf.complete_to_schur((i,)))


def test_complete_and_elementary_expansions():
    assert sf.complete_to_schur(()) == sf.unit()
    assert sf.complete_to_schur((2, 1)) == sf.SymFunc({(3,): 1, (2, 1): 1})
    assert sf.elementary_to_schur((2, 1)) == sf.SymFunc({(2, 1): 1, (1, 1, 1): 1})
    assert sf.elementary_to_schur((1, 1, 1)) == sf.SymFunc(
        {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    )


def test_h_e_monomial_edge_cases():
    assert sf.h_monomial((-1, 2)) == sf.zero()
    assert sf.h_monomial((0, 0)) == sf.unit()
    assert sf.e_monomial((3, 0, 1)) == sf.elementary_to_schur((3, 1))


@given(partitions(max_total=6))
def test_omega_involution(p):
    f = sf.schur(p)
    assert sf.omega(sf.omega(f)) == f


@given(partitions(max_total=5))
def test_omega_swaps_h_and_e(p):
    assert sf.omega(sf.complete_to_schur(p)) == sf.elementary_to_schur(p)


@settings(max_examples=50)
@given(partitions(max_total=4), partitions(max_total=3))
def test_omega_is_ring_map(a, b):
    fa, fb = sf.schur(a), sf.schur(b)
    assert sf.omega(sf.multiply(fa, fb)) == sf.multiply(sf.omega(fa), sf.omega(fb))


def test_jacobi_trudi_both_bases():
    for n in range(7):
        for p in pt.partitions_of(n):
            assert sf.jacobi_trudi(p, "h") == sf.schur(p), p
            assert sf.jacobi_trudi(p, "e") == sf.schur(p), p


def test_jacobi_trudi_rejects_unknown_basis():
    with pytest.raises(ValueError):
        sf.jacobi_trudi((2, 1), "m")


def test_terms_canonical_order_and_json():
    f = sf.SymFunc({(1, 1): 2, (2,): 1, (): -1})
    assert [k for k, _ in f.terms()] == [(), (2,), (1, 1)]
    assert f.to_json_obj() == [
        {"partition": [], "coeff": "-1"},
        {"partition": [2], "coeff": "1"},
        {"partition": [1, 1], "coeff": "2"},
    ]
    assert sf.SymFunc.from_json_obj(f.to_json_obj()) == f


def test_arithmetic_basics():
    f = sf.schur((2,))
    g = sf.schur((1, 1))
    assert f + g - g == f
    assert -(-f) == f
    assert 0 * f == sf.zero()
    assert 3 * f == f + f + f
    assert not sf.zero()
    assert f.degree() == 2 and sf.zero().degree() == -1
