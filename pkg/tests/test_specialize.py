import pytest
from hypothesis import given, settings

from deligne_gl import grothendieck as gk, partitions as pt, specialize as sp

from conftest import partitions


def test_signature_examples():
    assert sp.signature_of((1,), (1,), 2) == (1, -1)
    assert sp.signature_of((2, 1), (1,), 4) == (2, 1, 0, -1)
    assert sp.signature_of((), (), 3) == (0, 0, 0)
    assert sp.signature_of((3,), (2, 2), 3) == (3, -2, -2)


def test_signature_below_threshold_raises():
    with pytest.raises(ValueError):
        sp.signature_of((1,), (1,), 1)
    with pytest.raises(ValueError):
        sp.signature_of((2, 1), (1, 1), 3)


def test_rational_schur_char_adjoint_like():
    ch = sp.rational_schur_char((1, -1))
    assert ch == sp.LaurentPoly(2, {(1, -1): 1, (0, 0): 1, (-1, 1): 1})
    assert ch.to_text() == "x1^1*x2^-1 + 1 + x1^-1*x2^1"


def test_rational_schur_char_dimension():
    # the rank-3 representation with signature (1,0,-1) has dimension 8
    ch = sp.rational_schur_char((1, 0, -1))
    assert sum(ch.terms.values()) == 8


def test_rational_schur_char_shift_independent():
    # any determinant shift clearing the negative parts gives the same answer
    for sig in [(1, -1), (2, 0, -1), (3, 1, -2), (0, 0)]:
        base = sp.rational_schur_char(sig)
        q = max(0, -sig[-1])
        assert sp.rational_schur_char(sig, shift=q + 2) == base
    with pytest.raises(ValueError):
        sp.rational_schur_char((1, -2), shift=1)


def test_rational_schur_char_validates():
    with pytest.raises(ValueError):
        sp.rational_schur_char((0, 1))


def test_specialize_smallest_class():
    ch = sp.specialize_to_gl_n(gk.s_class((1,), (1,)), 2)
    assert ch == sp.LaurentPoly(2, {(1, -1): 1, (0, 0): 1, (-1, 1): 1})


def test_specialize_matches_rational_char_exhaustive_small():
    ps = pt.partitions_up_to(3)
    for l in ps:
        for m in ps:
            for n in range(len(l) + len(m), 4):
                got = sp.specialize_to_gl_n(gk.s_class(l, m), n)
                want = sp.rational_schur_char(sp.signature_of(l, m, n))
                assert got == want, (l, m, n)


@settings(max_examples=30, deadline=None)
@given(partitions(max_total=4), partitions(max_total=4))
def test_specialized_characters_are_symmetric(l, m):
    n = len(l) + len(m)
    if n == 0:
        return
    ch = sp.specialize_to_gl_n(gk.s_class(l, m), n)
    assert ch.is_symmetric()


def test_check_detshift_exhaustive():
    for n in range(6):
        for i in range(n + 1):
            assert sp.check_detshift(i, n), (i, n)
    with pytest.raises(ValueError):
        sp.check_detshift(3, 2)
    with pytest.raises(ValueError):
        sp.check_detshift(-1, 2)


def test_laurent_arithmetic():
    f = sp.LaurentPoly(2, {(1, 0): 1, (0, 1): 1})
    g = f.invert_variables()
    assert g == sp.LaurentPoly(2, {(-1, 0): 1, (0, -1): 1})
    assert (f * g).terms == {
        (1, -1): 1,
        (0, 0): 2,
        (-1, 1): 1,
    }
    assert f.det_power(1) == sp.LaurentPoly(2, {(2, 1): 1, (1, 2): 1})
    assert (f - f) == sp.LaurentPoly(2)
    assert sp.one(2).to_text() == "1"
    with pytest.raises(ValueError):
        f + sp.one(3)
