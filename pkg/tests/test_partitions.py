import hypothesis.strategies as st
import pytest
from hypothesis import given

from deligne_gl import partitions as pt
from deligne_gl.partitions import SkewShape

from conftest import partitions


def test_partition_canonicalizes():
    assert pt.partition([3, 1, 0, 0]) == (3, 1)
    assert pt.partition([]) == ()
    with pytest.raises(ValueError):
        pt.partition([1, 2])
    with pytest.raises(ValueError):
        pt.partition([2, -1])


def test_parse_and_format():
    assert pt.parse_partition("2,1,1") == (2, 1, 1)
    assert pt.parse_partition("") == ()
    assert pt.parse_partition("[]") == ()
    assert pt.parse_partition("[3,1]") == (3, 1)
    assert pt.format_partition((2, 1)) == "2,1"
    assert pt.format_partition(()) == "[]"
    with pytest.raises(ValueError):
        pt.parse_partition("1,2")
    with pytest.raises(ValueError):
        pt.parse_partition("a,b")


def test_conjugate_examples():
    assert pt.conjugate((2, 1, 1)) == (3, 1)
    assert pt.conjugate(()) == ()
    assert pt.conjugate((5,)) == (1, 1, 1, 1, 1)


@given(partitions())
def test_conjugate_involution(p):
    assert pt.conjugate(pt.conjugate(p)) == p
    assert sum(pt.conjugate(p)) == sum(p)


def test_contains():
    assert pt.contains((3, 2), (2, 2))
    assert not pt.contains((3, 2), (2, 2, 1))
    assert not pt.contains((3, 2), (4,))
    assert pt.contains((), ())


@given(partitions(max_total=6), partitions(max_total=6))
def test_contains_conjugate_compatible(a, b):
    # containment is preserved by transposing both diagrams
    assert pt.contains(a, b) == pt.contains(pt.conjugate(a), pt.conjugate(b))


def test_canonical_order_of_partitions_of_4():
    assert pt.partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_partitions_up_to_counts():
    # partition numbers 1, 1, 2, 3, 5, 7, 11
    assert len(pt.partitions_up_to(6)) == 1 + 1 + 2 + 3 + 5 + 7 + 11


def test_partitions_in_rectangle_2x2():
    assert pt.partitions_in_rectangle(2, 2) == [
        (),
        (1,),
        (2,),
        (1, 1),
        (2, 1),
        (2, 2),
    ]


def test_partitions_in_rectangle_counts():
    # number of partitions in an r x c box is binomial(r+c, r)
    from math import comb

    for r in range(5):
        for c in range(5):
            assert len(pt.partitions_in_rectangle(r, c)) == comb(r + c, r)


@given(partitions(max_total=6))
def test_subpartitions_match_bruteforce(p):
    got = set(pt.subpartitions(p))
    want = {
        q
        for n in range(sum(p) + 1)
        for q in pt.partitions_of(n)
        if pt.contains(p, q)
    }
    assert got == want


def test_enumerate_ssyt_straight_shape():
    # the GL_3 irrep labelled (2,1) has dimension 8
    tabs = pt.enumerate_ssyt(SkewShape((2, 1), ()), 3)
    assert len(tabs) == 8
    assert tabs == sorted(tabs)  # deterministic lexicographic order
    assert tabs[0] == ((1, 1), (2,))


def test_enumerate_ssyt_skew_shape():
    # disconnected cells of (2,1)/(1): no mutual constraint, 2x2 fillings
    tabs = pt.enumerate_ssyt(SkewShape((2, 1), (1,)), 2)
    assert len(tabs) == 4


def test_enumerate_ssyt_edge_cases():
    assert pt.enumerate_ssyt(SkewShape((), ()), 3) == [()]
    assert pt.enumerate_ssyt(SkewShape((1,), (1,)), 3) == [((),)]
    assert pt.enumerate_ssyt(SkewShape((1,), ()), 0) == []
    with pytest.raises(ValueError):
        pt.enumerate_ssyt(SkewShape((1,), (2,)), 3)


@given(partitions(max_total=5), partitions(max_total=5), st.integers(1, 4))
def test_enumerate_ssyt_validity(outer, inner, max_entry):
    if not pt.contains(outer, inner):
        return
    pad = list(inner) + [0] * (len(outer) - len(inner))
    for t in pt.enumerate_ssyt(SkewShape(outer, inner), max_entry):
        grid = {}
        for r, row in enumerate(t):
            for k, e in enumerate(row):
                c = pad[r] + k
                grid[(r, c)] = e
                assert 1 <= e <= max_entry
        for (r, c), e in grid.items():
            if (r, c - 1) in grid:
                assert grid[(r, c - 1)] <= e  # rows weakly increase
            if (r - 1, c) in grid:
                assert grid[(r - 1, c)] < e  # columns strictly increase


def test_skew_cells_row_major():
    assert pt.skew_cells(SkewShape((3, 2), (1,))) == [(0, 1), (0, 2), (1, 0), (1, 1)]
