import pytest

from deligne_gl import bisym, genfun as gf, grothendieck as gk, oracle as orc, partitions as pt


def test_truncation_spec_validation():
    with pytest.raises(ValueError):
        gf.TruncationSpec(degree=9)
    with pytest.raises(ValueError):
        gf.TruncationSpec(a=-1)
    # degenerate truncations are legal: empty alphabets and degree zero
    gf.TruncationSpec(a=0, degree=0)


def test_genfun_pairs_counts():
    spec = gf.TruncationSpec(a=2, b=2, nx=3, ny=3, degree=6)
    pairs = gf.genfun_pairs(spec)
    assert len(pairs) == 80
    assert all(len(l) <= 2 and len(m) <= 2 for l, m in pairs)
    assert all(sum(l) + sum(m) <= 6 for l, m in pairs)
    assert ((), ()) in pairs


def test_degree_zero_is_trivially_true():
    ok, diff = gf.verify_genfun(gf.TruncationSpec(a=2, b=2, nx=2, ny=2, degree=0))
    assert ok and diff is None


def test_master_identity_small_truncation():
    ok, diff = gf.verify_genfun(gf.TruncationSpec(a=2, b=2, nx=2, ny=2, degree=4))
    assert ok, diff


def test_master_identity_lhs_detects_wrong_classes():
    # feeding plain Schur pairs instead of the classes must break the identity
    spec = gf.TruncationSpec(a=1, b=1, nx=1, ny=1, degree=2)
    lhs = gf.genfun_lhs(spec, class_fn=lambda l, m: bisym.basis(l, m))
    assert lhs != gf.genfun_rhs(spec)


def test_lhs_invariant_under_omega_reroute():
    # the classes can be produced through conjugated labels and the two-sided
    # omega; the generating function cannot tell the difference
    spec = gf.TruncationSpec(a=2, b=2, nx=2, ny=2, degree=4)
    rerouted = gf.genfun_lhs(
        spec,
        class_fn=lambda l, m: bisym.omega_xy(
            gk.s_class(pt.conjugate(l), pt.conjugate(m))
        ),
    )
    assert rerouted == gf.genfun_lhs(spec)


def test_verify_cauchy_small():
    spec = gf.TruncationSpec(a=2, b=2, nx=2, ny=2, degree=5)
    for n in range(4):
        for tau in pt.partitions_of(n):
            assert gf.verify_cauchy(tau, spec), tau


def test_verify_dual_cauchy():
    assert gf.verify_dual_cauchy(gf.TruncationSpec(a=2, b=2, nx=1, ny=1, degree=4))
    # an empty alpha alphabet kills both sides down to 1
    assert gf.verify_dual_cauchy(gf.TruncationSpec(a=0, b=2, nx=1, ny=1, degree=4))


def test_resummation_through_cauchy_factors():
    # regrouping the sum over (lambda, mu) by the cancelling partition tau
    # factors it into a product of the two skew Cauchy sums; summing those
    # with signs reproduces the LHS after the joint truncation
    spec = gf.TruncationSpec(a=2, b=2, nx=2, ny=2, degree=4)
    layout = spec.layout()
    cut = ("alpha", "beta")
    acc = orc.zero(layout)
    for tau in pt.partitions_in_rectangle(spec.a, spec.b):
        lhs_ax, _ = gf._cauchy_side(tau, spec.a, spec.nx, "alpha", "x", spec.degree)
        lhs_by, _ = gf._cauchy_side(
            pt.conjugate(tau), spec.b, spec.ny, "beta", "y", spec.degree
        )
        term = orc.embed(lhs_ax, layout) * orc.embed(lhs_by, layout)
        acc = acc + ((-1) ** sum(tau)) * term
    assert acc.truncated(cut, spec.degree) == gf.genfun_lhs(spec)
