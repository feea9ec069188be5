import pytest

from extor.modules import (
    DegreeWindow,
    PresentedModule,
    extend_scalars,
    hilbert_series,
    hom_modules,
    is_free,
    modules_equal,
    restrict_scalars,
    shift,
    tensor_modules,
    torsion_submodule,
)
from extor.poly import GradedPolyRing, RingMap

from util import (
    QC,
    QSU2,
    QSU3,
    QT,
    QT2,
    QTRIV,
    QU2,
    augmentation_module,
    random_module,
    seeded,
    theta_circle,
    theta_su3_su2,
    theta_u2_torus,
)


def window(lo, hi):
    return DegreeWindow(lo, hi)


# -- shift --------------------------------------------------------------------

def test_shift_free_module_total_degree_convention():
    m = PresentedModule.free(QC, (0,))
    s = shift(m, 2)
    # total degree +2 corresponds to internal degree -2
    assert s.gen_degrees == (-2,)
    assert s.piece_dim(-2) == 1


def test_shift_zero_is_identity_and_inverse():
    m = augmentation_module(QT2)
    assert modules_equal(shift(m, 0), m)
    assert modules_equal(shift(shift(m, 3), -3), m)


def test_shift_hilbert_dims():
    m = PresentedModule(QC, (0,), [[QC.parse("c^2")]])
    a = 4
    s = shift(m, a)
    for d in window(-10, 10):
        assert s.piece_dim(d) == m.piece_dim(d + a)


# -- extension of scalars ------------------------------------------------------

def test_extend_scalars_ring_to_field():
    theta = theta_circle()
    m = PresentedModule.free(QC, (0,))
    out = extend_scalars(theta, m)
    assert out.ring == QTRIV
    assert out.gen_degrees == (0,)
    assert not out.relations


def test_extend_scalars_kills_relation():
    theta = theta_su3_su2()
    m = PresentedModule(QSU3, (0,), [[QSU3.parse("c3")]])
    out = extend_scalars(theta, m)
    # relation becomes 0, pruned: free rank 1 = Q[c2]
    assert out.gen_degrees == (0,)
    assert not out.relations


def test_extend_scalars_zero_module():
    theta = theta_u2_torus()
    assert extend_scalars(theta, PresentedModule.zero(QU2)).rank == 0


def test_extend_commutes_with_shift():
    rng = seeded(42)
    theta = theta_u2_torus()
    for _ in range(10):
        m = random_module(rng, QU2)
        a = rng.randrange(-4, 5)
        lhs = extend_scalars(theta, shift(m, a)).minimize()
        rhs = shift(extend_scalars(theta, m), a).minimize()
        assert modules_equal(lhs, rhs)


# -- restriction of scalars ----------------------------------------------------

def test_restrict_double_cover_is_free_rank_two():
    S = GradedPolyRing([("c2", 4)])
    theta = RingMap.from_strings(S, QT, {"c2": "t^2"})
    m = PresentedModule.free(QT, (0,))
    out = restrict_scalars(theta, m)
    free, degrees = is_free(out)
    assert free and degrees == (0, 2)


def test_restrict_augmentation():
    theta = theta_circle()
    m = PresentedModule.free(QTRIV, (0,))
    out = restrict_scalars(theta, m)
    # Q as Q[c]-module with relation c
    assert out.gen_degrees == (0,)
    assert len(out.relations) == 1
    assert out.relations[0].comps[0] == QC.parse("c")


def test_restrict_not_finitely_generated():
    S = GradedPolyRing([("x", 2)])
    R = GradedPolyRing([("t1", 2), ("t2", 2)])
    theta = RingMap.from_strings(S, R, {"x": "t1"})
    with pytest.raises(ValueError, match="not finitely generated"):
        restrict_scalars(theta, PresentedModule.free(R, (0,)))


def test_restrict_preserves_hilbert_dims_randomized():
    rng = seeded(7)
    cases = [
        (theta_u2_torus(), QT2),
        (theta_su3_su2(), QSU2),
        (RingMap.from_strings(GradedPolyRing([("c2", 4)]), QT, {"c2": "t^2"}), QT),
    ]
    checked = 0
    for theta, target in cases:
        for _ in range(17):
            m = random_module(rng, target)
            out = restrict_scalars(theta, m)
            for d in window(0, 20):
                assert out.piece_dim(d) == m.piece_dim(d)
            checked += 1
    assert checked >= 50


def test_restrict_symmetric_functions_free_of_rank_two():
    theta = theta_u2_torus()
    m = PresentedModule.free(QT2, (0,))
    out = restrict_scalars(theta, m)
    free, degrees = is_free(out)
    assert free and degrees == (0, 2)


def test_square_of_rings_strict_identity():
    # The tower T^1 < SU(2) < SU(3): restricting along theta then f agrees
    # with restricting along the composite, degreewise.
    rng = seeded(13)
    f = theta_su3_su2()                       # Q[c2,c3] -> Q[c2]
    theta = RingMap.from_strings(QSU2, QT, {"c2": "-t^2"})
    psi = theta.compose(f)                    # Q[c2,c3] -> Q[t]
    assert psi.images[0] == QT.parse("-t^2") and not psi.images[1]
    for _ in range(5):
        m = random_module(rng, QT, max_gens=2, max_rels=1)
        side1 = restrict_scalars(f, restrict_scalars(theta, m))
        side2 = restrict_scalars(psi, m)
        for d in window(0, 16):
            assert side1.piece_dim(d) == side2.piece_dim(d)


# -- hom ----------------------------------------------------------------------

def test_hom_field_into_ring_vanishes():
    q = augmentation_module(QC)
    s = PresentedModule.free(QC, (0,))
    out = hom_modules(q, s)
    assert out.rank == 0


def test_hom_representable():
    rng = seeded(3)
    for _ in range(8):
        n = random_module(rng, QT2)
        s = PresentedModule.free(QT2, (0,))
        out = hom_modules(s, n)
        nm = n.minimize()
        for d in window(-6, 12):
            assert out.piece_dim(d) == nm.piece_dim(d)


def test_hom_truncated_polynomial_modules():
    # Hom_{Q[c]}(Q[c]/(c^2), Q[c]/(c^4)) is 2-dimensional over Q.
    m = PresentedModule(QC, (0,), [[QC.parse("c^2")]])
    n = PresentedModule(QC, (0,), [[QC.parse("c^4")]])
    out = hom_modules(m, n)
    total = sum(out.piece_dim(d) for d in window(-10, 10))
    assert total == 2


# -- torsion ------------------------------------------------------------------

def test_torsion_mixed_module():
    # T_(c)(Q[c]/(c^2) (+) Q[c]) = Q[c]/(c^2)
    amb_degrees = (0, 0)
    m = PresentedModule(QC, amb_degrees,
                        [[QC.parse("c^2"), QC.zero()]])
    t = torsion_submodule(m, [QC.parse("c")])
    assert t.gen_degrees == (0,)
    expected = PresentedModule(QC, (0,), [[QC.parse("c^2")]])
    assert modules_equal(t.minimize(), expected.minimize())


def test_torsion_free_module_is_zero():
    m = PresentedModule.free(QT2, (0, 2))
    t = torsion_submodule(m, list(QT2.gens()))
    assert t.rank == 0


def test_torsion_finite_length_is_everything():
    m = PresentedModule(QT2, (0,), [[QT2.parse("t1")], [QT2.parse("t2^2")]])
    t = torsion_submodule(m, list(QT2.gens()))
    for d in window(0, 10):
        assert t.piece_dim(d) == m.piece_dim(d)


def test_torsion_idempotent_and_bounded():
    rng = seeded(23)
    for _ in range(10):
        m = random_module(rng, QC, max_gens=2, max_rels=2)
        t = torsion_submodule(m, list(QC.gens()))
        tt = torsion_submodule(t, list(QC.gens()))
        for d in window(-4, 12):
            assert t.piece_dim(d) <= m.piece_dim(d)
            assert tt.piece_dim(d) == t.piece_dim(d)


# -- hilbert ------------------------------------------------------------------

def test_hilbert_polynomial_ring_one_variable():
    m = PresentedModule.free(QC, (0,))
    h = hilbert_series(m, window(0, 6))
    assert h.as_list() == [1, 0, 1, 0, 1, 0, 1]


def test_hilbert_two_variables():
    m = PresentedModule.free(QT2, (0,))
    h = hilbert_series(m, window(0, 4))
    assert h.as_list() == [1, 0, 2, 0, 3]


def test_hilbert_su3_quotient():
    m = PresentedModule(QSU3, (0,), [[QSU3.parse("c3")]])
    h = hilbert_series(m, window(0, 8))
    assert h.as_list() == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_hilbert_closed_form_matches_dims():
    rng = seeded(31)
    for ring_ in (QC, QT2, QU2):
        for _ in range(6):
            m = random_module(rng, ring_)
            h = hilbert_series(m, window(-2, 14), closed_form=True)
            expanded = h.closed_form_expansion()
            assert expanded == h.dims


# -- freeness -----------------------------------------------------------------

def test_free_detection_cases():
    q = augmentation_module(QC)
    assert is_free(q) == (False, None)
    f = PresentedModule.free(QU2, (0, 2, 4))
    assert is_free(f) == (True, (0, 2, 4))
    # presentation with a unit entry is still free after pruning
    m = PresentedModule(QT2, (0, 0), [[QT2.one(), QT2.parse("t1")*0 + QT2.one()]])
    free, degrees = is_free(m)
    assert free and degrees == (0,)


def test_tensor_with_ring_is_identity():
    rng = seeded(5)
    s = PresentedModule.free(QT2, (0,))
    for _ in range(6):
        m = random_module(rng, QT2)
        t = tensor_modules(s, m)
        mm = m.minimize()
        for d in window(-2, 10):
            assert t.piece_dim(d) == mm.piece_dim(d)
