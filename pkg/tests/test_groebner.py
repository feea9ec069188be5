import random

import pytest

from extor.freemod import (
    FreeModule,
    buchberger,
    express,
    ideal_groebner,
    normal_form,
    quotient_finite_dimension,
    staircase_monomials,
    syzygies,
)
from extor.poly import GradedPolyRing
from extor.rational import rat


def ring1():
    return GradedPolyRing([("x", 2)])


def ring2():
    return GradedPolyRing([("x", 2), ("y", 2)])


def tring():
    return GradedPolyRing([("t1", 2), ("t2", 2)])


def ideal_gens(ring, *texts):
    module = FreeModule(ring, (0,))
    return [module.element([ring.parse(t)]) for t in texts]


def test_principal_ideal():
    R = ring1()
    gb = buchberger(ideal_gens(R, "x"))
    assert len(gb) == 1
    assert gb.elements[0].comps[0] == R.parse("x")


def test_symmetric_pair_buchberger_step():
    # (t1 + t2, t1*t2): the S-pair reduces to -t2^2, giving lead terms {t1, t2^2}.
    R = tring()
    gb = buchberger(ideal_gens(R, "t1 + t2", "t1*t2"))
    leads = sorted(mon for _slot, mon in gb.leads())
    assert leads == [(0, 2), (1, 0)]  # t2^2 and t1


def test_module_buchberger_spair():
    R = ring2()
    F = FreeModule(R, (0, 0))
    g1 = F.element([R.parse("x"), R.parse("y")])
    g2 = F.element([R.parse("y"), R.parse("x")])
    gb = buchberger([g1, g2])
    # Basis contains both generators plus the reduction of their S-vector,
    # whose lead lands in the second slot.
    assert len(gb) == 3
    slots = sorted(slot for slot, _mon in gb.leads())
    assert slots == [0, 0, 1]
    extra = [e for e in gb if e.leading_term()[0] == 1][0]
    assert not extra.comps[0]
    assert extra.comps[1] in (R.parse("y^2 - x^2"), R.parse("x^2 - y^2"))


def test_inhomogeneous_rejected():
    R = ring1()
    with pytest.raises(ValueError, match="inhomogeneous"):
        buchberger(ideal_gens(R, "x^2 + x"))


def test_normal_form_power_in_principal():
    R = ring1()
    gb = buchberger(ideal_gens(R, "x"))
    F = gb.module
    assert not normal_form(F.element([R.parse("x^2")]), gb)


def test_normal_form_t1_squared():
    # t1^2 = t1*(t1+t2) - t1*t2 lies in the ideal.
    R = tring()
    gb = buchberger(ideal_gens(R, "t1 + t2", "t1*t2"))
    assert not normal_form(gb.module.element([R.parse("t1^2")]), gb)


def test_normal_form_unit_survives():
    R = ring2()
    gb = buchberger(ideal_gens(R, "x", "y"))
    one = gb.module.element([R.one()])
    assert normal_form(one, gb) == one


def test_normal_form_linear_and_idempotent():
    R = tring()
    gb = buchberger(ideal_gens(R, "t1 + t2", "t1*t2"))
    F = gb.module
    rng = random.Random(3)
    for _ in range(20):
        e1 = _random_element(rng, F, degree=6)
        e2 = _random_element(rng, F, degree=6)
        n1 = normal_form(e1, gb)
        n2 = normal_form(e2, gb)
        assert normal_form(e1 + e2, gb) == n1 + n2
        assert normal_form(n1, gb) == n1


def test_basis_independent_of_generator_order():
    R = ring2()
    F = FreeModule(R, (0, 0))
    gens = [
        F.element([R.parse("x"), R.parse("y")]),
        F.element([R.parse("y"), R.parse("x")]),
        F.element([R.parse("x^2"), R.parse("y^2")]),
    ]
    gb1 = buchberger(gens)
    gb2 = buchberger(list(reversed(gens)))
    assert gb1.elements == gb2.elements


def test_koszul_syzygy():
    R = ring2()
    gb = buchberger(ideal_gens(R, "x", "y"))
    cols = syzygies(gb)
    assert len(cols) == 1
    (col,) = cols
    assert {tuple(col.comps)} == {(R.parse("y"), R.parse("-x"))} or \
        tuple(col.comps) == (R.parse("-y"), R.parse("x"))


def test_regular_element_no_syzygy():
    R = ring1()
    gb = buchberger(ideal_gens(R, "x"))
    assert syzygies(gb) == []


def test_repeated_generator_syzygy():
    R = ring1()
    gb = buchberger(ideal_gens(R, "x", "x"))
    cols = syzygies(gb)
    assert len(cols) == 1
    col = cols[0]
    assert col.comps[0] == -col.comps[1]
    assert col.comps[0].constant_coefficient() != 0


def test_syzygies_annihilate_generators():
    rng = random.Random(14)
    R = tring()
    F = FreeModule(R, (0, 2))
    for _ in range(15):
        gens = [_random_element(rng, F, degree=rng.choice([2, 4, 6])) for _ in range(3)]
        gens = [g for g in gens if g]
        if not gens:
            continue
        gb = buchberger(gens)
        for col in syzygies(gb):
            total = F.zero()
            for g, coeff in zip(gens, col.comps):
                total = total + g.mul_poly(coeff)
            assert not total


def test_express_membership():
    R = tring()
    gb = buchberger(ideal_gens(R, "t1 + t2", "t1*t2"))
    target = gb.module.element([R.parse("t1^2")])
    coeffs = express(target, gb)
    assert coeffs is not None
    rebuilt = gb.module.zero()
    for g, c in zip(gb.input_gens, coeffs):
        rebuilt = rebuilt + g.mul_poly(c)
    assert rebuilt == target
    outside = gb.module.element([R.parse("t1")])
    assert express(outside, gb) is None


def test_quotient_finite_dimension_cases():
    R1 = ring1()
    assert quotient_finite_dimension([R1.parse("x")]) == 1
    c2ring = GradedPolyRing([("c2", 4)])
    assert quotient_finite_dimension([c2ring.parse("c2")]) == 1
    R2 = ring2()
    assert quotient_finite_dimension([R2.parse("x")]) is None
    # maximal ideal of any ring gives dimension 1
    for ring in (R1, R2, GradedPolyRing([("a", 2), ("b", 4), ("c", 6)])):
        assert quotient_finite_dimension(list(ring.gens())) == 1


def test_staircase_of_symmetric_functions():
    # Q[t1,t2] over (t1+t2, t1*t2): staircase {1, t2}.
    R = tring()
    gb = ideal_groebner([R.parse("t1 + t2"), R.parse("t1*t2")])
    assert staircase_monomials(gb) == [(0, 0), (0, 1)]


def _random_element(rng, module, degree):
    ring = module.ring
    comps = []
    for gdeg in module.gen_degrees:
        target = degree - gdeg
        terms = {}
        for mon in ring.monomials_of_degree(target):
            if rng.random() < 0.5:
                c = rng.randrange(-3, 4)
                if c:
                    terms[mon] = rat(c)
        comps.append(ring.monomial((0,) * ring.ngens, 0) if not terms
                     else sum((ring.monomial(m, c) for m, c in terms.items()),
                              ring.zero()))
    return module.element(comps)
