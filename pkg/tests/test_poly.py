import pytest

from extor.poly import GradedPolyRing, ParseError, RingMap
from extor.rational import rat


def test_parse_examples_from_grammar():
    R = GradedPolyRing([("c1", 2), ("c2", 4)])
    p = R.parse("c1^2 - 4*c2")
    assert p.is_homogeneous() and p.degree() == 4
    assert p.terms == {(2, 0): rat(1), (0, 1): rat(-4)}
    T = GradedPolyRing([("t1", 2), ("t2", 2)])
    q = T.parse("1/2*t1*t2")
    assert q.terms == {(1, 1): rat(1, 2)}


def test_parse_constant_and_leading_sign():
    R = GradedPolyRing([("x", 2)])
    assert R.parse("5").constant_coefficient() == 5
    assert R.parse("-x^2 + x^2").terms == {}
    assert R.parse("-3/2*x") == R.parse("x").scale(rat(-3, 2))


def test_parse_error_positions():
    R = GradedPolyRing([("x", 2)])
    with pytest.raises(ParseError) as err:
        R.parse("x + $")
    assert err.value.position == 4
    with pytest.raises(ParseError, match="unknown generator"):
        R.parse("x + y")
    with pytest.raises(ParseError):
        R.parse("x ^")
    with pytest.raises(ParseError):
        R.parse("")


def test_whitespace_insignificant():
    R = GradedPolyRing([("x", 2), ("y", 4)])
    assert R.parse("  x ^ 2+ 3 * y ") == R.parse("x^2+3*y")


def test_odd_degree_rejected_with_override():
    with pytest.raises(ValueError, match="odd degree"):
        GradedPolyRing([("e", 3)])
    R = GradedPolyRing([("e", 3)], allow_odd=True)
    assert R.parse("e^2").degree() == 6


def test_degrevlex_order():
    R = GradedPolyRing([("x", 2), ("y", 2), ("z", 2)])
    # classical: y^2 beats x*z at equal degree in degrevlex
    p = R.parse("x*z + y^2")
    assert p.leading_monomial() == (0, 2, 0)
    # weighted degree dominates
    S = GradedPolyRing([("a", 2), ("b", 6)])
    q = S.parse("a^2 + b")
    assert q.leading_monomial() == (0, 1)


def test_ring_map_validation_and_apply():
    U2 = GradedPolyRing([("c1", 2), ("c2", 4)])
    T2 = GradedPolyRing([("t1", 2), ("t2", 2)])
    theta = RingMap.from_strings(U2, T2, {"c1": "t1 + t2", "c2": "t1*t2"})
    img = theta.apply(U2.parse("c1^2 - 4*c2"))
    assert img == T2.parse("t1^2 - 2*t1*t2 + t2^2")
    with pytest.raises(ValueError, match="degree"):
        RingMap.from_strings(U2, T2, {"c1": "t1", "c2": "t1"})
    # zero images are allowed
    RingMap.from_strings(U2, T2, {"c1": "t1", "c2": "0*t1"})


def test_ring_map_compose():
    A = GradedPolyRing([("a", 4)])
    B = GradedPolyRing([("b", 4)])
    C = GradedPolyRing([("t", 2)])
    f = RingMap.from_strings(A, B, {"a": "b"})
    g = RingMap.from_strings(B, C, {"b": "-t^2"})
    assert g.compose(f).images[0] == C.parse("-t^2")


def test_monomials_of_degree():
    R = GradedPolyRing([("x", 2), ("y", 4)])
    assert R.monomials_of_degree(8) == sorted(
        [(4, 0), (2, 1), (0, 2)], key=R.monomial_key
    )
    assert R.monomials_of_degree(3) == []
    assert R.monomials_of_degree(0) == [(0, 0)]
