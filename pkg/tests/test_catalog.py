import json

import pytest

from extor.catalog import builtin_catalog, load_catalog
from extor.homological import gorenstein_shift
from extor.modules import PresentedModule, is_free, restrict_scalars


def test_builtin_groups_present():
    cat = builtin_catalog()
    for name in ("1", "SO(2)", "T^1", "T^2", "T^3", "U(1)", "U(2)", "U(3)",
                 "SU(2)", "SU(3)", "Sp(1)", "Sp(2)"):
        assert name in cat.groups


def test_group_invariants():
    cat = builtin_catalog()
    for g in cat.groups.values():
        assert g.rank == g.ring.ngens
        assert all(d % 2 == 0 for d in g.ring.degrees)
    u3 = cat.group("U(3)")
    assert u3.rank == 3 and u3.dim == 9
    su2 = cat.group("SU(2)")
    assert su2.ring.degrees == (4,) and su2.dim == 3
    so2 = cat.group("SO(2)")
    assert so2.ring.degrees == (2,) and so2.dim == 1 and so2.rank == 1


def test_inclusion_invariants():
    cat = builtin_catalog()
    for inc in cat.inclusions.values():
        assert inc.codim >= 0
        assert inc.venkov_finite()
    assert cat.inclusion("SU(3)>SU(2)").codim == 5
    assert cat.inclusion("U(2)>T^2").codim == 2
    assert cat.inclusion("T^2>T^1").codim == 1
    assert cat.inclusion("SO(2)>1").codim == 1


def test_composite_inclusion_consistency():
    # T^1 < SU(2) < SU(3): the composite ring map equals the direct entry.
    cat = builtin_catalog()
    top = cat.inclusion("SU(3)>SU(2)").theta
    bottom = cat.inclusion("SU(2)>T^1").theta
    direct = cat.inclusion("SU(3)>T^1").theta
    assert bottom.compose(top) == direct


def test_roundtrip_serialization():
    cat = builtin_catalog()
    doc = cat.to_json()
    again = load_catalog(json.loads(json.dumps(doc)))
    assert set(again.groups) == set(cat.groups)
    assert set(again.inclusions) == set(cat.inclusions)
    for name, inc in cat.inclusions.items():
        assert again.inclusion(name).theta == inc.theta


def test_load_rejects_venkov_failure():
    doc = {
        "groups": [
            {"name": "A", "dim": 2, "generators": [{"name": "x", "degree": 2}]},
            {"name": "B", "dim": 2, "generators": [
                {"name": "u", "degree": 2}, {"name": "v", "degree": 2}]},
        ],
        "inclusions": [{"big": "A", "small": "B", "images": {"x": "u"}}],
    }
    with pytest.raises(ValueError, match="Venkov"):
        load_catalog(doc)


def test_load_rejects_degree_mismatch():
    doc = {
        "groups": [
            {"name": "A", "dim": 1, "generators": [{"name": "x", "degree": 4}]},
            {"name": "B", "dim": 1, "generators": [{"name": "t", "degree": 2}]},
        ],
        "inclusions": [{"big": "A", "small": "B", "images": {"x": "t"}}],
    }
    with pytest.raises(ValueError, match="degree"):
        load_catalog(doc)


def test_certificates_on_selected_inclusions():
    # The full catalog sweep lives in the acceptance suite; spot-check here.
    cat = builtin_catalog()
    for name in ("SO(2)>1", "U(2)>T^2", "SU(3)>SU(2)", "Sp(1)>SU(2)"):
        inc = cat.inclusion(name)
        rep = gorenstein_shift(inc.theta, expected=inc.codim)
        assert rep.match, (name, rep)
        m_r = restrict_scalars(inc.theta,
                               PresentedModule.free(inc.small.ring, (0,)))
        free, _ = is_free(m_r)
        assert free == (inc.big.rank == inc.small.rank), name
