"""Shared helpers for tests: standard rings, maps, and random modules."""

import random

from extor.modules import PresentedModule
from extor.poly import GradedPolyRing, RingMap
from extor.rational import rat


def ring(*gens):
    return GradedPolyRing(list(gens))


QC = GradedPolyRing([("c", 2)])          # H*BSO(2)
QTRIV = GradedPolyRing([])               # H*B1
QT = GradedPolyRing([("t", 2)])
QT2 = GradedPolyRing([("t1", 2), ("t2", 2)])
QU2 = GradedPolyRing([("c1", 2), ("c2", 4)])
QSU3 = GradedPolyRing([("c2", 4), ("c3", 6)])
QSU2 = GradedPolyRing([("c2", 4)])


def theta_circle():
    """Q[c] -> Q, the SO(2) > 1 augmentation."""
    return RingMap(QC, QTRIV, [QTRIV.zero()])


def theta_u2_torus():
    return RingMap.from_strings(QU2, QT2, {"c1": "t1 + t2", "c2": "t1*t2"})


def theta_su3_su2():
    return RingMap.from_strings(QSU3, QSU2, {"c2": "c2", "c3": "0*c2"})


def augmentation_module(ring_):
    """Q as a module over the ring (one degree-0 generator, killed by gens)."""
    return PresentedModule.quotient_ring(ring_, list(ring_.gens()))


def random_polynomial(rng, ring_, degree, density=0.6, zero_ok=True):
    terms = {}
    for mon in ring_.monomials_of_degree(degree):
        if rng.random() < density:
            c = rng.randrange(-3, 4)
            if c:
                terms[mon] = rat(c)
    if not terms and not zero_ok:
        mons = ring_.monomials_of_degree(degree)
        if mons:
            terms[mons[0]] = rat(1)
    poly = ring_.zero()
    for m, c in terms.items():
        poly = poly + ring_.monomial(m, c)
    return poly


def random_module(rng, ring_, max_gens=2, max_rels=2, max_gen_degree=4,
                  max_rel_degree_bump=6):
    """Small random finitely presented graded module (even degrees)."""
    ngens = rng.randrange(1, max_gens + 1)
    gen_degrees = sorted(rng.randrange(0, max_gen_degree // 2 + 1) * 2
                         for _ in range(ngens))
    module = PresentedModule.free(ring_, gen_degrees)
    nrels = rng.randrange(0, max_rels + 1)
    rels = []
    amb = module.ambient()
    for _ in range(nrels):
        rel_degree = max(gen_degrees) + rng.randrange(1, max_rel_degree_bump // 2 + 1) * 2
        comps = [random_polynomial(rng, ring_, rel_degree - g) for g in gen_degrees]
        el = amb.element(comps)
        if el:
            rels.append(el)
    return PresentedModule(ring_, gen_degrees, rels)


def seeded(seed):
    return random.Random(seed)
