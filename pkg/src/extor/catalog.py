"""Reference data: rational cohomology rings of connected compact Lie groups
and standard subgroup inclusions.

Catalog values are data, not trusted facts: every inclusion is Venkov-checked
at load time, and the test suite certifies each entry three ways (Venkov
finiteness, Gorenstein shift = codimension, freeness iff equal rank).
Orthogonal groups beyond SO(2) are deliberately left out (Euler/Pontryagin
conventions vary); the unitary/symplectic/exceptional families cover both the
equal-rank and unequal-rank regimes.
"""

import json

from .freemod import ideal_groebner, staircase_caps
from .poly import GradedPolyRing, RingMap

__all__ = ["GroupEntry", "InclusionEntry", "builtin_catalog", "load_catalog",
           "Catalog"]


class GroupEntry:
    __slots__ = ("name", "ring", "dim", "rank")

    def __init__(self, name, ring, dim):
        self.name = name
        self.ring = ring
        self.dim = int(dim)
        self.rank = ring.ngens
        if self.dim < 0:
            raise ValueError(f"{name}: negative dimension")
        if any(d % 2 for d in ring.degrees):
            raise ValueError(f"{name}: odd generator degree")

    def to_json(self):
        return {
            "name": self.name,
            "dim": self.dim,
            "generators": [{"name": n, "degree": d}
                           for n, d in zip(self.ring.names, self.ring.degrees)],
        }

    def __repr__(self):
        return f"GroupEntry({self.name}, dim={self.dim}, rank={self.rank})"


class InclusionEntry:
    __slots__ = ("big", "small", "theta", "codim")

    def __init__(self, big, small, theta):
        self.big = big
        self.small = small
        self.theta = theta
        self.codim = big.dim - small.dim
        if self.codim < 0:
            raise ValueError(f"{small.name} inside {big.name}: negative codimension")

    @property
    def name(self):
        return f"{self.big.name}>{self.small.name}"

    def venkov_finite(self):
        images = [img for img in self.theta.images if img]
        if not images:
            return self.small.ring.ngens == 0
        gb = ideal_groebner(images)
        return all(c is not None for c in staircase_caps(gb))

    def to_json(self):
        return {
            "big": self.big.name,
            "small": self.small.name,
            "images": {n: str(img)
                       for n, img in zip(self.big.ring.names, self.theta.images)},
        }

    def __repr__(self):
        return f"InclusionEntry({self.name}, codim={self.codim})"


class Catalog:
    def __init__(self, groups, inclusions):
        self.groups = {g.name: g for g in groups}
        self.inclusions = {inc.name: inc for inc in inclusions}

    def group(self, name):
        if name not in self.groups:
            raise KeyError(f"unknown group {name!r}")
        return self.groups[name]

    def inclusion(self, name):
        if name not in self.inclusions:
            raise KeyError(f"unknown inclusion {name!r}")
        return self.inclusions[name]

    def to_json(self):
        return {
            "groups": [g.to_json() for g in self.groups.values()],
            "inclusions": [inc.to_json() for inc in self.inclusions.values()],
        }


def load_catalog(source):
    """Load and validate a catalog from a path, JSON text, or dict."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if "\n" not in str(source) and not str(source).lstrip().startswith("{"):
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    groups = []
    for g in doc.get("groups", []):
        ring = GradedPolyRing([(spec["name"], spec["degree"])
                               for spec in g.get("generators", [])])
        groups.append(GroupEntry(g["name"], ring, g["dim"]))
    by_name = {g.name: g for g in groups}
    inclusions = []
    problems = []
    for spec in doc.get("inclusions", []):
        big = by_name[spec["big"]]
        small = by_name[spec["small"]]
        theta = RingMap.from_strings(big.ring, small.ring, spec["images"])
        inc = InclusionEntry(big, small, theta)
        if not inc.venkov_finite():
            problems.append(f"{inc.name}: Venkov finiteness fails")
            continue
        inclusions.append(inc)
    if problems:
        raise ValueError("catalog rejected entries: " + "; ".join(problems))
    return Catalog(groups, inclusions)


def builtin_catalog():
    """The shipped groups and standard inclusions."""
    doc = {
        "groups": [
            {"name": "1", "dim": 0, "generators": []},
            {"name": "SO(2)", "dim": 1, "generators": [{"name": "c", "degree": 2}]},
            {"name": "T^1", "dim": 1, "generators": [{"name": "t", "degree": 2}]},
            {"name": "T^2", "dim": 2, "generators": [
                {"name": "t1", "degree": 2}, {"name": "t2", "degree": 2}]},
            {"name": "T^3", "dim": 3, "generators": [
                {"name": "t1", "degree": 2}, {"name": "t2", "degree": 2},
                {"name": "t3", "degree": 2}]},
            {"name": "U(1)", "dim": 1, "generators": [{"name": "c1", "degree": 2}]},
            {"name": "U(2)", "dim": 4, "generators": [
                {"name": "c1", "degree": 2}, {"name": "c2", "degree": 4}]},
            {"name": "U(3)", "dim": 9, "generators": [
                {"name": "c1", "degree": 2}, {"name": "c2", "degree": 4},
                {"name": "c3", "degree": 6}]},
            {"name": "SU(2)", "dim": 3, "generators": [{"name": "c2", "degree": 4}]},
            {"name": "SU(3)", "dim": 8, "generators": [
                {"name": "c2", "degree": 4}, {"name": "c3", "degree": 6}]},
            {"name": "Sp(1)", "dim": 3, "generators": [{"name": "q1", "degree": 4}]},
            {"name": "Sp(2)", "dim": 10, "generators": [
                {"name": "q1", "degree": 4}, {"name": "q2", "degree": 8}]},
            {"name": "Sp(3)", "dim": 21, "generators": [
                {"name": "q1", "degree": 4}, {"name": "q2", "degree": 8},
                {"name": "q3", "degree": 12}]},
            {"name": "G2", "dim": 14, "generators": [
                {"name": "y4", "degree": 4}, {"name": "y12", "degree": 12}]},
        ],
        "inclusions": [
            # the paper's motivating example: H*BSO(2) -> H*B1
            {"big": "SO(2)", "small": "1", "images": {"c": "0"}},
            # coordinate torus inclusions
            {"big": "T^2", "small": "T^1", "images": {"t1": "t", "t2": "0"}},
            {"big": "T^3", "small": "T^2", "images": {"t1": "t1", "t2": "t2", "t3": "0"}},
            {"big": "T^3", "small": "T^1", "images": {"t1": "t", "t2": "0", "t3": "0"}},
            # U(1) is the circle in its Chern-class presentation
            {"big": "U(1)", "small": "T^1", "images": {"c1": "t"}},
            # maximal tori: Chern classes restrict to elementary symmetrics
            {"big": "U(2)", "small": "T^2",
             "images": {"c1": "t1 + t2", "c2": "t1*t2"}},
            {"big": "U(3)", "small": "T^3",
             "images": {"c1": "t1 + t2 + t3",
                        "c2": "t1*t2 + t1*t3 + t2*t3",
                        "c3": "t1*t2*t3"}},
            # torus of SU(2): diag(z, z^-1), so c2 -> -t^2
            {"big": "SU(2)", "small": "T^1", "images": {"c2": "-t^2"}},
            # torus of SU(3): weights t1, t2, -t1-t2
            {"big": "SU(3)", "small": "T^2",
             "images": {"c2": "-t1^2 - t1*t2 - t2^2",
                        "c3": "-t1^2*t2 - t1*t2^2"}},
            # T^1 in SU(3) via diag(z, z^-1, 1) (composite of the two above)
            {"big": "SU(3)", "small": "T^1", "images": {"c2": "-t^2", "c3": "0"}},
            # block and determinant-one inclusions
            {"big": "SU(3)", "small": "SU(2)", "images": {"c2": "c2", "c3": "0"}},
            {"big": "U(2)", "small": "SU(2)", "images": {"c1": "0", "c2": "c2"}},
            {"big": "U(2)", "small": "U(1)", "images": {"c1": "c1", "c2": "0"}},
            {"big": "U(3)", "small": "U(2)", "images": {"c1": "c1", "c2": "c2", "c3": "0"}},
            # symplectic blocks
            {"big": "Sp(2)", "small": "Sp(1)", "images": {"q1": "q1", "q2": "0"}},
            {"big": "Sp(3)", "small": "Sp(2)", "images": {"q1": "q1", "q2": "q2", "q3": "0"}},
            # Sp(1) = SU(2) identification, both presentations
            {"big": "Sp(1)", "small": "SU(2)", "images": {"q1": "c2"}},
            {"big": "SU(2)", "small": "Sp(1)", "images": {"c2": "q1"}},
        ],
    }
    return load_catalog(doc)
