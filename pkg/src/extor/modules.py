"""Finitely presented graded modules and the underived change-of-rings
functors: shift, extension / restriction of scalars, Hom, tensor, torsion
submodule, Hilbert series and the freeness test.

Internal grading is cohomological with positive generator degrees for rings;
the homological conventions of the suspension grading live in
`extor.homological`.  Every functor returns a presentation minimized by
graded Nakayama pruning, so equality checks are meaningful.
"""

from .freemod import (
    FreeElement,
    FreeModule,
    buchberger,
    express,
    ideal_groebner,
    normal_form,
    staircase_caps,
    staircase_monomials,
    syzygies,
)
from .linalg import RatMatrix, kernel_basis
from .poly import Polynomial, monomial_divides, monomial_mul
from .rational import ONE, Rational

__all__ = [
    "DegreeWindow",
    "HilbertData",
    "ModuleHom",
    "PresentedModule",
    "RestrictionData",
    "extend_scalars",
    "hilbert_series",
    "hom_modules",
    "is_free",
    "restrict_scalars",
    "shift",
    "tensor_modules",
    "torsion_submodule",
]


class DegreeWindow:
    """Closed range of internal degrees."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValueError("window lo must not exceed hi")
        self.lo = lo
        self.hi = hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, d):
        return self.lo <= d <= self.hi

    def __eq__(self, other):
        return isinstance(other, DegreeWindow) and (self.lo, self.hi) == (other.lo, other.hi)

    def __repr__(self):
        return f"DegreeWindow({self.lo}, {self.hi})"

    @property
    def width(self):
        return self.hi - self.lo


class HilbertData:
    """Per-degree dimensions on a window, optionally with a closed form.

    The closed form is a Laurent-polynomial numerator (dict exponent -> int)
    over prod(1 - z^{deg x_i}).
    """

    __slots__ = ("window", "dims", "numerator", "denominator_degrees")

    def __init__(self, window, dims, numerator=None, denominator_degrees=None):
        self.window = window
        self.dims = {d: int(v) for d, v in dims.items() if v}
        if any(v < 0 for v in self.dims.values()):
            raise ValueError("negative dimension")
        self.numerator = dict(numerator) if numerator is not None else None
        self.denominator_degrees = (tuple(denominator_degrees)
                                    if denominator_degrees is not None else None)

    def dim(self, d):
        return self.dims.get(d, 0)

    def as_list(self):
        return [self.dim(d) for d in self.window]

    def __eq__(self, other):
        return (isinstance(other, HilbertData) and self.window == other.window
                and self.dims == other.dims)

    def __repr__(self):
        return f"HilbertData({self.window!r}, {self.dims})"

    def closed_form_expansion(self):
        if self.numerator is None:
            return None
        return expand_closed_form(self.numerator, self.denominator_degrees,
                                  self.window.lo, self.window.hi)


def expand_closed_form(numerator, denominator_degrees, lo, hi):
    """Expand numerator / prod(1 - z^d) as dims on [lo, hi]."""
    if not numerator:
        return {}
    floor = min(numerator)
    series = {e: c for e, c in numerator.items()}
    for d in denominator_degrees:
        out = {}
        for e in sorted(series):
            c = series[e]
            if not c:
                continue
            k = e
            while k <= hi:
                out[k] = out.get(k, 0) + c
                k += d
        series = out
    return {d: series.get(d, 0) for d in range(lo, hi + 1) if series.get(d, 0)}


def series_equal(numer_a, degs_a, numer_b, degs_b):
    """Exact equality of two rational Hilbert series."""
    a = dict(numer_a)
    b = dict(numer_b)
    for d in degs_b:
        a = _laurent_mul_one_minus(a, d)
    for d in degs_a:
        b = _laurent_mul_one_minus(b, d)
    return a == b


def _laurent_mul_one_minus(poly, d):
    out = dict(poly)
    for e, c in poly.items():
        out[e + d] = out.get(e + d, 0) - c
    return {e: c for e, c in out.items() if c}


class LinearSpan:
    """Incremental row space of sparse rational vectors (dict col -> value)."""

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots = {}

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            lead = min(vec)
            row = self.pivots.get(lead)
            if row is None:
                return vec, lead
            factor = vec[lead]
            for c, v in row.items():
                cur = vec.get(c)
                val = -factor * v if cur is None else cur - factor * v
                if val:
                    vec[c] = val
                elif c in vec:
                    del vec[c]
        return vec, None

    def add(self, vec):
        """Insert vec; returns True when it enlarged the span."""
        vec, lead = self.reduce(vec)
        if lead is None:
            return False
        inv = ONE / vec[lead]
        self.pivots[lead] = {c: v * inv for c, v in vec.items()}
        return True

    def contains(self, vec):
        _, lead = self.reduce(vec)
        return lead is None

    @property
    def dim(self):
        return len(self.pivots)


class PresentedModule:
    """Graded module given by generator degrees and homogeneous relations."""

    __slots__ = ("ring", "gen_degrees", "relations", "_gb", "_pieces",
                 "_mult_cache", "_min", "_numerator", "_resolution", "extra")

    def __init__(self, ring, gen_degrees, relations=()):
        self.ring = ring
        self.gen_degrees = tuple(int(d) for d in gen_degrees)
        ambient = FreeModule(ring, self.gen_degrees)
        rels = []
        for rel in relations:
            if isinstance(rel, FreeElement):
                if rel.module.gen_degrees != self.gen_degrees or rel.module.ring != ring:
                    raise ValueError("relation ambient mismatch")
            else:
                rel = ambient.element(rel)
            if not rel.is_homogeneous():
                raise ValueError("relations must be homogeneous")
            if rel:
                rels.append(FreeElement(ambient, rel.comps))
        self.relations = tuple(rels)
        self._gb = None
        self._pieces = {}
        self._mult_cache = {}
        self._min = None
        self._numerator = None
        self._resolution = None
        self.extra = {}

    # -- constructors -------------------------------------------------------
    @classmethod
    def free(cls, ring, gen_degrees):
        return cls(ring, gen_degrees, ())

    @classmethod
    def zero(cls, ring):
        return cls(ring, (), ())

    @classmethod
    def quotient_ring(cls, ring, ideal_gens):
        ambient = FreeModule(ring, (0,))
        rels = [ambient.element([p]) for p in ideal_gens if p]
        return cls(ring, (0,), rels)

    # -- basics -------------------------------------------------------------
    @property
    def rank(self):
        return len(self.gen_degrees)

    def ambient(self):
        return FreeModule(self.ring, self.gen_degrees)

    def __eq__(self, other):
        return (isinstance(other, PresentedModule) and self.ring == other.ring
                and self.gen_degrees == other.gen_degrees
                and self.relations == other.relations)

    def __hash__(self):
        return hash((self.ring, self.gen_degrees, self.relations))

    def __repr__(self):
        return (f"PresentedModule(gens={self.gen_degrees}, "
                f"{len(self.relations)} relations over {self.ring!r})")

    def relation_gb(self):
        if self._gb is None and self.relations:
            self._gb = buchberger(list(self.relations))
        return self._gb

    def nf(self, element):
        gb = self.relation_gb()
        return element if gb is None else normal_form(element, gb)

    def is_zero_module(self):
        return self.minimize().rank == 0

    # -- graded pieces ------------------------------------------------------
    def _slot_leads(self):
        gb = self.relation_gb()
        out = {}
        if gb is not None:
            for slot, mon in gb.leads():
                out.setdefault(slot, []).append(mon)
        return out

    def piece_basis(self, d):
        """Standard monomial basis (slot, monomial) of the degree-d piece."""
        got = self._pieces.get(d)
        if got is not None:
            return got
        leads = self._slot_leads()
        basis = []
        for slot, gdeg in enumerate(self.gen_degrees):
            slot_leads = leads.get(slot, ())
            for mon in self.ring.monomials_of_degree(d - gdeg):
                if not any(monomial_divides(l, mon) for l in slot_leads):
                    basis.append((slot, mon))
        self._pieces[d] = basis
        return basis

    def piece_dim(self, d):
        return len(self.piece_basis(d))

    def vector_of(self, element, d):
        """Coordinates of a degree-d element in the piece basis (reduces first)."""
        reduced = self.nf(element)
        index = {t: i for i, t in enumerate(self.piece_basis(d))}
        vec = {}
        for slot, comp in enumerate(reduced.comps):
            for mon, c in comp.terms.items():
                vec[index[(slot, mon)]] = c
        return vec

    def mult_matrix(self, poly, d):
        """Matrix of multiplication by poly: piece(d) -> piece(d + deg poly)."""
        key = (poly, d)
        got = self._mult_cache.get(key)
        if got is not None:
            return got
        if not poly:
            m = RatMatrix.zero(0, self.piece_dim(d))
            self._mult_cache[key] = m
            return m
        target = d + poly.degree()
        src = self.piece_basis(d)
        tgt_index = {t: i for i, t in enumerate(self.piece_basis(target))}
        ambient = self.ambient()
        entries = {}
        for col, (slot, mon) in enumerate(src):
            el = ambient.gen(slot, poly.mul_monomial(mon))
            reduced = self.nf(el)
            for rslot, comp in enumerate(reduced.comps):
                for rmon, c in comp.terms.items():
                    entries[(tgt_index[(rslot, rmon)], col)] = c
        m = RatMatrix(len(tgt_index), len(src), entries)
        self._mult_cache[key] = m
        return m

    # -- minimization -------------------------------------------------------
    def minimize(self):
        """Minimal presentation: no unit relation entries, relations minimal."""
        if self._min is not None:
            return self._min
        gen_degrees = list(self.gen_degrees)
        rels = [list(r.comps) for r in self.relations]

        # Graded Nakayama pruning: a constant entry makes its generator
        # redundant; substitute and drop.
        while True:
            hit = None
            for ri, comps in enumerate(rels):
                for slot, p in enumerate(comps):
                    c = p.constant_coefficient()
                    if c:
                        hit = (ri, slot, c)
                        break
                if hit:
                    break
            if hit is None:
                break
            ri, slot, c = hit
            pivot = rels.pop(ri)
            inv = ONE / c
            # e_slot = -inv * sum_{j != slot} pivot_j e_j  (+ higher terms of
            # pivot_slot beyond the constant, folded in the same way)
            rest = list(pivot)
            rest[slot] = pivot[slot] - self.ring.one().scale(c)
            for comps in rels:
                factor = comps[slot]
                if not factor:
                    continue
                scaled = factor.scale(inv)
                for j in range(len(comps)):
                    comps[j] = comps[j] - scaled * rest[j]
                comps[slot] = self.ring.zero()
            for comps in rels:
                del comps[slot]
            del gen_degrees[slot]

        ambient = FreeModule(self.ring, tuple(gen_degrees))
        candidates = [ambient.element(c) for c in rels]
        candidates = [c for c in candidates if c]
        candidates.sort(key=lambda e: e.degree())
        kept = []
        for cand in candidates:
            if not kept:
                kept.append(cand)
                continue
            gb = buchberger(kept)
            if normal_form(cand, gb):
                kept.append(cand)
        result = PresentedModule(self.ring, tuple(gen_degrees), kept)
        result._min = result
        self._min = result
        return result

    # -- Hilbert series ------------------------------------------------------
    def hilbert_numerator(self):
        """Closed-form numerator over prod(1 - z^{deg x_i}).

        Depends only on the lead-term module of the relations, computed by
        the standard colon recursion on monomial ideals.
        """
        if self._numerator is None:
            leads = self._slot_leads()
            total = {}
            for slot, gdeg in enumerate(self.gen_degrees):
                numer = _monomial_ideal_numerator(
                    tuple(sorted(leads.get(slot, ()))), self.ring)
                for e, c in numer.items():
                    key = e + gdeg
                    total[key] = total.get(key, 0) + c
            self._numerator = {e: c for e, c in total.items() if c}
        return self._numerator


def _minimalize_monomials(mons):
    mons = sorted(set(mons))
    out = []
    for m in mons:
        if not any(monomial_divides(o, m) for o in out):
            out.append(m)
    return tuple(out)


_NUMER_CACHE = {}


def _monomial_ideal_numerator(mons, ring):
    """Numerator of HS(S / (mons)) over prod(1 - z^{d_i})."""
    mons = _minimalize_monomials(mons)
    key = (ring.degrees, mons)
    got = _NUMER_CACHE.get(key)
    if got is not None:
        return got
    if not mons:
        result = {0: 1}
    elif any(not any(m) for m in mons):
        result = {}
    else:
        rest = mons[:-1]
        m = mons[-1]
        base = _monomial_ideal_numerator(rest, ring)
        colon = _minimalize_monomials(
            tuple(tuple(max(e - f, 0) for e, f in zip(u, m)) for u in rest))
        sub = _monomial_ideal_numerator(colon, ring)
        mdeg = ring.monomial_degree(m)
        result = dict(base)
        for e, c in sub.items():
            k = e + mdeg
            result[k] = result.get(k, 0) - c
        result = {e: c for e, c in result.items() if c}
    _NUMER_CACHE[key] = result
    return result


def hilbert_series(module, window, closed_form=False):
    """Exact per-degree dimensions; optionally with the closed form."""
    dims = {d: module.piece_dim(d) for d in window}
    if closed_form:
        return HilbertData(window, dims, module.hilbert_numerator(),
                           module.ring.degrees)
    return HilbertData(window, dims)


# -- functors ----------------------------------------------------------------

def shift(module, a):
    """Total-suspension shift: dims at total degree s become dims of the
    input at s - a; internally piece(d) of the output is piece(d + a)."""
    out = PresentedModule(module.ring,
                          tuple(g - a for g in module.gen_degrees),
                          [r.comps for r in module.relations])
    return out


def extend_scalars(theta, module):
    """R (x)_S M along theta: S -> R; applies theta to the presentation."""
    if module.ring != theta.source:
        raise ValueError("module is not over the source of the ring map")
    rels = [[theta.apply(p) for p in r.comps] for r in module.relations]
    return PresentedModule(theta.target, module.gen_degrees, rels).minimize()


def is_free(module):
    """(True, basis degrees) when the minimal presentation has no relations."""
    m = module.minimize()
    if m.relations:
        return False, None
    return True, tuple(sorted(m.gen_degrees))


class RestrictionData:
    """Staircase bookkeeping attached to a restricted-scalars presentation."""

    __slots__ = ("theta", "base", "staircase", "ir_gb", "_decompose_cache")

    def __init__(self, theta, base, staircase, ir_gb):
        self.theta = theta
        self.base = base
        self.staircase = staircase
        self.ir_gb = ir_gb
        self._decompose_cache = {}

    def decompose(self, r_poly):
        """Write r = sum theta(s_u) * b_u exactly; returns {u: s_u in S}."""
        out = {}
        for mon, c in r_poly.terms.items():
            for u, s in self._decompose_monomial(mon).items():
                cur = out.get(u)
                out[u] = s.scale(c) if cur is None else cur + s.scale(c)
        return {u: s for u, s in out.items() if s}

    def _decompose_monomial(self, mon):
        got = self._decompose_cache.get(mon)
        if got is not None:
            return got
        R = self.theta.target
        S = self.theta.source
        poly = R.monomial(mon)
        if self.ir_gb is None:
            remainder = poly
            quotients = []
        else:
            amb = self.ir_gb.module
            nf = normal_form(amb.element([poly]), self.ir_gb)
            remainder = nf.comps[0]
            diff = amb.element([poly - remainder])
            coeffs = express(diff, self.ir_gb)
            quotients = coeffs if coeffs is not None else []
        index = {b: u for u, b in enumerate(self.staircase)}
        out = {}
        for bmon, c in remainder.terms.items():
            u = index[bmon]
            cur = out.get(u)
            add = S.one().scale(c)
            out[u] = add if cur is None else cur + add
        # nonzero generator images only; ir_gb inputs are theta images of the
        # positive-degree generators of S that survive
        if quotients:
            for q, (i, xi) in zip(quotients, self._ir_sources()):
                if not q:
                    continue
                for qmon, qc in q.terms.items():
                    sub = self._decompose_monomial(qmon)
                    for u, s in sub.items():
                        add = (s * S.gen(S.names[i])).scale(qc)
                        cur = out.get(u)
                        out[u] = add if cur is None else cur + add
        out = {u: s for u, s in out.items() if s}
        self._decompose_cache[mon] = out
        return out

    def _ir_sources(self):
        return [(i, img) for i, img in enumerate(self.theta.images) if img]

    def coordinates(self, element, module):
        """Coordinates in the restricted presentation of an element of the
        base module's ambient free module."""
        S = self.theta.source
        nb = len(self.staircase)
        comps = [S.zero()] * (len(self.base.gen_degrees) * nb)
        for j, r_poly in enumerate(element.comps):
            if not r_poly:
                continue
            for u, s in self.decompose(r_poly).items():
                idx = j * nb + u
                comps[idx] = comps[idx] + s
        return FreeModule(S, module.gen_degrees).element(comps)


def restrict_scalars(theta, module, max_extra_degrees=None):
    """S-presentation of an R-module along theta: S -> R (Venkov-finite).

    Generators are staircase-basis monomials of R over S times the module
    generators; relations are collected degree by degree and certified
    complete by exact equality of closed-form Hilbert series.
    """
    if module.ring != theta.target:
        raise ValueError("module is not over the target of the ring map")
    S = theta.source
    R = theta.target
    ir = [img for img in theta.images if img]
    if ir:
        ir_gb = ideal_groebner(ir)
        if any(c is None for c in staircase_caps(ir_gb)):
            raise ValueError("not finitely generated: Venkov test fails")
        stairs = staircase_monomials(ir_gb)
    else:
        if R.ngens:
            raise ValueError("not finitely generated: Venkov test fails")
        ir_gb = None
        stairs = [()]

    nb = len(stairs)
    stair_degs = [R.monomial_degree(b) for b in stairs]
    gen_degrees = []
    for g in module.gen_degrees:
        for bd in stair_degs:
            gen_degrees.append(bd + g)
    gen_degrees = tuple(gen_degrees)
    ambient = FreeModule(S, gen_degrees)
    data = RestrictionData(theta, module, stairs, ir_gb)

    if not gen_degrees:
        out = PresentedModule.zero(S)
        out.extra["restriction"] = data
        return out

    mod_numer = module.hilbert_numerator()
    r_ambient = module.ambient()

    relations = []
    rel_gb = None
    rel_piece_cache = {}

    def relation_rows(d):
        """Spanning vectors of the degree-d piece of <relations> in ambient."""
        rows = rel_piece_cache.get(d)
        if rows is None:
            rows = []
            if rel_gb is not None:
                index = None
                for el in rel_gb.elements:
                    eldeg = el.degree()
                    for mon in S.monomials_of_degree(d - eldeg):
                        if index is None:
                            index = {t: i for i, t in enumerate(_free_piece(ambient, d))}
                        vec = {}
                        for slot, comp in enumerate(el.comps):
                            for emon, c in comp.terms.items():
                                vec[index[(slot, monomial_mul(emon, mon))]] = c
                        rows.append(vec)
            rel_piece_cache[d] = rows
        return rows

    dmin = min(gen_degrees)
    depth = max(gen_degrees) + 2 * max([2] + list(S.degrees))
    if max_extra_degrees is not None:
        depth = dmin + max_extra_degrees
    d = dmin
    while True:
        while d <= depth:
            free_piece = _free_piece(ambient, d)
            if free_piece:
                index = {t: i for i, t in enumerate(free_piece)}
                target_basis = module.piece_basis(d)
                tindex = {t: i for i, t in enumerate(target_basis)}
                entries = {}
                for col, (slot, smon) in enumerate(free_piece):
                    j, u = divmod(slot, nb)
                    rpoly = theta.apply(S.monomial(smon)) * R.monomial(stairs[u])
                    el = module.nf(r_ambient.gen(j, rpoly))
                    for rslot, comp in enumerate(el.comps):
                        for rmon, c in comp.terms.items():
                            entries[(tindex[(rslot, rmon)], col)] = c
                mat = RatMatrix(len(target_basis), len(free_piece), entries)
                kern = kernel_basis(mat)
                if kern:
                    span = LinearSpan()
                    for row in relation_rows(d):
                        span.add(row)
                    added = False
                    for vec in kern:
                        sparse = {i: v for i, v in enumerate(vec) if v}
                        if span.add(dict(sparse)):
                            comps = [dict() for _ in gen_degrees]
                            for i, v in sparse.items():
                                slot, smon = free_piece[i]
                                comps[slot][smon] = v
                            relations.append(ambient.element(
                                [Polynomial(S, t) for t in comps]))
                            added = True
                    if added:
                        rel_gb = buchberger(relations)
                        rel_piece_cache.clear()
            d += 1
        candidate = PresentedModule(S, gen_degrees, relations)
        if series_equal(candidate.hilbert_numerator(), S.degrees,
                        mod_numer, R.degrees):
            break
        depth += max(S.degrees)
        if max_extra_degrees is not None and depth > dmin + 10 * (max_extra_degrees + 1):
            raise RuntimeError("restriction presentation did not certify")
    out = PresentedModule(S, gen_degrees, relations).minimize()
    # keep the uncollapsed presentation too: its generators are literally
    # basis x module-generators, which RestrictionData.coordinates targets.
    raw = PresentedModule(S, gen_degrees, relations)
    out.extra["restriction"] = data
    out.extra["restriction_raw"] = raw
    raw.extra["restriction"] = data
    return out


def _free_piece(ambient, d):
    out = []
    for slot, gdeg in enumerate(ambient.gen_degrees):
        for mon in ambient.ring.monomials_of_degree(d - gdeg):
            out.append((slot, mon))
    return out


def direct_sum(modules):
    mods = list(modules)
    if not mods:
        raise ValueError("empty direct sum needs a ring")
    ring = mods[0].ring
    gen_degrees = []
    offsets = []
    for m in mods:
        offsets.append(len(gen_degrees))
        gen_degrees.extend(m.gen_degrees)
    ambient = FreeModule(ring, tuple(gen_degrees))
    rels = []
    for off, m in zip(offsets, mods):
        for r in m.relations:
            comps = [ring.zero()] * len(gen_degrees)
            for i, p in enumerate(r.comps):
                comps[off + i] = p
            rels.append(ambient.element(comps))
    return PresentedModule(ring, tuple(gen_degrees), rels), offsets


class ModuleHom:
    """Homogeneous module map given by generator images (degree shift delta)."""

    __slots__ = ("source", "target", "images", "delta")

    def __init__(self, source, target, images, delta=0):
        if source.ring != target.ring:
            raise ValueError("source and target over different rings")
        images = tuple(images)
        if len(images) != source.rank:
            raise ValueError("one image per source generator required")
        tamb = target.ambient()
        fixed = []
        for g, img in zip(source.gen_degrees, images):
            if img.module != tamb:
                raise ValueError("image in wrong ambient module")
            if img:
                if img.degree() != g + delta:
                    raise ValueError("image degree mismatch")
            fixed.append(img)
        self.source = source
        self.target = target
        self.images = tuple(fixed)
        self.delta = delta

    def is_well_defined(self):
        tamb = self.target.ambient()
        for rel in self.source.relations:
            acc = tamb.zero()
            for p, img in zip(rel.comps, self.images):
                if p:
                    acc = acc + img.mul_poly(p)
            if self.target.nf(acc):
                return False
        return True

    def apply(self, element):
        tamb = self.target.ambient()
        acc = tamb.zero()
        for p, img in zip(element.comps, self.images):
            if p:
                acc = acc + img.mul_poly(p)
        return acc

    def kernel_gens(self):
        """Generators (in the source ambient) of the kernel submodule."""
        gens = [img for img in self.images]
        tail = list(self.target.relations)
        nonzero = [(i, g) for i, g in enumerate(gens) if g]
        if not nonzero and not tail:
            samb = self.source.ambient()
            return [samb.gen(i) for i in range(self.source.rank)] + \
                list(self.source.relations)
        all_gens = [g for _i, g in nonzero] + tail
        gb = buchberger(all_gens)
        cols = syzygies(gb)
        samb = self.source.ambient()
        out = list(self.source.relations)
        live = [i for i, _g in nonzero]
        zero_slots = [i for i, g in enumerate(self.images) if not g]
        for i in zero_slots:
            out.append(samb.gen(i))
        for col in cols:
            comps = [self.source.ring.zero()] * self.source.rank
            for k, i in enumerate(live):
                comps[i] = col.comps[k]
            el = samb.element(comps)
            if el:
                out.append(el)
        return out

    def kernel_module(self):
        gens = self.kernel_gens()
        return subquotient(self.source, gens)

    def cokernel(self):
        rels = list(self.target.relations) + [img for img in self.images if img]
        return PresentedModule(self.target.ring, self.target.gen_degrees,
                               rels).minimize()

    def is_surjective(self):
        return self.cokernel().rank == 0

    def is_injective(self):
        src_rels = list(self.source.relations)
        gb = buchberger(src_rels) if src_rels else None
        for g in self.kernel_gens():
            reduced = g if gb is None else normal_form(g, gb)
            if reduced:
                return False
        return True

    def is_isomorphism(self):
        return self.is_well_defined() and self.is_surjective() and self.is_injective()


class Subquotient:
    """Presentation of (<gens> + K)/K inside a presented module."""

    __slots__ = ("base", "gens", "module", "_gb_all")

    def __init__(self, base, gens, module, gb_all):
        self.base = base
        self.gens = gens
        self.module = module
        self._gb_all = gb_all

    def express(self, element):
        """Coordinates of an ambient element in the subquotient generators."""
        if self._gb_all is None:
            return None
        coeffs = express(element, self._gb_all)
        if coeffs is None:
            return None
        ring = self.base.ring
        samb = FreeModule(ring, self.module.gen_degrees)
        return samb.element(coeffs[:len(self.gens)])


def subquotient(base, gens):
    """Present the submodule of `base` generated by `gens` (ambient elements)."""
    ring = base.ring
    reduced = []
    for g in gens:
        r = base.nf(g)
        if r:
            reduced.append(r)
    reduced.sort(key=lambda e: (e.degree(), repr(e)))
    kept = []
    for cand in reduced:
        pool = kept + list(base.relations)
        if pool:
            gb = buchberger(pool)
            if not normal_form(cand, gb):
                continue
        kept.append(cand)
    if not kept:
        return Subquotient(base, [], PresentedModule.zero(ring), None)
    gdegs = tuple(g.degree() for g in kept)
    combined = kept + list(base.relations)
    gb_all = buchberger(combined)
    cols = syzygies(gb_all)
    amb = FreeModule(ring, gdegs)
    rels = []
    for col in cols:
        comps = col.comps[:len(kept)]
        el = amb.element(comps)
        if el:
            rels.append(el)
    module = PresentedModule(ring, gdegs, rels)
    return Subquotient(base, kept, module, gb_all)


def hom_modules(m, n, window=None):
    """Hom_S(M, N) as a presented module (degree-homogeneous maps)."""
    if m.ring != n.ring:
        raise ValueError("modules over different rings")
    hom_cover, _ = direct_sum([shift(n, g) for g in m.gen_degrees]) \
        if m.rank else (PresentedModule.zero(m.ring), [])
    if not m.relations or m.rank == 0:
        return hom_cover.minimize()
    rel_degrees = [r.degree() for r in m.relations]
    hom_rels, _ = direct_sum([shift(n, rd) for rd in rel_degrees])
    tamb = hom_rels.ambient()
    nrank = n.rank
    images = []
    for j in range(m.rank):
        for k in range(nrank):
            comps = [m.ring.zero()] * hom_rels.rank
            for l, rel in enumerate(m.relations):
                p = rel.comps[j]
                if p:
                    comps[l * nrank + k] = p
            images.append(tamb.element(comps))
    phi = ModuleHom(hom_cover, hom_rels, images)
    return phi.kernel_module().module.minimize()


def tensor_modules(m, n):
    """M (x)_S N as a presented module."""
    if m.ring != n.ring:
        raise ValueError("modules over different rings")
    ring = m.ring
    gen_degrees = []
    for gi in m.gen_degrees:
        for hj in n.gen_degrees:
            gen_degrees.append(gi + hj)
    amb = FreeModule(ring, tuple(gen_degrees))
    rels = []
    nrank = n.rank
    for rel in m.relations:
        for j in range(nrank):
            comps = [ring.zero()] * len(gen_degrees)
            for i, p in enumerate(rel.comps):
                comps[i * nrank + j] = p
            rels.append(amb.element(comps))
    for i in range(m.rank):
        for rel in n.relations:
            comps = [ring.zero()] * len(gen_degrees)
            for j, p in enumerate(rel.comps):
                comps[i * nrank + j] = p
            rels.append(amb.element(comps))
    return PresentedModule(ring, tuple(gen_degrees), rels).minimize()


def colon_submodule(base, subgens, ideal_gens):
    """Generators of {f in F : x*f in <subgens> for all x in ideal_gens}."""
    ring = base.ring
    amb = base.ambient()
    ideal = [p for p in ideal_gens if p]
    if base.rank == 0:
        return []
    if not ideal:
        return [amb.gen(i) for i in range(base.rank)]
    n = len(ideal)
    rank = base.rank
    # block i carries F twisted by -deg(x_i) so f |-> (x_i f)_i is degree 0
    big = FreeModule(ring, tuple(
        amb.gen_degrees[s] - ideal[i].degree()
        for i in range(n) for s in range(rank)))

    gens = []
    # columns for the f-slots: f = e_s maps to (x_i * e_s)_i
    f_degs = []
    for s in range(rank):
        comps = [ring.zero()] * (n * rank)
        for i, x in enumerate(ideal):
            comps[i * rank + s] = x
        gens.append(big.element(comps))
        f_degs.append(amb.gen_degrees[s])
    # columns for the subgens in each block
    for i in range(n):
        for g in subgens:
            comps = [ring.zero()] * (n * rank)
            for s, p in enumerate(g.comps):
                comps[i * rank + s] = p
            gens.append(big.element(comps))
    gb = buchberger(gens)
    cols = syzygies(gb)
    out = []
    for col in cols:
        comps = col.comps[:rank]
        el = amb.element(comps)
        if el:
            out.append(el)
    return out


def same_submodule(base, gens_a, gens_b):
    """Mutual inclusion of two submodules of the same ambient."""
    list_a = [g for g in gens_a if g]
    list_b = [g for g in gens_b if g]
    if not list_a or not list_b:
        return not list_a and not list_b
    gb_a = buchberger(list_a)
    gb_b = buchberger(list_b)
    return gb_a.elements == gb_b.elements


def torsion_submodule(module, ideal_gens):
    """I-power torsion submodule as a presented module (colon chain)."""
    for p in ideal_gens:
        if p and not p.is_homogeneous():
            raise ValueError("inhomogeneous ideal generator")
    current = list(module.relations)
    while True:
        nxt = colon_submodule(module, current, ideal_gens)
        if same_submodule(module, current + nxt, current):
            break
        current = current + [g for g in nxt]
    sq = subquotient(module, current)
    return sq.module.minimize()


def modules_equal(a, b):
    """Equality of two presentations with the same ambient module."""
    if a.ring != b.ring or a.gen_degrees != b.gen_degrees:
        return False
    return same_submodule(a, list(a.relations), list(b.relations))
