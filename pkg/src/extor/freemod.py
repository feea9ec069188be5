"""Graded free modules and the Groebner/syzygy engine.

Free-module elements are tuples of polynomials indexed by generator slot.
The term order is position-over-term (lower slot wins) with weighted
degrevlex inside a slot; all engine input must be homogeneous for the total
grading deg(monomial) + slot degree.  Reduced Groebner bases are unique for
this order, so everything downstream is deterministic.

Syzygies are computed from the graph-module trick: the reduced basis of
{(g_i, e_i)} in F (+) S^r, with the F-slots dominating, simultaneously
yields a basis of the submodule, membership certificates, and generators of
the syzygy module of the inputs.
"""

import heapq

from .poly import (
    Polynomial,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_key,
    monomial_lcm,
    monomial_mul,
)
from .rational import ONE, Rational

DEFAULT_ORDER = "degrevlex-pot"


class FreeModule:
    """Free graded module with fixed generator degrees."""

    __slots__ = ("ring", "gen_degrees")

    def __init__(self, ring, gen_degrees):
        self.ring = ring
        self.gen_degrees = tuple(int(d) for d in gen_degrees)

    @property
    def rank(self):
        return len(self.gen_degrees)

    def __eq__(self, other):
        return (isinstance(other, FreeModule) and self.ring == other.ring
                and self.gen_degrees == other.gen_degrees)

    def __hash__(self):
        return hash((self.ring, self.gen_degrees))

    def __repr__(self):
        return f"FreeModule({self.ring!r}, degrees={self.gen_degrees})"

    def zero(self):
        return FreeElement(self, tuple(self.ring.zero() for _ in self.gen_degrees))

    def element(self, comps):
        comps = tuple(comps)
        if len(comps) != self.rank:
            raise ValueError("component count does not match rank")
        return FreeElement(self, comps)

    def gen(self, slot, poly=None):
        comps = [self.ring.zero()] * self.rank
        comps[slot] = self.ring.one() if poly is None else poly
        return FreeElement(self, tuple(comps))

    def term_key(self, term):
        slot, mon = term
        return (-slot, monomial_key(mon, self.ring.degrees))

    def term_degree(self, term):
        slot, mon = term
        return monomial_degree(mon, self.ring.degrees) + self.gen_degrees[slot]


class FreeElement:
    """Element of a free module; components are polynomials."""

    __slots__ = ("module", "comps")

    def __init__(self, module, comps):
        self.module = module
        self.comps = tuple(comps)

    def __bool__(self):
        return any(self.comps)

    def __eq__(self, other):
        return (isinstance(other, FreeElement) and self.module == other.module
                and self.comps == other.comps)

    def __hash__(self):
        return hash((self.module, self.comps))

    def __add__(self, other):
        return FreeElement(self.module,
                           tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return FreeElement(self.module,
                           tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __neg__(self):
        return FreeElement(self.module, tuple(-a for a in self.comps))

    def scale(self, c):
        return FreeElement(self.module, tuple(a.scale(c) for a in self.comps))

    def mul_poly(self, p):
        return FreeElement(self.module, tuple(a * p for a in self.comps))

    def to_terms(self):
        out = {}
        for slot, comp in enumerate(self.comps):
            for mon, c in comp.terms.items():
                out[(slot, mon)] = c
        return out

    @classmethod
    def from_terms(cls, module, terms):
        comps = [dict() for _ in range(module.rank)]
        for (slot, mon), c in terms.items():
            if c:
                comps[slot][mon] = c
        ring = module.ring
        return cls(module, tuple(Polynomial(ring, d) for d in comps))

    def is_homogeneous(self):
        degs = set()
        for slot, comp in enumerate(self.comps):
            for mon in comp.terms:
                degs.add(self.module.term_degree((slot, mon)))
        return len(degs) <= 1

    def degree(self):
        degs = set()
        for slot, comp in enumerate(self.comps):
            for mon in comp.terms:
                degs.add(self.module.term_degree((slot, mon)))
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop()

    def leading_term(self):
        terms = self.to_terms()
        if not terms:
            return None
        return max(terms, key=self.module.term_key)

    def __repr__(self):
        bits = [f"({c})*e{i}" for i, c in enumerate(self.comps) if c]
        return " + ".join(bits) if bits else "0"


class GroebnerBasis:
    """Reduced Groebner basis of a homogeneous submodule; remembers inputs."""

    __slots__ = ("module", "elements", "input_gens", "order", "_leads", "_graph")

    def __init__(self, module, elements, input_gens, order=DEFAULT_ORDER):
        self.module = module
        self.elements = tuple(elements)
        self.input_gens = tuple(input_gens)
        self.order = order
        self._leads = tuple(e.leading_term() for e in self.elements)
        self._graph = None

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leads(self):
        return self._leads

    def leads_by_slot(self):
        out = {}
        for slot, mon in self._leads:
            out.setdefault(slot, []).append(mon)
        return out

    def contains(self, element):
        return not normal_form(element, self)


def _s_pair_data(module, terms_i, lead_i, terms_j, lead_j):
    slot_i, mon_i = lead_i
    slot_j, mon_j = lead_j
    if slot_i != slot_j:
        return None
    lcm = monomial_lcm(mon_i, mon_j)
    return lcm


def _reduce_terms(terms, leads, basis_terms, module, record=None):
    """Fully reduce a term-dict against the basis; mutates and returns it."""
    key = module.term_key
    done = {}
    while terms:
        t = max(terms, key=key)
        c = terms.pop(t)
        slot, mon = t
        hit = -1
        for idx, (lslot, lmon) in enumerate(leads):
            if lslot == slot and monomial_divides(lmon, mon):
                hit = idx
                break
        if hit < 0:
            done[t] = c
            continue
        lslot, lmon = leads[hit]
        shift = monomial_div(mon, lmon)
        bterms = basis_terms[hit]
        factor = c / bterms[(lslot, lmon)]
        if record is not None:
            record.append((hit, shift, factor))
        for (bslot, bmon), bc in bterms.items():
            if bslot == slot and bmon == lmon:
                continue
            tt = (bslot, monomial_mul(bmon, shift))
            cur = terms.get(tt)
            val = -factor * bc if cur is None else cur - factor * bc
            if val:
                terms[tt] = val
            elif tt in terms:
                del terms[tt]
    return done


def normal_form(element, gb):
    """Unique fully reduced remainder of element against gb."""
    if element.module != gb.module:
        raise ValueError("element not in the ambient module of the basis")
    basis_terms = [e.to_terms() for e in gb.elements]
    reduced = _reduce_terms(element.to_terms(), list(gb.leads()), basis_terms,
                            gb.module)
    return FreeElement.from_terms(gb.module, reduced)


def buchberger(gens, order=DEFAULT_ORDER):
    """Reduced Groebner basis of the submodule generated by gens."""
    if order != DEFAULT_ORDER:
        raise ValueError(f"unsupported order {order!r}")
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator required to fix the ambient module")
    module = gens[0].module
    for g in gens:
        if g.module != module:
            raise ValueError("generators live in different modules")
        if not g.is_homogeneous():
            raise ValueError("inhomogeneous input rejected")
    elements = _buchberger_core([g for g in gens if g], module)
    return GroebnerBasis(module, elements, gens, order)


def _buchberger_core(gens, module):
    key = module.term_key
    rank1 = module.rank == 1
    basis = []       # list of term-dicts
    leads = []       # list of (slot, mon)
    lead_coeffs = []

    def add_element(terms):
        lt = max(terms, key=key)
        lc = terms[lt]
        if lc != ONE:
            inv = ONE / lc
            terms = {t: c * inv for t, c in terms.items()}
        basis.append(terms)
        leads.append(lt)
        lead_coeffs.append(ONE)
        return len(basis) - 1

    pairs = []
    processed = set()

    def push_pairs(new_idx):
        slot_n, mon_n = leads[new_idx]
        for i in range(new_idx):
            slot_i, mon_i = leads[i]
            if slot_i != slot_n:
                continue
            lcm = monomial_lcm(mon_i, mon_n)
            deg = monomial_degree(lcm, module.ring.degrees)
            heapq.heappush(pairs, (deg, i, new_idx, lcm))

    for g in gens:
        terms = g.to_terms()
        reduced = _reduce_terms(terms, leads, basis, module)
        if reduced:
            idx = add_element(reduced)
            push_pairs(idx)

    while pairs:
        deg, i, j, lcm = heapq.heappop(pairs)
        processed.add((i, j))
        slot, mon_i = leads[i]
        mon_j = leads[j][1]
        if rank1 and monomial_mul(mon_i, mon_j) == lcm:
            continue  # product criterion (valid in ambient rank 1 only)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            kslot, kmon = leads[k]
            if kslot == slot and monomial_divides(kmon, lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in processed and pjk in processed:
                    skip = True
                    break
        if skip:
            continue
        shift_i = monomial_div(lcm, mon_i)
        shift_j = monomial_div(lcm, mon_j)
        s_terms = {}
        for (bslot, bmon), c in basis[i].items():
            s_terms[(bslot, monomial_mul(bmon, shift_i))] = c
        for (bslot, bmon), c in basis[j].items():
            t = (bslot, monomial_mul(bmon, shift_j))
            cur = s_terms.get(t)
            val = -c if cur is None else cur - c
            if val:
                s_terms[t] = val
            elif t in s_terms:
                del s_terms[t]
        reduced = _reduce_terms(s_terms, leads, basis, module)
        if reduced:
            idx = add_element(reduced)
            push_pairs(idx)

    # Inter-reduce to the unique reduced basis.
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            if basis[i] is None:
                continue
            other_leads = [leads[k] for k in range(len(basis))
                           if k != i and basis[k] is not None]
            other_terms = [basis[k] for k in range(len(basis))
                           if k != i and basis[k] is not None]
            reduced = _reduce_terms(dict(basis[i]), other_leads, other_terms, module)
            if not reduced:
                basis[i] = None
                changed = True
                continue
            if reduced != basis[i]:
                lt = max(reduced, key=key)
                lc = reduced[lt]
                if lc != ONE:
                    inv = ONE / lc
                    reduced = {t: c * inv for t, c in reduced.items()}
                basis[i] = reduced
                leads[i] = lt
                changed = True

    final = [b for b in basis if b]
    final.sort(key=lambda terms: key(max(terms, key=key)), reverse=True)
    return [FreeElement.from_terms(module, terms) for terms in final]


def _graph_basis(gb):
    """Reduced basis of {(g_i, e_i)} in F (+) S^r; cached on the gb."""
    if gb._graph is None:
        module = gb.module
        gens = gb.input_gens
        degs = []
        for g in gens:
            d = g.degree()
            degs.append(0 if d is None else d)
        aug = FreeModule(module.ring, module.gen_degrees + tuple(degs))
        rank = module.rank
        aug_gens = []
        for i, g in enumerate(gens):
            comps = list(g.comps) + [module.ring.zero()] * len(gens)
            comps[rank + i] = module.ring.one()
            aug_gens.append(FreeElement(aug, tuple(comps)))
        elements = _buchberger_core(aug_gens, aug)
        gb._graph = (aug, elements)
    return gb._graph


def syzygies(gb):
    """Generators of the syzygy module of gb.input_gens (columns)."""
    aug, elements = _graph_basis(gb)
    module = gb.module
    rank = module.rank
    gens = gb.input_gens
    syz_module = FreeModule(module.ring, aug.gen_degrees[rank:])
    out = []
    for el in elements:
        if any(el.comps[:rank]):
            continue
        out.append(FreeElement(syz_module, el.comps[rank:]))
    return out


def express(element, gb):
    """Coefficients a with element = sum a_i * input_gens[i], or None."""
    aug, elements = _graph_basis(gb)
    module = gb.module
    rank = module.rank
    comps = list(element.comps) + [module.ring.zero()] * len(gb.input_gens)
    lifted = FreeElement(aug, tuple(comps))
    leads = [e.leading_term() for e in elements]
    basis_terms = [e.to_terms() for e in elements]
    # Reduce only the F-part: stop when no F-slot term is reducible.  Because
    # the F-slots dominate the order, the standard full reduction does this.
    reduced = _reduce_terms(lifted.to_terms(), leads, basis_terms, aug)
    if any(slot < rank for (slot, _mon) in reduced):
        return None
    coeffs = [dict() for _ in gb.input_gens]
    for (slot, mon), c in reduced.items():
        coeffs[slot - rank][mon] = -c
    return [Polynomial(module.ring, d) for d in coeffs]


def ideal_groebner(polys):
    """Groebner basis of an ideal, as a rank-1 module computation."""
    polys = [p for p in polys if p]
    if not polys:
        raise ValueError("empty ideal needs an ambient ring; pass the zero ideal explicitly")
    ring = polys[0].ring
    module = FreeModule(ring, (0,))
    return buchberger([module.element([p]) for p in polys])


def staircase_caps(gb):
    """Per-variable pure-power caps of the lead ideal, None when absent."""
    ring = gb.module.ring
    caps = [None] * ring.ngens
    for slot, mon in gb.leads():
        nz = [(i, e) for i, e in enumerate(mon) if e]
        if len(nz) == 1:
            i, e = nz[0]
            if caps[i] is None or e < caps[i]:
                caps[i] = e
    return caps


def quotient_finite_dimension(ideal_gens, ring=None):
    """dim_Q of the quotient by a homogeneous ideal, or None when infinite.

    Finiteness criterion: every ring generator has a pure power among the
    lead-term multiples of the Groebner basis.
    """
    polys = [p for p in ideal_gens if p]
    if ring is None:
        if not polys:
            raise ValueError("ring required for the zero ideal")
        ring = polys[0].ring
    if not polys:
        return None if ring.ngens else 1
    for p in polys:
        if not p.is_homogeneous():
            raise ValueError("inhomogeneous ideal generator")
    gb = ideal_groebner(polys)
    caps = staircase_caps(gb)
    if any(c is None for c in caps):
        return None
    return len(staircase_monomials(gb))


def staircase_monomials(gb):
    """All standard monomials of a finite-colength ideal, sorted by
    (degree, degrevlex)."""
    ring = gb.module.ring
    caps = staircase_caps(gb)
    if any(c is None for c in caps):
        raise ValueError("quotient is not finite dimensional")
    leads = [mon for _slot, mon in gb.leads()]
    out = []

    def rec(i, prefix):
        if i == ring.ngens:
            mon = tuple(prefix)
            if not any(monomial_divides(l, mon) for l in leads):
                out.append(mon)
            return
        for e in range(caps[i]):
            rec(i + 1, prefix + [e])

    rec(0, [])
    out.sort(key=lambda m: (monomial_degree(m, ring.degrees),
                            monomial_key(m, ring.degrees)))
    return out
