"""Formal 2-categorical rewriting: pasting terms, mates, and bounded
bidirectional equality search.

A pasting term is a vertical composite of layers; each layer is one
generator 2-cell at a horizontal position inside the current functor string
(whiskering on both sides is implicit in the position).  Interchange of
layers acting on disjoint positions is a strict 2-category identity, so
terms are always kept in a canonical interchange normal form (greedy
lexicographically-least commutation representative); the rewrite rules that
remain are the triangle identities, declared axioms, inverse-pair
cancellations and their reversals.

Soundness: every "equal" verdict carries a trace whose replay transforms the
left term into the right term syntactically.  The search is incomplete by
design (bounded depth, bounded frontier).
"""

from collections import deque

__all__ = [
    "Cell",
    "MatesError",
    "PastingTerm",
    "RewriteRule",
    "Signature",
    "appendix_a_signature",
    "builtin_corpus",
    "builtin_signature",
    "canonical",
    "comparestrong_signature",
    "corpus_names",
    "decide_equal",
    "decide_from_json",
    "enumerate_cells",
    "load_signature",
    "mate",
    "replay_trace",
    "two_adjunction_signature",
    "verify_corpus",
]


class MatesError(ValueError):
    pass


class Cell:
    __slots__ = ("name", "dom", "cod", "cat", "invertible")

    def __init__(self, name, dom, cod, cat=None, invertible=False):
        self.name = name
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.cat = cat
        self.invertible = invertible

    def __repr__(self):
        return f"Cell({self.name}: {list(self.dom)} => {list(self.cod)})"


class Signature:
    """Categories, functors, adjunctions, generator 2-cells and axioms."""

    def __init__(self):
        self.categories = set()
        self.functors = {}
        self.cells = {}
        self.adjunctions = []
        self.axioms = []  # list of (name, lhs Term, rhs Term)

    # -- declarations -----------------------------------------------------
    def add_category(self, name):
        self.categories.add(name)

    def add_functor(self, name, source, target):
        if source not in self.categories or target not in self.categories:
            raise MatesError(f"functor {name}: undeclared category")
        if name in self.functors:
            raise MatesError(f"duplicate functor {name}")
        self.functors[name] = (source, target)

    def add_object(self, name, category):
        """An object is a functor from the reserved point category."""
        self.add_category("pt")
        self.add_functor(name, "pt", category)

    def string_ok(self, string):
        for f in string:
            if f not in self.functors:
                return False
        for i in range(len(string) - 1):
            if self.functors[string[i]][0] != self.functors[string[i + 1]][1]:
                return False
        return True

    def _endpoints(self, string, cat):
        if not string:
            if cat is None:
                raise MatesError("empty functor string needs a category")
            return cat, cat
        src = self.functors[string[-1]][0]
        dst = self.functors[string[0]][1]
        return src, dst

    def add_cell(self, name, dom, cod, cat=None, invertible=False):
        dom, cod = tuple(dom), tuple(cod)
        if not self.string_ok(dom) or not self.string_ok(cod):
            raise MatesError(f"cell {name}: boundary does not type-check")
        if self._endpoints(dom, cat) != self._endpoints(cod, cat):
            raise MatesError(f"cell {name}: dom and cod endpoints differ")
        if name in self.cells:
            raise MatesError(f"duplicate cell {name}")
        cell = Cell(name, dom, cod, cat, invertible)
        self.cells[name] = cell
        if invertible:
            inv = Cell(_inv_name(name), cod, dom, cat, invertible=True)
            self.cells[inv.name] = inv
            t_vw = PastingTerm(self, dom, ((0, name), (0, inv.name)))
            t_wv = PastingTerm(self, cod, ((0, inv.name), (0, name)))
            self.axioms.append((f"{name}-cancel", t_vw,
                                PastingTerm(self, dom, ())))
            self.axioms.append((f"{name}-cancel'", t_wv,
                                PastingTerm(self, cod, ())))
        return cell

    def add_adjunction(self, left, right, unit=None, counit=None):
        """left -| right; declares unit/counit and the triangle identities."""
        if left not in self.functors or right not in self.functors:
            raise MatesError("adjunction of undeclared functors")
        lsrc, ldst = self.functors[left]
        rsrc, rdst = self.functors[right]
        if (lsrc, ldst) != (rdst, rsrc):
            raise MatesError("adjunction endpoints do not match")
        unit = unit or f"eta_{left}"
        counit = counit or f"eps_{left}"
        self.add_cell(unit, (), (right, left), cat=lsrc)
        self.add_cell(counit, (left, right), (), cat=ldst)
        self.adjunctions.append((left, right, unit, counit))
        # (eps left) . (left eta) = id_left
        t1 = PastingTerm(self, (left,), ((1, unit), (0, counit)))
        self.axioms.append((f"triangle-{left}", t1,
                            PastingTerm(self, (left,), ())))
        # (right eps) . (eta right) = id_right
        t2 = PastingTerm(self, (right,), ((0, unit), (1, counit)))
        self.axioms.append((f"triangle-{right}", t2,
                            PastingTerm(self, (right,), ())))

    def add_axiom(self, name, lhs, rhs):
        if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
            raise MatesError(f"axiom {name}: boundaries disagree")
        self.axioms.append((name, lhs, rhs))

    def adjunction_for(self, left):
        for adj in self.adjunctions:
            if adj[0] == left:
                return adj
        raise MatesError(f"no adjunction with left adjoint {left}")

    # -- terms --------------------------------------------------------------
    def term(self, dom, ops, cat=None):
        return PastingTerm(self, dom, tuple(ops), cat)

    def identity(self, string, cat=None):
        return PastingTerm(self, tuple(string), (), cat)

    def term_from_layers(self, layers, dom=None, cat=None):
        """Layers as {'left': [...], 'cell': name, 'right': [...]}."""
        ops = []
        cur = None if dom is None else tuple(dom)
        for layer in layers:
            cell = self.cells.get(layer["cell"])
            if cell is None:
                raise MatesError(f"unknown cell {layer['cell']!r}")
            left = tuple(layer.get("left", ()))
            right = tuple(layer.get("right", ()))
            boundary = left + cell.dom + right
            if cur is None:
                cur = boundary
            elif cur != boundary:
                raise MatesError(
                    f"layer {layer['cell']}: boundary {boundary} does not "
                    f"match {cur}")
            ops.append((len(left), cell.name))
            cur = left + cell.cod + right
        if cur is None:
            raise MatesError("empty layer list needs an explicit dom")
        dom0 = tuple(dom) if dom is not None else \
            (tuple(layers[0].get("left", ())) +
             self.cells[layers[0]["cell"]].dom +
             tuple(layers[0].get("right", ())))
        return PastingTerm(self, dom0, tuple(ops), cat)


def _inv_name(name):
    return name[:-4] if name.endswith("^-1") else f"{name}^-1"


class PastingTerm:
    """Vertical composite of positioned generator cells."""

    __slots__ = ("sig", "dom", "ops", "cat", "_cod")

    def __init__(self, sig, dom, ops, cat=None):
        self.sig = sig
        self.dom = tuple(dom)
        self.ops = tuple(ops)
        self.cat = cat
        self._cod = None
        self._validate()

    def _validate(self):
        if not self.sig.string_ok(self.dom):
            raise MatesError(f"dom does not type-check: {self.dom}")
        cur = self.dom
        for pos, name in self.ops:
            cell = self.sig.cells.get(name)
            if cell is None:
                raise MatesError(f"unknown cell {name!r}")
            if pos < 0 or pos + len(cell.dom) > len(cur):
                raise MatesError(f"cell {name} out of range at {pos}")
            if cur[pos:pos + len(cell.dom)] != cell.dom:
                raise MatesError(
                    f"cell {name} does not match the string at {pos}")
            if not cell.dom:
                gap = _gap_category(self.sig, cur, pos, self.cat)
                if gap is not None and cell.cat is not None and gap != cell.cat:
                    raise MatesError(
                        f"cell {name} inserted at a {gap} gap, needs {cell.cat}")
            cur = cur[:pos] + cell.cod + cur[pos + len(cell.dom):]
        self._cod = cur

    @property
    def cod(self):
        return self._cod

    def boundary_strings(self):
        out = [self.dom]
        cur = self.dom
        for pos, name in self.ops:
            cell = self.sig.cells[name]
            cur = cur[:pos] + cell.cod + cur[pos + len(cell.dom):]
            out.append(cur)
        return out

    def layers(self):
        out = []
        cur = self.dom
        for pos, name in self.ops:
            cell = self.sig.cells[name]
            out.append({"left": list(cur[:pos]), "cell": name,
                        "right": list(cur[pos + len(cell.dom):])})
            cur = cur[:pos] + cell.cod + cur[pos + len(cell.dom):]
        return out

    def key(self):
        return (self.dom, self.ops)

    def __eq__(self, other):
        return (isinstance(other, PastingTerm) and self.dom == other.dom
                and self.ops == other.ops)

    def __hash__(self):
        return hash((self.dom, self.ops))

    def __repr__(self):
        body = "; ".join(f"{name}@{pos}" for pos, name in self.ops)
        return f"PastingTerm({'.'.join(self.dom) or 'Id'}: {body or 'id'})"

    # -- construction ---------------------------------------------------------
    def whisker(self, left, right):
        left, right = tuple(left), tuple(right)
        return PastingTerm(self.sig, left + self.dom + right,
                           tuple((p + len(left), n) for p, n in self.ops),
                           self.cat)

    def then(self, other):
        if other.dom != self.cod:
            raise MatesError("vertical composition boundary mismatch")
        return PastingTerm(self.sig, self.dom, self.ops + other.ops, self.cat)


def _gap_category(sig, string, pos, fallback):
    if not string:
        return fallback
    if pos < len(string):
        return sig.functors[string[pos]][1]
    return sig.functors[string[-1]][0]


def _try_swap(sig, dom, ops, i):
    """Swap independent ops i, i+1; returns new ops tuple or None."""
    p1, n1 = ops[i]
    p2, n2 = ops[i + 1]
    c1 = sig.cells[n1]
    c2 = sig.cells[n2]
    d1, k1 = len(c1.dom), len(c1.cod)
    d2 = len(c2.dom)
    if p2 + d2 <= p1:
        # op2 acts strictly left of op1's block
        return ops[:i] + ((p2, n2), (p1 + len(c2.cod) - d2, n1)) + ops[i + 2:]
    if p2 >= p1 + k1:
        return ops[:i] + ((p2 - k1 + d1, n2), (p1, n1)) + ops[i + 2:]
    return None


def canonical(term):
    """Greedy interchange normal form (lex-least movable op first)."""
    sig = term.sig
    dom = term.dom
    ops = list(term.ops)
    out = []
    while ops:
        # find ops that can bubble to the front, tracking their front position
        best = None
        for j in range(len(ops)):
            work = tuple(ops)
            ok = True
            for k in range(j, 0, -1):
                swapped = _try_swap(sig, dom, work, k - 1)
                if swapped is None:
                    ok = False
                    break
                work = swapped
            if ok:
                cand_key = (work[0][0], work[0][1])
                if best is None or cand_key < best[0]:
                    best = (cand_key, work)
        front = best[1][0]
        out.append(front)
        cell = sig.cells[front[1]]
        dom = dom[:front[0]] + cell.cod + dom[front[0] + len(cell.dom):]
        # recompute the remainder relative to the new dom
        ops = list(best[1][1:])
    return PastingTerm(term.sig, term.dom, tuple(out), term.cat)


class RewriteRule:
    """Oriented rewrite lhs -> rhs (both whisker-closed patterns)."""

    __slots__ = ("name", "lhs", "rhs", "origin")

    def __init__(self, name, lhs, rhs, origin="user-axiom"):
        if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
            raise MatesError(f"rule {name}: boundaries disagree")
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.origin = origin

    def __repr__(self):
        return f"RewriteRule({self.name})"


def _rules_from_axioms(axioms):
    rules = []
    for name, lhs, rhs in axioms:
        rules.append(RewriteRule(f"{name}", lhs, rhs))
        rules.append(RewriteRule(f"{name}~", rhs, lhs))
    return rules


def _rule_category(side, sig):
    if side.cat is not None:
        return side.cat
    if side.dom:
        return _gap_category(sig, side.dom, 0, None)
    for _pos, name in side.ops:
        return sig.cells[name].cat
    return None


def _window_dom_ok(sig, dom, ops, anchor, rule, offset, term_cat):
    cur = dom
    for pos, name in ops[:anchor]:
        cell = sig.cells[name]
        cur = cur[:pos] + cell.cod + cur[pos + len(cell.dom):]
    ldom = rule.lhs.dom
    if offset < 0 or offset + len(ldom) > len(cur):
        return False
    if cur[offset:offset + len(ldom)] != ldom:
        return False
    if not ldom:
        gap = _gap_category(sig, cur, offset, term_cat)
        ref = _rule_category(rule.lhs, sig) or _rule_category(rule.rhs, sig)
        if gap is not None and ref is not None and gap != ref:
            return False
    return True


def _replace_window(term, ops, anchor, m, rule, offset):
    if not _window_dom_ok(term.sig, term.dom, ops, anchor, rule, offset,
                          term.cat):
        return None
    new_ops = (tuple(ops[:anchor])
               + tuple((p + offset, n) for p, n in rule.rhs.ops)
               + tuple(ops[anchor + m:]))
    return PastingTerm(term.sig, term.dom, new_ops, term.cat)


def _bubble_left(sig, dom, ops, j, target):
    """Move ops[j] leftward to index `target` by interchange swaps."""
    ops = tuple(ops)
    while j > target:
        swapped = _try_swap(sig, dom, ops, j - 1)
        if swapped is None:
            return None
        ops = swapped
        j -= 1
    return ops


def _bubble_right(sig, dom, ops, i, target):
    """Move ops[i] rightward to index `target` by interchange swaps."""
    ops = tuple(ops)
    while i < target:
        swapped = _try_swap(sig, dom, ops, i)
        if swapped is None:
            return None
        ops = swapped
        i += 1
    return ops


def _match_attempts(term, rule):
    """All one-step applications of rule; yields (new term, detail)."""
    sig = term.sig
    dom = term.dom
    nops = len(term.ops)
    lhs_ops = rule.lhs.ops
    m = len(lhs_ops)
    if m == 0:
        strings = term.boundary_strings()
        width = len(rule.lhs.dom)
        for gap in range(nops + 1):
            s = strings[gap]
            for offset in range(len(s) - width + 1):
                new = _replace_window(term, term.ops, gap, 0, rule, offset)
                if new is not None:
                    yield new, (gap, offset)
        return
    if m == 1:
        rpos, rname = lhs_ops[0]
        for i in range(nops):
            tpos, tname = term.ops[i]
            if tname != rname:
                continue
            offset = tpos - rpos
            new = _replace_window(term, term.ops, i, 1, rule, offset)
            if new is not None:
                yield new, (i, offset)
        return
    if m == 2:
        (q1, n1), (q2, n2) = lhs_ops
        for i in range(nops):
            for j in range(i + 1, nops):
                a_name = term.ops[i][1]
                b_name = term.ops[j][1]
                straight = (a_name == n1 and b_name == n2)
                crossed = (a_name == n2 and b_name == n1)
                if not straight and not crossed:
                    continue
                for ops2, k in ((_bubble_left(sig, dom, term.ops, j, i + 1), i),
                                (_bubble_right(sig, dom, term.ops, i, j - 1),
                                 j - 1)):
                    if ops2 is None:
                        continue
                    windows = [ops2]
                    swapped = _try_swap(sig, dom, ops2, k)
                    if swapped is not None:
                        windows.append(swapped)
                    for ops3 in windows:
                        p1, m1 = ops3[k]
                        p2, m2 = ops3[k + 1]
                        if m1 != n1 or m2 != n2:
                            continue
                        offset = p1 - q1
                        if p2 != q2 + offset:
                            continue
                        new = _replace_window(term, ops3, k, 2, rule, offset)
                        if new is not None:
                            yield new, (i, j, offset)
        return
    # general case: anchor at the first lhs op, gather the rest leftward
    for anchor in range(nops):
        tpos, tname = term.ops[anchor]
        if tname != lhs_ops[0][1]:
            continue
        offset = tpos - lhs_ops[0][0]
        ops = tuple(term.ops)
        cursor = anchor
        ok = True
        for k in range(1, m):
            expect = (lhs_ops[k][0] + offset, lhs_ops[k][1])
            found = False
            for j in range(cursor + 1, len(ops)):
                trial = _bubble_left(sig, dom, ops, j, cursor + 1)
                if trial is not None and trial[cursor + 1] == expect:
                    ops = trial
                    cursor += 1
                    found = True
                    break
            if not found:
                ok = False
                break
        if not ok:
            continue
        new = _replace_window(term, ops, anchor, m, rule, offset)
        if new is not None:
            yield new, (anchor, offset)


def _successors(term, rules):
    """All (new term, step) pairs reachable by one rewrite (pre-canonical)."""
    out = []
    seen = set()
    for rule in rules:
        for new, detail in _match_attempts(term, rule):
            key = (rule.name, new.ops)
            if key in seen:
                continue
            seen.add(key)
            out.append((new, (rule.name, detail)))
    return out


def _expand_level(frontier, visited, other_visited, rules, max_states):
    """Grow one BFS level; returns (next frontier, meeting key or None)."""
    nxt = deque()
    while frontier:
        node = frontier.popleft()
        path = visited[node.key()][1]
        for succ_raw, step in sorted(
                _successors(node, rules),
                key=lambda pair: (pair[0].key(), pair[1])):
            succ = canonical(succ_raw)
            key = succ.key()
            if key in visited:
                continue
            if len(visited) >= max_states:
                return deque(), None
            visited[key] = (succ, path + [(step, succ)])
            nxt.append(succ)
            if key in other_visited:
                return nxt, key
    return nxt, None


def _mini_path(src, dst, rules, max_depth=3):
    """Short all-forward path src -> dst; list of ((rule,gap,off), term)."""
    src = canonical(src)
    dst = canonical(dst)
    if src == dst:
        return []
    visited = {src.key(): []}
    frontier = deque([src])
    for _ in range(max_depth):
        nxt = deque()
        while frontier:
            node = frontier.popleft()
            path = visited[node.key()]
            for succ_raw, step in sorted(
                    _successors(node, rules),
                    key=lambda pair: (pair[0].key(), pair[1])):
                succ = canonical(succ_raw)
                key = succ.key()
                if key in visited:
                    continue
                visited[key] = path + [(step, succ)]
                if succ == dst:
                    return visited[key]
                nxt.append(succ)
        frontier = nxt
    return None


def decide_equal(t1, t2, depth=8, rules=None, extra_axioms=None,
                 max_states=60000):
    """Bounded bidirectional search; returns (verdict, trace_or_reason).

    verdict True: the trace is a list of (rule, gap, offset, term_key)
    steps, all forward-applicable starting from canonical(t1) and ending at
    canonical(t2); replay_trace re-runs it syntactically.  verdict False:
    not proved (boundary mismatches included).
    """
    sig = t1.sig
    if t2.sig is not sig and t2.sig != sig:
        raise MatesError("terms over different signatures")
    if t1.dom != t2.dom or t1.cod != t2.cod:
        return False, "boundary mismatch"
    if rules is None:
        rules = _rules_from_axioms(sig.axioms)
        if extra_axioms:
            rules = rules + _rules_from_axioms(extra_axioms)
    start = canonical(t1)
    goal = canonical(t2)
    if start == goal:
        return True, []
    sides = [
        {start.key(): (start, [])},
        {goal.key(): (goal, [])},
    ]
    frontiers = [deque([start]), deque([goal])]
    budgets = [(depth + 1) // 2, depth // 2]
    level = [0, 0]
    meeting = None
    while meeting is None:
        can0 = level[0] < budgets[0] and frontiers[0]
        can1 = level[1] < budgets[1] and frontiers[1]
        if not can0 and not can1:
            return False, "not proved within depth"
        if can0 and (not can1 or len(frontiers[0]) <= len(frontiers[1])):
            side = 0
        else:
            side = 1
        level[side] += 1
        frontiers[side], meeting = _expand_level(
            frontiers[side], sides[side], sides[1 - side], rules, max_states)
    path_a = sides[0][meeting][1]
    path_b = sides[1][meeting][1]
    # convert the goal-side path (goal -> meeting) into forward steps
    # (meeting -> goal) by inverting one recorded step at a time
    steps = [(step[0], step[1], term.key()) for step, term in path_a]
    chain = [goal] + [term for _step, term in path_b]
    cur = chain[-1]
    for i in range(len(chain) - 2, -1, -1):
        seg = _mini_path(cur, chain[i], rules)
        if seg is None:
            # all-forward fallback: the meet proves reachability, so a
            # one-sided search within the same total depth recovers a
            # replayable trace
            uni = _unidirectional(start, goal, rules, depth, max_states)
            if uni is None:
                return False, "trace reversal failed (incomplete search)"
            return True, uni
        steps.extend((s[0], s[1], term.key()) for s, term in seg)
        cur = chain[i]
    return True, steps


def _unidirectional(start, goal, rules, depth, max_states):
    visited = {start.key(): (start, [])}
    frontier = deque([start])
    anchor = {goal.key(): (goal, [])}
    for _ in range(depth):
        frontier, meeting = _expand_level(frontier, visited, anchor, rules,
                                          max_states)
        if meeting is not None:
            return [(step[0], step[1], term.key())
                    for step, term in visited[meeting][1]]
        if not frontier:
            return None
    return None


def replay_trace(t1, t2, trace, rules=None, extra_axioms=None):
    """Re-run a decide_equal trace syntactically from t1; must reach t2."""
    sig = t1.sig
    if rules is None:
        rules = _rules_from_axioms(sig.axioms)
        if extra_axioms:
            rules = rules + _rules_from_axioms(extra_axioms)
    by_name = {r.name: r for r in rules}
    cur = canonical(t1)
    for rule_name, detail, expected_key in trace:
        rule = by_name[rule_name]
        applied = None
        fallback = None
        for cand, cand_detail in _match_attempts(cur, rule):
            c = canonical(cand)
            if c.key() == expected_key:
                if cand_detail == detail:
                    applied = c
                    break
                if fallback is None:
                    fallback = c
        applied = applied or fallback
        if applied is None:
            raise MatesError(
                f"trace step {rule_name}{detail} does not reproduce")
        cur = applied
    if cur != canonical(t2):
        raise MatesError("trace replay did not reach the target term")
    return True


# -- mates ---------------------------------------------------------------------

def mate(term, sig=None, direction=None):
    """The mate of a 2-cell across two adjunctions.

    For alpha: (F_H, L) => (L', F_G) the mate is
    (U_H L' eps_G) . (U_H alpha U_G) . (eta_H L U_G); for
    beta: (L, U_G) => (U_H, L') it is
    (eps_H L' F_G) . (F_H beta F_G) . (F_H L eta_G).  The handedness is
    inferred from the boundary: the domain starts with a left adjoint in the
    first case and ends with a right adjoint in the second.
    """
    sig = sig or term.sig
    dom, cod = term.dom, term.cod
    if not dom or not cod:
        raise MatesError("mate needs a nonempty boundary")
    lefts = {adj[0]: adj for adj in sig.adjunctions}
    rights = {adj[1]: adj for adj in sig.adjunctions}
    if direction is None:
        direction = "forward" if dom[0] in lefts else "reverse"
    if direction == "forward":
        # alpha: (F_H,) + L_string => Lp_string + (F_G,)
        if dom[0] not in lefts or cod[-1] not in lefts:
            raise MatesError("boundary does not match the mate square")
        f_h, u_h, eta_h, _ = lefts[dom[0]]
        f_g, u_g, _, eps_g = lefts[cod[-1]]
        l_string = dom[1:]
        lp_string = cod[:-1]
        top = PastingTerm(sig, l_string + (u_g,), ((0, eta_h),))
        middle = term.whisker((u_h,), (u_g,))
        bottom = PastingTerm(sig, (u_h,) + lp_string + (f_g, u_g),
                             ((1 + len(lp_string), eps_g),))
        return top.then(middle).then(bottom)
    # beta: L_string + (U_G,) => (U_H,) + Lp_string
    if dom[-1] not in rights or cod[0] not in rights:
        raise MatesError("boundary does not match the mate square")
    f_g, u_g, eta_g, _ = rights[dom[-1]]
    f_h, u_h, _, eps_h = rights[cod[0]]
    l_string = dom[:-1]
    lp_string = cod[1:]
    top = PastingTerm(sig, (f_h,) + l_string, ((1 + len(l_string), eta_g),))
    middle = term.whisker((f_h,), (f_g,))
    bottom = PastingTerm(sig, (f_h, u_h) + lp_string + (f_g,), ((0, eps_h),))
    return top.then(middle).then(bottom)


# -- builtin signatures and corpora ---------------------------------------------

def two_adjunction_signature(invertible=False, with_beta=False):
    """The section-4 square: F_G -| U_G, F_H -| U_H, L, L', alpha."""
    sig = Signature()
    for c in ("CG", "DG", "CH", "DH"):
        sig.add_category(c)
    sig.add_functor("FG", "CG", "DG")
    sig.add_functor("UG", "DG", "CG")
    sig.add_functor("FH", "CH", "DH")
    sig.add_functor("UH", "DH", "CH")
    sig.add_functor("L", "CG", "CH")
    sig.add_functor("Lp", "DG", "DH")
    sig.add_adjunction("FG", "UG")
    sig.add_adjunction("FH", "UH")
    sig.add_cell("alpha", ("FH", "L"), ("Lp", "FG"), invertible=invertible)
    if with_beta:
        sig.add_cell("beta", ("L", "UG"), ("UH", "Lp"), invertible=invertible)
    if invertible:
        # adjoint equivalences: units and counits invertible
        for base in ("eta_FG", "eps_FG", "eta_FH", "eps_FH"):
            cell = sig.cells[base]
            inv = Cell(_inv_name(base), cell.cod, cell.dom, cell.cat, True)
            sig.cells[inv.name] = inv
            sig.axioms.append((f"{base}-cancel",
                               PastingTerm(sig, cell.dom,
                                           ((0, base), (0, inv.name))),
                               PastingTerm(sig, cell.dom, (), cell.cat)))
            sig.axioms.append((f"{base}-cancel'",
                               PastingTerm(sig, cell.cod,
                                           ((0, inv.name), (0, base))),
                               PastingTerm(sig, cell.cod, (), cell.cat)))
    return sig


def comparestrong_signature():
    """Monoid-action bookkeeping for restriction along a strong monoidal
    adjunction: both squares of the proposition."""
    sig = Signature()
    for c in ("C", "D", "pt"):
        sig.add_category(c)
    sig.add_functor("U", "D", "C")
    sig.add_functor("F", "C", "D")
    sig.add_functor("PS", "C", "C")      # S (x) -
    sig.add_functor("PR", "C", "C")      # R (x) -
    sig.add_functor("PUFS", "C", "C")    # UFS (x) -
    sig.add_functor("PUFR", "C", "C")    # UFR (x) -
    sig.add_functor("QS", "D", "D")      # FS (x) -
    sig.add_functor("QR", "D", "D")      # FR (x) -
    sig.add_functor("N", "pt", "D")      # an FR-module object
    sig.add_functor("M", "pt", "C")      # an R-module object
    sig.add_cell("t_theta", ("PS",), ("PR",))          # theta (x) 1
    sig.add_cell("t_phi", ("QS",), ("QR",))            # F(theta) (x) 1
    sig.add_cell("t_uftheta", ("PUFS",), ("PUFR",))    # UF(theta) (x) 1
    sig.add_cell("e_S", ("PS",), ("PUFS",))            # eta_S (x) 1
    sig.add_cell("e_R", ("PR",), ("PUFR",))            # eta_R (x) 1
    sig.add_cell("Phi_S", ("PUFS", "U"), ("U", "QS"))  # lax structure of U
    sig.add_cell("Phi_R", ("PUFR", "U"), ("U", "QR"))
    sig.add_cell("PhiF_S", ("QS", "F"), ("F", "PS"))   # strong structure of F
    sig.add_cell("PhiF_R", ("QR", "F"), ("F", "PR"))
    sig.add_cell("a_N", ("QR", "N"), ("N",))
    sig.add_cell("a_M", ("PR", "M"), ("M",))
    # naturality of eta at theta (objectwise, declared)
    sig.add_axiom(
        "eta-nat-theta",
        sig.term(("PS",), ((0, "t_theta"), (0, "e_R"))),
        sig.term(("PS",), ((0, "e_S"), (0, "t_uftheta"))))
    # naturality of Phi in the monoid argument
    sig.add_axiom(
        "Phi-nat-theta",
        sig.term(("PUFS", "U"), ((0, "t_uftheta"), (0, "Phi_R"))),
        sig.term(("PUFS", "U"), ((0, "Phi_S"), (1, "t_phi"))))
    sig.add_axiom(
        "PhiF-nat-theta",
        sig.term(("QS", "F"), ((0, "t_phi"), (0, "PhiF_R"))),
        sig.term(("QS", "F"), ((0, "PhiF_S"), (1, "t_theta"))))
    return sig


def appendix_a_signature():
    """Induced module structure through the projection formula: the
    generators and axioms used by the appendix proofs."""
    sig = Signature()
    for c in ("C", "D", "pt"):
        sig.add_category(c)
    sig.add_functor("ist", "C", "D")     # i_*
    sig.add_functor("ust", "D", "C")     # i^*
    sig.add_functor("PR", "D", "D")      # R (x) -
    sig.add_functor("pr", "C", "C")      # i^*R (x) -
    sig.add_object("M", "C")
    sig.add_object("N", "C")
    sig.add_object("X", "D")
    sig.add_adjunction("ist", "ust", unit="eta", counit="eps")
    sig.add_cell("Phi", ("pr", "ust"), ("ust", "PR"), invertible=True)
    sig.add_cell("mu", ("PR", "PR"), ("PR",))
    sig.add_cell("uD", (), ("PR",), cat="D")
    sig.add_cell("m", ("pr", "pr"), ("pr",))
    sig.add_cell("uC", (), ("pr",), cat="C")
    sig.add_cell("a", ("pr", "M"), ("M",))
    sig.add_cell("aN", ("pr", "N"), ("N",))
    sig.add_cell("aX", ("PR", "X"), ("X",))
    sig.add_cell("f", ("M",), ("N",))
    sig.add_cell("p", ("ist", "pr"), ("PR", "ist"), invertible=True)
    # the projection map is the eta/Phi/eps composite
    sig.add_axiom(
        "p-def",
        sig.term(("ist", "pr"), ((0, "p"),)),
        sig.term(("ist", "pr"), ((2, "eta"), (1, "Phi"), (0, "eps"))))
    # monoid axioms for R
    sig.add_axiom(
        "mu-assoc",
        sig.term(("PR", "PR", "PR"), ((1, "mu"), (0, "mu"))),
        sig.term(("PR", "PR", "PR"), ((0, "mu"), (0, "mu"))))
    sig.add_axiom(
        "mu-unit-left",
        sig.term(("PR",), ((0, "uD"), (0, "mu"))),
        sig.identity(("PR",)))
    sig.add_axiom(
        "mu-unit-right",
        sig.term(("PR",), ((1, "uD"), (0, "mu"))),
        sig.identity(("PR",)))
    # i^* carries the monoid structure across Phi
    sig.add_axiom(
        "Phi-mult",
        sig.term(("pr", "pr", "ust"), ((0, "m"), (0, "Phi"))),
        sig.term(("pr", "pr", "ust"), ((1, "Phi"), (0, "Phi"), (1, "mu"))))
    sig.add_axiom(
        "Phi-unit",
        sig.term(("ust",), ((1, "uD"),)),
        sig.term(("ust",), ((0, "uC"), (0, "Phi"))))
    # module axioms
    for act, obj in (("a", "M"), ("aN", "N")):
        sig.add_axiom(
            f"{act}-assoc",
            sig.term(("pr", "pr", obj), ((1, act), (0, act))),
            sig.term(("pr", "pr", obj), ((0, "m"), (0, act))))
        sig.add_axiom(
            f"{act}-unit",
            sig.term((obj,), ((0, "uC"), (0, act))),
            sig.identity((obj,)))
    sig.add_axiom(
        "aX-assoc",
        sig.term(("PR", "PR", "X"), ((1, "aX"), (0, "aX"))),
        sig.term(("PR", "PR", "X"), ((0, "mu"), (0, "aX"))))
    sig.add_axiom(
        "aX-unit",
        sig.term(("X",), ((0, "uD"), (0, "aX"))),
        sig.identity(("X",)))
    # f is a module map
    sig.add_axiom(
        "f-module-map",
        sig.term(("pr", "M"), ((0, "a"), (0, "f"))),
        sig.term(("pr", "M"), ((1, "f"), (0, "aN"))))
    return sig


def _appendix_a_corpus():
    sig = appendix_a_signature()
    T = sig.term
    entries = []
    # small lemmas mirroring the appendix's auxiliary diagrams
    entries.append(("proj-unit",
                    T(("ist",), ((1, "uC"), (0, "p"))),
                    T(("ist",), ((0, "uD"),))))
    entries.append(("proj-eta",
                    T(("pr",), ((1, "eta"), (0, "Phi"))),
                    T(("pr",), ((0, "eta"), (1, "p")))))
    entries.append(("proj-eps",
                    T(("ist", "pr", "ust"), ((0, "p"), (1, "eps"))),
                    T(("ist", "pr", "ust"), ((1, "Phi"), (0, "eps")))))
    entries.append(("proj-mult",
                    T(("ist", "pr", "pr"), ((1, "m"), (0, "p"))),
                    T(("ist", "pr", "pr"), ((0, "p"), (1, "p"), (0, "mu")))))
    # main diagrams: the induced action b = (ist a) . (p^-1 M)
    entries.append(("associativity",
                    T(("PR", "PR", "ist", "M"),
                      ((1, "p^-1"), (2, "a"), (0, "p^-1"), (1, "a"))),
                    T(("PR", "PR", "ist", "M"),
                      ((0, "mu"), (0, "p^-1"), (1, "a")))))
    entries.append(("unit",
                    T(("ist", "M"), ((0, "uD"), (0, "p^-1"), (1, "a"))),
                    sig.identity(("ist", "M"))))
    entries.append(("module-map",
                    T(("PR", "ist", "M"), ((2, "f"), (0, "p^-1"), (1, "aN"))),
                    T(("PR", "ist", "M"), ((0, "p^-1"), (1, "a"), (1, "f")))))
    entries.append(("unit-is-module-map",
                    T(("pr", "N"),
                      ((1, "eta"), (0, "Phi"), (1, "p^-1"), (2, "aN"))),
                    T(("pr", "N"), ((0, "aN"), (0, "eta")))))
    entries.append(("counit-is-module-map",
                    T(("PR", "ist", "ust", "X"),
                      ((0, "p^-1"), (1, "Phi"), (2, "aX"), (0, "eps"))),
                    T(("PR", "ist", "ust", "X"), ((1, "eps"), (0, "aX")))))
    return sig, entries


def _section4_corpus():
    sig = two_adjunction_signature(with_beta=True)
    alpha = sig.term(("FH", "L"), ((0, "alpha"),))
    beta = sig.term(("L", "UG"), ((0, "beta"),))
    entries = []
    entries.append(("mate-involution-alpha", mate(mate(alpha)), alpha))
    entries.append(("mate-involution-beta", mate(mate(beta)), beta))
    # the other-handed mate is literally the section-4 composite
    literal = sig.term(("FH", "L"),
                       ((2, "eta_FG"), (1, "beta"), (0, "eps_FH")))
    entries.append(("mate-handedness", mate(beta), literal))
    # Prop(mates) bookkeeping: over adjoint equivalences the mate of an
    # invertible cell is invertible, exhibited by the explicit inverse.
    sig2 = two_adjunction_signature(invertible=True)
    alpha2 = sig2.term(("FH", "L"), ((0, "alpha"),))
    mm = mate(alpha2, sig2)
    inv = sig2.term(("UH", "Lp"),
                    ((2, "eps_FG^-1"), (1, "alpha^-1"), (0, "eta_FH^-1")))
    entries.append(("mates-prop-right-inverse", mm.then(inv),
                    sig2.identity(("L", "UG")), sig2))
    entries.append(("mates-prop-left-inverse", inv.then(mm),
                    sig2.identity(("UH", "Lp")), sig2))
    return sig, entries


def _comparestrong_corpus():
    sig = comparestrong_signature()
    T = sig.term
    entries = []
    # restriction of U N: the two module structures on the same object
    entries.append((
        "restrict-after-U",
        T(("PS", "U", "N"),
          ((0, "e_S"), (0, "Phi_S"), (1, "t_phi"), (1, "a_N"))),
        T(("PS", "U", "N"),
          ((0, "t_theta"), (0, "e_R"), (0, "Phi_R"), (1, "a_N")))))
    # restriction of F M against F of the restriction
    entries.append((
        "restrict-after-F",
        T(("QS", "F", "M"),
          ((0, "PhiF_S"), (1, "t_theta"), (1, "a_M"))),
        T(("QS", "F", "M"),
          ((0, "t_phi"), (0, "PhiF_R"), (1, "a_M")))))
    return sig, entries


_CORPORA = {
    "appendix-A": _appendix_a_corpus,
    "section-4": _section4_corpus,
    "comparestrong": _comparestrong_corpus,
}


def corpus_names():
    return sorted(_CORPORA)


def builtin_signature(name):
    return _CORPORA[name]()[0]


def builtin_corpus(name):
    if name not in _CORPORA:
        raise MatesError(f"unknown corpus {name!r}; known: {corpus_names()}")
    return _CORPORA[name]()


def verify_corpus(name, depth=8, replay=True):
    """Decide every diagram in a builtin corpus; later diagrams may use
    earlier ones as rewrite rules (the papers' lemma structure).  Returns a
    report dict with per-diagram verdicts and traces."""
    sig, entries = builtin_corpus(name)
    lemmas = {}
    report = {"corpus": name, "depth": depth, "diagrams": [], "passed": True}
    for entry in entries:
        ename, lhs, rhs = entry[0], entry[1], entry[2]
        esig = entry[3] if len(entry) > 3 else sig
        extra = [(n, l, r) for n, (l, r) in lemmas.items()
                 if l.sig is esig]
        ok, trace = decide_equal(lhs, rhs, depth=depth, extra_axioms=extra)
        item = {"name": ename, "equal": ok}
        if ok:
            item["steps"] = len(trace)
            if replay:
                replay_trace(lhs, rhs, trace, extra_axioms=extra)
            lemmas[ename] = (lhs, rhs)
        else:
            item["reason"] = trace
            lhs_c = canonical(lhs)
            rhs_c = canonical(rhs)
            item["lhs_normal_form"] = [f"{n}@{p}" for p, n in lhs_c.ops]
            item["rhs_normal_form"] = [f"{n}@{p}" for p, n in rhs_c.ops]
            report["passed"] = False
        report["diagrams"].append(item)
    return report


def load_signature(doc):
    """Signature from the JSON schema: categories, functors, adjunctions,
    cells, axioms (terms as layer lists)."""
    sig = Signature()
    for c in doc.get("categories", []):
        sig.add_category(c)
    for f in doc.get("functors", []):
        sig.add_functor(f["name"], f["source"], f["target"])
    for adj in doc.get("adjunctions", []):
        sig.add_adjunction(adj["left"], adj["right"],
                           adj.get("unit"), adj.get("counit"))
    for cell in doc.get("cells", []):
        sig.add_cell(cell["name"], cell.get("dom", []), cell.get("cod", []),
                     cell.get("category"), cell.get("invertible", False))
    for ax in doc.get("axioms", []):
        lhs = sig.term_from_layers(ax["lhs"], ax.get("dom"))
        rhs = sig.term_from_layers(ax["rhs"], ax.get("dom"))
        sig.add_axiom(ax["name"], lhs, rhs)
    return sig


def decide_from_json(doc, depth=8):
    """Validate and decide the diagrams of a signature+diagram document."""
    sig = load_signature(doc)
    report = {"depth": depth, "diagrams": [], "passed": True}
    for diag in doc.get("diagrams", []):
        lhs = sig.term_from_layers(diag["lhs"], diag.get("dom"))
        rhs = sig.term_from_layers(diag["rhs"], diag.get("dom"))
        ok, trace = decide_equal(lhs, rhs, depth=depth)
        item = {"name": diag.get("name", "diagram"), "equal": ok}
        if ok:
            item["steps"] = len(trace)
            replay_trace(lhs, rhs, trace)
        else:
            item["reason"] = trace
        report["diagrams"].append(item)
        report["passed"] = report["passed"] and ok
    return report


def enumerate_cells(sig, dom, cod, max_layers):
    """All pasting terms dom => cod with at most max_layers layers."""
    dom, cod = tuple(dom), tuple(cod)
    out = []
    seen = set()
    frontier = [PastingTerm(sig, dom, ())]
    for _ in range(max_layers + 1):
        nxt = []
        for term in frontier:
            if term.cod == cod and term.key() not in seen:
                seen.add(term.key())
                out.append(term)
        if _ == max_layers:
            break
        for term in frontier:
            s = term.cod
            for cname, cell in sorted(sig.cells.items()):
                width = len(cell.dom)
                for pos in range(len(s) - width + 1):
                    if s[pos:pos + width] != cell.dom:
                        continue
                    if not cell.dom:
                        gap = _gap_category(sig, s, pos, term.cat)
                        if gap is not None and cell.cat is not None \
                                and gap != cell.cat:
                            continue
                    nxt.append(PastingTerm(sig, dom,
                                           term.ops + ((pos, cname),),
                                           term.cat))
        frontier = nxt
    return out
