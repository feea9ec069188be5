"""Graded polynomial rings over Q, homogeneous polynomials and ring maps.

Generators carry positive internal degrees (even by default, matching the
cohomology rings this package is built for; pass allow_odd=True to override).
Monomials are exponent tuples; the term order is graded reverse
lexicographic with respect to the weighted total degree.
"""

from .rational import ONE, Rational

__all__ = [
    "GradedPolyRing",
    "ParseError",
    "Polynomial",
    "RingMap",
    "monomial_degree",
    "monomial_divides",
    "monomial_key",
]


def monomial_divides(a, b):
    """True when exponent vector a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(mon, degrees):
    return sum(e * d for e, d in zip(mon, degrees))


def monomial_key(mon, degrees):
    """Sort key realizing weighted degrevlex (max = leading monomial)."""
    return (monomial_degree(mon, degrees), tuple(-e for e in reversed(mon)))


class GradedPolyRing:
    """Polynomial ring over Q with named, positively graded generators."""

    __slots__ = ("names", "degrees", "_index", "_gens")

    def __init__(self, generators, allow_odd=False):
        names = tuple(n for n, _ in generators)
        degrees = tuple(int(d) for _, d in generators)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        for n, d in zip(names, degrees):
            if d < 1:
                raise ValueError(f"generator {n} must have positive degree")
            if d % 2 and not allow_odd:
                raise ValueError(
                    f"generator {n} has odd degree {d}; pass allow_odd=True to permit"
                )
        self.names = names
        self.degrees = degrees
        self._index = {n: i for i, n in enumerate(names)}
        self._gens = None

    @property
    def ngens(self):
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, GradedPolyRing) and self.names == other.names
                and self.degrees == other.degrees)

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"GradedPolyRing({gens})"

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.ngens: ONE})

    def gen(self, name):
        i = self._index[name]
        mon = tuple(1 if j == i else 0 for j in range(self.ngens))
        return Polynomial(self, {mon: ONE})

    def gens(self):
        if self._gens is None:
            self._gens = tuple(self.gen(n) for n in self.names)
        return self._gens

    def monomial(self, mon, coeff=ONE):
        return Polynomial(self, {tuple(mon): Rational(coeff)} if coeff else {})

    def monomial_degree(self, mon):
        return monomial_degree(mon, self.degrees)

    def monomial_key(self, mon):
        return monomial_key(mon, self.degrees)

    def monomials_of_degree(self, degree):
        """All exponent tuples of weighted degree `degree`, degrevlex-sorted."""
        if degree < 0:
            return []
        out = []

        def rec(i, remaining, prefix):
            if i == self.ngens:
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            d = self.degrees[i]
            if i == self.ngens - 1:
                if remaining % d == 0:
                    rec(i + 1, 0, prefix + [remaining // d])
                return
            for e in range(remaining // d + 1):
                rec(i + 1, remaining - e * d, prefix + [e])

        rec(0, degree, [])
        out.sort(key=self.monomial_key)
        return out

    def parse(self, text):
        return _parse_polynomial(self, text)


class Polynomial:
    """Sparse polynomial: exponent tuple -> nonzero rational coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            cur = terms.get(m)
            s = c if cur is None else cur + c
            if s:
                terms[m] = s
            else:
                del terms[m]
        return Polynomial(self.ring, terms)

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = monomial_mul(m1, m2)
                    c = c1 * c2
                    cur = out.get(m)
                    s = c if cur is None else cur + c
                    if s:
                        out[m] = s
                    elif m in out:
                        del out[m]
            return Polynomial(self.ring, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        c = Rational(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, mon, coeff=ONE):
        if not coeff:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {monomial_mul(m, mon): c * coeff for m, c in self.terms.items()},
        )

    def is_homogeneous(self):
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self):
        """Weighted degree of a homogeneous polynomial (None when zero)."""
        if not self.terms:
            return None
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous polynomial {self}")
        return degs.pop()

    def leading_monomial(self):
        return max(self.terms, key=self.ring.monomial_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.ngens, Rational(0))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mon in sorted(self.terms, key=self.ring.monomial_key, reverse=True):
            c = self.terms[mon]
            factors = []
            for name, e in zip(self.ring.names, mon):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                text = str(c)
            elif c == 1:
                text = body
            elif c == -1:
                text = f"-{body}"
            else:
                text = f"{c}*{body}"
            bits.append(text)
        out = bits[0]
        for b in bits[1:]:
            out += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
        return out

    __repr__ = __str__


class RingMap:
    """Degree-preserving ring map determined by generator images."""

    __slots__ = ("source", "target", "images", "_power_cache")

    def __init__(self, source, target, images):
        images = tuple(images)
        if len(images) != source.ngens:
            raise ValueError("one image per source generator required")
        for name, deg, img in zip(source.names, source.degrees, images):
            if img.ring != target:
                raise ValueError(f"image of {name} lives in the wrong ring")
            if not img.is_homogeneous():
                raise ValueError(f"image of {name} is inhomogeneous")
            if img and img.degree() != deg:
                raise ValueError(
                    f"image of {name} has degree {img.degree()}, expected {deg}"
                )
        self.source = source
        self.target = target
        self.images = images
        self._power_cache = [{} for _ in images]

    @classmethod
    def from_strings(cls, source, target, images_by_name):
        images = []
        for name in source.names:
            if name not in images_by_name:
                raise ValueError(f"missing image for generator {name}")
            spec = images_by_name[name]
            images.append(target.parse(spec) if isinstance(spec, str) else spec)
        return cls(source, target, images)

    def _power(self, i, e):
        cache = self._power_cache[i]
        got = cache.get(e)
        if got is None:
            if e == 0:
                got = self.target.one()
            else:
                got = self._power(i, e - 1) * self.images[i]
            cache[e] = got
        return got

    def apply(self, poly):
        if poly.ring != self.source:
            raise ValueError("polynomial not in the source ring")
        out = self.target.zero()
        for mon, c in poly.terms.items():
            term = self.target.one()
            for i, e in enumerate(mon):
                if e:
                    term = term * self._power(i, e)
            out = out + term.scale(c)
        return out

    def compose(self, other):
        """self after other: (self . other)(x) = self(other(x))."""
        if other.target != self.source:
            raise ValueError("maps not composable")
        return RingMap(other.source, self.target,
                       [self.apply(img) for img in other.images])

    def __eq__(self, other):
        return (isinstance(other, RingMap) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __hash__(self):
        return hash((self.source, self.target, self.images))

    def __repr__(self):
        body = ", ".join(f"{n} -> {img}" for n, img in zip(self.source.names, self.images))
        return f"RingMap({body})"


class ParseError(ValueError):
    """Polynomial text that does not match the grammar; carries a position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# Grammar:
#   expr   := term (('+'|'-') term)*
#   term   := coeff ('*' factor)* | factor ('*' factor)*
#   factor := name ('^' positive-int)?
#   coeff  := integer | integer '/' positive-int
# Whitespace insignificant.  A single leading sign is additionally accepted.
def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^":
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


def _parse_polynomial(ring, text):
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'}", tok[2])
        pos += 1
        return tok

    def parse_factor():
        tok = take("name")
        if tok[1] not in ring._index:
            raise ParseError(f"unknown generator {tok[1]!r}", tok[2])
        idx = ring._index[tok[1]]
        exp = 1
        if peek()[0] == "^":
            take("^")
            etok = take("int")
            exp = int(etok[1])
            if exp < 1:
                raise ParseError("exponent must be positive", etok[2])
        return idx, exp

    def parse_term():
        coeff = ONE
        mon = [0] * ring.ngens
        if peek()[0] == "int":
            num = int(take("int")[1])
            den = 1
            if peek()[0] == "/":
                take("/")
                dtok = take("int")
                den = int(dtok[1])
                if den < 1:
                    raise ParseError("denominator must be positive", dtok[2])
            coeff = Rational(num, den)
            while peek()[0] == "*":
                take("*")
                idx, exp = parse_factor()
                mon[idx] += exp
        else:
            idx, exp = parse_factor()
            mon[idx] += exp
            while peek()[0] == "*":
                take("*")
                idx, exp = parse_factor()
                mon[idx] += exp
        return ring.monomial(tuple(mon), coeff)

    result = ring.zero()
    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if take(peek()[0])[1] == "-" else 1
    result = result + parse_term().scale(sign)
    while peek()[0] in ("+", "-"):
        op = take(peek()[0])[1]
        term = parse_term()
        result = result + (term if op == "+" else -term)
    take("end")
    return result
