"""Free-algebra elements with polynomial coefficients, and their normal form.

Elements live in the free associative algebra on symbols f_s, h_s, e_s with
coefficients that are integer polynomials in commuting variables a_st.  The
normal form eta moves every f symbol to the left of all h and e symbols by
repeatedly rewriting the rightmost violating adjacent pair in each monomial:

    e_s f_t  ->  f_t e_s + delta_st h_s
    h_s f_t  ->  f_t h_s - a_st f_t

No Serre-type relations are imposed; this is rewriting in the free algebra.

Text syntax: symbols like ``f2``, ``h1``, ``e3`` (or ``f[s1]`` for longer
indices), variables like ``a12`` (or ``a[s1,s2]``), products joined by
``*``, terms joined by ``+``/``-``, polynomial coefficients in parentheses,
e.g. ``(-a12+3)*f2*e2``.
"""

import re

from .errors import SchubertError, UnknownLabelError


class ParseError(SchubertError):
    pass


def _var_str(key):
    s, t = key
    if len(s) == 1 and len(t) == 1:
        return f"a{s}{t}"
    return f"a[{s},{t}]"


class Poly:
    """An integer polynomial in the commuting variables a_st.

    Stored as a map from monomials (sorted tuples of variable keys, with
    repetition) to nonzero integer coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c):
        return cls({(): int(c)})

    @classmethod
    def variable(cls, s, t):
        return cls({((s, t),): 1})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {()}

    def constant_value(self):
        assert self.is_constant()
        return self.terms.get((), 0)

    def variables(self):
        return {key for mono in self.terms for key in mono}

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(terms)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Poly(terms)

    def substitute(self, values):
        """Evaluate at integer values per variable key."""
        total = 0
        for mono, coeff in self.terms.items():
            for key in mono:
                coeff *= values[key]
            total += coeff
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(
            self.terms.items(), key=lambda mc: (-len(mc[0]), mc[0])
        ):
            factors = "*".join(_var_str(key) for key in mono)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = factors
            else:
                body = f"{abs(coeff)}*{factors}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f"{sign}{body}"
        return out

    def __repr__(self):
        return f"Poly({self})"


class FreeAlgebraElement:
    """A finite sum of noncommutative monomials with Poly coefficients.

    Monomials are tuples of symbols (kind, index) with kind one of
    'f', 'h', 'e'.  Like monomials are always merged and zero terms dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        merged = {}
        for mono, poly in (terms or {}).items():
            if not isinstance(poly, Poly):
                poly = Poly.const(poly)
            if not poly.is_zero():
                merged[mono] = poly
        self.terms = merged

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def generator(cls, kind, index):
        assert kind in "fhe"
        return cls({((kind, str(index)),): Poly.const(1)})

    @classmethod
    def scalar(cls, poly):
        if not isinstance(poly, Poly):
            poly = Poly.const(poly)
        return cls({(): poly})

    def __eq__(self, other):
        return isinstance(other, FreeAlgebraElement) and self.terms == other.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for mono, poly in other.terms.items():
            terms[mono] = terms.get(mono, Poly()) + poly
        return FreeAlgebraElement(terms)

    def __neg__(self):
        return FreeAlgebraElement({m: -p for m, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            other = FreeAlgebraElement.scalar(other)
        terms = {}
        for m1, p1 in self.terms.items():
            for m2, p2 in other.terms.items():
                mono = m1 + m2
                prod = p1 * p2
                terms[mono] = terms.get(mono, Poly()) + prod
        return FreeAlgebraElement(terms)

    def __rmul__(self, other):
        return FreeAlgebraElement.scalar(other) * self

    def is_normal_form(self):
        return all(_violation(mono) is None for mono in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, poly in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            factors = "*".join(
                f"{kind}{idx}" if _plain_index(idx) else f"{kind}[{idx}]"
                for kind, idx in mono
            )
            if not mono:
                parts.append(str(poly) if poly.is_constant() else f"({poly})")
            elif poly.is_constant():
                c = poly.constant_value()
                if c == 1:
                    parts.append(factors)
                elif c == -1:
                    parts.append(f"-{factors}")
                else:
                    parts.append(f"{c}*{factors}")
            else:
                parts.append(f"({poly})*{factors}")
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += f" - {part[1:]}"
            else:
                out += f" + {part}"
        return out

    def __repr__(self):
        return f"FreeAlgebraElement({self})"


def _plain_index(idx):
    return re.fullmatch(r"[A-Za-z0-9_]+", idx) and "[" not in idx


def _violation(mono):
    """Index of the rightmost adjacent pair (e or h) immediately left of f."""
    for i in range(len(mono) - 2, -1, -1):
        if mono[i][0] in ("e", "h") and mono[i + 1][0] == "f":
            return i
    return None


def eta(tau):
    """The normal form: rewrite each monomial's rightmost violating pair."""
    result = {}
    work = [(mono, poly) for mono, poly in tau.terms.items()]
    while work:
        mono, poly = work.pop()
        i = _violation(mono)
        if i is None:
            result[mono] = result.get(mono, Poly()) + poly
            continue
        (kind, s), (_, t) = mono[i], mono[i + 1]
        swapped = mono[:i] + (mono[i + 1], mono[i]) + mono[i + 2:]
        if kind == "e":
            work.append((swapped, poly))
            if s == t:
                work.append((mono[:i] + (("h", s),) + mono[i + 2:], poly))
        else:  # h_s f_t -> f_t h_s - a_st f_t
            work.append((swapped, poly))
            work.append((mono[:i] + (("f", t),) + mono[i + 2:], -(poly * Poly.variable(s, t))))
    return FreeAlgebraElement(result)


def specialize(tau, A):
    """Substitute a_st -> A[s][t] (and a_ss -> 2), merging like terms."""
    values = {}
    for mono, poly in tau.terms.items():
        for s, t in poly.variables():
            if (s, t) not in values:
                if s not in A.index_set or t not in A.index_set:
                    raise UnknownLabelError(s if s not in A.index_set else t)
                values[(s, t)] = 2 if s == t else A.entry(s, t)
    return FreeAlgebraElement(
        {mono: Poly.const(poly.substitute(values)) for mono, poly in tau.terms.items()}
    )


def depends_on(tau, s, t):
    """Whether the variable a_st occurs in any coefficient of tau."""
    return any((s, t) in poly.variables() for poly in tau.terms.values())


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*()\[\],]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"unexpected character at {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append((m.group("op"), None))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        if self.peek() != kind:
            raise ParseError(f"expected {kind!r} at token {self.pos}")
        return self.next()

    def parse_element(self):
        out = self.parse_signed_term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            term = self.parse_term()
            out = out + (term if op == "+" else -term)
        if self.pos != len(self.tokens):
            raise ParseError("trailing input")
        return out

    def parse_signed_term(self):
        if self.peek() == "-":
            self.next()
            return -self.parse_term()
        return self.parse_term()

    def parse_term(self):
        out = self.parse_factor()
        while self.peek() == "*":
            self.next()
            out = out * self.parse_factor()
        return out

    def parse_factor(self):
        kind = self.peek()
        if kind == "num":
            return FreeAlgebraElement.scalar(self.next()[1])
        if kind == "(":
            self.next()
            poly = self.parse_poly()
            self.expect(")")
            return FreeAlgebraElement.scalar(poly)
        if kind == "name":
            return self.parse_name()
        raise ParseError(f"unexpected token at position {self.pos}")

    def parse_name(self):
        _, name = self.next()
        head, rest = name[0], name[1:]
        if head in "fhe":
            if rest:
                return FreeAlgebraElement.generator(head, rest)
            self.expect("[")
            _, idx = self.expect("name") if self.peek() == "name" else self.next()
            self.expect("]")
            return FreeAlgebraElement.generator(head, str(idx))
        if head == "a":
            return FreeAlgebraElement.scalar(self.parse_var_indices(rest))
        raise ParseError(f"unknown symbol {name!r}")

    def parse_var_indices(self, rest):
        if rest:
            if len(rest) != 2:
                raise ParseError(
                    f"ambiguous variable index {rest!r}; use a[s,t] for long labels"
                )
            return Poly.variable(rest[0], rest[1])
        self.expect("[")
        s = self.parse_index_token()
        self.expect(",")
        t = self.parse_index_token()
        self.expect("]")
        return Poly.variable(s, t)

    def parse_index_token(self):
        kind, value = self.next()
        if kind == "name":
            return value
        if kind == "num":
            return str(value)
        raise ParseError("expected an index label")

    def parse_poly(self):
        out = self.parse_poly_signed_term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            term = self.parse_poly_term()
            out = out + (term if op == "+" else -term)
        return out

    def parse_poly_signed_term(self):
        if self.peek() == "-":
            self.next()
            return -self.parse_poly_term()
        return self.parse_poly_term()

    def parse_poly_term(self):
        out = self.parse_poly_factor()
        while self.peek() == "*":
            self.next()
            out = out * self.parse_poly_factor()
        return out

    def parse_poly_factor(self):
        kind = self.peek()
        if kind == "num":
            return Poly.const(self.next()[1])
        if kind == "name":
            _, name = self.next()
            if name[0] != "a":
                raise ParseError(f"only a-variables allowed in coefficients: {name!r}")
            return self.parse_var_indices(name[1:])
        raise ParseError("bad polynomial factor")


def parse(text):
    """Parse the text syntax into a FreeAlgebraElement."""
    text = text.strip()
    if text == "0":
        return FreeAlgebraElement.zero()
    return _Parser(_tokenize(text)).parse_element()
