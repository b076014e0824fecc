"""Multivariate polynomials with exact rational coefficients.

Terms are stored as a map from exponent tuples to nonzero Fractions.  Weights
for quasi-homogeneous gradings are *not* stored on the polynomial itself; they
travel with the ambient ring data (Ideal, term orders) and are passed to the
degree helpers where needed.
"""

from fractions import Fraction

from .errors import ParseError

Expvec = tuple


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    if len(exp) != nvars:
                        raise ValueError("exponent arity mismatch")
                    clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, i, power=1):
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, nvars, exp, coeff=1):
        return cls(nvars, {tuple(exp): Fraction(coeff)})

    # -- predicates ------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    # -- degrees ---------------------------------------------------------
    def degree(self, weights=None):
        """Max weighted degree of the terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if weights is None:
            return max(sum(exp) for exp in self.terms)
        return max(sum(w * e for w, e in zip(weights, exp)) for exp in self.terms)

    def is_homogeneous(self, weights=None):
        if not self.terms:
            return True
        degs = {self._wdeg(exp, weights) for exp in self.terms}
        return len(degs) == 1

    def _wdeg(self, exp, weights):
        if weights is None:
            return sum(exp)
        return sum(w * e for w, e in zip(weights, exp))

    def homogeneous_components(self, weights=None):
        """Map weighted degree -> homogeneous part."""
        parts = {}
        for exp, c in self.terms.items():
            parts.setdefault(self._wdeg(exp, weights), {})[exp] = c
        return {d: Polynomial(self.nvars, t) for d, t in sorted(parts.items())}

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixing polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else Polynomial.constant(self.nvars, -Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def diff(self, i):
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] > 0:
                newexp = list(exp)
                newexp[i] -= 1
                terms[tuple(newexp)] = c * exp[i]
        return Polynomial(self.nvars, terms)

    def substitute(self, images):
        """f(g_1, ..., g_n) for polynomials g_i over a common ring."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        out = Polynomial.zero(nv)
        for exp, c in self.terms.items():
            term = Polynomial.constant(nv, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * images[i] ** e
            out = out + term
        return out

    def evaluate(self, point):
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                v *= Fraction(x) ** e
            total += v
        return total

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({format_poly(self)})"

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical print order)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)


# -- serialized grammar ---------------------------------------------------

def default_varnames(nvars):
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return [f"x{i + 1}" for i in range(nvars)]


def format_poly(p, varnames=None):
    if p.is_zero():
        return "0"
    names = varnames or default_varnames(p.nvars)
    pieces = []
    for exp, c in p.sorted_terms():
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = str(abs(c))
        else:
            mono = "*".join(factors)
            a = abs(c)
            body = mono if a == 1 else f"{a}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


class _Tokens:
    def __init__(self, text):
        self.toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "+-*^()":
                self.toks.append(ch)
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("int", int(text[i:j])))
                i = j
            elif ch == "/":
                self.toks.append("/")
                i += 1
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j]))
                i = j
            else:
                raise ParseError(f"unexpected character {ch!r}")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok


def parse_poly(text, varnames):
    """Parse the shared polynomial grammar over the declared variables."""
    nvars = len(varnames)
    index = {name: i for i, name in enumerate(varnames)}
    toks = _Tokens(text)

    def parse_sum():
        sign = 1
        while toks.peek() in ("+", "-"):
            if toks.next() == "-":
                sign = -sign
        node = parse_product() * sign
        while toks.peek() in ("+", "-"):
            sign = 1
            while toks.peek() in ("+", "-"):
                if toks.next() == "-":
                    sign = -sign
            node = node + parse_product() * sign
        return node

    def parse_product():
        node = parse_power()
        while True:
            tok = toks.peek()
            if tok == "*":
                toks.next()
                node = node * parse_power()
            elif tok == "(" or (isinstance(tok, tuple) and tok[0] == "name"):
                node = node * parse_power()
            else:
                return node

    def parse_power():
        base = parse_atom()
        if toks.peek() == "^":
            toks.next()
            tok = toks.next()
            if not (isinstance(tok, tuple) and tok[0] == "int"):
                raise ParseError("exponent must be a non-negative integer")
            return base ** tok[1]
        return base

    def parse_atom():
        tok = toks.next()
        if tok == "(":
            node = parse_sum()
            if toks.next() != ")":
                raise ParseError("missing closing parenthesis")
            return node
        if isinstance(tok, tuple) and tok[0] == "int":
            num = tok[1]
            if toks.peek() == "/":
                toks.next()
                den = toks.next()
                if not (isinstance(den, tuple) and den[0] == "int") or den[1] == 0:
                    raise ParseError("bad rational literal")
                return Polynomial.constant(nvars, Fraction(num, den[1]))
            return Polynomial.constant(nvars, num)
        if isinstance(tok, tuple) and tok[0] == "name":
            if tok[1] not in index:
                raise ParseError(f"undeclared variable {tok[1]!r}")
            return Polynomial.variable(nvars, index[tok[1]])
        raise ParseError(f"unexpected token {tok!r}")

    result = parse_sum()
    if toks.peek() is not None:
        raise ParseError(f"trailing input at token {toks.peek()!r}")
    return result
