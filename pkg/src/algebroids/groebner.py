"""Groebner bases for ideals and submodules of free modules over Q[x1..xn].

Buchberger's algorithm with normal pair selection, the chain criterion, and
the coprimality criterion (ideals only, where it is valid).  Basis elements
optionally carry representations over the original generators so that
membership tests can return coefficient lifts.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import AlgebroidError, PreconditionError
from .poly import Polynomial


class TermOrder:
    """Total order on (weighted) monomials, extended to module monomials.

    kind: "grevlex", "lex", or "wgrevlex" (weighted graded reverse lex).
    module: "top" (term over position) or "pot" (position over term);
    lower positions are considered larger in either flavour.
    """

    __slots__ = ("kind", "weights", "module")

    def __init__(self, kind="grevlex", weights=None, module="top"):
        if kind not in ("grevlex", "lex", "wgrevlex"):
            raise ValueError(f"unknown term order {kind!r}")
        if kind == "wgrevlex" and weights is None:
            raise ValueError("weighted order needs weights")
        self.kind = kind
        self.weights = tuple(weights) if weights else None
        self.module = module

    def mono_key(self, exp):
        if self.kind == "lex":
            return (exp,)
        if self.kind == "wgrevlex":
            deg = sum(w * e for w, e in zip(self.weights, exp))
        else:
            deg = sum(exp)
        return (deg, tuple(-e for e in reversed(exp)))

    def key(self, mono):
        pos, exp = mono
        if self.module == "pot":
            return (-pos,) + self.mono_key(exp)
        return self.mono_key(exp) + (-pos,)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _quot(b, a):
    return tuple(y - x for x, y in zip(a, b))


def _lcm_exp(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class FreeModuleElement:
    """Element of the free module A^rank; rank 1 doubles as a polynomial."""

    __slots__ = ("nvars", "rank", "terms")

    def __init__(self, nvars, rank, terms=None):
        self.nvars = nvars
        self.rank = rank
        clean = {}
        if terms:
            for (pos, exp), c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[(pos, tuple(exp))] = c
        self.terms = clean

    @classmethod
    def from_polys(cls, polys):
        nvars = polys[0].nvars
        terms = {}
        for pos, p in enumerate(polys):
            for exp, c in p.terms.items():
                terms[(pos, exp)] = c
        return cls(nvars, len(polys), terms)

    @classmethod
    def from_poly(cls, p):
        return cls.from_polys([p])

    def to_polys(self):
        polys = [dict() for _ in range(self.rank)]
        for (pos, exp), c in self.terms.items():
            polys[pos][exp] = c
        return [Polynomial(self.nvars, t) for t in polys]

    def to_poly(self):
        if self.rank != 1:
            raise ValueError("not a rank-1 element")
        return self.to_polys()[0]

    def is_zero(self):
        return not self.terms

    def component(self, pos):
        return Polynomial(self.nvars, {exp: c for (p, exp), c in self.terms.items() if p == pos})

    def project(self, positions):
        """Restrict to the given positions, renumbered 0..len-1."""
        remap = {p: i for i, p in enumerate(positions)}
        terms = {}
        for (pos, exp), c in self.terms.items():
            if pos in remap:
                terms[(remap[pos], exp)] = c
        return FreeModuleElement(self.nvars, len(positions), terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return FreeModuleElement(self.nvars, self.rank, terms)

    def __sub__(self, other):
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) - c
        return FreeModuleElement(self.nvars, self.rank, terms)

    def __neg__(self):
        return FreeModuleElement(self.nvars, self.rank, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        return FreeModuleElement(self.nvars, self.rank, {m: c * v for m, v in self.terms.items()})

    def mul_term(self, exp, coeff=1):
        coeff = Fraction(coeff)
        terms = {}
        for (pos, e), c in self.terms.items():
            terms[(pos, tuple(a + b for a, b in zip(e, exp)))] = c * coeff
        return FreeModuleElement(self.nvars, self.rank, terms)

    def mul_poly(self, p):
        out = FreeModuleElement(self.nvars, self.rank)
        for exp, c in p.terms.items():
            out = out + self.mul_term(exp, c)
        return out

    def leading(self, order):
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def is_homogeneous(self, weights=None):
        degs = set()
        for (_, exp), _c in self.terms.items():
            if weights is None:
                degs.add(sum(exp))
            else:
                degs.add(sum(w * e for w, e in zip(weights, exp)))
        return len(degs) <= 1

    def homogeneous_components(self, weights=None, shifts=None):
        parts = {}
        for (pos, exp), c in self.terms.items():
            d = sum(exp) if weights is None else sum(w * e for w, e in zip(weights, exp))
            if shifts is not None:
                d += shifts[pos]
            parts.setdefault(d, {})[(pos, exp)] = c
        return {d: FreeModuleElement(self.nvars, self.rank, t) for d, t in sorted(parts.items())}

    def __eq__(self, other):
        return (isinstance(other, FreeModuleElement) and self.rank == other.rank
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        return f"FreeModuleElement({self.to_polys()!r})"


def _reduce(f, leads, elements, order, track):
    """Full normal form of f modulo the elements; optionally track quotients.

    leads is the precomputed list of (mono, coeff) leading terms.
    Returns (remainder terms dict, quotients list of term-dicts or None).
    """
    work = dict(f.terms)
    quotients = [dict() for _ in elements] if track else None
    irreducible = set()
    while True:
        candidates = [m for m in work if m not in irreducible]
        if not candidates:
            break
        mono = max(candidates, key=order.key)
        pos, exp = mono
        coeff = work[mono]
        hit = None
        for idx, (lmono, lcoeff) in enumerate(leads):
            lpos, lexp = lmono
            if lpos == pos and _divides(lexp, exp):
                hit = (idx, lcoeff, _quot(exp, lexp))
                break
        if hit is None:
            irreducible.add(mono)
            continue
        idx, lcoeff, qexp = hit
        factor = coeff / lcoeff
        if track:
            quotients[idx][qexp] = quotients[idx].get(qexp, Fraction(0)) + factor
        for (p2, e2), c2 in elements[idx].terms.items():
            m2 = (p2, tuple(a + b for a, b in zip(e2, qexp)))
            nv = work.get(m2, Fraction(0)) - factor * c2
            if nv:
                work[m2] = nv
            else:
                work.pop(m2, None)
    return work, quotients


class GroebnerBasis:
    """Reduced Groebner basis; elements monic, auto-reduced, sorted."""

    __slots__ = ("order", "elements", "reps", "nvars", "rank")

    def __init__(self, order, elements, reps, nvars, rank):
        self.order = order
        self.elements = elements
        self.reps = reps  # list of FreeModuleElement over A^len(gens), or None
        self.nvars = nvars
        self.rank = rank

    def leads(self):
        return [e.leading(self.order) for e in self.elements]

    def normal_form(self, f, track=False):
        """(remainder, quotients over basis elements or None)."""
        if isinstance(f, Polynomial):
            f = FreeModuleElement.from_poly(f)
        rem, quot = _reduce(f, self.leads(), self.elements, self.order, track)
        rem_el = FreeModuleElement(self.nvars, self.rank, rem)
        if not track:
            return rem_el, None
        return rem_el, [Polynomial(self.nvars, q) for q in quot]

    def contains(self, f):
        rem, _ = self.normal_form(f)
        return rem.is_zero()

    def lift(self, f):
        """Coefficients over the ORIGINAL generators, or None if not a member."""
        if self.reps is None:
            raise AlgebroidError("basis was computed without lift tracking")
        rem, quot = self.normal_form(f, track=True)
        if not rem.is_zero():
            return None
        ngens = self.reps[0].rank if self.reps else 0
        acc = FreeModuleElement(self.nvars, ngens)
        for q, rep in zip(quot, self.reps):
            if not q.is_zero():
                acc = acc + rep.mul_poly(q)
        return acc.to_polys()


def groebner_basis(gens, order, track=False):
    """Reduced Groebner basis of the given polynomials or module elements."""
    items = []
    for g in gens:
        if isinstance(g, Polynomial):
            g = FreeModuleElement.from_poly(g)
        if not g.is_zero():
            items.append(g)
    if not items:
        raise PreconditionError("no nonzero generators")
    nvars = items[0].nvars
    rank = items[0].rank
    for g in items:
        if g.nvars != nvars or g.rank != rank:
            raise ValueError("mixed ambient modules")

    ngens = len(items)
    basis = []
    reps = []
    for i, g in enumerate(items):
        basis.append(g)
        if track:
            unit = FreeModuleElement(nvars, ngens, {(i, (0,) * nvars): Fraction(1)})
            reps.append(unit)

    def lead(i):
        return basis[i].leading(order)

    pairs = set()
    done = set()

    def add_pairs(j):
        (pj, ej), _ = lead(j)
        for i in range(j):
            (pi, ei), _ = lead(i)
            if pi == pj:
                pairs.add((i, j))

    for j in range(len(basis)):
        add_pairs(j)

    def pair_lcm_key(pair):
        i, j = pair
        (p, ei), _ = lead(i)
        (_, ej), _ = lead(j)
        return order.key((p, _lcm_exp(ei, ej)))

    while pairs:
        i, j = min(pairs, key=pair_lcm_key)
        pairs.discard((i, j))
        done.add((i, j))
        (p, ei), ci = lead(i)
        (_, ej), cj = lead(j)
        L = _lcm_exp(ei, ej)
        # coprimality criterion (valid for ideals only)
        if rank == 1 and all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            (pk, ek), _ = lead(k)
            if pk == p and _divides(ek, L):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        sf = basis[i].mul_term(_quot(L, ei), Fraction(1) / ci)
        sg = basis[j].mul_term(_quot(L, ej), Fraction(1) / cj)
        spoly = sf - sg
        leads = [lead(t) for t in range(len(basis))]
        rem, quot = _reduce(spoly, leads, basis, order, track)
        if rem:
            rem_el = FreeModuleElement(nvars, rank, rem)
            if track:
                rep = reps[i].mul_term(_quot(L, ei), Fraction(1) / ci) \
                    - reps[j].mul_term(_quot(L, ej), Fraction(1) / cj)
                for t, q in enumerate(quot):
                    for qexp, qc in q.items():
                        rep = rep - reps[t].mul_term(qexp, qc)
                reps.append(rep)
            basis.append(rem_el)
            add_pairs(len(basis) - 1)

    # auto-reduction to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            if not others:
                continue
            leads = [e.leading(order) for e in others]
            rem, quot = _reduce(basis[i], leads, others, order, track)
            rem_el = FreeModuleElement(nvars, rank, rem)
            if rem_el.terms != basis[i].terms:
                changed = True
                if rem_el.is_zero():
                    del basis[i]
                    if track:
                        del reps[i]
                    break
                if track:
                    rep = reps[i]
                    other_reps = reps[:i] + reps[i + 1 :]
                    for t, q in enumerate(quot):
                        for qexp, qc in q.items():
                            rep = rep - other_reps[t].mul_term(qexp, qc)
                    reps[i] = rep
                basis[i] = rem_el

    # monic, deterministic ordering
    scaled = []
    for idx, e in enumerate(basis):
        _, c = e.leading(order)
        scaled.append((e.scale(Fraction(1) / c), reps[idx].scale(Fraction(1) / c) if track else None))
    scaled.sort(key=lambda pair: order.key(pair[0].leading(order)[0]), reverse=True)
    elements = [e for e, _ in scaled]
    out_reps = [r for _, r in scaled] if track else None
    return GroebnerBasis(order, elements, out_reps, nvars, rank)


# -- ideals ---------------------------------------------------------------

class Ideal:
    """Ideal of Q[x1..xn] with a weight vector for quasi-homogeneous work."""

    __slots__ = ("nvars", "weights", "gens", "_gb")

    def __init__(self, nvars, gens, weights=None):
        self.nvars = nvars
        self.weights = tuple(weights) if weights else (1,) * nvars
        self.gens = [g for g in gens if not g.is_zero()]
        self._gb = {}

    def default_order(self):
        if all(w == 1 for w in self.weights):
            return TermOrder("grevlex")
        return TermOrder("wgrevlex", self.weights)

    def groebner(self, order=None, track=False):
        order = order or self.default_order()
        key = (order.kind, order.weights, order.module, track)
        if key not in self._gb:
            if not self.gens:
                raise PreconditionError("zero ideal has no Groebner basis here")
            self._gb[key] = groebner_basis(self.gens, order, track=track)
        return self._gb[key]

    def is_zero(self):
        return not self.gens

    def is_quasi_homogeneous(self):
        return all(g.is_homogeneous(self.weights) for g in self.gens)

    def contains(self, f):
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        return self.groebner().contains(FreeModuleElement.from_poly(f))

    def member_lift(self, f):
        """(is member, coefficients over the original generators or None)."""
        if self.is_zero():
            return f.is_zero(), [] if f.is_zero() else None
        gb = self.groebner(track=True)
        lift = gb.lift(FreeModuleElement.from_poly(f))
        if lift is None:
            return False, None
        return True, lift

    def is_unit(self):
        if self.is_zero():
            return False
        gb = self.groebner()
        return any(e.to_poly().is_constant() for e in gb.elements)

    def leading_exponents(self):
        gb = self.groebner()
        return [mono[1] for mono, _ in gb.leads()]

    def standard_monomials(self):
        """List of exponent tuples outside the initial ideal; None if infinite."""
        if self.is_unit():
            raise PreconditionError("unit ideal")
        lts = self.leading_exponents()
        bounds = []
        for i in range(self.nvars):
            pure = [e[i] for e in lts if all(e[j] == 0 for j in range(self.nvars) if j != i)]
            if not pure:
                return None
            bounds.append(min(pure))
        out = []

        def rec(prefix):
            if len(prefix) == self.nvars:
                exp = tuple(prefix)
                if not any(_divides(lt, exp) for lt in lts):
                    out.append(exp)
                return
            i = len(prefix)
            for e in range(bounds[i]):
                rec(prefix + [e])

        rec([])
        return sorted(out)

    def colength(self):
        """Number of standard monomials, or None when infinite."""
        sm = self.standard_monomials()
        return None if sm is None else len(sm)

    def minimal_generators(self):
        """Prune generators lying in the ideal of the others (graded case exact)."""
        kept = []
        remaining = list(self.gens)
        # examine generators from low degree upward
        remaining.sort(key=lambda g: g.degree(self.weights))
        for i, g in enumerate(remaining):
            others = kept + remaining[i + 1 :]
            if not others or not Ideal(self.nvars, others, self.weights).contains(g):
                kept.append(g)
        return kept

    def __add__(self, other):
        return Ideal(self.nvars, self.gens + other.gens, self.weights)

    def product(self, other):
        gens = [a * b for a in self.gens for b in other.gens]
        return Ideal(self.nvars, gens, self.weights)

    def power(self, k):
        if k == 0:
            return Ideal(self.nvars, [Polynomial.one(self.nvars)], self.weights)
        gens = []
        for combo in combinations_with_replacement(self.gens, k):
            g = combo[0]
            for h in combo[1:]:
                g = g * h
            gens.append(g)
        return Ideal(self.nvars, gens, self.weights)

    def equals(self, other):
        mine = all(other.contains(g) for g in self.gens)
        theirs = all(self.contains(g) for g in other.gens)
        return mine and theirs

    def __repr__(self):
        return f"Ideal({self.gens!r})"


def normal_form(f, gb):
    rem, _ = gb.normal_form(f)
    return rem.to_poly() if gb.rank == 1 and isinstance(f, Polynomial) else rem


def ideal_member(f, gb):
    rem, _ = gb.normal_form(f)
    return rem.is_zero()


def syzygies(vectors):
    """Generating set of the syzygy module of the given elements of A^r.

    Each returned element s (rank = len(vectors)) satisfies sum s_i v_i = 0.
    """
    vecs = []
    for v in vectors:
        if isinstance(v, Polynomial):
            v = FreeModuleElement.from_poly(v)
        vecs.append(v)
    if not vecs:
        return []
    nvars = vecs[0].nvars
    r = vecs[0].rank
    s = len(vecs)
    augmented = []
    for i, v in enumerate(vecs):
        terms = {(pos, exp): c for (pos, exp), c in v.terms.items()}
        terms[(r + i, (0,) * nvars)] = Fraction(1)
        augmented.append(FreeModuleElement(nvars, r + s, terms))
    order = TermOrder("grevlex", module="pot")
    gb = groebner_basis(augmented, order)
    out = []
    for e in gb.elements:
        if all(pos >= r for pos, _exp in e.terms):
            out.append(e.project(list(range(r, r + s))))
    return out


def module_span_contains(gens, element, order=None):
    """Whether element lies in the submodule generated by gens."""
    items = [g for g in gens if not g.is_zero()]
    if not items:
        return element.is_zero()
    order = order or TermOrder("grevlex", module="top")
    gb = groebner_basis(items, order)
    return gb.contains(element)


def modules_equal(gens_a, gens_b, order=None):
    """Equality of the submodules generated by the two families."""
    order = order or TermOrder("grevlex", module="top")
    a = [g for g in gens_a if not g.is_zero()]
    b = [g for g in gens_b if not g.is_zero()]
    if not a or not b:
        return not a and not b
    gb_a = groebner_basis(a, order)
    gb_b = groebner_basis(b, order)
    return all(gb_b.contains(g) for g in a) and all(gb_a.contains(g) for g in b)
