"""Tangential derivation modules T(I), Jacobian/Tjurina ideals,
quasi-homogeneity detection, and monomial-ideal extraction."""

from fractions import Fraction
from itertools import combinations
from math import gcd

from . import linalg
from .errors import PreconditionError
from .groebner import (FreeModuleElement, Ideal, TermOrder, groebner_basis,
                       module_span_contains, modules_equal, syzygies)
from .poly import Polynomial, default_varnames, format_poly


class Derivation:
    """Vector field sum a_i d/dx_i with polynomial coefficients."""

    __slots__ = ("nvars", "coefficients")

    def __init__(self, coefficients):
        self.coefficients = list(coefficients)
        self.nvars = self.coefficients[0].nvars
        if len(self.coefficients) != self.nvars:
            raise ValueError("need one coefficient per variable")

    @classmethod
    def partial(cls, nvars, i):
        coeffs = [Polynomial.zero(nvars) for _ in range(nvars)]
        coeffs[i] = Polynomial.one(nvars)
        return cls(coeffs)

    @classmethod
    def euler(cls, nvars, weights=None):
        weights = weights or (1,) * nvars
        return cls([Polynomial.variable(nvars, i) * weights[i] for i in range(nvars)])

    @classmethod
    def from_vector(cls, vec):
        return cls(vec.to_polys())

    def to_vector(self):
        return FreeModuleElement.from_polys(self.coefficients)

    def apply(self, f):
        out = Polynomial.zero(self.nvars)
        for i, a in enumerate(self.coefficients):
            out = out + a * f.diff(i)
        return out

    def bracket(self, other):
        """Lie bracket [self, other] as a Derivation."""
        coeffs = []
        for k in range(self.nvars):
            c = self.apply(other.coefficients[k]) - other.apply(self.coefficients[k])
            coeffs.append(c)
        return Derivation(coeffs)

    def is_zero(self):
        return all(c.is_zero() for c in self.coefficients)

    def vanishes_at_origin(self):
        return all(c.constant_term() == 0 for c in self.coefficients)

    def linear_part_matrix(self):
        """Operator matrix of the induced action on m/m^2 in the basis x_1..x_n.

        delta(x_i) = a_i, whose linear part is sum_j c_ij x_j; column i of the
        returned matrix holds (c_i1, ..., c_in).
        """
        n = self.nvars
        mat = linalg.zeros(n, n)
        for i, a in enumerate(self.coefficients):
            for exp, c in a.terms.items():
                if sum(exp) == 1:
                    j = exp.index(1)
                    mat[j][i] = c
        return mat

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.coefficients == other.coefficients

    def format(self, varnames=None):
        names = varnames or default_varnames(self.nvars)
        parts = []
        for name, c in zip(names, self.coefficients):
            if not c.is_zero():
                parts.append(f"({format_poly(c, names)})*d/d{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Derivation({self.format()})"


class DerivationModule:
    """Finite generating set of derivations preserving a given ideal."""

    __slots__ = ("nvars", "weights", "generators", "ideal")

    def __init__(self, generators, ideal, verify=True):
        self.generators = [g for g in generators if not g.is_zero()]
        self.ideal = ideal
        self.nvars = ideal.nvars
        self.weights = ideal.weights
        if verify:
            for delta in self.generators:
                for f in ideal.gens:
                    if not ideal.contains(delta.apply(f)):
                        raise PreconditionError("generator does not preserve the ideal")

    def vectors(self):
        return [g.to_vector() for g in self.generators]

    def module_order(self):
        if all(w == 1 for w in self.weights):
            return TermOrder("grevlex", module="top")
        return TermOrder("wgrevlex", self.weights, module="top")

    def contains(self, delta):
        return module_span_contains(self.vectors(), delta.to_vector(), self.module_order())

    def equals_generators(self, other_derivations):
        return modules_equal(self.vectors(), [d.to_vector() for d in other_derivations],
                             self.module_order())

    def all_vanish_at_origin(self):
        return all(g.vanishes_at_origin() for g in self.generators)

    def __repr__(self):
        return f"DerivationModule({self.generators!r})"


def tangent_derivations(ideal):
    """Generators of {delta : delta(f) in I for every generator f of I}.

    Computed as one module-kernel (syzygy) computation: syzygies of the
    Jacobian columns augmented by the ideal generators in each slot.
    """
    if ideal.is_unit():
        raise PreconditionError("unit ideal")
    if ideal.is_zero():
        gens = [Derivation.partial(ideal.nvars, i) for i in range(ideal.nvars)]
        return DerivationModule(gens, ideal, verify=False)
    n = ideal.nvars
    fs = ideal.gens
    s = len(fs)
    columns = []
    for i in range(n):
        columns.append(FreeModuleElement.from_polys([f.diff(i) for f in fs]))
    for g in fs:
        for j in range(s):
            comps = [Polynomial.zero(n) for _ in range(s)]
            comps[j] = g
            columns.append(FreeModuleElement.from_polys(comps))
    derivations = []
    seen = set()
    for syz in syzygies(columns):
        proj = syz.project(list(range(n)))
        if proj.is_zero() or proj in seen:
            continue
        seen.add(proj)
        derivations.append(Derivation.from_vector(proj))
    dm = DerivationModule(derivations, ideal, verify=True)
    return dm


def contains_derivation(dm, delta):
    return dm.contains(delta)


def krull_dimension(ideal):
    """Krull dimension of A/I in the graded polynomial model.

    Combinatorial dimension of the initial ideal: the largest set S of
    variables such that no leading monomial is supported inside S.
    """
    if ideal.is_zero():
        return ideal.nvars
    if ideal.is_unit():
        return -1
    lts = ideal.leading_exponents()
    n = ideal.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if not any(all(e[i] == 0 or i in sset for i in range(n)) for e in lts):
                return size
    return 0


def jacobian_ideal(ideal, height=None):
    """I plus all r x r minors of the Jacobian matrix, r = height of I.

    For a principal ideal this is the Tjurina ideal (f, df/dx_1, ...).
    """
    if ideal.is_unit():
        raise PreconditionError("unit ideal")
    n = ideal.nvars
    fs = ideal.gens
    s = len(fs)
    if height is None:
        height = n - krull_dimension(ideal)
    if height < 1 or height > min(n, s):
        raise PreconditionError("height undetermined")
    jac = [[f.diff(i) for i in range(n)] for f in fs]  # s x n
    minors = []
    for rows in combinations(range(s), height):
        for cols in combinations(range(n), height):
            minors.append(_det([[jac[r][c] for c in cols] for r in rows]))
    return Ideal(n, fs + minors, ideal.weights)


def _det(mat):
    if len(mat) == 1:
        return mat[0][0]
    out = Polynomial.zero(mat[0][0].nvars)
    for j, top in enumerate(mat[0]):
        if top.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = top * _det(minor)
        out = out + term if j % 2 == 0 else out - term
    return out


def tjurina_ideal(f, weights=None):
    n = f.nvars
    return Ideal(n, [f] + [f.diff(i) for i in range(n)], weights)


def quasi_homogeneous_weights(f, max_degree=100):
    """Positive integer weights w (gcd 1) and degree d with f quasi-homogeneous,
    minimizing d; None when no positive solution exists."""
    if f.is_zero():
        raise PreconditionError("zero polynomial")
    n = f.nvars
    exps = sorted(f.terms)
    used = [i for i in range(n) if any(e[i] for e in exps)]
    if not used:
        return None
    if f.is_homogeneous():
        return (1,) * n, f.degree()
    for d in range(1, max_degree + 1):
        sol = _positive_weight_solution(exps, used, n, d)
        if sol is not None:
            if gcd(*sol, d) != 1:
                continue
            return sol, d
    return None


def _positive_weight_solution(exps, used, n, d):
    # solve alpha . w = d over the used variables; unused variables get weight 1
    m = len(used)
    rows = [[Fraction(e[i]) for i in used] for e in exps]
    rhs = [Fraction(d)] * len(exps)
    aug = [row + [b] for row, b in zip(rows, rhs)]
    red, pivots = linalg.rref(aug)
    if m in pivots:
        return None
    free = [j for j in range(m) if j not in pivots]
    best = None

    def assemble(assignment):
        w = [None] * m
        for idx, j in enumerate(free):
            w[j] = Fraction(assignment[idx])
        for i, p in enumerate(pivots):
            val = red[i][m]
            for j in free:
                val -= red[i][j] * w[j]
            w[p] = val
        if all(x > 0 and x.denominator == 1 for x in w):
            return tuple(int(x) for x in w)
        return None

    def rec(idx, assignment):
        nonlocal best
        if idx == len(free):
            w = assemble(assignment)
            if w is not None and (best is None or w < best):
                best = w
            return
        for v in range(1, d + 1):
            rec(idx + 1, assignment + [v])

    rec(0, [])
    if best is None:
        return None
    full = [1] * n
    for idx, i in enumerate(used):
        full[i] = best[idx]
    return tuple(full)


def monomialize(ideal):
    """Minimal monomial generators when the ideal is monomial in the given
    coordinates; None otherwise."""
    if ideal.is_unit():
        raise PreconditionError("unit ideal")
    n = ideal.nvars
    monos = set()
    for g in ideal.gens:
        monos.update(g.terms)
    # minimalize under divisibility
    minimal = []
    for e in sorted(monos, key=sum):
        if not any(all(a <= b for a, b in zip(m, e)) for m in minimal):
            minimal.append(e)
    candidate = Ideal(n, [Polynomial.monomial(n, e) for e in minimal], ideal.weights)
    if candidate.equals(ideal):
        return [Polynomial.monomial(n, e) for e in minimal]
    return None
