"""Finite-dimensional Lie algebras by structure constants, and fibre Lie
algebra extraction from derivation modules."""

from fractions import Fraction

from . import linalg
from .errors import AlgebroidError, InconsistencyError, PreconditionError
from .groebner import TermOrder, groebner_basis
from .poly import Polynomial


class LieAlgebra:
    """Structure constants c_ij^k over Q; Jacobi identity validated exactly."""

    __slots__ = ("dim", "brackets", "labels")

    def __init__(self, dim, brackets, labels=None):
        self.dim = dim
        self.brackets = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError("brackets must be given for i < j")
            vec = tuple(Fraction(c) for c in vec)
            if len(vec) != dim:
                raise ValueError("structure constant arity mismatch")
            if any(vec):
                self.brackets[(i, j)] = vec
        self.labels = list(labels) if labels else [f"e{i + 1}" for i in range(dim)]
        self._validate_jacobi()

    def basis_bracket(self, i, j):
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self.brackets.get((i, j), (Fraction(0),) * self.dim)
        return tuple(-c for c in self.brackets.get((j, i), (Fraction(0),) * self.dim))

    def bracket(self, u, v):
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in enumerate(self.basis_bracket(i, j)):
                    out[k] += a * b * c
        return out

    def _validate_jacobi(self):
        n = self.dim
        basis = linalg.identity(n)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = [Fraction(0)] * n
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket(basis[a], basis[b])
                        outer = self.bracket(inner, basis[c])
                        total = [x + y for x, y in zip(total, outer)]
                    if any(total):
                        raise AlgebroidError("Jacobi identity fails")

    def ad(self, x):
        """Matrix of ad(x) acting on column vectors."""
        cols = [self.bracket(x, col) for col in linalg.identity(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    # -- series ----------------------------------------------------------
    def _bracket_span(self, basis_a, basis_b):
        prods = [self.bracket(a, b) for a in basis_a for b in basis_b]
        return linalg.row_space_basis([p for p in prods if any(p)])

    def derived_series(self):
        """Dimensions [dim D^0, dim D^1, ...] until 0 or a repeat."""
        current = linalg.identity(self.dim)
        dims = [self.dim]
        while True:
            nxt = self._bracket_span(current, current)
            d = len(nxt)
            dims.append(d)
            if d == 0 or d == dims[-2]:
                return dims
            current = nxt

    def lower_central_series(self):
        whole = linalg.identity(self.dim)
        current = whole
        dims = [self.dim]
        while True:
            nxt = self._bracket_span(whole, current)
            d = len(nxt)
            dims.append(d)
            if d == 0 or d == dims[-2]:
                return dims
            current = nxt

    def is_solvable(self):
        chain = self.derived_series()
        solvable = chain[-1] == 0
        if solvable != self.is_solvable_cartan():
            raise InconsistencyError("derived series and Cartan criterion disagree")
        return solvable

    def is_nilpotent(self):
        return self.lower_central_series()[-1] == 0

    def derived_subalgebra_basis(self):
        return self._bracket_span(linalg.identity(self.dim), linalg.identity(self.dim))

    # -- Killing form ----------------------------------------------------
    def killing_matrix(self):
        ads = [self.ad(col) for col in linalg.identity(self.dim)]
        return [[linalg.trace(linalg.mat_mul(ads[i], ads[j])) for j in range(self.dim)]
                for i in range(self.dim)]

    def killing_rank(self):
        return linalg.rank(self.killing_matrix())

    def radical(self):
        """(dimension, basis) of {x : kappa(x, [g,g]) = 0}."""
        kappa = self.killing_matrix()
        derived = self.derived_subalgebra_basis()
        rows = [linalg.mat_vec(kappa, b) for b in derived]
        basis = linalg.kernel_basis(rows) if rows else linalg.identity(self.dim)
        return len(basis), basis

    def is_solvable_cartan(self):
        return self.radical()[0] == self.dim

    def center_dim(self):
        # x central iff ad(e_j) applied to x is 0 for all j
        stacked = []
        for j in range(self.dim):
            basis_vec = [Fraction(0)] * self.dim
            basis_vec[j] = Fraction(1)
            stacked.extend(self.ad(basis_vec))
        return len(linalg.kernel_basis(stacked)) if stacked else self.dim

    def fingerprint(self):
        return {
            "dim": self.dim,
            "derived_series": self.derived_series(),
            "lower_central_series": self.lower_central_series(),
            "killing_rank": self.killing_rank(),
            "radical_dim": self.radical()[0],
            "center_dim": self.center_dim(),
            "solvable": self.derived_series()[-1] == 0,
        }

    def to_json(self):
        entries = []
        for (i, j), vec in sorted(self.brackets.items()):
            entries.append([i + 1, j + 1, [str(c) for c in vec]])
        return {"dim": self.dim, "brackets": entries, "labels": list(self.labels)}

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={self.brackets})"


def abelian_lie_algebra(n):
    return LieAlgebra(n, {})


def sl2():
    """Standard basis H, X, Y with [H,X]=2X, [H,Y]=-2Y, [X,Y]=H."""
    return LieAlgebra(3, {
        (0, 1): (0, 2, 0),
        (0, 2): (0, 0, -2),
        (1, 2): (1, 0, 0),
    }, labels=["H", "X", "Y"])


def gl2():
    """Basis E11, E12, E21, E22 of 2x2 matrices."""
    def unit(i, j):
        m = linalg.zeros(2, 2)
        m[i][j] = Fraction(1)
        return m
    basis = [unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)]
    return lie_algebra_from_matrices(basis, labels=["E11", "E12", "E21", "E22"])


def lie_algebra_from_matrices(mats, labels=None):
    """Structure constants of a matrix Lie algebra spanned by the given
    (linearly independent) matrices, closed under commutator."""
    n = len(mats[0])
    flat = [[m[i][j] for i in range(n) for j in range(n)] for m in mats]
    brackets = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            comm = linalg.mat_sub(linalg.mat_mul(mats[a], mats[b]),
                                  linalg.mat_mul(mats[b], mats[a]))
            target = [comm[i][j] for i in range(n) for j in range(n)]
            sol = linalg.solve([[flat[k][t] for k in range(len(mats))] for t in range(n * n)], target)
            if sol is None:
                raise AlgebroidError("matrices are not closed under commutator")
            brackets[(a, b)] = sol
    return LieAlgebra(len(mats), brackets, labels)


# -- fibre Lie algebra extraction -----------------------------------------

def _homogeneous_generator_components(dm):
    weights = dm.weights
    out = []
    for g in dm.generators:
        vec = g.to_vector()
        comps = vec.homogeneous_components(weights, shifts=[-w for w in weights])
        out.extend(comps.values())
    return out


def _module_degree(vec, weights):
    degs = {sum(w * e for w, e in zip(weights, exp)) - weights[pos]
            for (pos, exp) in vec.terms}
    if len(degs) != 1:
        raise AlgebroidError("inhomogeneous module element")
    return degs.pop()


def minimal_module_generators(dm):
    """Minimal homogeneous generating set of the derivation module
    (graded Nakayama pruning)."""
    if not dm.ideal.is_quasi_homogeneous():
        raise PreconditionError("not quasi-homogeneous")
    weights = dm.weights
    order = dm.module_order()
    candidates = _homogeneous_generator_components(dm)
    # deduplicate and sort by derivation degree, deterministically
    seen = []
    for c in candidates:
        if c not in seen:
            seen.append(c)
    seen.sort(key=lambda v: (_module_degree(v, weights), sorted(v.terms)))
    n = dm.nvars
    m_times = []
    for c in seen:
        for j in range(n):
            m_times.append(c.mul_term(tuple(1 if t == j else 0 for t in range(n))))
    kept = []
    for c in seen:
        gens = kept + m_times
        gb = groebner_basis(gens, order)
        if not gb.contains(c):
            kept.append(c)
    return kept


def fibre_lie_algebra(dm, require_origin=True):
    """T(I)/m T(I) as a structure-constant Lie algebra with a minimal basis.

    require_origin enforces the vanishing-at-origin reduction used for
    singularity analyses; toral analyses pass False to keep constant fields.
    """
    from .derivations import Derivation

    if not dm.ideal.is_quasi_homogeneous():
        raise PreconditionError("not quasi-homogeneous")
    if require_origin and not dm.all_vanish_at_origin():
        raise PreconditionError("not logarithmic at origin")
    basis_vecs = minimal_module_generators(dm)
    if not basis_vecs:
        return LieAlgebra(0, {}), []
    order = dm.module_order()
    gb = groebner_basis(basis_vecs, order, track=True)
    basis = [Derivation.from_vector(v) for v in basis_vecs]
    m = len(basis)
    brackets = {}
    for i in range(m):
        for j in range(i + 1, m):
            br = basis[i].bracket(basis[j])
            lift = gb.lift(br.to_vector())
            if lift is None:
                raise AlgebroidError("bracket leaves the module (not a Lie algebroid?)")
            brackets[(i, j)] = tuple(c.constant_term() for c in lift)
    labels = [f"d{i + 1}" for i in range(m)]
    algebra = LieAlgebra(m, brackets, labels)
    return algebra, basis
