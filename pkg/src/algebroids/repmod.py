"""Explicit matrix modules over structure-constant Lie algebras: invariant
subspaces, sl2 weight theory, Cayley-Sylvester counts, block recognition,
and the rank-one filtration of R (x) V_d over the sl2 algebroid on Q[x]."""

from fractions import Fraction
from itertools import combinations_with_replacement

from . import linalg
from .errors import AlgebroidError, InconsistencyError, PreconditionError
from .groebner import FreeModuleElement, TermOrder, groebner_basis, syzygies
from .liealg import LieAlgebra, sl2
from .poly import Polynomial
from .series import partitions_in_rectangle


class MatrixRep:
    """Action matrices rho(e_i), one per basis element of the algebra.

    Bracket compatibility rho([x,y]) = [rho(x), rho(y)] is validated exactly
    on construction.
    """

    __slots__ = ("algebra", "dim", "matrices")

    def __init__(self, algebra, matrices, check=True):
        if len(matrices) != algebra.dim:
            raise ValueError("need one matrix per basis element")
        self.algebra = algebra
        self.matrices = [[[Fraction(c) for c in row] for row in m] for m in matrices]
        self.dim = len(self.matrices[0]) if self.matrices else 0
        if check:
            self._validate()

    def _validate(self):
        for i in range(self.algebra.dim):
            for j in range(i + 1, self.algebra.dim):
                comm = linalg.mat_sub(linalg.mat_mul(self.matrices[i], self.matrices[j]),
                                      linalg.mat_mul(self.matrices[j], self.matrices[i]))
                expected = linalg.zeros(self.dim, self.dim)
                for k, c in enumerate(self.algebra.basis_bracket(i, j)):
                    if c:
                        expected = linalg.mat_add(expected, linalg.mat_scale(self.matrices[k], c))
                if comm != expected:
                    raise AlgebroidError("matrices do not represent the bracket")

    def act(self, index, vec):
        return linalg.mat_vec(self.matrices[index], vec)

    def __repr__(self):
        return f"MatrixRep(algebra dim {self.algebra.dim}, module dim {self.dim})"


def trivial_rep(algebra, n):
    return MatrixRep(algebra, [linalg.zeros(n, n) for _ in range(algebra.dim)])


def direct_sum_rep(rep1, rep2):
    if rep1.algebra is not rep2.algebra and rep1.algebra.dim != rep2.algebra.dim:
        raise ValueError("summands must share the algebra")
    n1, n2 = rep1.dim, rep2.dim
    mats = []
    for a, b in zip(rep1.matrices, rep2.matrices):
        m = linalg.zeros(n1 + n2, n1 + n2)
        for i in range(n1):
            for j in range(n1):
                m[i][j] = a[i][j]
        for i in range(n2):
            for j in range(n2):
                m[n1 + i][n1 + j] = b[i][j]
        mats.append(m)
    return MatrixRep(rep1.algebra, mats)


def tensor_rep(rep1, rep2):
    """Action on V (x) W: rho(g) (x) 1 + 1 (x) rho(g)."""
    n1, n2 = rep1.dim, rep2.dim
    mats = []
    for a, b in zip(rep1.matrices, rep2.matrices):
        m = linalg.zeros(n1 * n2, n1 * n2)
        for i in range(n1):
            for j in range(n2):
                row = i * n2 + j
                for k in range(n1):
                    m[row][k * n2 + j] += a[i][k]
                for k in range(n2):
                    m[row][i * n2 + k] += b[j][k]
        mats.append(m)
    return MatrixRep(rep1.algebra, mats)


def binary_form_rep(d):
    """sl2 acting on binary forms of degree d; basis v_k = x^(d-k) y^k.

    H v_k = (d-2k) v_k, X v_k = k v_{k-1}, Y v_k = (d-k) v_{k+1}.
    """
    n = d + 1
    h = linalg.zeros(n, n)
    x = linalg.zeros(n, n)
    y = linalg.zeros(n, n)
    for k in range(n):
        h[k][k] = Fraction(d - 2 * k)
        if k > 0:
            x[k - 1][k] = Fraction(k)
        if k < d:
            y[k + 1][k] = Fraction(d - k)
    return MatrixRep(sl2(), [h, x, y])


def sym_power_basis(dim, n):
    """Degree-n monomial exponent tuples in `dim` symbols, deterministic order."""
    out = []
    for combo in combinations_with_replacement(range(dim), n):
        exp = [0] * dim
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    out.sort()
    return out


def sym_power_rep(rep, n):
    """Action on S^n(V) by exact polarization of the monomial basis."""
    basis = sym_power_basis(rep.dim, n)
    index = {e: i for i, e in enumerate(basis)}
    size = len(basis)
    mats = []
    for m in rep.matrices:
        out = linalg.zeros(size, size)
        for col, exp in enumerate(basis):
            for i, e_i in enumerate(exp):
                if e_i == 0:
                    continue
                # replace one factor v_i by m(v_i) = sum_k m[k][i] v_k
                for k in range(rep.dim):
                    c = m[k][i]
                    if not c:
                        continue
                    new = list(exp)
                    new[i] -= 1
                    new[k] += 1
                    out[index[tuple(new)]][col] += e_i * c
        mats.append(out)
    return MatrixRep(rep.algebra, mats)


def invariants_dimension(rep, nil):
    """Common kernel of the listed action matrices (basis indices or explicit
    matrices); returns (dimension, kernel basis)."""
    stacked = []
    for item in nil:
        m = rep.matrices[item] if isinstance(item, int) else item
        stacked.extend(m)
    if not stacked:
        return rep.dim, linalg.identity(rep.dim)
    basis = linalg.kernel_basis(stacked)
    return len(basis), basis


def weight_space_dims(h):
    """Integer eigenvalue -> dim ker(H - e), with a diagonalizability check."""
    n = len(h)
    bound = 0
    for row in h:
        s = sum(abs(c) for c in row)
        if s > bound:
            bound = s
    bound = int(bound) + 1
    dims = {}
    total = 0
    for e in range(-bound, bound + 1):
        shifted = [[h[i][j] - (e if i == j else 0) for j in range(n)] for i in range(n)]
        k = n - linalg.rank(shifted)
        if k:
            dims[e] = k
            total += k
    if total != n:
        raise PreconditionError("H not rationally diagonalizable")
    return dims


def decompose_sl2(rep):
    """Multiset {highest weight e: multiplicity} via weight-space dimensions."""
    dims = weight_space_dims(rep.matrices[0])
    mults = {}
    for e in sorted(dims):
        if e < 0:
            continue
        m = dims.get(e, 0) - dims.get(e + 2, 0)
        if m < 0:
            raise InconsistencyError("negative multiplicity in weight decomposition")
        if m:
            mults[e] = m
    if sum((e + 1) * m for e, m in mults.items()) != rep.dim:
        raise InconsistencyError("weight multiplicities do not sum to the dimension")
    return mults


def cayley_sylvester(n, d, e):
    """[S^n(S^d V) : V_e] = p(n,d;(nd-e)/2) - p(n,d;(nd-e)/2 - 1)."""
    if n < 0 or d < 0 or e < 0:
        raise ValueError("arguments must be non-negative")
    if (n * d - e) % 2 or n * d - e < 0:
        return 0
    m = (n * d - e) // 2
    return partitions_in_rectangle(m, d, n) - partitions_in_rectangle(m - 1, d, n)


def covariant_dimension(n, d):
    """Number of irreducible summands of S^n(V_d) = dim C^n_d."""
    total = 0
    for e in range(n * d % 2, n * d + 1, 2):
        total += cayley_sylvester(n, d, e)
    return total


# -- recognition of sl-blocks ---------------------------------------------

def _submodule_closure(matrices, vectors):
    """Smallest subspace containing the vectors and stable under the matrices."""
    basis = linalg.row_space_basis([v for v in vectors if any(v)])
    while True:
        extra = []
        for b in basis:
            for m in matrices:
                img = linalg.mat_vec(m, b)
                if any(img) and not linalg.in_row_space(basis, img):
                    extra.append(img)
        if not extra:
            return basis
        basis = linalg.row_space_basis(basis + extra)


def _minimal_submodule(matrices, dim):
    """Minimal nonzero invariant subspace; deterministic tie-break by the
    lexicographically smallest rref basis."""
    candidates = list(linalg.identity(dim))
    for m in matrices:
        candidates.extend(linalg.kernel_basis(m))
    best = None
    for v in candidates:
        if not any(v):
            continue
        sub = _submodule_closure(matrices, [v])
        key = (len(sub), [[str(c) for c in row] for row in sub])
        if best is None or key < best[0]:
            best = (key, sub)
    return best[1]


def _quotient_action(matrices, sub, dim):
    """Action matrices on V/sub in a completed basis."""
    comp = []
    basis = list(sub)
    for v in linalg.identity(dim):
        if not linalg.in_row_space(basis, v):
            comp.append(v)
            basis = linalg.row_space_basis(basis + [v])
    full = list(sub) + comp
    # change of basis: columns of P are the chosen basis vectors
    p = [[full[j][i] for j in range(dim)] for i in range(dim)]
    k = len(sub)
    q = len(comp)
    out = []
    for m in matrices:
        conj = _conjugate(m, p)
        out.append([[conj[k + i][k + j] for j in range(q)] for i in range(q)])
    return out, q


def _conjugate(m, p):
    n = len(p)
    inv = []
    for col in linalg.identity(n):
        sol = linalg.solve(p, col)
        inv.append(sol)
    p_inv = [[inv[j][i] for j in range(n)] for i in range(n)]
    return linalg.mat_mul(p_inv, linalg.mat_mul(m, p))


def recognition_sl_blocks(matrices, dim=None):
    """Composition-factor dimensions of V under the span of the given matrices,
    the set F of factors of dimension >= 2, and whether the diagonal trace-zero
    Cartan of sl(V) lies in the span (the recognition hypothesis)."""
    if dim is None:
        dim = len(matrices[0])
    if dim > 10:
        raise PreconditionError("dimension too large")
    flat = [[m[i][j] for i in range(dim) for j in range(dim)] for m in matrices]
    hypothesis = True
    for i in range(dim - 1):
        cartan = linalg.zeros(dim, dim)
        cartan[i][i] = Fraction(1)
        cartan[i + 1][i + 1] = Fraction(-1)
        target = [cartan[a][b] for a in range(dim) for b in range(dim)]
        cols = [[flat[k][t] for k in range(len(matrices))] for t in range(dim * dim)]
        if linalg.solve(cols, target) is None:
            hypothesis = False
            break
    factors = []
    current = [list(map(list, m)) for m in matrices]
    remaining = dim
    while remaining > 0:
        sub = _minimal_submodule(current, remaining)
        factors.append(len(sub))
        current, remaining = _quotient_action(current, sub, remaining)
    f_set = sorted({n for n in factors if n >= 2})
    return factors, f_set, hypothesis


# -- Example 3.7: filtration of R (x) V_d over the sl2 algebroid -----------

_ANCHOR = {
    # polynomial coefficient of d/dx for H, X+, X- in Q[x]
    "H": Polynomial(1, {(1,): Fraction(2)}),
    "X+": Polynomial(1, {(2,): Fraction(1)}),
    "X-": Polynomial(1, {(0,): Fraction(-1)}),
}


def _vec_diff(vec):
    return FreeModuleElement.from_polys([p.diff(0) for p in vec.to_polys()])


def _vec_matrix(mat, vec):
    comps = vec.to_polys()
    out = []
    for i in range(len(comps)):
        acc = Polynomial.zero(1)
        for j, c in enumerate(comps):
            if mat[i][j]:
                acc = acc + c * mat[i][j]
        out.append(acc)
    return FreeModuleElement.from_polys(out)


def _algebroid_ops(d):
    rep = binary_form_rep(d)
    names = ["H", "X+", "X-"]

    def make(idx, name):
        mat = rep.matrices[idx]
        anchor = _ANCHOR[name]

        def op(vec):
            return _vec_diff(vec).mul_poly(anchor) + _vec_matrix(mat, vec)

        return op

    return {name: make(i, name) for i, name in enumerate(names)}


def _dg_closure(gens, ops, order):
    """R-submodule closure under the algebroid operators."""
    basis = [g for g in gens if not g.is_zero()]
    while True:
        gb = groebner_basis(basis, order)
        extra = []
        for b in basis:
            for op in ops.values():
                img = op(b)
                if not img.is_zero() and not gb.contains(img):
                    extra.append(img)
        if not extra:
            return basis, gb
        basis = basis + extra


def _module_rank(gb):
    """Rank over the PID Q[x]: number of leading positions in the reduced GB."""
    return len({pos for (pos, _exp), _c in gb.leads()})


def _colon_ideal_is_zero(m_vec, submodule_gens):
    """True iff {q in Q[x] : q*m_vec in submodule} = 0."""
    syz = syzygies([m_vec] + list(submodule_gens))
    for s in syz:
        if not s.component(0).is_zero():
            return False
    return True


def sl2_algebroid_filtration(d):
    """Rank-one filtration of M = Q[x] (x) V_d under the transitive sl2
    algebroid with anchor H -> 2x d/dx, X+ -> x^2 d/dx, X- -> -d/dx.

    Builds the highest vectors m_{lambda_0 + 2i} by the recursion
    m_i = (X+ - (lambda_0 + 2(i-1)) x) m_{i-1}, certifies d+1 rank-one
    successive quotients, and records the observed scalar in the quotient
    relation X+ mu_i = c_i x mu_i.
    """
    if d < 0:
        raise PreconditionError("degree must be non-negative")
    rank = d + 1
    ops = _algebroid_ops(d)
    order = TermOrder("grevlex", module="top")
    lam0 = -d
    x_shift = (1,)

    def times_x(vec, scalar=1):
        return vec.mul_term(x_shift, scalar)

    lowest = FreeModuleElement(1, rank, {(d, (0,)): Fraction(1)})
    vectors = [lowest]
    for i in range(1, d + 1):
        prev = vectors[-1]
        nxt = ops["X+"](prev) - times_x(prev, lam0 + 2 * (i - 1))
        if nxt.is_zero():
            raise InconsistencyError("filtration vector vanished")
        vectors.append(nxt)
    weights = [lam0 + 2 * i for i in range(d + 1)]
    for m_vec, w in zip(vectors, weights):
        if not ops["X-"](m_vec).is_zero():
            raise InconsistencyError("X- does not annihilate a filtration vector")
        if ops["H"](m_vec) != m_vec.mul_term((0,), w):
            raise InconsistencyError("H eigenvalue mismatch on a filtration vector")
    submodules = []
    for m_vec in vectors:
        basis, gb = _dg_closure([m_vec], ops, order)
        submodules.append((basis, gb))
    ranks = [_module_rank(gb) for _basis, gb in submodules]
    if ranks != [rank - i for i in range(d + 1)]:
        raise InconsistencyError("submodule ranks do not drop by one")
    # certify each quotient is free of rank one over Q[x]
    quotient_scalars = []
    for i in range(d + 1):
        m_vec = vectors[i]
        next_gens = submodules[i + 1][0] if i + 1 <= d else []
        next_gb = submodules[i + 1][1] if i + 1 <= d else None
        # cyclic: every generator of N_i lies in Q[x] m_i + N_{i+1}
        cyc_gb = groebner_basis([m_vec] + next_gens, order)
        for b in submodules[i][0]:
            if not cyc_gb.contains(b):
                raise InconsistencyError("quotient is not cyclic")
        if next_gens and not _colon_ideal_is_zero(m_vec, next_gens):
            raise InconsistencyError("quotient has torsion")
        # observed scalar c with X+ m_i = c x m_i mod N_{i+1}
        image = ops["X+"](m_vec)
        scalar = None
        for cand in (Fraction(weights[i]), Fraction(weights[i], 2)):
            residual = image - times_x(m_vec, cand)
            if residual.is_zero() or (next_gb is not None and next_gb.contains(residual)):
                scalar = cand
                break
        if scalar is None:
            raise InconsistencyError("no scalar quotient relation for X+")
        quotient_scalars.append(scalar)
    half_convention = all(c == Fraction(w, 2) for c, w in zip(quotient_scalars, weights))
    return {
        "highest_vectors": vectors,
        "weights": weights,
        "ranks": ranks,
        "quotient_count": d + 1,
        "quotient_scalars": quotient_scalars,
        "half_factor_confirmed": half_convention,
    }
