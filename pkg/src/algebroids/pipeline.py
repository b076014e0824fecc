"""End-to-end analyses: singularity reports, toral reports, covariant series
reports, and the shared input-file format."""

from fractions import Fraction

from . import linalg
from .derivations import (Derivation, jacobian_ideal, monomialize,
                          quasi_homogeneous_weights, tangent_derivations)
from .errors import (AlgebroidError, InconsistencyError, ParseError,
                     PreconditionError)
from .groebner import Ideal
from .hilbert import dimension_multiplicity, graded_pieces_series
from .liealg import fibre_lie_algebra
from .poly import Polynomial, format_poly, parse_poly
from .repmod import invariants_dimension, sym_power_basis
from .series import (RationalSeries, SeriesPrefix, quasi_polynomial_of,
                     reconstruct_rational)

# denominators of the covariant algebras of binary forms of low degree
COVARIANT_DENOMINATORS = {
    0: [(1, 1)],
    1: [(1, 1)],
    2: [(1, 1), (2, 1)],
    3: [(1, 2), (4, 1)],
}


class InputSpec:
    """Parsed input file: variable names, optional weights, ideal generators."""

    __slots__ = ("varnames", "weights", "gens")

    def __init__(self, varnames, weights, gens):
        self.varnames = varnames
        self.weights = weights
        self.gens = gens

    def ideal(self, weights=None):
        w = weights or self.weights
        return Ideal(len(self.varnames), self.gens, w)


def parse_input(text):
    """Parse the `vars:` / `weights:` / `ideal:` line format."""
    varnames = None
    weights = None
    ideal_text = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}")
        key, _, value = line.partition(":")
        key = key.strip().lower()
        if key == "vars":
            varnames = [v.strip() for v in value.split(",") if v.strip()]
            if not varnames:
                raise ParseError("empty vars declaration")
        elif key == "weights":
            try:
                weights = tuple(int(v.strip()) for v in value.split(","))
            except ValueError:
                raise ParseError("weights must be integers")
            if any(w <= 0 for w in weights):
                raise ParseError("weights must be positive")
        elif key == "ideal":
            ideal_text = value
        else:
            raise ParseError(f"unknown key {key!r}")
    if varnames is None:
        raise ParseError("missing vars declaration")
    if ideal_text is None:
        raise ParseError("missing ideal declaration")
    if weights is not None and len(weights) != len(varnames):
        raise ParseError("need one weight per variable")
    gens = []
    for part in ideal_text.split(";"):
        part = part.strip()
        if part:
            gens.append(parse_poly(part, varnames))
    if not gens:
        raise ParseError("ideal has no generators")
    return InputSpec(varnames, weights, gens)


def _series_json(rs):
    return rs.to_json() if rs is not None else None


class SingularityReport:
    __slots__ = ("varnames", "gens", "weights", "quasi_homogeneous", "mode",
                 "tangent_generators", "logarithmic_at_origin",
                 "jacobian_gens", "colength", "isolated", "fibre",
                 "fingerprint", "solvable", "oracle_checks", "graded_report",
                 "series", "series_note", "dimension", "multiplicity")

    def __init__(self, **kw):
        for slot in self.__slots__:
            setattr(self, slot, kw.get(slot))

    def to_json(self):
        names = self.varnames
        out = {
            "ideal": [format_poly(g, names) for g in self.gens],
            "weights": list(self.weights),
            "quasi_homogeneous": self.quasi_homogeneous,
            "mode": self.mode,
            "tangent_generators": [d.format(names) for d in self.tangent_generators],
            "logarithmic_at_origin": self.logarithmic_at_origin,
            "jacobian_ideal": [format_poly(g, names) for g in self.jacobian_gens],
            "colength": self.colength,
            "isolated": self.isolated,
            "fibre_algebra": self.fibre.to_json() if self.fibre else None,
            "fingerprint": _fingerprint_json(self.fingerprint),
            "solvable": self.solvable,
            "oracle_checks": self.oracle_checks,
        }
        if self.series is not None:
            out["series"] = _series_json(self.series)
            out["dimension"] = self.dimension
            out["multiplicity"] = str(self.multiplicity)
        if self.series_note:
            out["series_note"] = self.series_note
        return out


def _fingerprint_json(fp):
    return dict(fp) if fp else None


def _min_degree(f):
    return min(sum(e) for e in f.terms) if not f.is_zero() else 0


def _regular_sequence_heuristic(ideal):
    """Generators form a regular sequence iff their number equals the height
    (graded/Cohen-Macaulay ambient)."""
    from .derivations import krull_dimension
    return len(ideal.gens) == ideal.nvars - krull_dimension(ideal)


def _sl2_covariant_path(algebra, basis_derivations, depth):
    """Length series via covariant dimensions when the derived subalgebra of
    the fibre acts as sl2 on V = m/m^2; returns (dims, series) or None."""
    derived = algebra.derived_subalgebra_basis()
    if len(derived) != 3:
        return None
    # derived subalgebra must be simple of type sl2: Killing form of rank 3
    sub = _subalgebra_structure(algebra, derived)
    if sub is None or sub.killing_rank() != 3:
        return None
    nvars = basis_derivations[0].nvars
    # action of the derived subalgebra on V = m/m^2
    mats = []
    for coeffs in derived:
        mat = linalg.zeros(nvars, nvars)
        for c, delta in zip(coeffs, basis_derivations):
            if c:
                mat = linalg.mat_add(mat, linalg.mat_scale(delta.linear_part_matrix(), c))
        mats.append(mat)
    nil = _nilpotent_element(mats)
    if nil is None:
        return None
    dims = [_sym_kernel_dim(nil, n) for n in range(depth + 1)]
    d = nvars - 1
    factors = COVARIANT_DENOMINATORS.get(d)
    if factors is None:
        return dims, None
    series = reconstruct_rational(SeriesPrefix(dims), factors)
    return dims, series


def _subalgebra_structure(algebra, basis):
    """LieAlgebra on the given subspace basis, or None if not closed."""
    from .liealg import LieAlgebra
    rows = list(basis)
    brackets = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            br = algebra.bracket(basis[i], basis[j])
            cols = [[rows[k][t] for k in range(len(rows))] for t in range(algebra.dim)]
            sol = linalg.solve(cols, br)
            if sol is None:
                return None
            brackets[(i, j)] = sol
    return LieAlgebra(len(basis), brackets)


def _nilpotent_element(mats):
    """A nonzero nilpotent matrix in the span of mats (basis search first,
    then pairwise sums)."""
    candidates = list(mats)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            candidates.append(linalg.mat_add(mats[i], mats[j]))
            candidates.append(linalg.mat_sub(mats[i], mats[j]))
    for m in candidates:
        if any(any(row) for row in m) and linalg.is_nilpotent(m):
            return m
    return None


def _sym_kernel_dim(mat, n):
    """dim ker of the derivation action of mat on degree-n monomials."""
    dim = len(mat)
    basis = sym_power_basis(dim, n)
    index = {e: i for i, e in enumerate(basis)}
    size = len(basis)
    action = linalg.zeros(size, size)
    for col, exp in enumerate(basis):
        for i, e_i in enumerate(exp):
            if e_i == 0:
                continue
            for k in range(dim):
                c = mat[k][i]
                if not c:
                    continue
                new = list(exp)
                new[i] -= 1
                new[k] += 1
                action[index[tuple(new)]][col] += e_i * c
    return size - linalg.rank(action)


def analyze_singularity(spec, mode="tangent", series_depth=8):
    """Full singularity analysis of the ideal in an InputSpec."""
    if mode not in ("tangent", "tjurina-algebroid"):
        raise ParseError(f"unknown mode {mode!r}")
    nvars = len(spec.varnames)
    weights = spec.weights
    if weights is None:
        if len(spec.gens) == 1:
            found = quasi_homogeneous_weights(spec.gens[0])
            weights = found[0] if found else (1,) * nvars
        else:
            weights = (1,) * nvars
    ideal = Ideal(nvars, spec.gens, weights)
    quasi = ideal.is_quasi_homogeneous()
    jac = jacobian_ideal(ideal)
    colength = None if jac.is_unit() else jac.colength()
    isolated = colength is not None
    principal = len(ideal.gens) == 1

    target = ideal if mode == "tangent" else jac
    dm = tangent_derivations(target)
    logarithmic = dm.all_vanish_at_origin()

    fibre = None
    fingerprint = None
    solvable = None
    basis_derivations = None
    if quasi and target.is_quasi_homogeneous():
        fibre, basis_derivations = fibre_lie_algebra(dm)
        fingerprint = fibre.fingerprint()
        solvable = fibre.is_solvable()

    oracle_checks = {}
    if solvable is not None:
        if mode == "tangent":
            in_scope = (isolated
                        and all(_min_degree(g) >= 2 for g in ideal.gens)
                        and _regular_sequence_heuristic(ideal)
                        and (not principal or _min_degree(ideal.gens[0]) >= 3))
            if in_scope:
                oracle_checks["isolated_regular_sequence_solvable"] = solvable
                if not solvable:
                    raise InconsistencyError(
                        "CONTRADICTS-PAPER: isolated regular-sequence fibre not solvable")
        else:
            in_scope = principal and _min_degree(spec.gens[0]) >= 3 and isolated
            if in_scope:
                oracle_checks["jacobian_algebroid_solvable"] = solvable
                if not solvable:
                    raise InconsistencyError(
                        "CONTRADICTS-PAPER: Jacobian-algebroid fibre not solvable")

    series = None
    series_note = None
    graded_report = None
    dimension = None
    multiplicity = None
    if solvable and isolated:
        graded_report = graded_pieces_series(jac, "ring", depth=series_depth,
                                             solvable_certificate=True)
        series = graded_report.series
        dimension = graded_report.dimension
        multiplicity = graded_report.multiplicity
    elif fibre is not None and not solvable:
        # m-adic length series through the Levi of the fibre acting on m/m^2
        cov = _sl2_covariant_path(fibre, basis_derivations, max(series_depth, 12))
        if cov is not None:
            dims, series = cov
            if series is not None:
                dimension, multiplicity = dimension_multiplicity(series)
            else:
                series_note = "length dims computed; no builtin denominator"
        elif not isolated:
            series_note = "series out of scope (non-isolated)"
        else:
            series_note = "length not certified"
    elif not isolated:
        series_note = "series out of scope (non-isolated)"
    else:
        series_note = "length not certified"

    return SingularityReport(
        varnames=spec.varnames, gens=spec.gens, weights=weights,
        quasi_homogeneous=quasi, mode=mode,
        tangent_generators=dm.generators, logarithmic_at_origin=logarithmic,
        jacobian_gens=jac.minimal_generators(), colength=colength,
        isolated=isolated, fibre=fibre, fingerprint=fingerprint,
        solvable=solvable, oracle_checks=oracle_checks,
        graded_report=graded_report, series=series, series_note=series_note,
        dimension=dimension, multiplicity=multiplicity)


class ToralReport:
    __slots__ = ("varnames", "monomial_gens", "toral_fields_contained",
                 "jm_variables", "v_dimension", "fibre", "fingerprint",
                 "series", "dimension", "multiplicity", "scalar_check")

    def __init__(self, **kw):
        for slot in self.__slots__:
            setattr(self, slot, kw.get(slot))

    def to_json(self):
        names = self.varnames
        return {
            "monomial_generators": [format_poly(g, names) for g in self.monomial_gens],
            "toral_fields_contained": self.toral_fields_contained,
            "jm_generators": [names[i] for i in self.jm_variables],
            "v_dimension": self.v_dimension,
            "fibre_algebra": self.fibre.to_json() if self.fibre else None,
            "fingerprint": _fingerprint_json(self.fingerprint),
            "series": _series_json(self.series),
            "dimension": self.dimension,
            "multiplicity": str(self.multiplicity),
            "scalar_connection_check": self.scalar_check,
        }


def analyze_toral(spec):
    """Toral analysis of a monomial ideal: J_m from the partial-derivative
    membership criterion, fibre Lie algebra, and the (d, e) = (l(V), 1) series."""
    nvars = len(spec.varnames)
    ideal = spec.ideal()
    monos = monomialize(ideal)
    if monos is None:
        raise PreconditionError("not monomial with respect to coordinate torus")
    mono_ideal = Ideal(nvars, monos, ideal.weights)
    dm = tangent_derivations(mono_ideal)
    def nabla(i):
        return Derivation([Polynomial.variable(nvars, j) if j == i
                           else Polynomial.zero(nvars) for j in range(nvars)])

    toral_ok = all(dm.contains(nabla(i)) for i in range(nvars))
    jm_vars = [i for i in range(nvars)
               if not dm.contains(Derivation.partial(nvars, i))]
    r = len(jm_vars)
    fibre, _basis = fibre_lie_algebra(dm, require_origin=False)
    fingerprint = fibre.fingerprint()
    # Prop 4.1-style scalar connection test on the toral fields
    scalar_ok = True
    for i in range(nvars):
        field = nabla(i)
        for g in monos:
            exp = next(iter(g.terms))
            if field.apply(g) != g * exp[i]:
                scalar_ok = False
    series = RationalSeries([1], [(1, r)]) if r else RationalSeries([1], [])
    d, e = dimension_multiplicity(series) if r else (0, Fraction(1))
    if (d, e) != (r, 1):
        raise InconsistencyError("CONTRADICTS-PAPER: toral multiplicity is not 1")
    # cross-check the dims against explicit graded pieces when J_m is m-primary
    if r == nvars:
        jm = Ideal(nvars, [Polynomial.variable(nvars, i) for i in jm_vars])
        rep = graded_pieces_series(jm, "ring", depth=5, solvable_certificate=True)
        if rep.series != series:
            raise InconsistencyError("CONTRADICTS-PAPER: toral series mismatch")
    return ToralReport(
        varnames=spec.varnames, monomial_gens=monos,
        toral_fields_contained=toral_ok, jm_variables=jm_vars,
        v_dimension=r, fibre=fibre, fingerprint=fingerprint, series=series,
        dimension=d, multiplicity=e, scalar_check=scalar_ok)


class CovariantReport:
    __slots__ = ("degree", "depth", "dims", "series", "quasi", "dimension",
                 "multiplicity")

    def __init__(self, degree, depth, dims, series, quasi, dimension, multiplicity):
        self.degree = degree
        self.depth = depth
        self.dims = dims
        self.series = series
        self.quasi = quasi
        self.dimension = dimension
        self.multiplicity = multiplicity

    def to_json(self):
        out = {"degree": self.degree, "depth": self.depth, "dims": self.dims,
               "series": _series_json(self.series)}
        if self.quasi is not None:
            out["quasi_polynomial"] = self.quasi.to_json()
        if self.dimension is not None:
            out["dimension"] = self.dimension
            out["multiplicity"] = str(self.multiplicity)
        return out


def covariants_report(d, depth, denominator=None):
    """Series of the covariant algebra of binary forms of degree d."""
    from .repmod import covariant_dimension

    if d > 6 or depth > 40:
        raise PreconditionError("desk scale exceeded (d <= 6, N <= 40)")
    dims = [covariant_dimension(n, d) for n in range(depth + 1)]
    factors = denominator if denominator is not None else COVARIANT_DENOMINATORS.get(d)
    series = None
    quasi = None
    dim = mult = None
    if factors is not None:
        series = reconstruct_rational(SeriesPrefix(dims), factors)
        quasi = quasi_polynomial_of(series)
        dim, mult = dimension_multiplicity(series)
    return CovariantReport(d, depth, dims, series, quasi, dim, mult)
