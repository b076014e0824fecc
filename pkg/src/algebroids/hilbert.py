"""Hilbert series of weighted-graded quotients, equivariant torus-character
series of monomial ideals, J-adic graded pieces, and dimension/multiplicity
extraction from rational series."""

from fractions import Fraction
from math import factorial

from .errors import PreconditionError
from .groebner import Ideal
from .series import (CharacterSeries, QuasiPolynomial, RationalSeries,
                     SemigroupSpec, cumulative_quasi_polynomial,
                     gamma_restriction, integrate_characters,
                     quasi_polynomial_of, reconstruct_rational, SeriesPrefix)


def _wdeg(exp, weights):
    return sum(w * e for w, e in zip(weights, exp))


def _monomial_numerator(gens, weights):
    """Numerator coefficients of the Hilbert series of A/(monomial gens),
    by the colon recursion K(I) = K(I') - t^deg(m) K(I':m)."""
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    if any(all(e == 0 for e in g) for g in gens):
        return {}
    m = gens[0]
    rest = gens[1:]
    without = _monomial_numerator(rest, weights)
    colon = _minimalize([tuple(max(e - f, 0) for e, f in zip(g, m)) for g in rest])
    shifted = _monomial_numerator(colon, weights)
    d = _wdeg(m, weights)
    out = dict(without)
    for k, c in shifted.items():
        out[k + d] = out.get(k + d, 0) - c
    return {k: c for k, c in out.items() if c}


def _minimalize(gens):
    out = []
    for g in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(m, g)) for m in out):
            out.append(g)
    return out


def hilbert_series_quotient(ideal):
    """Hilbert series of A/I for a weighted-homogeneous ideal I, with
    denominator prod (1 - t^{w_i})."""
    weights = ideal.weights
    if not ideal.is_quasi_homogeneous():
        raise PreconditionError("not homogeneous")
    exps = ideal.leading_exponents() if not ideal.is_zero() else []
    numerator = _monomial_numerator([tuple(e) for e in exps], weights)
    top = max(numerator) if numerator else 0
    coeffs = [numerator.get(k, 0) for k in range(top + 1)]
    factors = []
    for w in sorted(weights):
        for i, (n, mult) in enumerate(factors):
            if n == w:
                factors[i] = (n, mult + 1)
                break
        else:
            factors.append((w, 1))
    return RationalSeries(coeffs, factors)


def _standard_monomial_characters(gens, weights, bound):
    """Map weighted degree -> {exponent: 1} over monomials outside the ideal."""
    n = len(weights)
    coeffs = {}

    def rec(i, exp, deg):
        if i == n:
            if not any(all(a >= b for a, b in zip(exp, g)) for g in gens):
                coeffs.setdefault(deg, {})[tuple(exp)] = 1
            return
        e = 0
        while deg + e * weights[i] <= bound:
            rec(i + 1, exp + [e], deg + e * weights[i])
            e += 1

    rec(0, [], 0)
    return coeffs


def equivariant_series_monomial(ideal, bound=12):
    """Torus-character Hilbert series of A/I for a monomial ideal I.

    Closed form by inclusion-exclusion over generator subsets; explicit
    coefficients through the bound by direct standard-monomial enumeration.
    """
    from .derivations import monomialize

    weights = ideal.weights
    n = ideal.nvars
    if ideal.is_zero():
        gens = []
    else:
        monos = monomialize(ideal)
        if monos is None:
            raise PreconditionError("not monomial with respect to coordinate torus")
        gens = [next(iter(m.terms)) for m in monos]
    if len(gens) > 15:
        raise PreconditionError("too many generators")
    closed_terms = []
    for mask in range(1 << len(gens)):
        subset = [gens[i] for i in range(len(gens)) if mask >> i & 1]
        sign = -1 if bin(mask).count("1") % 2 else 1
        lcm_exp = tuple(max(g[i] for g in subset) if subset else 0 for i in range(n))
        closed_terms.append((sign, lcm_exp, _wdeg(lcm_exp, weights)))
    closed_den = []
    for i in range(n):
        unit = tuple(1 if j == i else 0 for j in range(n))
        closed_den.append((unit, weights[i]))
    coeffs = _standard_monomial_characters(gens, weights, bound)
    return CharacterSeries(n, coeffs, bound, closed_terms, closed_den)


class GradedPieceReport:
    """Dimensions of J^i M / J^{i+1} M with a reconstructed series and the
    (dimension, multiplicity) pair of the cumulative quasi-polynomial."""

    __slots__ = ("dims", "series", "quasi", "cumulative", "dimension",
                 "multiplicity", "lengths_certified", "caveat")

    def __init__(self, dims, series, quasi, cumulative, dimension, multiplicity,
                 lengths_certified, caveat):
        self.dims = dims
        self.series = series
        self.quasi = quasi
        self.cumulative = cumulative
        self.dimension = dimension
        self.multiplicity = multiplicity
        self.lengths_certified = lengths_certified
        self.caveat = caveat

    def to_json(self):
        out = {
            "dims": [[i, d] for i, d in self.dims],
            "series": self.series.to_json() if self.series else None,
            "dimension": self.dimension,
            "multiplicity": str(self.multiplicity),
            "lengths_certified": self.lengths_certified,
        }
        if self.quasi is not None:
            out["quasi_polynomial"] = self.quasi.to_json()
        if self.caveat:
            out["caveat"] = self.caveat
        return out


def graded_pieces_series(j_ideal, m_spec="ring", depth=8, solvable_certificate=False):
    """Series of the J-adic associated graded module sum dim(J^i M/J^{i+1} M) t^i.

    m_spec is "ring" for M = A or an Ideal for M an ideal of A.  Dimensions are
    exact vector-space dimensions; they equal lengths under a solvability
    certificate, otherwise the report carries a caveat.
    """
    if j_ideal.colength() is None:
        raise PreconditionError("J not m-primary")
    minimal = j_ideal.minimal_generators()
    mu = len(minimal)
    j_min = Ideal(j_ideal.nvars, minimal, j_ideal.weights)
    dims = []
    if m_spec == "ring":
        modules = [j_min.power(i) for i in range(depth + 2)]
    else:
        modules = [j_min.power(i).product(m_spec) for i in range(depth + 2)]
    colengths = []
    for mod in modules:
        c = 0 if mod.is_unit() else mod.colength()
        if c is None:
            raise PreconditionError("J not m-primary")
        colengths.append(c)
    for i in range(depth + 1):
        dims.append((i, colengths[i + 1] - colengths[i]))
    prefix = SeriesPrefix([d for _i, d in dims])
    series = reconstruct_rational(prefix, [(1, mu)])
    quasi = quasi_polynomial_of(series)
    cumulative = cumulative_quasi_polynomial(series)
    d, e = dimension_multiplicity(series)
    caveat = None if solvable_certificate else "lengths reported as dimensions; requires solvable fibre"
    return GradedPieceReport(dims, series, quasi, cumulative, d, e,
                             solvable_certificate, caveat)


def dimension_multiplicity(rs):
    """(d, e) of a length series: the length function grows like (e/d!) n^d.

    When the coefficient function of rs is an honest polynomial the series
    is read as a graded-pieces series and the Hilbert-Samuel function is its
    cumulative sum; when it is genuinely periodic (a covariant-type series)
    the coefficient quasi-polynomial carries (d, e) directly.
    """
    if not rs.numerator:
        return 0, Fraction(0)
    coeff_qp = quasi_polynomial_of(rs)
    genuinely_periodic = any(p != coeff_qp.residues[0] for p in coeff_qp.residues)
    if genuinely_periodic:
        qp = coeff_qp
    else:
        qp = cumulative_quasi_polynomial(rs)
    d = qp.degree
    if d < 0:
        return 0, Fraction(0)
    e = factorial(d) * qp.leading_coefficient()
    return d, e
