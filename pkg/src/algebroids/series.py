"""Rational power series, quasi-polynomials, and torus-character series.

A RationalSeries is a numerator polynomial in t over a product of factors
(1 - t^n)^d; equality is equality of expansions.  Quasi-polynomials are stored
one residue polynomial per class mod the period.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, factorial

from . import linalg
from .errors import AlgebroidError, PreconditionError


@lru_cache(maxsize=None)
def partitions_in_rectangle(m, d, n):
    """Number of partitions of m with at most n parts, each part at most d."""
    if d < 0 or n < 0:
        raise ValueError("rectangle sides must be non-negative")
    if m < 0 or m > n * d:
        return 0
    if m == 0:
        return 1
    # split on whether some part equals d
    return partitions_in_rectangle(m, d - 1, n) + partitions_in_rectangle(m - d, d, n - 1)


class SeriesPrefix:
    """Coefficients 0..N of a formal power series."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = [Fraction(c) for c in coeffs]

    @property
    def bound(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, SeriesPrefix) and self.coeffs == other.coeffs

    def truncate(self, n):
        return SeriesPrefix(self.coeffs[: n + 1])

    def as_ints(self):
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise AlgebroidError("expansion coefficient is not an integer")
            out.append(c.numerator)
        return out

    def __repr__(self):
        return f"SeriesPrefix({self.as_ints() if all(c.denominator == 1 for c in self.coeffs) else self.coeffs})"


class RationalSeries:
    """numerator(t) / prod (1 - t^n)^d with integer expansion."""

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator, factors):
        # numerator: coefficient list (index = power of t), integers
        num = [int(c) for c in numerator]
        while num and num[-1] == 0:
            num.pop()
        self.numerator = num
        clean = {}
        for n, d in factors:
            if n < 1 or d < 1:
                raise PreconditionError("denominator factors must have n >= 1, multiplicity >= 1")
            clean[n] = clean.get(n, 0) + d
        self.factors = tuple(sorted(clean.items()))

    @property
    def numerator_degree(self):
        return len(self.numerator) - 1

    @property
    def denominator_degree(self):
        return sum(n * d for n, d in self.factors)

    @property
    def pole_count(self):
        return sum(d for _, d in self.factors)

    def denominator_poly(self):
        """Coefficient list of prod (1 - t^n)^d."""
        poly = [1]
        for n, d in self.factors:
            for _ in range(d):
                new = poly + [0] * n
                for k in range(len(poly)):
                    new[k + n] -= poly[k]
                poly = new
        return poly

    def expand(self, bound):
        return expand_series(self, bound)

    def with_extra_factor(self, n, d=1):
        return RationalSeries(self.numerator, list(self.factors) + [(n, d)])

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        bound = max(self.numerator_degree + self.denominator_degree,
                    other.numerator_degree + other.denominator_degree, 0) + 1
        return self.expand(bound).coeffs == other.expand(bound).coeffs

    def to_json(self):
        return {"numerator": list(self.numerator),
                "denominator": [{"n": n, "mult": d} for n, d in self.factors]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["numerator"], [(f["n"], f["mult"]) for f in obj["denominator"]])

    def __repr__(self):
        den = "".join(f"(1-t^{n})^{d}" if d > 1 else f"(1-t^{n})" for n, d in self.factors)
        return f"RationalSeries({self.numerator} / {den or '1'})"


def expand_series(rs, bound):
    """Coefficients 0..bound of the expansion of rs; exact."""
    if bound < 0:
        raise PreconditionError("bound must be >= 0")
    coeffs = [Fraction(0)] * (bound + 1)
    for k, c in enumerate(rs.numerator):
        if k <= bound:
            coeffs[k] = Fraction(c)
    for n, d in rs.factors:
        for _ in range(d):
            for k in range(n, bound + 1):
                coeffs[k] += coeffs[k - n]
    return SeriesPrefix(coeffs)


def reconstruct_rational(prefix, factors):
    """Find the RationalSeries with the given denominator matching the prefix.

    Raises "no stabilization" when the prefix times the denominator does not
    terminate early enough to certify the numerator.
    """
    rs_probe = RationalSeries([1], factors)
    den = rs_probe.denominator_poly()
    bound = prefix.bound
    prod = [Fraction(0)] * (bound + 1)
    for k in range(bound + 1):
        total = Fraction(0)
        for j, c in enumerate(den):
            if j <= k:
                total += c * prefix[k - j]
        prod[k] = total
    cutoff = bound - rs_probe.denominator_degree
    if cutoff < 0 or any(prod[k] != 0 for k in range(cutoff + 1, bound + 1)):
        raise AlgebroidError("no stabilization")
    num = prod[: cutoff + 1]
    for c in num:
        if c.denominator != 1:
            raise AlgebroidError("no stabilization")
    rs = RationalSeries([c.numerator for c in num], factors)
    if rs.expand(bound).coeffs != prefix.coeffs:
        raise AlgebroidError("no stabilization")
    return rs


class QuasiPolynomial:
    """Period p, one rational-coefficient polynomial per residue class."""

    __slots__ = ("period", "residues", "threshold")

    def __init__(self, period, residues, threshold=0):
        if period < 1 or len(residues) != period:
            raise ValueError("need one residue polynomial per class")
        self.period = period
        self.residues = []
        for poly in residues:
            coeffs = [Fraction(c) for c in poly]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            self.residues.append(coeffs)
        self.threshold = threshold

    def __call__(self, n):
        poly = self.residues[n % self.period]
        return sum((c * Fraction(n) ** k for k, c in enumerate(poly)), Fraction(0))

    @property
    def degree(self):
        degs = [len(p) - 1 for p in self.residues if p]
        return max(degs) if degs else -1

    def leading_coefficient(self):
        """The common top-degree coefficient; error if residues disagree."""
        d = self.degree
        if d < 0:
            return Fraction(0)
        leads = {(p[d] if len(p) == d + 1 else Fraction(0)) for p in self.residues}
        if len(leads) != 1:
            raise AlgebroidError("ill-defined leading term")
        return leads.pop()

    def is_zero(self):
        return all(not p for p in self.residues)

    def __eq__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        n0 = max(self.threshold, other.threshold)
        p = lcm(self.period, other.period)
        return all(self(n) == other(n) for n in range(n0, n0 + 2 * p + 1))

    def to_json(self):
        return {"period": self.period, "n0": self.threshold,
                "residues": [[str(c) for c in poly] for poly in self.residues]}

    def __repr__(self):
        return f"QuasiPolynomial(period={self.period}, residues={self.residues}, n0={self.threshold})"


def _fit_polynomial(points):
    """Exact polynomial through (x, y) points, coefficient list ascending."""
    k = len(points)
    rows = [[Fraction(x) ** j for j in range(k)] for x, _ in points]
    sol = linalg.solve(rows, [Fraction(y) for _, y in points])
    if sol is None:
        raise AlgebroidError("polynomial fit failed")
    while sol and sol[-1] == 0:
        sol.pop()
    return sol


def quasi_polynomial_of(rs):
    """Quasi-polynomial giving coefficient(n) of rs for n >= threshold."""
    period = lcm(*[n for n, _ in rs.factors]) if rs.factors else 1
    if not rs.numerator:
        return QuasiPolynomial(period, [[] for _ in range(period)], 0)
    max_deg = rs.pole_count - 1
    n0 = rs.numerator_degree + 1
    need = n0 + period * (max_deg + 1) + 2 * period
    prefix = rs.expand(need)
    residues = []
    for r in range(period):
        start = n0 + ((r - n0) % period)
        xs = [start + period * j for j in range(max_deg + 1)]
        poly = _fit_polynomial([(x, prefix[x]) for x in xs])
        residues.append(poly)
    qp = QuasiPolynomial(period, residues, n0)
    for n in range(n0, need + 1):
        if qp(n) != prefix[n]:
            raise AlgebroidError("quasi-polynomial fit did not verify")
    return qp


def cumulative_quasi_polynomial(rs):
    """Quasi-polynomial of the partial sums sum_{i<=n} coefficient(i)."""
    return quasi_polynomial_of(rs.with_extra_factor(1))


def quasi_polynomials_of(rs):
    """(coefficient quasi-polynomial, cumulative quasi-polynomial)."""
    return quasi_polynomial_of(rs), cumulative_quasi_polynomial(rs)


# -- torus-character series ----------------------------------------------

class CharacterSeries:
    """Degreewise Laurent combinations of torus characters, with optional
    closed form sum of signed terms over (1 - q^chi t^p) factors."""

    __slots__ = ("rank", "coeffs", "bound", "closed_terms", "closed_denominator")

    def __init__(self, rank, coeffs, bound, closed_terms=None, closed_denominator=None):
        self.rank = rank
        self.coeffs = {}
        for n, lc in coeffs.items():
            clean = {tuple(chi): int(c) for chi, c in lc.items() if c != 0}
            if clean:
                self.coeffs[n] = clean
        self.bound = bound
        # closed_terms: list of (coeff, chi, tpow); closed_denominator: list of (chi, tpow)
        self.closed_terms = [(int(s), tuple(chi), int(p)) for s, chi, p in closed_terms] if closed_terms else None
        self.closed_denominator = [(tuple(chi), int(p)) for chi, p in closed_denominator] if closed_denominator else None

    def has_closed_form(self):
        return self.closed_terms is not None and self.closed_denominator is not None

    def coefficient(self, n):
        return dict(self.coeffs.get(n, {}))

    def truncate(self, n):
        return CharacterSeries(self.rank, {k: v for k, v in self.coeffs.items() if k <= n},
                               min(self.bound, n), self.closed_terms, self.closed_denominator)

    def support(self):
        chars = set()
        for lc in self.coeffs.values():
            chars.update(lc)
        return chars

    def __eq__(self, other):
        return (isinstance(other, CharacterSeries) and self.rank == other.rank
                and self.bound == other.bound and self.coeffs == other.coeffs)


def integrate_characters(cs):
    """Apply the per-coefficient summation map q^chi -> 1.

    Returns (SeriesPrefix, RationalSeries or None); the closed series is
    produced whenever the input carries a closed form.
    """
    coeffs = [Fraction(0)] * (cs.bound + 1)
    for n, lc in cs.coeffs.items():
        if 0 <= n <= cs.bound:
            coeffs[n] = Fraction(sum(lc.values()))
    prefix = SeriesPrefix(coeffs)
    closed = None
    if cs.has_closed_form():
        deg = max((p for _, _, p in cs.closed_terms), default=0)
        num = [0] * (deg + 1)
        for s, _, p in cs.closed_terms:
            num[p] += s
        factors = {}
        for _, p in cs.closed_denominator:
            factors[p] = factors.get(p, 0) + 1
        closed = RationalSeries(num, sorted(factors.items()))
    return prefix, closed


class SemigroupSpec:
    """Finitely generated subsemigroup of Z^m with bounded membership test."""

    __slots__ = ("rank", "generators", "bound")

    def __init__(self, rank, generators, bound=64):
        self.rank = rank
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != rank:
                raise ValueError("generator arity mismatch")
        self.bound = bound

    def contains(self, chi):
        chi = tuple(chi)
        if len(chi) != self.rank:
            return False
        zero = (0,) * self.rank
        if chi == zero:
            return True
        if sum(abs(c) for c in chi) > self.bound:
            raise PreconditionError("membership query exceeds the configured bound")
        if all(all(c >= 0 for c in g) for g in self.generators):
            # non-negative generators: descend componentwise
            seen = set()
            stack = [chi]
            while stack:
                pt = stack.pop()
                if pt in seen:
                    continue
                seen.add(pt)
                for g in self.generators:
                    rem = tuple(a - b for a, b in zip(pt, g))
                    if rem == zero:
                        return True
                    if all(c >= 0 for c in rem):
                        stack.append(rem)
            return False
        # mixed signs: breadth-first search bounded by coordinate size
        seen = {zero}
        frontier = [zero]
        while frontier:
            new = []
            for pt in frontier:
                for g in self.generators:
                    nxt = tuple(a + b for a, b in zip(pt, g))
                    if nxt == chi:
                        return True
                    if nxt not in seen and all(abs(c) <= self.bound for c in nxt):
                        seen.add(nxt)
                        new.append(nxt)
            frontier = new
        return False


def gamma_restriction(cs, gamma):
    """Filter a CharacterSeries to characters in the subsemigroup gamma.

    Returns (restricted series, condition report dict).  The noetherianity
    condition Gamma + Gamma^c subset Gamma^c is checked exhaustively on the
    support found through the series bound, and reported as verified-to-bound.
    """
    inside, outside = set(), set()
    for chi in cs.support():
        (inside if gamma.contains(chi) else outside).add(chi)
    violations = []
    for g in inside:
        for c in outside:
            s = tuple(a + b for a, b in zip(g, c))
            try:
                if gamma.contains(s):
                    violations.append((g, c))
            except PreconditionError:
                pass
    restricted = CharacterSeries(
        cs.rank,
        {n: {chi: v for chi, v in lc.items() if chi in inside} for n, lc in cs.coeffs.items()},
        cs.bound)
    report = {"verified_to_bound": cs.bound, "condition_holds_on_support": not violations,
              "violations": violations}
    return restricted, report
