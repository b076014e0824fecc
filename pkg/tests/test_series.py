"""Rational series, quasi-polynomials, and character series."""

import random
from fractions import Fraction
from math import comb

import pytest

from algebroids.errors import AlgebroidError
from algebroids.series import (CharacterSeries, QuasiPolynomial,
                               RationalSeries, SemigroupSpec, SeriesPrefix,
                               cumulative_quasi_polynomial, expand_series,
                               gamma_restriction, integrate_characters,
                               partitions_in_rectangle, quasi_polynomial_of,
                               reconstruct_rational)


# -- partitions ----------------------------------------------------------

def brute_partitions(m, d, n):
    """Partitions of m with at most n parts, each part at most d."""
    count = 0
    def rec(rem, maxpart, slots):
        nonlocal count
        if rem == 0:
            count += 1
            return
        if slots == 0:
            return
        for p in range(min(rem, maxpart), 0, -1):
            rec(rem - p, p, slots - 1)
    rec(m, d, n)
    return count


def test_partitions_examples():
    assert partitions_in_rectangle(0, 5, 5) == 1
    assert partitions_in_rectangle(4, 3, 3) == 3  # (3,1),(2,2),(2,1,1)
    assert partitions_in_rectangle(-1, 3, 3) == 0
    assert partitions_in_rectangle(10, 3, 3) == 0


def test_partitions_against_brute_force():
    for d in range(5):
        for n in range(5):
            for m in range(d * n + 1):
                assert partitions_in_rectangle(m, d, n) == brute_partitions(m, d, n)


def test_partitions_symmetry_and_column_sum():
    for d in range(9):
        for n in range(9):
            total = 0
            for m in range(d * n + 1):
                p = partitions_in_rectangle(m, d, n)
                assert p == partitions_in_rectangle(d * n - m, d, n)
                total += p
            assert total == comb(n + d, d)


# -- expansion and reconstruction ----------------------------------------

def test_expand_examples():
    rs = RationalSeries([1], [(1, 1), (2, 1)])
    assert expand_series(rs, 5).as_ints() == [1, 1, 2, 2, 3, 3]
    rs = RationalSeries([1], [(1, 3)])
    assert expand_series(rs, 3).as_ints() == [1, 3, 6, 10]
    assert expand_series(RationalSeries([], [(1, 2)]), 4).as_ints() == [0] * 5


def test_reconstruct_examples():
    ones = SeriesPrefix([1] * 10)
    rs = reconstruct_rational(ones, [(1, 1)])
    assert rs.numerator == [1]
    # wrong denominator guess must be detected
    prefix = SeriesPrefix([n // 2 + 1 for n in range(12)])
    with pytest.raises(AlgebroidError, match="no stabilization"):
        reconstruct_rational(prefix, [(1, 3)])


def test_reconstruct_round_trip_random():
    rng = random.Random(23)
    for _ in range(40):
        num = [rng.randrange(-4, 5) for _ in range(rng.randrange(1, 5))]
        factors = []
        for n in range(1, 5):
            mult = rng.randrange(0, 3)
            if mult:
                factors.append((n, mult))
        if not factors:
            factors = [(1, 1)]
        rs = RationalSeries(num, factors)
        bound = rs.numerator_degree + rs.denominator_degree + 6
        prefix = rs.expand(bound)
        back = reconstruct_rational(prefix, factors)
        assert back.expand(bound).coeffs == prefix.coeffs


# -- quasi-polynomials ---------------------------------------------------

def test_quasi_polynomial_free_semigroup():
    for l in range(1, 6):
        qp = quasi_polynomial_of(RationalSeries([1], [(1, l)]))
        for n in range(31):
            assert qp(n) == comb(n + l - 1, l - 1)


def test_quasi_polynomial_covariant_cubic():
    rs = RationalSeries([1, -1, 1], [(1, 2), (4, 1)])
    qp = quasi_polynomial_of(rs)
    assert qp.period == 4
    const = [Fraction(1), Fraction(3, 8), Fraction(1, 2), Fraction(3, 8)]
    for n in range(qp.threshold, 40):
        assert qp(n) == Fraction(n * n, 8) + Fraction(n, 2) + const[n % 4]


def test_quasi_polynomial_zero():
    qp = quasi_polynomial_of(RationalSeries([], [(1, 2)]))
    assert qp.is_zero()


def test_quasi_polynomial_matches_expansion_random():
    rng = random.Random(41)
    for _ in range(25):
        num = [rng.randrange(-3, 4) for _ in range(rng.randrange(1, 4))]
        factors = [(n, rng.randrange(0, 2) + (1 if n == 1 else 0))
                   for n in (1, 2, 3, 4)]
        factors = [(n, m) for n, m in factors if m]
        rs = RationalSeries(num, factors)
        qp = quasi_polynomial_of(rs)
        hi = 4 * qp.period + qp.threshold + 5
        prefix = rs.expand(hi)
        for n in range(qp.threshold, hi + 1):
            assert qp(n) == prefix[n]


def test_cumulative_quasi_polynomial():
    rs = RationalSeries([2], [(1, 2)])  # coefficients 2(n+1)
    cum = cumulative_quasi_polynomial(rs)
    for n in range(20):
        assert cum(n) == (n + 1) * (n + 2)


# -- character series ----------------------------------------------------

def xy_quotient_series(bound):
    """Character series of Q[x,y]/(xy): standard monomials x^a, y^b."""
    coeffs = {0: {(0, 0): 1}}
    for n in range(1, bound + 1):
        coeffs[n] = {(n, 0): 1, (0, n): 1}
    return CharacterSeries(2, coeffs, bound,
                           closed_terms=[(1, (0, 0), 0), (-1, (1, 1), 2)],
                           closed_denominator=[((1, 0), 1), ((0, 1), 1)])


def test_integrate_characters():
    cs = xy_quotient_series(8)
    prefix, closed = integrate_characters(cs)
    assert prefix.as_ints() == [1, 2, 2, 2, 2, 2, 2, 2, 2]
    assert closed is not None
    assert closed.expand(8).coeffs == prefix.coeffs  # (1+t)/(1-t)


def test_integrate_commutes_with_truncation():
    cs = xy_quotient_series(8)
    a, _ = integrate_characters(cs.truncate(5))
    b, _ = integrate_characters(cs)
    assert a.truncate(5).coeffs[:6] == b.truncate(5).coeffs[:6]


def polynomial_ring_series(bound):
    coeffs = {}
    for n in range(bound + 1):
        coeffs[n] = {(a, n - a): 1 for a in range(n + 1)}
    return CharacterSeries(2, coeffs, bound)


def test_gamma_restriction_identity_and_idempotence():
    cs = polynomial_ring_series(8)
    full = SemigroupSpec(2, [(1, 0), (0, 1)])
    restricted, report = gamma_restriction(cs, full)
    assert restricted == cs
    assert report["condition_holds_on_support"]
    again, _ = gamma_restriction(restricted, full)
    assert again == restricted


def test_gamma_restriction_diagonal():
    cs = polynomial_ring_series(10)
    diag = SemigroupSpec(2, [(1, 1)])
    restricted, report = gamma_restriction(cs, diag)
    assert report["condition_holds_on_support"]
    prefix, _ = integrate_characters(restricted)
    # only the diagonal monomials (xy)^a survive: 1/(1-t^2)
    assert prefix.as_ints() == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_semigroup_membership():
    s = SemigroupSpec(2, [(2, 0), (0, 3)])
    assert s.contains((4, 3))
    assert not s.contains((1, 0))
    assert s.contains((0, 0))
