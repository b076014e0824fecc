"""Tangential derivation modules, Jacobian ideals, weights, monomialization."""

import random

from algebroids.derivations import (Derivation, jacobian_ideal, monomialize,
                                    quasi_homogeneous_weights,
                                    tangent_derivations, tjurina_ideal)
from algebroids.groebner import Ideal
from algebroids.poly import Polynomial, parse_poly
from algebroids import linalg
from fractions import Fraction


def P(text, varnames):
    return parse_poly(text, list(varnames))


def whitney_ideal():
    return Ideal(3, [P("z^2 - x^2*y", "xyz")], (1, 2, 2))


def test_quasi_homogeneous_weights():
    w, d = quasi_homogeneous_weights(P("z^2 - x^2*y", "xyz"))
    assert (w, d) == ((1, 2, 2), 4)
    f = P("x^3 + x*y^2", "xy")  # homogeneous
    assert quasi_homogeneous_weights(f) == ((1, 1), 3)
    assert quasi_homogeneous_weights(P("x^2 + x^3", "xy")) is None


def test_jacobian_ideal_examples():
    cusp = jacobian_ideal(Ideal(2, [P("x^3 - y^2", "xy")]))
    assert cusp.equals(Ideal(2, [P("x^2", "xy"), P("y", "xy")]))
    wu = jacobian_ideal(whitney_ideal())
    assert wu.equals(Ideal(3, [P("x^2", "xyz"), P("x*y", "xyz"), P("z", "xyz")],
                           (1, 2, 2)))
    quad = jacobian_ideal(Ideal(3, [P("x^2 + y^2 + z^2", "xyz")]))
    assert quad.equals(Ideal(3, [P(v, "xyz") for v in "xyz"]))


def test_tjurina_ideal_matches_jacobian_for_hypersurface():
    f = P("x^3 - y^2", "xy")
    assert tjurina_ideal(f).equals(jacobian_ideal(Ideal(2, [f])))


def test_tangent_linear_ideal():
    # I = (x1, x2) in 3 vars: T(I) = A d3 + sum_{i,j<=2} A xi dj
    ideal = Ideal(3, [Polynomial.variable(3, 0), Polynomial.variable(3, 1)])
    dm = tangent_derivations(ideal)
    zero = Polynomial.zero(3)
    expected = [Derivation([zero, zero, Polynomial.one(3)])]
    for i in range(2):
        for j in range(2):
            coeffs = [zero] * 3
            coeffs[j] = Polynomial.variable(3, i)
            expected.append(Derivation(coeffs))
    assert dm.equals_generators(expected)


def known_whitney_basis():
    zero = Polynomial.zero(3)
    x = Polynomial.variable(3, 0)
    y = Polynomial.variable(3, 1)
    z = Polynomial.variable(3, 2)
    d1 = Derivation([x, -2 * y, zero])
    d2 = Derivation([x, zero, z])
    d3 = Derivation([zero, 2 * z, x * x])
    d4 = Derivation([z, zero, x * y])
    return [d1, d2, d3, d4]


def test_tangent_whitney_matches_known_basis():
    dm = tangent_derivations(whitney_ideal())
    assert dm.equals_generators(known_whitney_basis())


def test_tangent_quadric():
    ideal = Ideal(3, [P("x^2 + y^2 + z^2", "xyz")])
    dm = tangent_derivations(ideal)
    zero = Polynomial.zero(3)
    expected = [Derivation.euler(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            coeffs = [zero] * 3
            coeffs[j] = Polynomial.variable(3, i)
            coeffs[i] = -Polynomial.variable(3, j)
            expected.append(Derivation(coeffs))
    assert dm.equals_generators(expected)


def test_tangent_soundness():
    for ideal in (whitney_ideal(),
                  Ideal(2, [P("x^3 - y^2", "xy")]),
                  Ideal(3, [P("x^2 + y^2 + z^2", "xyz")])):
        dm = tangent_derivations(ideal)
        for delta in dm.generators:
            for f in ideal.gens:
                assert ideal.contains(delta.apply(f))


def test_euler_membership():
    for text, names in [("z^2 - x^2*y", "xyz"), ("x^3 - y^2", "xy"),
                        ("x^3 + y^3 + z^3", "xyz")]:
        f = P(text, names)
        w, _ = quasi_homogeneous_weights(f)
        ideal = Ideal(len(names), [f], w)
        dm = tangent_derivations(ideal)
        assert dm.contains(Derivation.euler(len(names), w))


def test_jacobian_preserved_by_tangent_derivations():
    for ideal in (whitney_ideal(), Ideal(2, [P("x^3 - y^2", "xy")])):
        dm = tangent_derivations(ideal)
        jac = jacobian_ideal(ideal)
        for delta in dm.generators:
            for g in jac.gens:
                assert jac.contains(delta.apply(g))


def test_contains_derivation_examples():
    dm = tangent_derivations(whitney_ideal())
    assert not dm.contains(Derivation.partial(3, 2))
    mono = Ideal(2, [P("x^2*y^3", "xy")])
    dm2 = tangent_derivations(mono)
    x_dx = Derivation([Polynomial.variable(2, 0), Polynomial.zero(2)])
    assert dm2.contains(x_dx)
    linear = Ideal(3, [Polynomial.variable(3, 0), Polynomial.variable(3, 1)])
    assert tangent_derivations(linear).contains(Derivation.partial(3, 2))


def brute_force_derivations(f, weights, bound):
    """All derivations delta with delta(f) in (f) and coefficients of weighted
    degree <= bound, by linear algebra over monomial coefficients."""
    n = f.nvars
    fdeg = f.degree(weights)

    def monomials_up_to(b):
        out = []
        def rec(prefix):
            if len(prefix) == n:
                if sum(w * e for w, e in zip(weights, prefix)) <= b:
                    out.append(tuple(prefix))
                return
            for e in range(b + 1):
                if weights[len(prefix)] * e > b:
                    break
                rec(prefix + [e])
        rec([])
        return out

    # unknowns: coefficient monomials for each a_i, plus monomials of h in
    # delta(f) = h f
    unknowns = []
    for i in range(n):
        for m in monomials_up_to(bound):
            unknowns.append(("a", i, m))
    for m in monomials_up_to(bound):
        unknowns.append(("h", None, m))
    columns = []
    for kind, i, m in unknowns:
        if kind == "a":
            contrib = Polynomial.monomial(n, m) * f.diff(i)
        else:
            contrib = -(Polynomial.monomial(n, m) * f)
        columns.append(contrib)
    support = sorted({e for c in columns for e in c.terms})
    index = {e: k for k, e in enumerate(support)}
    rows = [[Fraction(0)] * len(unknowns) for _ in support]
    for j, c in enumerate(columns):
        for e, v in c.terms.items():
            rows[index[e]][j] = v
    found = []
    for vec in linalg.kernel_basis(rows):
        coeffs = [Polynomial.zero(n) for _ in range(n)]
        for (kind, i, m), v in zip(unknowns, vec):
            if kind == "a" and v:
                coeffs[i] = coeffs[i] + Polynomial.monomial(n, m, v)
        delta = Derivation(coeffs)
        if not delta.is_zero():
            found.append(delta)
    return found


def test_tangent_completeness_desk_scale():
    cases = [(P("x^3 - y^2", "xy"), (2, 3), 5),
             (P("z^2 - x^2*y", "xyz"), (1, 2, 2), 4)]
    for f, weights, bound in cases:
        ideal = Ideal(f.nvars, [f], weights)
        dm = tangent_derivations(ideal)
        for delta in brute_force_derivations(f, weights, bound):
            assert dm.contains(delta)


def test_monomialize_examples():
    mono = monomialize(Ideal(2, [P("x^2*y^3", "xy")]))
    assert mono == [P("x^2*y^3", "xy")]
    assert monomialize(Ideal(2, [P("x^2 + y^2", "xy"), P("x*y", "xy")])) is None
    assert monomialize(Ideal(2, [P("(x + y)^2", "xy")])) is None


def test_monomialize_idempotent():
    gens = [P("x^2", "xy"), P("x*y^2", "xy"), P("y^3", "xy")]
    out = monomialize(Ideal(2, gens))
    assert out is not None
    again = monomialize(Ideal(2, out))
    assert sorted(p.sorted_terms() for p in again) == \
        sorted(p.sorted_terms() for p in out)


def test_monomialize_random_small():
    rng = random.Random(29)
    for _ in range(15):
        nvars = rng.randrange(2, 4)
        gens = []
        for _ in range(rng.randrange(1, 4)):
            exp = tuple(rng.randrange(4) for _ in range(nvars))
            if any(exp):
                gens.append(Polynomial.monomial(nvars, exp))
        if not gens:
            continue
        ideal = Ideal(nvars, gens)
        out = monomialize(ideal)
        assert out is not None
        assert Ideal(nvars, out).equals(ideal)
