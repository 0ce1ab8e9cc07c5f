from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperdet.exact import (
    ExactScalar,
    MultiPoly,
    PiPowerMismatch,
    RationalFunction,
    UniPoly,
    beta_exact,
    det,
    double_factorial,
    falling,
    gamma_exact,
    multinomial,
    pochhammer,
    poly_derivative,
    poly_eval,
    solve,
    stirling,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_gamma_values():
    assert gamma_exact(1) == ExactScalar(1)
    assert gamma_exact(Fraction(1, 2)) == ExactScalar(1, 1)
    assert gamma_exact(Fraction(5, 2)) == ExactScalar(Fraction(3, 4), 1)
    assert gamma_exact(6) == ExactScalar(120)


def test_gamma_rejects_other_arguments():
    with pytest.raises(ValueError):
        gamma_exact(Fraction(1, 3))
    with pytest.raises(ValueError):
        gamma_exact(0)


def test_beta_is_rational_for_integers():
    assert beta_exact(2, 3) == ExactScalar(Fraction(1, 12))
    assert beta_exact(Fraction(1, 2), Fraction(1, 2)) == ExactScalar(1, 2)


def test_pochhammer_and_falling():
    assert pochhammer(3, 2) == 12
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(Fraction(7, 3), 0) == 1
    assert falling(5, 3) == 60
    assert falling(-1, 2) == 2


def test_stirling_numbers():
    assert stirling(2, 3, 2) == 3
    assert stirling(1, 3, 2) == -3
    assert all(stirling(kind, n, n) == 1 for kind in (1, 2) for n in range(6))
    assert stirling(2, 4, 0) == 0


def test_misc_combinatorics():
    assert double_factorial(7) == 105
    assert double_factorial(-1) == 1
    assert multinomial(2, 1, 1) == 12


def test_exact_scalar_arithmetic():
    r = ExactScalar(Fraction(1, 2), 1)
    assert r * r == ExactScalar(Fraction(1, 4), 2)
    assert (r / r).is_rational()
    assert r + r == ExactScalar(1, 1)
    with pytest.raises(PiPowerMismatch):
        _ = r + ExactScalar(1)
    assert ExactScalar(0, 3) + ExactScalar(2) == ExactScalar(2)
    assert ExactScalar(3, -2) * ExactScalar(1, 2) == 3


@given(rationals, st.integers(min_value=-6, max_value=6))
def test_exact_scalar_text_round_trip(c, m):
    x = ExactScalar(c, m)
    assert ExactScalar.parse(str(x)) == x


def test_unipoly_basics():
    x = UniPoly.x()
    p = x * x - Fraction(1, 2)
    assert poly_derivative(p) == x * 2
    assert poly_eval(x * x - x, 3) == 6
    assert poly_derivative(UniPoly.const(5)).is_zero()
    q, r = (x ** 3 + 1).divmod(x + 1)
    assert q == x * x - x + 1 and r.is_zero()


def _poly(coeffs):
    x, y = MultiPoly.gens("x", "y")
    acc = MultiPoly.const(Fraction(0), ("x", "y"))
    for (i, j), c in coeffs.items():
        acc = acc + x ** i * y ** j * c
    return acc


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), rationals, max_size=5
).map(_poly)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_multipoly_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f
    assert f - f == MultiPoly({}, f.vars)


@settings(max_examples=40)
@given(polys, polys)
def test_multipoly_exact_division(f, g):
    if g.is_zero():
        return
    assert (f * g).divexact(g) == f


@settings(max_examples=40)
@given(polys, polys)
def test_derivative_product_rule(f, g):
    assert (f * g).diff("x") == f.diff("x") * g + f * g.diff("x")


def test_subs_replacing_every_variable():
    x, y = MultiPoly.gens("x", "y")
    t = MultiPoly.var("t")
    f = x * y + x * x
    assert f.subs({"x": t, "y": t * 2}) == t * t * 3
    assert f.subs({"x": Fraction(2)}).evaluate({"x": 0, "y": 1}) == 6


def test_multipoly_json_round_trip():
    x, y = MultiPoly.gens("x", "y")
    f = x ** 2 * Fraction(3, 7) - y + 1
    assert MultiPoly.from_json_obj(f.to_json_obj()) == f


def test_rational_function_normalizes():
    x = MultiPoly.var("x")
    r = RationalFunction(x * x - 1, x - 1)
    assert r.is_polynomial() and r.to_poly() == x + 1
    assert RationalFunction(x, x + 1) + RationalFunction(x * 0 + 1, x + 1) == RationalFunction(x * 0 + 1)


square = st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=40)
@given(square, square)
def test_det_multiplicative(a, b):
    prod = [[sum(a[i][l] * b[l][j] for l in range(3)) for j in range(3)] for i in range(3)]
    assert det(prod) == det(a) * det(b)


def test_det_polynomial_entries_matches_gauss():
    x = MultiPoly.var("x")
    m = [[x, 1], [2, x]]
    assert det(m) == x * x - 2


def test_solve():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    assert solve(a, [Fraction(3), Fraction(5)]) == [Fraction(4, 5), Fraction(7, 5)]
