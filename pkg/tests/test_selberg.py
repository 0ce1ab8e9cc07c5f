from fractions import Fraction

import pytest
import sympy

from hyperdet.exact import ExactScalar
from hyperdet.hyperdet import hankel_fast
from hyperdet.selberg import (
    SequenceFamily,
    UnsupportedFamily,
    appendixA_consistency,
    closed_form_hankel,
    hankel_of_family,
    laguerre_selberg_value,
    pseudo_bruteforce,
    pseudo_closed_form,
    selberg_ratio,
    selberg_value,
)


def sympy_selberg(n, a, b, k):
    xs = sympy.symbols(f"x1:{n + 1}")
    f = sympy.Integer(1)
    for x in xs:
        f *= x ** (a - 1) * (1 - x) ** (b - 1)
    for i in range(n):
        for j in range(i + 1, n):
            f *= (xs[i] - xs[j]) ** (2 * k)
    for x in xs:
        f = sympy.integrate(sympy.expand(f), (x, 0, 1))
    return Fraction(str(f))


@pytest.mark.parametrize("n,a,b,k", [(2, 1, 1, 1), (2, 2, 1, 1), (2, 1, 3, 2), (3, 1, 1, 1)])
def test_selberg_against_direct_integration(n, a, b, k):
    val = selberg_value(n, a, b, k)
    assert val.is_rational()
    assert val.coeff == sympy_selberg(n, a, b, k)


def test_selberg_half_integer_carries_pi():
    val = selberg_value(1, Fraction(1, 2), Fraction(1, 2), 1)
    assert val == ExactScalar(1, 2)


def test_laguerre_selberg_two_points():
    # weight x^{alpha-1} e^{-x}: int int (x - y)^2 e^{-x-y} = 2 * 2! - 2 * 1 = 2
    assert laguerre_selberg_value(2, 1, 1) == ExactScalar(2)
    # alpha = 2: int int x y (x - y)^2 e^{-x-y} = 2 * 3! - 2 * 2! * 2! = 4
    assert laguerre_selberg_value(2, 2, 1) == ExactScalar(4)


def test_selberg_ratio_single_variable():
    # moment ratio of x in a Beta(1, 1) law
    assert selberg_ratio(1, 1, 1, 1, 1, 0) == Fraction(1, 2)


FAMILIES = [
    "factorial",
    "catalan",
    "hilbert",
    "central_binomial",
    "inverse_factorial",
    "pochhammer_ratio:a=1,b=3",
    "gamma_shifted:alpha=2",
    "two_n_over_n",
    "hilbert_shifted:a=2",
]


@pytest.mark.parametrize("tag", FAMILIES)
@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_closed_forms_match_bruteforce(tag, n, k):
    fam = SequenceFamily.parse(tag)
    c = fam.moments(2 * k * (n - 1) + 1)
    assert closed_form_hankel(fam, n, k) == hankel_fast(c, n, k)
    assert hankel_of_family(fam, n, k) == hankel_fast(c, n, k)


def test_known_values():
    assert closed_form_hankel(SequenceFamily.parse("factorial"), 2, 2) == 12
    assert closed_form_hankel(SequenceFamily.parse("hilbert"), 2, 1) == Fraction(1, 12)


def test_unknown_family():
    with pytest.raises(UnsupportedFamily):
        SequenceFamily.parse("fibonacci")


def test_routes_agree():
    for n, a, b, k in [(2, 1, 2, 1), (2, 2, 3, 2), (3, 1, 2, 1)]:
        assert appendixA_consistency(n, a, b, k).consistent


@pytest.mark.parametrize(
    "case,n,k,s,m,params",
    [
        (1, 2, 1, 1, 0, None),
        (1, 3, 1, 2, 0, None),
        (2, 2, 1, 1, 0, {"a": 1, "b": 3}),
        (3, 2, 1, 1, 0, None),
        (3, 3, 1, 1, 1, None),
    ],
)
def test_pseudo_hyperdeterminants(case, n, k, s, m, params):
    assert pseudo_closed_form(case, n, k, s, m, params) == pseudo_bruteforce(case, n, k, s, m, params)
