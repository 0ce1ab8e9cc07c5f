from fractions import Fraction

import pytest

from hyperdet.exact import MultiPoly
from hyperdet.turanians import (
    TURANIAN_FAMILIES,
    OutOfScope,
    TuranianSpec,
    laplacian_power_check,
    turanian_bruteforce,
    turanian_closed_form,
    turanian_entries,
    vandermonde_power_poly,
)


@pytest.mark.parametrize("family", TURANIAN_FAMILIES)
@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_closed_form_matches_bruteforce(family, n, k):
    spec = TuranianSpec(family, n, k)
    assert turanian_closed_form(spec) == turanian_bruteforce(spec)


@pytest.mark.parametrize("family", ["legendre", "hermite", "laguerre"])
def test_closed_form_larger(family):
    spec = TuranianSpec(family, 3, 2)
    assert turanian_closed_form(spec) == turanian_bruteforce(spec)


def test_classical_legendre_turanian():
    # P_0 P_2 - P_1^2 = (x^2 - 1)/2
    spec = TuranianSpec("legendre", 2, 1)
    x = MultiPoly.var("x")
    assert turanian_bruteforce(spec) == (x * x - 1) * Fraction(1, 2)


def test_symbolic_charlier_variables():
    spec = TuranianSpec("charlier", 2, 1)
    assert spec.vars == ("x", "a")
    assert turanian_entries(spec)[0] == MultiPoly.const(Fraction(1), ("x", "a"))


def test_parameter_overrides():
    spec = TuranianSpec("laguerre", 2, 1, params={"alpha": 2})
    assert spec.params["alpha"] == 2
    assert turanian_closed_form(spec) == turanian_bruteforce(spec)


def test_scope_errors():
    with pytest.raises(OutOfScope):
        TuranianSpec("jacobi", 2, 1)
    with pytest.raises(OutOfScope):
        turanian_closed_form(TuranianSpec("hermite", 2, 1, r=1))
    with pytest.raises(OutOfScope):
        turanian_entries(TuranianSpec("krawtchouk", 3, 2, params={"N": 4}))
    with pytest.raises(ValueError):
        TuranianSpec("hermite", 0, 1)


def test_vandermonde_power():
    f = vandermonde_power_poly(2, 1)
    x1, x2 = MultiPoly.gens("x1", "x2")
    assert f == (x1 - x2) ** 2


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (2, 3)])
def test_laplacian_power(n, k):
    lhs, rhs = laplacian_power_check(n, k)
    assert lhs == rhs
