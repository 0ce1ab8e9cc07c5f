from fractions import Fraction

import pytest

from hyperdet.exact import MultiPoly, UniPoly
from hyperdet.hyperdet import det4_via_pfaffian, hankel_fast
from hyperdet.orthopoly import (
    CLASSICAL_TAGS,
    MomentFunctional,
    bell_triangle,
    bell_triangle_egf,
    binomial_hankel_sides,
    binomial_shift_sides,
    charlier_pprime_formula,
    check_orthogonal,
    classical_family,
    falling_factorial_sides,
    family_moments,
    karlin_szego_check,
    krawtchouk_symbolic,
    kzbell_sides,
    lawden_sides,
    monic_from_moments,
    pprime_gram,
    projected_mult_det,
    sequence_transform_check,
    wronskian,
)

PARAMS = {
    "charlier": {"a": Fraction(2)},
    "krawtchouk": {"p": Fraction(1, 3), "N": 12},
    "meixner": {"beta": 3, "gamma": Fraction(1, 3)},
}


@pytest.mark.parametrize("tag", [t for t in CLASSICAL_TAGS if t != "meixner"])
def test_classical_families_are_orthogonal(tag):
    params = PARAMS.get(tag)
    fam = classical_family(tag, 6, params)
    assert fam.check_recurrence()
    assert check_orthogonal(family_moments(tag, 12, params), fam)


def test_meixner_recurrence_matches_hypergeometric_form():
    fam = classical_family("meixner", 4, PARAMS["meixner"])
    assert fam.check_recurrence()
    # monic M_1 = x - gamma beta / (1 - gamma)
    assert fam[1] == UniPoly.x() - Fraction(3, 2)


@pytest.mark.parametrize("tag", ["hermite", "laguerre", "legendre"])
def test_moments_recover_recurrence(tag):
    mu = family_moments(tag, 12)
    fam = classical_family(tag, 5)
    rebuilt = monic_from_moments(mu, 5)
    assert rebuilt.polynomials[:5] == fam.polynomials[:5]


def test_hermite_normalization():
    fam = classical_family("hermite", 4)
    assert str(fam.polynomials[2]) == "x^2 - 1/2"


@pytest.mark.parametrize("tag", ["hermite", "laguerre", "charlier"])
@pytest.mark.parametrize("n,r", [(2, 1), (2, 2), (3, 1)])
def test_projected_multiplication_ratio(tag, n, r):
    params = PARAMS.get(tag)
    mu = family_moments(tag, 2 * n + r + 2, params)
    fam = classical_family(tag, n + r + 2, params)
    assert hankel_fast(mu, n, 1, r) == projected_mult_det(fam, r=r, n=n) * hankel_fast(mu, n, 1)


@pytest.mark.parametrize("tag", ["hermite", "laguerre", "charlier"])
@pytest.mark.parametrize("n,r", [(1, 0), (2, 0), (2, 1)])
def test_pfaffian_route(tag, n, r):
    params = PARAMS.get(tag)
    mu = family_moments(tag, 4 * n + r + 2, params)
    fam = classical_family(tag, 2 * n, params)
    assert det4_via_pfaffian(mu, fam, n, r) == hankel_fast(mu, n, 2, r)


def test_charlier_pprime_formula():
    a = Fraction(2)
    mu = MomentFunctional(family_moments("charlier", 20, {"a": a}))
    fam = classical_family("charlier", 6, {"a": a})
    for i in range(5):
        for j in range(5):
            assert mu(fam[i] * fam[j].derivative()) == charlier_pprime_formula(i, j, a)


def test_pprime_gram_rejects_odd_size():
    mu = family_moments("hermite", 10)
    with pytest.raises(ValueError):
        pprime_gram(mu, classical_family("hermite", 4), 0, 3)


def test_wronskian():
    x = UniPoly.x()
    assert wronskian([UniPoly([1]), x, x * x]) == UniPoly([2])
    assert wronskian([x, x * x], at=3) == 9


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_karlin_szego(n, r):
    lhs, rhs = karlin_szego_check(family_moments("laguerre", 2 * n + 2 * r + 2), n, r)
    assert lhs == rhs


def test_bell_triangle():
    assert bell_triangle(2) == [1, 6]
    assert bell_triangle(3) == [1, 30, 60]
    assert bell_triangle(4) == bell_triangle_egf(4) == [1, 126, 840, 840]


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_kzbell(n, r):
    lhs, rhs = kzbell_sides(n, r)
    assert lhs == rhs


@pytest.mark.parametrize("r,n,k", [(0, 2, 1), (1, 2, 1), (0, 2, 2), (1, 3, 1)])
def test_falling_factorial_transform(r, n, k):
    lhs, rhs = falling_factorial_sides(r, n, k)
    assert lhs == rhs
    assert sequence_transform_check("falling_factorial", n, k, r) == (lhs, rhs)


@pytest.mark.parametrize("r,N,n,k", [(1, 5, 2, 1), (0, 6, 2, 2), (2, 6, 2, 1)])
def test_binomial_shift(r, N, n, k):
    lhs, rhs = binomial_shift_sides(r, N, n, k)
    assert lhs == rhs


def test_binomial_and_krawtchouk_and_lawden():
    for n in (1, 2, 3):
        lhs, rhs = binomial_hankel_sides(4, n)
        assert lhs == rhs
        lhs, rhs = krawtchouk_symbolic(n)
        assert lhs == rhs
        lhs, rhs = lawden_sides(n)
        assert lhs == rhs
    with pytest.raises(ValueError):
        sequence_transform_check("binomial_shift", 2, 1)
