"""Acceptance criteria, checked at zero tolerance.

Each criterion test records one PASS/FAIL line that is printed in the
terminal summary.  Literal forms of printed formulas that disagree with the
computed values are kept as strict xfails next to the corrected checks.
"""

import time
from fractions import Fraction
from math import factorial

import pytest

from conftest import ACCEPTANCE_LINES
from hyperdet.exact import MultiPoly, UniPoly
from hyperdet.hyperdet import det4_via_pfaffian, det_even, hankel_fast, hankel_tensor
from hyperdet.kaneko import kaneko_check, leclerc_check, random_rational_functional
from hyperdet.orthopoly import (
    MomentFunctional,
    bell_triangle,
    bell_triangle_egf,
    binomial_hankel_sides,
    binomial_shift_sides,
    charlier_pprime_formula,
    classical_family,
    falling_factorial_sides,
    krawtchouk_symbolic,
    kzbell_sides,
    lawden_sides,
    monic_from_moments,
    pprime_gram,
    wronskian,
)
from hyperdet.hyperdet import pfaffian
from hyperdet.selberg import (
    FAMILY_TAGS,
    SequenceFamily,
    appendixA_consistency,
    bell_polynomials,
    closed_form_hankel,
    hypergeom_R_extract,
    pseudo_bruteforce,
    pseudo_closed_form,
)
from hyperdet.symfun import (
    SymExpansion,
    chebyshev_hankel,
    chebyshev_printed_rhs,
    chebyshev_u,
    hankel_hyperdet_poly,
    hankel_hyperdet_schur,
    sym1_printed_sign_poly,
    ubiquitous_identities,
)
from hyperdet.turanians import (
    TURANIAN_FAMILIES,
    TuranianSpec,
    laplacian_power_check,
    turanian_bruteforce,
    turanian_closed_form,
)

A = MultiPoly.var("a")


def apoly(shift, coeffs):
    """a^shift * sum_i coeffs[i] a^i."""
    acc = MultiPoly.const(Fraction(0), ("a",))
    for i, c in enumerate(coeffs):
        acc = acc + A ** (shift + i) * c
    return acc


def record(number, title, failures):
    status = "PASS" if not failures else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}")
    assert not failures, failures[:5]


# Families used by the oracle sweep; Bell stays symbolic in a.
SWEEP = [
    "factorial",
    "gamma_shifted:alpha=2",
    "catalan",
    "central_binomial",
    "two_n_over_n",
    "hilbert",
    "hilbert_shifted:a=1",
    "inverse_factorial",
    "bell",
    "pochhammer_ratio:a=1,b=3",
]


def test_sweep_covers_every_family():
    assert {s.split(":")[0] for s in SWEEP} == set(FAMILY_TAGS)


def test_criterion_1_oracle_equivalence():
    failures = []
    for tag in SWEEP:
        fam = SequenceFamily.parse(tag)
        for n in range(1, 5):
            for k in (1, 2):
                for r in range(3):
                    c = fam.moments(2 * k * (n - 1) + r + 1)
                    fast = hankel_fast(c, n, k, r)
                    slow = det_even(hankel_tensor(c, n, 2 * k, r))
                    if fast != slow:
                        failures.append((tag, n, k, r))
    record(1, "hankel_fast = det_even for all families, n <= 4, k <= 2, r <= 2", failures)


def test_criterion_2_apolar_and_factorial():
    failures = []
    c = SequenceFamily.parse("factorial").moments(40)
    for k in range(1, 6):
        if hankel_fast(c, 2, k) != Fraction(factorial(2 * k), 2):
            failures.append(("D2", k))
    for n in (1, 2, 3):
        expected = 1
        for i in range(2 * n):
            expected *= factorial(i)
        fam = monic_from_moments(c, 2 * n)
        if hankel_fast(c, n, 2) != expected or det4_via_pfaffian(c, fam, n) != expected:
            failures.append(("Det4", n))
    record(2, "D_2^(k)(n!) = (2k)!/2 and Det_4 of factorials by both routes", failures)


def test_criterion_3_selberg_closed_forms():
    failures = []
    tags = ["factorial", "catalan", "central_binomial", "two_n_over_n", "hilbert", "hilbert_shifted:a=2",
            "inverse_factorial"] + [f"gamma_shifted:alpha={a}" for a in range(4)]
    for tag in tags:
        fam = SequenceFamily.parse(tag)
        rs = [0] if tag == "inverse_factorial" else [0, 1, 2]
        for n in range(1, 5):
            for k in (1, 2):
                for r in rs:
                    val = closed_form_hankel(fam, n, k, r)
                    ref = hankel_fast(fam.moments(2 * k * (n - 1) + r + 1), n, k, r)
                    if not isinstance(val, Fraction) or val != ref:
                        failures.append((tag, n, k, r))
    record(3, "Selberg closed forms equal hankel_fast, all values rational", failures)


BELL_PRINTED = {
    (2, 2): apoly(1, [1, 6]),
    (3, 2): apoly(3, [8 * c for c in (1, 24, 45, 90)]),
    (4, 2): apoly(6, [1728 * c for c in (1, 60, 360, 2080, 2415, 2100, 2100)]),
    (2, 3): apoly(1, [1, 30, 60]),
    (3, 3): apoly(3, [32 * c for c in (1, 240, 3285, 16650, 61425, 56700, 37800)]),
    (2, 4): apoly(1, [1, 126, 840, 840]),
    (3, 4): apoly(3, [128 * c for c in (1, 2184, 134505, 1952370, 22027950, 99542520, 189552825,
                                        246673350, 130977000, 43659000)]),
}

TABLE1 = {
    1: [apoly(0, [1]), apoly(1, [1]), apoly(1, [1, 1])],
    2: [apoly(1, [1]), apoly(3, [1]), apoly(3, [2, 2, 1])],
    3: [apoly(3, [2]), apoly(6, [2]), apoly(6, [12, 12, 6, 2])],
    4: [apoly(6, [12]), apoly(10, [12]), apoly(10, [288, 288, 144, 48, 12])],
}

TABLE2_PRINTED = {
    1: [1],
    2: [1, 6],
    3: [1, 30, 60],
    4: [1, 126, 840, 840],
    5: [1, 510, 8820, 25200, 150120],
    6: [1, 2046, 84480, 526680, 831600, 332640],
}
TABLE2_CORRECTED = {**TABLE2_PRINTED, 5: [1, 510, 8820, 25200, 15120]}


def test_criterion_4_bell_suite():
    failures = []
    for (n, k), printed in BELL_PRINTED.items():
        if hankel_fast(bell_polynomials(2 * k * (n - 1) + 1), n, k) != printed:
            failures.append(("printed value", n, k))
    for n, row in TABLE1.items():
        for r, printed in enumerate(row):
            if hankel_fast(bell_polynomials(2 * (n - 1) + r + 1), n, 1, r) != printed:
                failures.append(("Table 1", n, r))
    for k, row in TABLE2_CORRECTED.items():
        if bell_triangle(k) != row or bell_triangle_egf(k) != row:
            failures.append(("Table 2", k))
        if row[-1] != factorial(2 * k - 1) // factorial(k - 1):
            failures.append(("diagonal", k))
        if k >= 2 and row[1] != 2 ** (2 * k - 1) - 2:
            failures.append(("second column", k))
    for n in (1, 2, 3):
        for k in (1, 2):
            for r in (0, 1, 2):
                lhs, rhs = falling_factorial_sides(r, n, k)
                if lhs != rhs:
                    failures.append(("bQ", n, k, r))
    record(4, "Bell values, Tables 1 and 2, diagonal, second column and bQ", failures)


@pytest.mark.xfail(strict=True, reason="printed Table 2 entry T_{5,5} = 150120; computed value is 15120")
def test_table2_printed_row5():
    assert bell_triangle(5) == TABLE2_PRINTED[5]


@pytest.mark.xfail(strict=True, reason="printed diagonal (2k+1)!/k! fails already at k = 1; correct is (2k-1)!/(k-1)!")
def test_table2_printed_diagonal():
    for k in range(1, 7):
        assert bell_triangle(k)[-1] == factorial(2 * k + 1) // factorial(k)


def test_criterion_5_binomial_suite():
    failures = []
    for N in (1, 2, 3):
        for n in (1, 2, 3):
            lhs, rhs = binomial_hankel_sides(N, n)
            if lhs != rhs:
                failures.append(("D_n closed form", N, n))
    for n in range(1, 5):
        lhs, rhs = krawtchouk_symbolic(n)
        if lhs != rhs:
            failures.append(("det X_n", n))
    for n in (1, 2, 3):
        lhs, rhs = lawden_sides(n)
        if lhs != rhs:
            failures.append(("Lawden", n))
    for n in (1, 2):
        for k in (1, 2):
            for N in range(0, 4):
                for r in range(N + 1):
                    lhs, rhs = binomial_shift_sides(r, N, n, k)
                    if lhs != rhs:
                        failures.append(("unshifting", n, k, r, N))
    record(5, "binomial-moment Hankel suite (closed form, det X_n, Lawden, unshifting)", failures)


def test_criterion_6_pfaffian_route():
    failures = []
    fact = SequenceFamily.parse("factorial").moments(20)
    bell = bell_polynomials(20)
    for name, mu, fam in (
        ("factorial", fact, classical_family("laguerre", 6)),
        ("bell", bell, classical_family("charlier", 6, {"a": None})),
    ):
        for n in (1, 2, 3):
            for r in (0, 1):
                if pfaffian(pprime_gram(mu, fam, r, 2 * n)) != hankel_fast(mu, n, 2, r):
                    failures.append((name, n, r))
    mu = MomentFunctional(bell)
    fam = classical_family("charlier", 6, {"a": None})
    for i in range(6):
        for j in range(6):
            if mu(fam[i] * fam[j].derivative()) != charlier_pprime_formula(i, j, A):
                failures.append(("Charlier", i, j))
    record(6, "Pfaffian route for factorial and Bell moments; Charlier <C_n, C_m'>", failures)


def test_laguerre_bimoment_entries():
    # Computed entries <L_i, L_j'> = (-1)^{i+j-[i<j]} i! j! for i < j, zero otherwise.
    mu = MomentFunctional(SequenceFamily.parse("factorial").moments(20))
    fam = classical_family("laguerre", 6)
    for i in range(6):
        for j in range(6):
            expected = (-1) ** (i + j - 1) * factorial(i) * factorial(j) if i < j else 0
            assert mu(fam[i] * fam[j].derivative()) == expected


def test_criterion_7_turanians():
    failures = []
    for fam in TURANIAN_FAMILIES:
        params_list = [{"alpha": a} for a in range(3)] if fam == "laguerre" else [{}]
        for params in params_list:
            for n in (1, 2, 3):
                for k in (1, 2):
                    spec = TuranianSpec(fam, n, k, params=params)
                    brute = turanian_bruteforce(spec)
                    if turanian_closed_form(spec) != brute:
                        failures.append((fam, params, n, k))
                    if fam == "hermite" and brute.degree("x") != 0:
                        failures.append(("hermite depends on x", n, k))
    for n, k in ((2, 1), (2, 2), (3, 1)):
        lhs, rhs = laplacian_power_check(n, k)
        if lhs != rhs:
            failures.append(("laplacian", n, k))
    record(7, "Turanian closed forms, Hermite x-independence, Laplacian identity", failures)


def test_criterion_8_kaneko():
    failures = []
    for n in (1, 2):
        for r in (1, 2):
            for a in (1, 2):
                for b in (1, 2):
                    for k in (1, 2):
                        lhs, rhs = kaneko_check(n, r, a, b, k)
                        if lhs != rhs:
                            failures.append(("kaneko", n, r, a, b, k))
    for n in (1, 2, 3):
        for r in (1, 2, 3):
            mom = random_rational_functional(2 * n * r + 2 * r, seed=10 * n + r)
            lhs, rhs = leclerc_check(mom, n, r)
            if lhs != rhs:
                failures.append(("leclerc", n, r))
    for n in (1, 2, 3):
        for r in (0, 1, 2):
            lhs, rhs = kzbell_sides(n, r)
            if lhs != rhs:
                failures.append(("KZbell", n, r))
    C = classical_family("charlier", 5, {"a": None})
    W = wronskian([C[3], C[4]], at=0)
    if W != apoly(3, [6, 6, 3, 1]):
        failures.append(("W(C3,C4)(0)", W))
    record(8, "Kaneko identity, Leclerc identity and KZbell with W(C_3,C_4)(0)", failures)


def schur(terms, n):
    return SymExpansion("schur", terms, n)


SCHUR_PRINTED = {
    (2, 2): schur({(3, 1): -1, (2, 2): 3}, 2),
    (3, 2): schur({(6, 4, 2): -1, (6, 3, 3): 3, (5, 5, 2): 3, (5, 4, 3): -6, (4, 4, 4): 15}, 3),
    (2, 3): schur({(5, 1): -1, (4, 2): 5, (3, 3): -10}, 2),
    (3, 3): schur({(10, 6, 2): -1, (10, 5, 3): 5, (10, 4, 4): -10, (9, 7, 2): 5, (9, 6, 3): -20,
                   (9, 5, 4): 25, (8, 8, 2): -10, (8, 7, 3): 25, (8, 6, 4): 15, (8, 5, 5): -100,
                   (7, 7, 4): -100, (7, 6, 5): 160, (6, 6, 6): -280}, 3),
    (2, 4): schur({(7, 1): -1, (6, 2): 7, (5, 3): -21, (4, 4): 35}, 2),
}


def test_criterion_9_symmetric_functions():
    failures = []
    for (n, k), printed in SCHUR_PRINTED.items():
        if hankel_hyperdet_schur(n, k) != printed:
            failures.append(("schur", n, k))
    for k in range(1, 5):
        U = [u.to_multipoly(("x",)) for u in chebyshev_u(2 * k + 1)]
        if hankel_fast(U, 2, k) != chebyshev_hankel(k).to_multipoly(("x",)):
            failures.append(("D_2^(k)(U)", k))
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            if hankel_hyperdet_poly(n, k, "sym1") != hankel_hyperdet_poly(n, k, "nvars"):
                failures.append(("sym1", n, k))
    for k in range(1, 6):
        lhs, rhs = ubiquitous_identities("fibonacci", k=k)
        if lhs != rhs or rhs != 5 ** (k - 1):
            failures.append(("fibonacci", k))
    for m in range(1, 9):
        lhs, rhs = ubiquitous_identities("chebyshevU", m=m)
        if lhs != rhs:
            failures.append(("chebyshev", m))
    record(9, "printed Schur expansions, sym1, Fibonacci and Chebyshev identities", failures)


@pytest.mark.xfail(strict=True, reason="printed sign (-1)^{n(n-1)/2} in sym1; correct sign is (-1)^{kn(n-1)/2}")
def test_sym1_printed_sign():
    assert sym1_printed_sign_poly(2, 2) == hankel_hyperdet_poly(2, 2, "nvars")


@pytest.mark.xfail(strict=True, reason="printed Chebyshev right side drops the factor (-1)^{m/2}")
def test_chebyshev_printed_rhs():
    lhs, _ = ubiquitous_identities("chebyshevU", m=2)
    assert lhs == chebyshev_printed_rhs(2)


def _poly(text_terms, names):
    """Build a polynomial from [(coeff, {var: exp})]."""
    acc = MultiPoly.const(Fraction(0), names)
    for c, mono in text_terms:
        t = MultiPoly.const(Fraction(c), names)
        for v, e in mono.items():
            t = t * MultiPoly.var(v, names) ** e
        acc = acc + t
    return acc


AB = ("a0", "a1", "a2", "b0", "b1")


def _r22_ab(a0a1b1_exp):
    return _poly([(-12, {"a0": 1, "a1": 1, "b0": 1, "b1": 1}), (-60, {"a0": 1, "a2": 1, "b0": 1, "b1": 1}),
                  (90, {"a1": 1, "a2": 1, "b0": 1, "b1": 1}), (-6, {"a0": 1, "a1": 1, "b1": a0a1b1_exp}),
                  (-90, {"a0": 1, "a2": 1, "b1": 2}), (54, {"a1": 1, "a2": 1, "b0": 2}),
                  (6, {"a0": 2, "b1": 2}), (6, {"a1": 2, "b0": 2}), (120, {"a2": 2, "b0": 2}),
                  (144, {"a2": 2, "b1": 2}), (6, {"a1": 2, "b0": 1, "b1": 1}),
                  (300, {"a2": 2, "b0": 1, "b1": 1})], AB)


def _pseudo_case3_printed(n, k, s, m):
    val = Fraction(1, factorial(k) ** n)
    for j in range(1, m + 1):
        val *= 2 + k * (2 * n - m - j)
    for j in range(1, m + s + 1):
        val *= 1 + k * (n + j)
    for j in range(n):
        val *= factorial(k * (1 + j)) * factorial(k * j)
    return val


def test_criterion_10_appendices():
    failures = []
    for n in (1, 2, 3):
        for b in range(2, 5):
            for a in range(1, b):
                for k in (1, 2):
                    if not appendixA_consistency(n, a, b, k).consistent:
                        failures.append(("A", n, a, b, k))
    # Appendix B, printed R_2 examples
    if hypergeom_R_extract(["a0", "a1", "a2"], ["b0", "b1"], 2, 1) != _poly(
        [(-1, {"a0": 1, "b1": 1}), (1, {"a1": 1, "b0": 1}), (3, {"a2": 1, "b0": 1}), (2, {"a2": 1, "b1": 1})], AB
    ):
        failures.append(("B", "R_2^(1)"))
    names = ("a0", "a1", "a2", "a3")
    printed = _poly([(6, {"a1": 2}), (54, {"a1": 1, "a2": 1}), (120, {"a2": 2}), (6, {"a0": 1, "a3": 1}),
                     (210, {"a1": 1, "a3": 1}), (900, {"a2": 1, "a3": 1}), (1644, {"a3": 2})], names)
    if hypergeom_R_extract(list(names), [], 2, 2) != printed:
        failures.append(("B", "R_2^(2)(a;)"))
    names = ("b0", "b1", "b2", "b3")
    printed = _poly([(-6, {"b0": 1, "b3": 1}), (6, {"b1": 2}), (66, {"b1": 1, "b2": 1}), (270, {"b1": 1, "b3": 1}),
                     (180, {"b2": 2}), (1500, {"b2": 1, "b3": 1}), (3144, {"b3": 2})], names)
    if hypergeom_R_extract([], list(names), 2, 2) != printed:
        failures.append(("B", "R_2^(2)(;b)"))
    if hypergeom_R_extract(["a0", "a1", "a2"], ["b0", "b1"], 2, 2) != _r22_ab(2):
        failures.append(("B", "R_2^(2)(a;b) with b1^2"))
    for k in (1, 2, 3):
        expected = _poly([(factorial(2 * k - 1) // factorial(k - 1), {})], ("a", "b", "c"))
        for j in range(k + 2, 2 * k + 2):
            expected = expected * _poly([(1, {"b": 1}), (j, {"c": 1})], ("a", "b", "c"))
        got = hypergeom_R_extract(["a", "b", "c"], [], 2, k)
        if got.with_vars(("a", "b", "c")) != expected:
            failures.append(("B", "R_2^(k)(a,b,c;1)", k))
    # Appendix C
    for n in (1, 2, 3):
        for k in (1, 2):
            for s in range(n + 1):
                for case, params in ((1, None), (2, {"a": 1, "b": 3}), (2, {"a": 2, "b": 5}), (3, None)):
                    if pseudo_closed_form(case, n, k, s, 0, params) != pseudo_bruteforce(case, n, k, s, 0, params):
                        failures.append(("C", case, n, k, s))
                for m in range(1, n - s + 1):
                    if pseudo_closed_form(3, n, k, s, m) != pseudo_bruteforce(3, n, k, s, m):
                        failures.append(("C", 3, n, k, s, m))
    record(10, "Appendix A routes, Appendix B R-polynomials, Appendix C pseudo-hyperdeterminants", failures)


@pytest.mark.xfail(strict=True, reason="printed R_2^(2)(a;b) has -a0a1b1 where degree count requires -a0a1b1^2")
def test_appendixB_printed_mixed_term():
    assert hypergeom_R_extract(["a0", "a1", "a2"], ["b0", "b1"], 2, 2) == _r22_ab(1)


@pytest.mark.xfail(strict=True, reason="printed constant (2k+1)!/k! in R_2^(k)(a,b,c;1); computed constant is (2k-1)!/(k-1)!")
def test_appendixB_printed_constant():
    got = hypergeom_R_extract(["a", "b", "c"], [], 2, 2)
    assert got.evaluate({"a": 0, "b": 1, "c": 0}) == factorial(5) // factorial(2)


@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason="printed R_3^(2)(a0,a1,a2;) is not reproduced under any index convention")
def test_appendixB_printed_R3():
    names = ("a0", "a1", "a2")
    terms = [
        (94251, (1, 3, 2)), (5525, (2, 2, 2)), (48, (3, 1, 2)), (1853066, (1, 1, 4)), (603101, (1, 2, 3)),
        (25518, (2, 1, 3)), (7123, (1, 4, 1)), (522, (2, 3, 1)), (3278390, (0, 3, 3)), (15303958, (0, 2, 4)),
        (384, (3, 0, 3)), (41544, (2, 0, 4)), (211, (1, 5, 0)), (19, (2, 4, 0)), (592, (0, 6, 0)),
        (37115136, (0, 0, 6)), (2178696, (1, 0, 5)), (37277876, (0, 1, 5)), (385834, (0, 4, 2)),
        (23654, (0, 5, 1)),
    ]
    printed = MultiPoly({e: Fraction(16 * c) for c, e in terms}, names)
    assert hypergeom_R_extract(list(names), [], 3, 2) == printed


@pytest.mark.xfail(strict=True, reason="printed second case-3 formula uses 2n-m-j and n+j; fails at n=2, k=1, m=1, s=1")
def test_appendixC_printed_case3():
    assert _pseudo_case3_printed(2, 1, 1, 1) == pseudo_bruteforce(3, 2, 1, 1, 1)


def test_performance_n5_k2():
    c = SequenceFamily.parse("factorial").moments(17)
    start = time.perf_counter()
    val = hankel_fast(c, 5, 2)
    elapsed = time.perf_counter() - start
    assert val == closed_form_hankel(SequenceFamily.parse("factorial"), 5, 2)
    ACCEPTANCE_LINES.append(f"[{'PASS' if elapsed < 10 else 'FAIL'}] performance: hankel_fast(n=5, k=2) in {elapsed:.2f} s")
    assert elapsed < 10
