"""Closed-form evaluators built on the Selberg and Laguerre-Selberg integrals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .exact import ExactScalar, MultiPoly, gamma_exact, pochhammer, stirling
from .exact.combinat import as_fraction
from .hyperdet import det_plus, hankel_fast, pseudo_hankel_tensor, vandermonde_terms


class UnsupportedFamily(ValueError):
    pass


def _half_ok(x: Fraction) -> bool:
    return x.denominator in (1, 2)


@dataclass(frozen=True)
class SelbergParams:
    n: int
    a: Fraction
    b: Fraction
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.a <= 0 or self.b <= 0:
            raise ValueError("Selberg parameters a, b must be positive")
        if not (_half_ok(self.a) and _half_ok(self.b)):
            raise ValueError("a and b must be integers or half-integers")
        if int(self.k) != self.k or self.k < 1:
            raise ValueError("k must be a positive integer")


def selberg_value(n, a=None, b=None, k=None) -> ExactScalar:
    """S_n(a, b, k) as an exact scalar (rational times a power of sqrt(pi))."""
    p = n if isinstance(n, SelbergParams) else SelbergParams(n, a, b, k)
    n, a, b, k = p.n, p.a, p.b, p.k
    out = ExactScalar(1)
    for j in range(n):
        out = out * gamma_exact(a + j * k) * gamma_exact(b + j * k) * factorial((j + 1) * k)
        out = out / (gamma_exact(a + b + (n + j - 1) * k) * factorial(k))
    return out


def selberg_ratio(r: int, alpha, beta, kappa, p: int, q: int) -> Fraction:
    """S_r(alpha+p, beta+q, kappa) / S_r(alpha, beta, kappa) for any rational kappa > 0.

    Each Gamma ratio collapses to a Pochhammer symbol, so the answer is
    rational even when alpha, beta, kappa are not half-integers.
    """
    alpha, beta, kappa = as_fraction(alpha), as_fraction(beta), as_fraction(kappa)
    out = Fraction(1)
    for j in range(r):
        out *= pochhammer(alpha + j * kappa, p) * pochhammer(beta + j * kappa, q)
        out /= pochhammer(alpha + beta + (r + j - 1) * kappa, p + q)
    return out


def laguerre_selberg_value(n: int, alpha, k: int) -> ExactScalar:
    alpha = as_fraction(alpha)
    if alpha <= 0 or not _half_ok(alpha):
        raise ValueError("alpha must be a positive integer or half-integer")
    out = ExactScalar(1)
    for j in range(n):
        out = out * factorial(k + j * k) * gamma_exact(alpha + j * k) / factorial(k)
    return out


# -- sequence families -------------------------------------------------------

FAMILY_TAGS = (
    "factorial",
    "gamma_shifted",
    "catalan",
    "central_binomial",
    "two_n_over_n",
    "hilbert",
    "hilbert_shifted",
    "inverse_factorial",
    "bell",
    "pochhammer_ratio",
)


def bell_polynomials(count: int, a=None):
    """b_0(a) .. b_{count-1}(a); symbolic in ``a`` unless a value is given."""
    if a is None:
        x = MultiPoly.var("a")
        out = []
        for m in range(count):
            p = MultiPoly.const(Fraction(1 if m == 0 else 0), ("a",))
            for j in range(1, m + 1):
                p = p + x ** j * stirling(2, m, j)
            out.append(p)
        return out
    a = as_fraction(a)
    return [
        Fraction(1) if m == 0 else sum((stirling(2, m, j) * a ** j for j in range(1, m + 1)), Fraction(0))
        for m in range(count)
    ]


@dataclass(frozen=True)
class SequenceFamily:
    tag: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise UnsupportedFamily(f"unknown family {self.tag!r}")

    @classmethod
    def parse(cls, text: str) -> "SequenceFamily":
        """``"gamma_shifted:alpha=2"`` or ``"pochhammer_ratio:a=1,b=3"``."""
        tag, _, rest = text.partition(":")
        params = {}
        for item in filter(None, rest.split(",")):
            key, _, val = item.partition("=")
            params[key.strip()] = None if val.strip() in ("", "symbolic") else Fraction(val.strip())
        return cls(tag.strip(), params)

    def moments(self, count: int):
        t, p = self.tag, self.params
        if t == "factorial":
            return [Fraction(factorial(m)) for m in range(count)]
        if t == "gamma_shifted":
            alpha = _nonneg_int(p.get("alpha", 0), "alpha")
            return [Fraction(factorial(m + alpha)) for m in range(count)]
        if t == "catalan":
            return [Fraction(factorial(2 * m), factorial(m) * factorial(m + 1)) for m in range(count)]
        if t == "central_binomial":
            return [Fraction(factorial(2 * m), factorial(m) ** 2) for m in range(count)]
        if t == "two_n_over_n":
            return [Fraction(factorial(2 * m), factorial(m)) for m in range(count)]
        if t == "hilbert":
            return [Fraction(1, m + 1) for m in range(count)]
        if t == "hilbert_shifted":
            a = as_fraction(p.get("a", 0))
            return [1 / (m + a + 1) for m in range(count)]
        if t == "inverse_factorial":
            return [Fraction(1, factorial(m)) for m in range(count)]
        if t == "bell":
            return bell_polynomials(count, p.get("a"))
        if t == "pochhammer_ratio":
            a, b = as_fraction(p["a"]), as_fraction(p["b"])
            return [Fraction(pochhammer(a, m)) / pochhammer(b, m) for m in range(count)]
        raise UnsupportedFamily(t)  # pragma: no cover


def _nonneg_int(x, name):
    x = as_fraction(x)
    if x.denominator != 1 or x < 0:
        raise UnsupportedFamily(f"{name} must be a nonnegative integer")
    return int(x)


def _as_family(f) -> SequenceFamily:
    if isinstance(f, SequenceFamily):
        return f
    if isinstance(f, str):
        return SequenceFamily.parse(f)
    raise TypeError("expected a SequenceFamily or tag string")


def _rational(x: ExactScalar) -> Fraction:
    if not x.is_rational():
        raise ArithmeticError(f"pi powers failed to cancel: {x}")
    return x.coeff


def factorial_hyperdet(n: int, k: int, alpha: int = 0) -> Fraction:
    """(1/(n! k!^n)) prod_j (k+jk)! (alpha+jk)!  (the Gamma-shifted evaluation)."""
    out = Fraction(1, factorial(n) * factorial(k) ** n)
    for j in range(n):
        out *= factorial(k + j * k) * factorial(alpha + j * k)
    return out


def inverse_factorial_hyperdet(n: int, k: int) -> Fraction:
    sign = -1 if (k * n * (n - 1) // 2) % 2 else 1
    out = Fraction(sign * factorial(k * n), factorial(n) * factorial(k) ** n)
    for i in range(n):
        out *= Fraction(factorial(k * i), factorial(k * (n + i - 1)))
    return out


def pochhammer_ratio_hyperdet(n: int, k: int, a, b):
    """D_n^{(k)} of c_m = (a)_m/(b)_m, exact in a and b."""
    out = Fraction(1, factorial(n) * factorial(k) ** n)
    for j in range(n):
        out = out * pochhammer(a, j * k) * pochhammer(b - a, j * k) * factorial((j + 1) * k)
        out = out / pochhammer(b, (n + j - 1) * k)
    return out


def closed_form_hankel(family, n: int, k: int, r: int = 0):
    """Closed-form D_{n;r}^{(k)} for a named sequence family."""
    fam = _as_family(family)
    t, p = fam.tag, fam.params
    if n < 1 or k < 1 or r < 0:
        raise ValueError("need n >= 1, k >= 1, r >= 0")
    half = Fraction(1, 2)
    nf = factorial(n)
    if t == "factorial":
        return factorial_hyperdet(n, k, r)
    if t == "gamma_shifted":
        return factorial_hyperdet(n, k, _nonneg_int(p.get("alpha", 0), "alpha") + r)
    if t == "catalan":
        e = 2 * k * n * (n - 1) + n * (2 * r + 1)
        s = selberg_value(n, r + half, Fraction(3, 2), k)
        return _rational(s * 2 ** e / (ExactScalar(1, 2 * n) * nf))
    if t == "central_binomial":
        s = selberg_value(n, r + half, half, k)
        return _rational(s * 4 ** (k * n * (n - 1) + n * r) / (ExactScalar(1, 2 * n) * nf))
    if t == "two_n_over_n":
        ls = laguerre_selberg_value(n, r + half, k)
        return _rational(ls * 4 ** (n * (k * (n - 1) + r)) / (ExactScalar(1, n) * nf))
    if t == "hilbert":
        return _rational(selberg_value(n, 1 + r, 1, k) / nf)
    if t == "hilbert_shifted":
        a = as_fraction(p.get("a", 0))
        return _rational(selberg_value(n, 1 + a + r, 1, k) / nf)
    if t == "inverse_factorial":
        if r:
            raise UnsupportedFamily("inverse factorials have a closed form only for r = 0")
        return inverse_factorial_hyperdet(n, k)
    if t == "bell":
        if k != 1 or r != 0:
            raise UnsupportedFamily("Bell polynomials have a closed form only for k = 1, r = 0")
        const = 1
        for j in range(n):
            const *= factorial(j)
        a = p.get("a")
        e = n * (n - 1) // 2
        if a is None:
            return MultiPoly.var("a") ** e * const
        return as_fraction(a) ** e * const
    if t == "pochhammer_ratio":
        a, b = as_fraction(p["a"]), as_fraction(p["b"])
        scale = (Fraction(pochhammer(a, r)) / pochhammer(b, r)) ** n
        return scale * pochhammer_ratio_hyperdet(n, k, a + r, b + r)
    raise UnsupportedFamily(t)  # pragma: no cover


def hankel_of_family(family, n: int, k: int, r: int = 0, **kw):
    fam = _as_family(family)
    return hankel_fast(fam.moments(2 * k * (n - 1) + r + 1), n, k, r, **kw)


# -- Appendix A: three routes to D_n^{(k)}((a)_m/(b)_m) -------------------------

@dataclass
class RouteReport:
    direct: Fraction
    hilbert: Fraction
    inverse_factorial: Fraction
    factorial: Fraction

    @property
    def consistent(self) -> bool:
        return self.direct == self.hilbert == self.inverse_factorial == self.factorial

    def as_dict(self):
        return {
            "direct": self.direct,
            "hilbert": self.hilbert,
            "inverse_factorial": self.inverse_factorial,
            "factorial": self.factorial,
        }


def appendixA_consistency(n: int, a, b, k: int) -> RouteReport:
    """D_n^{(k)} of c_m = (a)_m/(b)_m directly and through the Hilbert,
    inverse-factorial and factorial hyperdeterminants.

    The three base values are themselves computed by ``hankel_fast`` so the
    routes do not depend on any closed form.
    """
    a, b = as_fraction(a), as_fraction(b)
    if not b > a:
        raise ValueError("need b > a")
    size = 2 * k * (n - 1) + 1
    direct = hankel_fast([Fraction(pochhammer(a, m)) / pochhammer(b, m) for m in range(size)], n, k)
    H = hankel_fast([Fraction(1, m + 1) for m in range(size)], n, k)
    I = hankel_fast([Fraction(1, factorial(m)) for m in range(size)], n, k)
    F = hankel_fast([Fraction(factorial(m)) for m in range(size)], n, k)

    def common(m):
        return Fraction(pochhammer(a, k * (m - 1)) * pochhammer(b - a, k * (m - 1))) / pochhammer(b, k * (n + m - 2))

    h = f = i_ = Fraction(1)
    for m in range(1, n + 1):
        c = common(m)
        h *= c * factorial(1 + k * (m + n - 2)) / factorial(k * (m - 1)) ** 2
        i_ *= c * factorial(k * (n + m - 2))
        f *= c / factorial(k * (m - 1))
    sign = -1 if (k * n * (n - 1) // 2) % 2 else 1
    return RouteReport(direct, h * H, sign * i_ * I, f * F)


# -- Appendix B: R-polynomials of hypergeometric moment sequences ---------------

def hypergeom_R_extract(P_coeffs, Q_coeffs, n: int, k: int) -> MultiPoly:
    """R_n^{(k)}(a; b) for c_m = c_0 prod_{j<=m} P(j)/Q(j).

    ``P_coeffs``/``Q_coeffs`` give the polynomial coefficients (constant
    term first); entries that are strings become symbols.  An empty
    coefficient list means the constant polynomial 1.

    Rather than dividing a rational function by the prefactor, each term of
    the Vandermonde expansion is divided individually: its sorted exponent
    vector satisfies k*m <= alpha_m <= k(n+m-1), so the quotient is the
    polynomial prod_m P(km+1..alpha_m) * Q(alpha_m+1..k(n+m-1)).
    """
    syms = [c for c in list(P_coeffs) + list(Q_coeffs) if isinstance(c, str)]
    vars = tuple(dict.fromkeys(syms))

    def lift(c):
        return MultiPoly.var(c, vars) if isinstance(c, str) else MultiPoly.const(as_fraction(c), vars)

    P = [lift(c) for c in P_coeffs] or [MultiPoly.const(Fraction(1), vars)]
    Q = [lift(c) for c in Q_coeffs] or [MultiPoly.const(Fraction(1), vars)]

    def ev(poly, j):
        acc = MultiPoly.const(Fraction(0), vars)
        for i, c in enumerate(poly):
            acc = acc + c * (j ** i)
        return acc

    top = 2 * k * (n - 1)
    Pv = {j: ev(P, j) for j in range(1, top + 1)}
    Qv = {j: ev(Q, j) for j in range(1, top + 1)}
    cacheP, cacheQ = {}, {}

    def prodP(lo, hi):
        key = (lo, hi)
        if key not in cacheP:
            acc = MultiPoly.const(Fraction(1), vars)
            for j in range(lo, hi + 1):
                acc = acc * Pv[j]
            cacheP[key] = acc
        return cacheP[key]

    def prodQ(lo, hi):
        key = (lo, hi)
        if key not in cacheQ:
            acc = MultiPoly.const(Fraction(1), vars)
            for j in range(lo, hi + 1):
                acc = acc * Qv[j]
            cacheQ[key] = acc
        return cacheQ[key]

    total = MultiPoly.const(Fraction(0), vars)
    for alpha, coef in vandermonde_terms(n, k):
        term = MultiPoly.const(coef, vars)
        for m, am in enumerate(alpha):
            lo, hi = k * m, k * (n + m - 1)
            if not lo <= am <= hi:
                raise ArithmeticError(f"exponent {am} outside [{lo}, {hi}]; prefactor is not a divisor")
            term = term * prodP(lo + 1, am) * prodQ(am + 1, hi)
        total = total + term
    for c in total.terms.values():
        if as_fraction(c).denominator != 1:
            raise ArithmeticError("R-polynomial has non-integer coefficients")
    return total


# -- Appendix C: pseudo-hyperdeterminants ----------------------------------------

def pseudo_moments(case: int, count: int, params=None):
    params = params or {}
    if case == 1:
        return [Fraction(1, m + 1) for m in range(count)]
    if case == 2:
        a, b = as_fraction(params["a"]), as_fraction(params["b"])
        return [gamma_exact(a + m) / gamma_exact(b + m) for m in range(count)]
    if case == 3:
        return [Fraction(factorial(m)) for m in range(count)]
    raise UnsupportedFamily(f"unknown pseudo-hyperdeterminant case {case}")


def pseudo_pattern(n: int, s: int, m: int = 0):
    if m < 0 or s < 0 or m + s > n:
        raise ValueError("need m, s >= 0 and m + s <= n")
    return [2] * m + [1] * s + [0] * (n - m - s)


def pseudo_closed_form(case: int, n: int, k: int, s: int, m: int = 0, params=None):
    """Det_+ of c_{m_i + j_1 + ... + j_2k} for the pattern (2^m, 1^s, 0^{n-m-s})."""
    params = params or {}
    pseudo_pattern(n, s, m)
    if m and case != 3:
        raise UnsupportedFamily("the (2^m, 1^s) pattern is only available for c_n = n!")
    kf = Fraction(1, factorial(k) ** n)
    if case == 1:
        out = kf
        for j in range(1, s + 1):
            out *= Fraction(1 + (n - j) * k, 2 + (2 * n - j - 1) * k)
        for j in range(n):
            out *= Fraction(factorial(k * (1 + j)) * factorial(k * j) ** 2, factorial(1 + (n + j - 1) * k))
        return out
    if case == 2:
        a, b = as_fraction(params["a"]), as_fraction(params["b"])
        out = ExactScalar(kf) / gamma_exact(b - a) ** n
        for j in range(1, s + 1):
            out = out * ((a + k * (n - j)) / (b + (2 * n - j - 1) * k))
        for j in range(n):
            out = out * factorial(k * (1 + j)) * gamma_exact(a + j * k) * gamma_exact(b - a + j * k)
            out = out / gamma_exact(b + (n + j - 1) * k)
        return out
    if case == 3:
        out = kf
        for j in range(1, m + 1):
            out *= 2 + k * (2 * n - m - s - j)
        for j in range(1, m + s + 1):
            out *= 1 + k * (n - j)
        for j in range(n):
            out *= factorial(k * (1 + j)) * factorial(k * j)
        return out
    raise UnsupportedFamily(f"unknown pseudo-hyperdeterminant case {case}")


def pseudo_bruteforce(case: int, n: int, k: int, s: int, m: int = 0, params=None):
    pattern = pseudo_pattern(n, s, m)
    c = pseudo_moments(case, max(pattern) + 2 * k * (n - 1) + 1, params)
    return det_plus(pseudo_hankel_tensor(c, pattern, k))


__all__ = [
    "FAMILY_TAGS",
    "RouteReport",
    "SelbergParams",
    "SequenceFamily",
    "UnsupportedFamily",
    "appendixA_consistency",
    "bell_polynomials",
    "closed_form_hankel",
    "factorial_hyperdet",
    "hankel_of_family",
    "hypergeom_R_extract",
    "inverse_factorial_hyperdet",
    "laguerre_selberg_value",
    "pochhammer_ratio_hyperdet",
    "pseudo_bruteforce",
    "pseudo_closed_form",
    "pseudo_moments",
    "pseudo_pattern",
    "selberg_ratio",
    "selberg_value",
]
