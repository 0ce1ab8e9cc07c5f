"""Selberg-type measures, symmetric Gram-Schmidt and Kaneko's integral.

Multivariate integrals are computed exactly: the Vandermonde power is
expanded into monomials and each monomial integral factorizes into
one-dimensional Beta, Gamma or Gaussian moments.  When the Vandermonde
exponent is not an even integer (the dual measure of Kaneko's identity has
exponent 2/k) and there are at most two variables, symmetric polynomials
are rewritten in the products e_r(y) = prod y_i and e_r(1 - y) and
integrated with Aomoto-type Pochhammer ratios instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial

from .exact import ExactScalar, MultiPoly, beta_exact, gamma_exact, solve
from .exact.combinat import as_fraction
from .hyperdet import hankel_fast
from .selberg import laguerre_selberg_value, selberg_ratio, selberg_value
from .turanians import TuranianSpec, turanian_bruteforce, vandermonde_power_poly

MEASURE_KINDS = ("jacobi", "laguerre", "hermite", "moments")


class UnsupportedMeasure(ValueError):
    pass


# -- partitions and symmetric polynomials -------------------------------------


def partitions(size: int, max_parts: int, max_part: int | None = None):
    """Partitions of ``size`` with at most ``max_parts`` parts, lex decreasing."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, max_parts - 1, first):
            yield (first,) + rest


def basis_order(max_size: int, r: int):
    """Partitions with at most r parts, by size and then lex increasing.

    Lex order refines dominance, so Gram-Schmidt in this order yields the
    polynomials that are triangular with respect to dominance.
    """
    out = []
    for d in range(max_size + 1):
        out.extend(reversed(list(partitions(d, r))))
    return out


def sym_vars(r: int, prefix: str = "y"):
    return tuple(f"{prefix}{i + 1}" for i in range(r))


def monomial_symmetric(lam, vars) -> MultiPoly:
    r = len(vars)
    lam = tuple(lam) + (0,) * (r - len(lam))
    if len(lam) > r:
        return MultiPoly({}, vars)
    return MultiPoly({p: Fraction(1) for p in set(permutations(lam))}, vars)


def elementary(r: int, vars) -> list:
    ys = [MultiPoly.var(v, vars) for v in vars]
    out = []
    for i in range(1, r + 1):
        s = MultiPoly({}, vars)
        for c in combinations(range(r), i):
            t = MultiPoly.const(Fraction(1), vars)
            for j in c:
                t = t * ys[j]
            s = s + t
        out.append(s)
    return out


def to_elementary(f: MultiPoly) -> MultiPoly:
    """Rewrite a symmetric polynomial in the elementary functions e1..er."""
    r = len(f.vars)
    es = elementary(r, f.vars)
    names = tuple(f"e{i + 1}" for i in range(r))
    out = MultiPoly({}, names)
    while f.terms:
        lam = max(f.terms)
        c = f.terms[lam]
        if any(lam[i] < lam[i + 1] for i in range(r - 1)):
            raise ValueError("polynomial is not symmetric")
        ex = tuple(lam[i] - (lam[i + 1] if i + 1 < r else 0) for i in range(r))
        t = MultiPoly.const(c, f.vars)
        for i in range(r):
            t = t * es[i] ** ex[i]
        f = f - t
        out = out + MultiPoly({ex: c}, names)
    return out


@dataclass
class MultiSymPoly:
    """Symmetric polynomial in the monomial-symmetric basis."""

    coeffs: dict
    r: int

    def __post_init__(self):
        self.coeffs = {tuple(p for p in lam if p): c for lam, c in self.coeffs.items() if c != 0}

    @property
    def leading(self):
        return max(self.coeffs, key=lambda lam: (sum(lam), lam + (0,) * (self.r - len(lam))))

    def to_multipoly(self, vars=None) -> MultiPoly:
        vars = tuple(vars) if vars is not None else sym_vars(self.r)
        acc = MultiPoly({}, vars)
        for lam, c in self.coeffs.items():
            acc = acc + monomial_symmetric(lam, vars) * c
        return acc

    @classmethod
    def from_multipoly(cls, f: MultiPoly) -> "MultiSymPoly":
        coeffs = {}
        for mono, c in f.terms.items():
            if all(mono[i] >= mono[i + 1] for i in range(len(mono) - 1)):
                coeffs[mono] = c
        out = cls(coeffs, len(f.vars))
        if out.to_multipoly(f.vars) != f:
            raise ValueError("polynomial is not symmetric")
        return out


def affine_substitute(f: MultiPoly, scale, shift, vars=None) -> MultiPoly:
    """Return f(scale*y_1 + shift, ..., scale*y_r + shift) over ``vars``."""
    vars = tuple(vars) if vars is not None else f.vars
    if len(vars) != len(f.vars):
        raise ValueError("affine substitution keeps the number of variables")
    lin = [MultiPoly.var(v, vars) * scale + shift for v in vars]
    powers = {}
    acc = MultiPoly({}, vars)
    for mono, c in f.terms.items():
        term = MultiPoly.const(c, vars)
        for i, e in enumerate(mono):
            if e:
                if (i, e) not in powers:
                    powers[i, e] = lin[i] ** e
                term = term * powers[i, e]
        acc = acc + term
    return acc


# -- measures -------------------------------------------------------------------


@dataclass(frozen=True)
class SelbergMeasure:
    """prod w(y_i) |Delta(y)|^power dy over r variables.

    jacobi: w = y^(a-1) (1-y)^(b-1) on [0,1]; laguerre: y^(a-1) e^(-y) on
    (0, inf); hermite: e^(-y^2) on the real line; moments: an arbitrary
    linear functional given by its moment list.
    """

    kind: str
    r: int
    power: Fraction = Fraction(2)
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)
    moments: tuple | None = None

    def __post_init__(self):
        if self.kind not in MEASURE_KINDS:
            raise UnsupportedMeasure(f"unknown measure kind {self.kind!r}")
        if self.r < 0:
            raise ValueError("r must be nonnegative")
        for name in ("power", "a", "b"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.power < 0:
            raise ValueError("Vandermonde power must be nonnegative")
        if self.kind == "moments":
            if self.moments is None:
                raise ValueError("moments measure needs a moment list")
            object.__setattr__(self, "moments", tuple(self.moments))

    @property
    def even_power(self) -> bool:
        return self.power.denominator == 1 and self.power % 2 == 0

    def one_dim(self, e: int):
        """Integral of y^e against the one-variable weight."""
        if self.kind == "jacobi":
            return beta_exact(self.a + e, self.b)
        if self.kind == "laguerre":
            return gamma_exact(self.a + e)
        if self.kind == "hermite":
            if e % 2:
                return ExactScalar(0)
            return gamma_exact(Fraction(e + 1, 2))
        try:
            return self.moments[e]
        except IndexError:
            raise UnsupportedMeasure(f"moment {e} not supplied") from None


@lru_cache(maxsize=None)
def _vandermonde_terms(r: int, half_power: int):
    return tuple(vandermonde_power_poly(r, half_power).terms.items()) if r else (((), Fraction(1)),)


def measure_moment(m: SelbergMeasure, mono):
    """Exact integral of y^mono |Delta(y)|^power prod w(y_i)."""
    if not m.even_power:
        raise UnsupportedMeasure("monomial expansion needs an even integer Vandermonde power")
    mono = tuple(mono) + (0,) * (m.r - len(mono))
    if len(mono) != m.r or any(e < 0 for e in mono):
        raise ValueError(f"bad exponent tuple {mono} for {m.r} variables")
    total = 0
    for d, c in _vandermonde_terms(m.r, int(m.power) // 2):
        term = c
        for e, di in zip(mono, d):
            term = term * m.one_dim(e + di)
        total = term + total
    return _simplify(total)


def _simplify(x):
    if isinstance(x, ExactScalar) and x.is_rational():
        return x.to_fraction()
    return x


def _to_fraction(x) -> Fraction:
    if isinstance(x, ExactScalar):
        return x.to_fraction()
    return as_fraction(x)


def integrate(m: SelbergMeasure, f: MultiPoly):
    """Unnormalized integral of a polynomial in r variables (even power only)."""
    total = 0
    for mono, c in f.terms.items():
        total = measure_moment(m, mono) * c + total
    return _simplify(total)


def normalized_functional(m: SelbergMeasure):
    """Return f -> (integral of f) / (total mass) as an exact rational."""
    if m.even_power:
        cache = {}
        mass = measure_moment(m, ())

        def expect(f: MultiPoly) -> Fraction:
            total = Fraction(0)
            for mono, c in f.terms.items():
                if mono not in cache:
                    cache[mono] = _to_fraction(measure_moment(m, mono) / mass)
                total += cache[mono] * c
            return total

        return expect
    if m.kind != "jacobi" or m.r > 2:
        raise UnsupportedMeasure(
            "a non-even Vandermonde power is supported only for Jacobi measures in at most two variables"
        )
    gamma = m.power / 2

    def expect(f: MultiPoly) -> Fraction:
        if m.r == 0:
            return f.constant_term()
        fe = to_elementary(f)
        if m.r == 1:
            return sum(
                (c * selberg_ratio(1, m.a, m.b, gamma, mono[0], 0) for mono, c in fe.terms.items()),
                Fraction(0),
            )
        # e1 = 1 + e2 - (1-y1)(1-y2)
        V = ("p", "q")
        P, Q = MultiPoly.var("p", V), MultiPoly.var("q", V)
        e1 = P + 1 - Q
        total = MultiPoly({}, V)
        for (i, j), c in fe.terms.items():
            total = total + e1 ** i * P ** j * c
        return sum(
            (c * selberg_ratio(2, m.a, m.b, gamma, p, q) for (p, q), c in total.terms.items()),
            Fraction(0),
        )

    return expect


# -- Gram-Schmidt ---------------------------------------------------------------


def gram_schmidt_target(expect, r: int, kappa, vars=None) -> MultiSymPoly:
    """Monic orthogonal polynomial with leading term m_kappa for a normalized functional."""
    kappa = tuple(p for p in kappa if p)
    if len(kappa) > r:
        raise ValueError(f"partition {kappa} has more than {r} parts")
    vars = tuple(vars) if vars is not None else sym_vars(r)
    order = basis_order(sum(kappa), r)
    pos = order.index(kappa)
    lower = order[:pos]
    ms = {lam: monomial_symmetric(lam, vars) for lam in lower + [kappa]}
    if not lower:
        return MultiSymPoly({kappa: Fraction(1)}, r)
    G = [[expect(ms[nu] * ms[mu]) for mu in lower] for nu in lower]
    rhs = [-expect(ms[nu] * ms[kappa]) for nu in lower]
    sol = solve(G, rhs)
    coeffs = {kappa: Fraction(1)}
    for mu, c in zip(lower, sol):
        coeffs[mu] = c
    return MultiSymPoly(coeffs, r)


def gram_schmidt_sym(m: SelbergMeasure, degree: int):
    """All p_kappa with |kappa| <= degree, in Gram-Schmidt order, as (kappa, poly) pairs."""
    expect = normalized_functional(m)
    vars = sym_vars(m.r)
    order = basis_order(degree, m.r)
    ms = [monomial_symmetric(lam, vars) for lam in order]
    out, polys = [], []
    for i, lam in enumerate(order):
        p = ms[i]
        for q, qq in zip(polys, [expect(q * q) for q in polys]):
            p = p - q * (expect(ms[i] * q) / qq)
        polys.append(p)
        out.append((lam, MultiSymPoly.from_multipoly(p)))
    return out


def dual_jacobi_measure(r: int, a, b, k) -> SelbergMeasure:
    """Measure on [0,1]^r whose rectangular polynomials appear in Kaneko's identity."""
    k = as_fraction(k)
    return SelbergMeasure("jacobi", r, power=2 / k, a=as_fraction(a) / k, b=as_fraction(b) / k)


def rectangular_jacobi(n: int, r: int, a, b, k, interval: str = "unit") -> MultiPoly:
    """Monic p_(n^r) for the dual measure, on [0,1] or mapped to [-1,1] in t = 1 - 2y."""
    q = gram_schmidt_target(normalized_functional(dual_jacobi_measure(r, a, b, k)), r, (n,) * r)
    qp = q.to_multipoly(sym_vars(r, "y"))
    if interval == "unit":
        return qp
    if interval == "symmetric":
        # p(t) = (-2)^{nr} q((1 - t)/2) keeps the leading coefficient equal to 1.
        t = sym_vars(r, "t")
        return affine_substitute(qp, Fraction(-1, 2), Fraction(1, 2), t) * Fraction(-2) ** (n * r)
    raise ValueError("interval must be 'unit' or 'symmetric'")


# -- Kaneko's integral ----------------------------------------------------------


def _x_measure(variant: str, n: int, a, b, k) -> SelbergMeasure:
    if variant == "jacobi":
        return SelbergMeasure("jacobi", n, power=2 * k, a=a, b=b)
    if variant == "laguerre":
        return SelbergMeasure("laguerre", n, power=2 * k, a=a)
    if variant == "hermite":
        return SelbergMeasure("hermite", n, power=2 * k)
    raise UnsupportedMeasure(f"unknown variant {variant!r}")


def r_integral(xm: SelbergMeasure, n: int, r: int, reverse: bool = False) -> MultiPoly:
    """Integral over x of R(x,y) = prod (x_i - y_j) against an n-variable measure.

    prod_j (x - y_j) = sum_s x^s (-1)^(r-s) e_{r-s}(y), so the integral is a
    sum of measure moments times products of elementary functions of y.
    With ``reverse`` the factors are (y_j - x_i) instead.
    """
    ys = sym_vars(r)
    es = [MultiPoly.const(Fraction(1), ys)] + elementary(r, ys) if r else [MultiPoly.const(Fraction(1), ys)]
    acc = MultiPoly({}, ys)
    for s in product(range(r + 1), repeat=n):
        mom = measure_moment(xm, s)
        if mom == 0:
            continue
        term = MultiPoly.const(Fraction(1), ys)
        sign = 1
        for si in s:
            term = term * es[r - si]
            sign *= (-1) ** (r - si)
        acc = acc + term * (mom * sign)
    if reverse:
        acc = acc * (-1) ** (n * r)
    return acc


def kaneko_lhs(n: int, r: int, a=1, b=1, k: int = 1, variant: str = "jacobi") -> MultiPoly:
    """Integral of R(x,y) Delta(x)^{2k} prod w(x_i) dx as a polynomial in y1..yr."""
    if n < 1 or r < 0 or k < 0:
        raise ValueError("need n >= 1, r >= 0, k >= 0")
    return r_integral(_x_measure(variant, n, a, b, k), n, r)


def kaneko_rhs(n: int, r: int, a=1, b=1, k: int = 1) -> MultiPoly:
    """2^{-nr} S_n(a,b,k) p_(n^r)(1-2y_1, ..., 1-2y_r) with p from Gram-Schmidt on [-1,1]."""
    p = rectangular_jacobi(n, r, a, b, k, interval="symmetric")
    on_unit = affine_substitute(p, -2, 1, sym_vars(r, "y"))
    s = _simplify(selberg_value(n, a, b, k))
    return on_unit * (s * Fraction(1, 2 ** (n * r)))


def kaneko_check(n: int, r: int, a=1, b=1, k: int = 1):
    """Both sides of Kaneko's identity; they agree exactly."""
    left = kaneko_lhs(n, r, a, b, k, "jacobi")
    if r == 0:
        return left, MultiPoly.const(_simplify(selberg_value(n, a, b, k)), ())
    return left, kaneko_rhs(n, r, a, b, k)


def heine_normalization(n: int, a, b, k):
    """Z with Z p_(n^r)(t) = n! D_n^(k)(c(t)) for the weight (1-x)^(a-1) (1+x)^(b-1) on [-1,1]."""
    a, b = as_fraction(a), as_fraction(b)
    e = k * n * (n - 1) + n * (a + b - 1)
    return _simplify(selberg_value(n, a, b, k) * Fraction(2) ** int(e))


def heine_moments(count: int, r: int, a, b) -> list:
    """c_m(t) = integral over [-1,1] of x^m prod_j (t_j - x) (1-x)^(a-1) (1+x)^(b-1) dx."""
    a, b = as_fraction(a), as_fraction(b)
    ts = sym_vars(r, "t")
    es = [MultiPoly.const(Fraction(1), ts)] + (elementary(r, ts) if r else [])

    def base(j):
        # x = 1 - 2u maps [-1,1] onto [0,1]
        total = 0
        for i in range(j + 1):
            total = beta_exact(a + i, b) * (comb(j, i) * (-2) ** i) + total
        return _simplify(total * Fraction(2) ** int(a + b - 1))

    out = []
    for m in range(count):
        acc = MultiPoly({}, ts)
        for s in range(r + 1):
            acc = acc + es[r - s] * (base(m + s) * (-1) ** s)
        out.append(acc)
    return out


def heine_hyperdet_check(n: int, r: int, k: int, a=1, b=1):
    """(Z p_(n^r)(t), n! D_n^(k)(c(t))) as polynomials in t1..tr."""
    p = rectangular_jacobi(n, r, a, b, k, interval="symmetric")
    left = p * heine_normalization(n, a, b, k)
    c = heine_moments(2 * k * (n - 1) + 1, r, a, b)
    right = hankel_fast(c, n, k) * factorial(n)
    return left, right


# -- k = 1: arbitrary functionals -------------------------------------------------


def random_rational_functional(count: int, seed: int = 0, height: int = 9) -> tuple:
    """Generic rational moment list starting with 1."""
    rng = random.Random(seed)
    return (Fraction(1),) + tuple(
        Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(count - 1)
    )


def leclerc_check(moments, n: int, r: int):
    """(mu_n(Delta^2 R(y,x)), mu_n(Delta^2) p_(n^r)(y)) for an arbitrary functional mu."""
    moments = tuple(as_fraction(c) for c in moments)
    need = 2 * n * r + 2 * r
    if len(moments) < need:
        raise UnsupportedMeasure(f"need at least {need} moments")
    xm = SelbergMeasure("moments", n, power=2, moments=moments)
    left = r_integral(xm, n, r, reverse=True)
    ym = SelbergMeasure("moments", r, power=2, moments=moments)
    p = gram_schmidt_target(normalized_functional(ym), r, (n,) * r).to_multipoly(sym_vars(r))
    return left, p * measure_moment(xm, ())


# -- degenerations: shifted Turanians --------------------------------------------


def laguerre_kaneko_poly(n: int, r: int, a, k: int) -> MultiPoly:
    """kaneko_lhs (Laguerre variant) divided by LS_n(a+r, k); its constant term is 1."""
    lhs = kaneko_lhs(n, r, a, None, k, "laguerre")
    return lhs * (1 / _simplify(laguerre_selberg_value(n, as_fraction(a) + r, k)))


def hermite_prefactor(n: int, r: int, k: int) -> ExactScalar:
    """Integral of Delta^{2k} prod e^(-x_i^2): pi^(n/2) 2^(-kn(n-1)/2) prod (jk)!/k!."""
    val = Fraction(1, 2 ** (k * n * (n - 1) // 2))
    for j in range(1, n + 1):
        val *= Fraction(factorial(j * k), factorial(k))
    return ExactScalar(val, n)


def _all_equal(f: MultiPoly, value: MultiPoly) -> MultiPoly:
    return f.subs({v: value for v in f.vars})


def charlier_shifted_via_kaneko(n: int, r: int, k: int, A: int) -> MultiPoly:
    """Shifted Charlier Turanian at x = -A, as a polynomial in the Charlier parameter a.

    C_m(-A; a) = (-1)^m E[(t + a)^m] for t ~ Gamma(A), so the Turanian is
    (-1)^(nr)/n! times the Laguerre variant at y_1 = ... = y_r = -a.
    """
    lhs = kaneko_lhs(n, r, A, None, k, "laguerre")
    V = ("a",)
    diag = _all_equal(lhs, -MultiPoly.var("a", V)) if r else MultiPoly.const(lhs.constant_term(), V)
    return diag * _to_fraction((-1) ** (n * r) / (gamma_exact(A) ** n * factorial(n)))


def hermite_shifted_via_kaneko(n: int, r: int, k: int) -> MultiPoly:
    """Shifted monic Hermite Turanian from the Hermite variant at y_j = i x."""
    lhs = kaneko_lhs(n, r, None, None, k, "hermite")
    X = ("x",)
    diag = _all_equal(lhs, MultiPoly.var("x", X)) if r else MultiPoly.const(lhs.constant_term(), X)
    out = MultiPoly({}, X)
    for (d,), c in diag.terms.items():
        if (d - n * r) % 2:
            if c != 0:
                raise ArithmeticError("parity violated")
            continue
        out = out + MultiPoly({(d,): _to_fraction(c / ExactScalar(1, n)) * (-1 if (d - n * r) // 2 % 2 else 1)}, X)
    sign = (-1) ** (k * n * (n - 1) // 2 + n * r)
    return out * Fraction(sign, factorial(n))


def shifted_turanian_check(family: str, n: int, r: int, k: int = 1, A: int = 2):
    """(Kaneko route, brute force) for the shifted Charlier or Hermite Turanian."""
    if family == "charlier":
        via = charlier_shifted_via_kaneko(n, r, k, A)
        brute = turanian_bruteforce(TuranianSpec("charlier", n, k, r))
        at = brute.subs({"x": MultiPoly.const(Fraction(-A), brute.vars)})
        return via, MultiPoly({(m[1],): c for m, c in at.terms.items()}, ("a",))
    if family == "hermite":
        return hermite_shifted_via_kaneko(n, r, k), turanian_bruteforce(TuranianSpec("hermite", n, k, r))
    raise UnsupportedMeasure(f"no Kaneko degeneration for {family!r}")


__all__ = [
    "MEASURE_KINDS",
    "MultiSymPoly",
    "SelbergMeasure",
    "UnsupportedMeasure",
    "affine_substitute",
    "basis_order",
    "charlier_shifted_via_kaneko",
    "dual_jacobi_measure",
    "gram_schmidt_sym",
    "gram_schmidt_target",
    "heine_hyperdet_check",
    "heine_moments",
    "heine_normalization",
    "hermite_prefactor",
    "hermite_shifted_via_kaneko",
    "integrate",
    "kaneko_check",
    "kaneko_lhs",
    "kaneko_rhs",
    "laguerre_kaneko_poly",
    "leclerc_check",
    "measure_moment",
    "monomial_symmetric",
    "normalized_functional",
    "partitions",
    "random_rational_functional",
    "rectangular_jacobi",
    "shifted_turanian_check",
    "to_elementary",
]
