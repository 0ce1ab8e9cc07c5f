"""Symmetric functions in a fixed number of variables and Hankel hyperdeterminants.

With c_m = h_m(x_1, ..., x_n), the Hankel hyperdeterminant D_n^(k)(h) is
the image of Delta(x)^{2k} under the map phi sending the augmented monomial
m~_lambda to h_lambda.  It equals (-1)^{n(n-1)/2} e_n^{n-1} Delta^{2(k-1)},
whose Schur expansion is computed here by bialternant arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .exact import MultiPoly, UniPoly, det
from .exact.combinat import as_fraction
from .turanians import vandermonde_power_poly

BASES = ("monomial", "schur", "h", "e", "p")


class RowOverflow(ValueError):
    """A partition has more parts than there are variables."""


def xvars(n: int):
    return tuple(f"x{i + 1}" for i in range(n))


def _pad(lam, n: int):
    lam = tuple(int(p) for p in lam)
    nonzero = tuple(p for p in lam if p)
    if len(nonzero) > n:
        raise RowOverflow(f"partition {lam} does not fit in {n} rows")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not weakly decreasing")
    return lam + (0,) * (n - len(lam)) if len(lam) <= n else lam


def _canon(lam, n: int, keep_zero_parts: bool):
    if keep_zero_parts:
        lam = tuple(sorted(lam, reverse=True))
        return lam
    return _pad(tuple(sorted((p for p in lam if p), reverse=True)), n)


def delta(n: int):
    return tuple(range(n - 1, -1, -1))


def alternant(exps, vars) -> MultiPoly:
    """a_lambda = sum over permutations of sign * x^(sigma lambda)."""
    n = len(vars)
    terms = {}
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        mono = tuple(exps[perm[i]] for i in range(n))
        terms[mono] = terms.get(mono, 0) + (-1) ** inv
    return MultiPoly(terms, vars)


def _monomial(lam, vars) -> MultiPoly:
    return MultiPoly({p: Fraction(1) for p in set(permutations(lam))}, vars)


def complete_h(m: int, vars) -> MultiPoly:
    """h_m in the given variables (h_0 = 1, h_m = 0 for m < 0)."""
    if m < 0:
        return MultiPoly({}, vars)
    n = len(vars)
    out = {}

    def rec(i, left, acc):
        if i == n - 1:
            out[tuple(acc + [left])] = Fraction(1)
            return
        for e in range(left + 1):
            rec(i + 1, left - e, acc + [e])

    rec(0, m, [])
    return MultiPoly(out, vars)


def elementary_e(m: int, vars) -> MultiPoly:
    n = len(vars)
    if m < 0 or m > n:
        return MultiPoly({}, vars)
    return _monomial((1,) * m + (0,) * (n - m), vars)


def power_sum(m: int, vars) -> MultiPoly:
    if m == 0:
        return MultiPoly.const(Fraction(len(vars)), vars)
    return _monomial((m,) + (0,) * (len(vars) - 1), vars)


_GENERATORS = {"h": complete_h, "e": elementary_e, "p": power_sum}


@dataclass
class SymExpansion:
    """Symmetric polynomial in n variables, stored in one basis.

    Keys are weakly decreasing tuples of length n.  For the multiplicative
    bases (h, e, p) zero parts are kept, because phi and Jacobi-Trudi both
    produce products of exactly n factors; h_0 specializes to c_0.
    """

    basis: str
    coeffs: dict
    n: int
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        keep = self.basis in _GENERATORS
        clean = {}
        for lam, c in self.coeffs.items():
            key = _canon(lam, self.n, keep)
            if not keep:
                key = _pad(key, self.n)
            clean[key] = clean.get(key, 0) + as_fraction(c)
        self.coeffs = {lam: c for lam, c in sorted(clean.items(), reverse=True) if c != 0}

    def __eq__(self, other):
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return (self.basis, self.n, self.coeffs) == (other.basis, other.n, other.coeffs)

    def to_polynomial(self, vars=None) -> MultiPoly:
        vars = tuple(vars) if vars is not None else xvars(self.n)
        acc = MultiPoly({}, vars)
        for lam, c in self.coeffs.items():
            acc = acc + basis_element(self.basis, lam, vars) * c
        return acc

    @classmethod
    def from_polynomial(cls, f: MultiPoly, basis: str = "monomial") -> "SymExpansion":
        n = len(f.vars)
        mono = {}
        for e, c in f.terms.items():
            if all(e[i] >= e[i + 1] for i in range(n - 1)):
                mono[e] = c
        out = cls("monomial", mono, n)
        if out.to_polynomial(f.vars) != f:
            raise ValueError("polynomial is not symmetric")
        return schur_convert(out, basis) if basis != "monomial" else out

    def specialize(self, c) -> Fraction:
        """Substitute h_m -> c_m (h basis) after converting if needed."""
        e = self if self.basis == "h" else schur_convert(self, "h")
        total = Fraction(0) if not e.coeffs else 0
        for lam, coef in e.coeffs.items():
            term = coef
            for part in lam:
                term = term * c[part]
            total = term + total
        return total

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "terms": {",".join(map(str, lam)): str(c) for lam, c in self.coeffs.items()},
        }

    def __str__(self):
        sym = {"monomial": "m", "schur": "s", "h": "h", "e": "e", "p": "p"}[self.basis]
        parts = []
        for lam, c in self.coeffs.items():
            label = sym + "_" + ",".join(str(p) for p in lam if p or self.basis in _GENERATORS)
            parts.append(f"{c}*{label}")
        return " + ".join(parts) if parts else "0"


def basis_element(basis: str, lam, vars) -> MultiPoly:
    n = len(vars)
    if basis == "monomial":
        return _monomial(_pad(lam, n), vars)
    if basis == "schur":
        lam = _pad(lam, n)
        d = delta(n)
        num = alternant(tuple(l + di for l, di in zip(lam, d)), vars)
        return num.divexact(alternant(d, vars))
    gen = _GENERATORS[basis]
    acc = MultiPoly.const(Fraction(1), vars)
    for part in lam:
        acc = acc * gen(part, vars)
    return acc


def _monomial_to_schur(e: SymExpansion) -> SymExpansion:
    """Coefficient of s_lambda is the coefficient of x^(lambda+delta) in f a_delta."""
    n = e.n
    vars = xvars(n)
    f = e.to_polynomial(vars) * alternant(delta(n), vars)
    d = delta(n)
    out = {}
    for mono, c in f.terms.items():
        if all(mono[i] > mono[i + 1] for i in range(n - 1)):
            out[tuple(m - di for m, di in zip(mono, d))] = c
    return SymExpansion("schur", out, n)


def jacobi_trudi(lam, n: int) -> dict:
    """s_lambda = det(h_{lambda_i - i + j}) as a map from n-part h-products to coefficients."""
    lam = _pad(lam, n)
    out = {}
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        idx = tuple(lam[i] - i + perm[i] for i in range(n))
        if any(m < 0 for m in idx):
            continue
        key = tuple(sorted(idx, reverse=True))
        out[key] = out.get(key, 0) + (-1) ** inv
    return {k: v for k, v in out.items() if v}


def schur_convert(e: SymExpansion, target: str) -> SymExpansion:
    """Exact basis change at fixed n.

    Supported targets: monomial and schur from any basis, and h from any
    basis (through the Schur expansion and Jacobi-Trudi).
    """
    if target == e.basis:
        return SymExpansion(e.basis, dict(e.coeffs), e.n)
    if target == "monomial":
        return SymExpansion.from_polynomial(e.to_polynomial(), "monomial")
    if target == "schur":
        mono = e if e.basis == "monomial" else schur_convert(e, "monomial")
        return _monomial_to_schur(mono)
    if target == "h":
        s = e if e.basis == "schur" else schur_convert(e, "schur")
        out = {}
        for lam, c in s.coeffs.items():
            for key, v in jacobi_trudi(lam, e.n).items():
                out[key] = out.get(key, 0) + c * v
        return SymExpansion("h", out, e.n)
    raise ValueError(f"conversion to {target!r} is not supported")


def vandermonde_power(n: int, k: int) -> SymExpansion:
    """Delta(x)^{2k} in the monomial basis."""
    return SymExpansion.from_polynomial(vandermonde_power_poly(n, k, xvars(n)), "monomial")


def _e_n_power(n: int, power: int, vars) -> MultiPoly:
    return elementary_e(n, vars) ** power


def hankel_hyperdet_poly(n: int, k: int, route: str = "nvars") -> MultiPoly:
    """D_n^(k)(h) as a polynomial in x_1..x_n.

    nvars: (-1)^{n(n-1)/2} e_n^{n-1} Delta^{2(k-1)}.
    sym1:  (-1)^{k n(n-1)/2} e_n^{n-k} det(p_{n-i+j})^{k-1}, where a negative
    power of e_n is removed by exact division.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    vars = xvars(n)
    if route == "nvars":
        sign = (-1) ** (n * (n - 1) // 2)
        return _e_n_power(n, n - 1, vars) * vandermonde_power_poly(n, k - 1, vars) * sign
    if route == "sym1":
        sign = (-1) ** (k * n * (n - 1) // 2)
        P = [[power_sum(n - i + j, vars) for j in range(1, n + 1)] for i in range(1, n + 1)]
        f = det(P) ** (k - 1) * sign
        if n >= k:
            return f * _e_n_power(n, n - k, vars)
        return f.divexact(_e_n_power(n, k - n, vars))
    if route == "phi":
        h = phi_map(laurent_from_poly(vandermonde_power_poly(n, k, vars)), n)
        return h.to_polynomial(vars)
    raise ValueError(f"unknown route {route!r}")


def hankel_hyperdet_schur(n: int, k: int, route: str = "nvars") -> SymExpansion:
    return schur_convert(SymExpansion.from_polynomial(hankel_hyperdet_poly(n, k, route)), "schur")


def sym1_printed_sign_poly(n: int, k: int) -> MultiPoly:
    """The (sym1) form with the sign (-1)^{n(n-1)/2} for every k."""
    f = hankel_hyperdet_poly(n, k, "sym1")
    return f * (-1) ** ((k - 1) * n * (n - 1) // 2)


# -- the phi map ---------------------------------------------------------------


def laurent_from_poly(f: MultiPoly) -> dict:
    return dict(f.terms)


def laurent_mul(f: dict, g: dict) -> dict:
    out = {}
    for a, ca in f.items():
        for b, cb in g.items():
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def laurent_alternant(exps) -> dict:
    n = len(exps)
    out = {}
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        mono = tuple(exps[perm[i]] for i in range(n))
        out[mono] = out.get(mono, 0) + (-1) ** inv
    return {k: Fraction(v) for k, v in out.items() if v}


def _stabilizer(lam) -> int:
    size = 1
    for v in set(lam):
        size *= factorial(lam.count(v))
    return size


def phi_map(f: dict, n: int) -> SymExpansion:
    """phi(m~_lambda) = h_lambda for lambda in N^n, 0 when some exponent is negative.

    ``f`` is a symmetric Laurent polynomial as a map from exponent tuples to
    coefficients; m~_lambda = |Stab(lambda)| m_lambda.
    """
    out = {}
    for mono, c in f.items():
        if len(mono) != n:
            raise ValueError("exponent tuple has the wrong length")
        if any(mono[i] < mono[i + 1] for i in range(n - 1)):
            continue
        if any(e < 0 for e in mono):
            continue
        out[tuple(mono)] = as_fraction(c) / _stabilizer(mono)
    return SymExpansion("h", out, n)


def phi_hankel(c, n: int, k: int):
    """phi(a_delta^{2k}) with h_m -> c_m."""
    return phi_map(laurent_from_poly(vandermonde_power_poly(n, k, xvars(n))), n).specialize(c)


# -- corollaries ----------------------------------------------------------------


def chebyshev_u(count: int, var: str = "x"):
    X = UniPoly.x(var)
    U = [UniPoly([1], var), X * 2]
    while len(U) < count:
        U.append(X * U[-1] * 2 - U[-2])
    return U[:count]


def fibonacci(count: int):
    f = [1, 1]
    while len(f) < count:
        f.append(f[-1] + f[-2])
    return f[:count]


def apolar_half_sum(c, m: int):
    """(1/2) sum_j (-1)^j binom(m,j) c_j c_{m-j}."""
    total = 0
    for j in range(m + 1):
        total = c[j] * c[m - j] * ((-1) ** j * comb(m, j)) + total
    return total * Fraction(1, 2)


def ubiquitous_identities(case: str, m: int = None, k: int = None):
    """(lhs, rhs) for the Chebyshev U (argument m) or Fibonacci (argument k) identity.

    Chebyshev: rhs = (-1)^{m/2} [4(1-x^2)]^{m/2-1} for even m >= 2, 0 for odd m.
    Fibonacci: rhs = 5^{k-1} with f = (1, 1, 2, 3, 5, ...).
    """
    if case == "fibonacci":
        if k is None or k < 1:
            raise ValueError("fibonacci needs k >= 1")
        return apolar_half_sum(fibonacci(2 * k + 1), 2 * k), Fraction(5) ** (k - 1)
    if case == "chebyshevU":
        if m is None or m < 1:
            raise ValueError("chebyshevU needs m >= 1")
        X = UniPoly.x("x")
        lhs = apolar_half_sum(chebyshev_u(m + 1), m)
        if m % 2:
            return lhs, UniPoly([0], "x")
        base = UniPoly([4], "x") - X * X * 4
        return lhs, base ** (m // 2 - 1) * (-1) ** (m // 2)
    raise ValueError(f"unknown identity {case!r}")


def chebyshev_printed_rhs(m: int) -> UniPoly:
    """[4(1-x^2)]^{m/2-1} without the sign (-1)^{m/2}."""
    X = UniPoly.x("x")
    if m % 2:
        return UniPoly([0], "x")
    return (UniPoly([4], "x") - X * X * 4) ** (m // 2 - 1)


def chebyshev_hankel(k: int) -> UniPoly:
    """D_2^(k)(U) = -[4(x^2-1)]^{k-1}, from e_2 = 1 and Delta^2 = 4(x^2-1)."""
    X = UniPoly.x("x")
    return -((X * X * 4 - 4) ** (k - 1))


__all__ = [
    "BASES",
    "RowOverflow",
    "SymExpansion",
    "alternant",
    "apolar_half_sum",
    "basis_element",
    "chebyshev_hankel",
    "chebyshev_printed_rhs",
    "chebyshev_u",
    "complete_h",
    "elementary_e",
    "fibonacci",
    "hankel_hyperdet_poly",
    "hankel_hyperdet_schur",
    "jacobi_trudi",
    "laurent_alternant",
    "laurent_mul",
    "phi_hankel",
    "phi_map",
    "power_sum",
    "schur_convert",
    "sym1_printed_sign_poly",
    "ubiquitous_identities",
    "vandermonde_power",
]
