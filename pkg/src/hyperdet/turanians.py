"""Hankel hyperdeterminants whose entries are orthogonal polynomials in x."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .exact import ExactScalar, MultiPoly, UniPoly, pochhammer
from .exact.combinat import as_fraction
from .hyperdet import hankel_fast
from .orthopoly import classical_family
from .selberg import selberg_value

TURANIAN_FAMILIES = ("legendre", "laguerre", "hermite", "charlier", "meixner", "krawtchouk")

DEFAULT_PARAMS = {
    "laguerre": {"alpha": 0},
    "meixner": {"beta": 3, "gamma": Fraction(1, 3)},
    "krawtchouk": {"p": Fraction(1, 3), "N": 12},
    "charlier": {"a": None},
}


class OutOfScope(ValueError):
    pass


@dataclass(frozen=True)
class TuranianSpec:
    family: str
    n: int
    k: int
    r: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in TURANIAN_FAMILIES:
            raise OutOfScope(f"unknown Turanian family {self.family!r}")
        if self.n < 1 or self.k < 1 or self.r < 0:
            raise ValueError("need n >= 1, k >= 1, r >= 0")
        merged = dict(DEFAULT_PARAMS.get(self.family, {}))
        merged.update(self.params)
        object.__setattr__(self, "params", merged)

    @property
    def count(self) -> int:
        return 2 * self.k * (self.n - 1) + self.r + 1

    @property
    def vars(self):
        return ("x", "a") if self.family == "charlier" and self.params.get("a") is None else ("x",)


def _x(vars):
    return MultiPoly.var("x", vars)


def _const(c, vars):
    return MultiPoly.const(as_fraction(c), vars)


def _rising_x(shift, length, vars, sign=1):
    """(sign*x + shift)_length as a polynomial in x."""
    acc = _const(1, vars)
    base = _x(vars) * sign + shift
    for i in range(length):
        acc = acc * (base + i)
    return acc


def turanian_entries(spec: TuranianSpec):
    """c_0 .. c_{count-1} as MultiPolys in x (and a for symbolic Charlier)."""
    fam, p, vars = spec.family, spec.params, spec.vars
    count = spec.count
    if fam == "legendre":
        X = UniPoly.x("x")
        P = [UniPoly([1], "x"), X]
        for m in range(1, count):
            P.append((X * P[m] * (2 * m + 1) - P[m - 1] * m) * Fraction(1, m + 1))
        return [q.to_multipoly(vars) for q in P[:count]]
    if fam == "hermite":
        return [q.to_multipoly(vars) for q in classical_family("hermite", count).polynomials[:count]]
    if fam == "charlier":
        a = p.get("a")
        fam_ = classical_family("charlier", count, {"a": a})
        return [q.to_multipoly(vars) for q in fam_.polynomials[:count]]
    if fam == "laguerre":
        al = as_fraction(p["alpha"])
        X = _x(vars)
        out = []
        for m in range(count):
            acc = _const(0, vars)
            for i in range(m + 1):
                acc = acc + X ** i * (Fraction((-1) ** i * comb(m, i)) / pochhammer(al + 1, i))
            out.append(acc)
        return out
    if fam == "meixner":
        beta, gamma = as_fraction(p["beta"]), as_fraction(p["gamma"])
        lam = (1 - gamma) / gamma
        out = []
        for m in range(count):
            acc = _const(0, vars)
            for i in range(m + 1):
                acc = acc + _rising_x(0, i, vars) * (comb(m, i) * lam ** i / pochhammer(beta, i))
            out.append(acc)
        return out
    if fam == "krawtchouk":
        pp, N = as_fraction(p["p"]), as_fraction(p["N"])
        if N.denominator == 1 and N < count - 1:
            raise OutOfScope(f"Krawtchouk entries need N >= {count - 1}")
        out = []
        for m in range(count):
            acc = _const(0, vars)
            for i in range(m + 1):
                w = Fraction(comb(m, i)) * (-1 / pp) ** i / pochhammer(-N, i)
                acc = acc + _rising_x(0, i, vars, sign=-1) * w
            out.append(acc)
        return out
    raise OutOfScope(fam)  # pragma: no cover


def turanian_bruteforce(spec: TuranianSpec):
    c = turanian_entries(spec)
    return hankel_fast(c, spec.n, spec.k, spec.r)


def turanian_closed_form(spec: TuranianSpec):
    """Closed-form Turanian with every Gamma ratio written as a Pochhammer in x."""
    if spec.r:
        raise OutOfScope("closed forms are provided for r = 0 only; shifted cases go through the Kaneko route")
    fam, p, vars = spec.family, spec.params, spec.vars
    n, k = spec.n, spec.k
    e = k * n * (n - 1)
    base = Fraction(1, factorial(n) * factorial(k) ** n)
    X = _x(vars)
    if fam == "legendre":
        s = selberg_value(n, Fraction(1, 2), Fraction(1, 2), k) / (ExactScalar(1, 2 * n) * factorial(n))
        if not s.is_rational():
            raise ArithmeticError("pi powers failed to cancel")
        return (X * X * 4 - 4) ** (e // 2) * s.coeff
    if fam == "hermite":
        val = base * Fraction(-1, 2) ** (e // 2)
        for j in range(1, n + 1):
            val *= factorial(j * k)
        return _const(val, vars)
    if fam == "charlier":
        acc = _const(base, vars)
        for j in range(n):
            acc = acc * _rising_x(0, j * k, vars, sign=-1) * factorial((j + 1) * k)
        return acc
    if fam == "laguerre":
        al = as_fraction(p["alpha"])
        val = base * (-1) ** (e // 2)
        for j in range(n):
            val = val * factorial(j * k + k) / pochhammer(al + 1, k * (n + j - 1))
        return X ** e * val
    if fam == "meixner":
        beta, gamma = as_fraction(p["beta"]), as_fraction(p["gamma"])
        lam = (1 - gamma) / gamma
        acc = _const(base * lam ** e, vars)
        for j in range(n):
            acc = acc * _rising_x(0, j * k, vars) * _rising_x(beta, j * k, vars, sign=-1)
            acc = acc * (Fraction(factorial((j + 1) * k)) / pochhammer(beta, (n + j - 1) * k))
        return acc
    if fam == "krawtchouk":
        pp, N = as_fraction(p["p"]), as_fraction(p["N"])
        acc = _const(base / pp ** e, vars)
        for j in range(n):
            acc = acc * _rising_x(0, j * k, vars, sign=-1) * _rising_x(-N, j * k, vars)
            acc = acc * (Fraction(factorial((j + 1) * k)) / pochhammer(-N, (n + j - 1) * k))
        return acc
    raise OutOfScope(fam)  # pragma: no cover


def vandermonde_power_poly(n: int, k: int, names=None) -> MultiPoly:
    """Delta(x)^{2k} = prod_{i<j} (x_i - x_j)^{2k} as an explicit polynomial."""
    names = tuple(names or (f"x{i + 1}" for i in range(n)))
    xs = [MultiPoly.var(v, names) for v in names]
    acc = MultiPoly.const(Fraction(1), names)
    for i in range(n):
        for j in range(i + 1, n):
            acc = acc * (xs[i] - xs[j]) ** (2 * k)
    return acc


def laplacian_power_check(n: int, k: int):
    """(sum_j d^2/dx_j^2)^N Delta^{2k} at 0 versus 2^N N! prod_j (jk)!/k!^n, N = kn(n-1)/2."""
    N = k * n * (n - 1) // 2
    f = vandermonde_power_poly(n, k)
    for _ in range(N):
        g = MultiPoly.const(Fraction(0), f.vars)
        for v in f.vars:
            g = g + f.diff(v, 2)
        f = g
    lhs = f.constant_term() if f.vars else f
    rhs = Fraction(2 ** N * factorial(N))
    for j in range(1, n + 1):
        rhs *= factorial(j * k)
    rhs /= factorial(k) ** n
    return as_fraction(lhs), rhs


__all__ = [
    "DEFAULT_PARAMS",
    "OutOfScope",
    "TURANIAN_FAMILIES",
    "TuranianSpec",
    "laplacian_power_check",
    "turanian_bruteforce",
    "turanian_closed_form",
    "turanian_entries",
    "vandermonde_power_poly",
]
