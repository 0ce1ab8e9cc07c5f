"""Monic orthogonal polynomials, bimoment data and the Krawtchouk/Bell suites."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact import MultiPoly, RationalFunction, UniPoly, det, falling, pochhammer, stirling
from .exact.combinat import as_fraction
from .hyperdet import SkewMatrix, apolar_sum, hankel_fast, promote


class DegenerateMoments(ArithmeticError):
    pass


def _lift(x):
    """Put a scalar into a field: MultiPoly becomes RationalFunction."""
    if isinstance(x, MultiPoly):
        return RationalFunction(x)
    if isinstance(x, int):
        return Fraction(x)
    return x


def _lower(x):
    """Undo ``_lift`` when the value is a polynomial."""
    if isinstance(x, RationalFunction) and x.is_polynomial():
        return x.to_poly()
    return x


def _is_zero(x):
    return x == 0


class MomentFunctional:
    """Linear functional mu(x^m) = c_m on polynomials."""

    def __init__(self, moments):
        self.moments = promote(list(moments))

    def __len__(self):
        return len(self.moments)

    def __call__(self, f: UniPoly):
        if f.degree >= len(self.moments):
            raise IndexError(f"need moment {f.degree}, have {len(self.moments)}")
        total = 0
        for i, c in enumerate(f.coeffs):
            if c != 0:
                total = total + c * self.moments[i]
        return total

    def pair(self, f: UniPoly, g: UniPoly):
        return self(f * g)

    def shifted(self, r: int) -> "MomentFunctional":
        return MomentFunctional(self.moments[r:])


def _as_mu(mu) -> MomentFunctional:
    return mu if isinstance(mu, MomentFunctional) else MomentFunctional(mu)


@dataclass
class MonicPolynomialFamily:
    polynomials: list
    A: list
    B: list
    tag: str = ""

    def __len__(self):
        return len(self.polynomials)

    def __getitem__(self, i):
        return self.polynomials[i]

    def check_recurrence(self) -> bool:
        x = UniPoly.x(self.polynomials[0].var)
        for i in range(len(self.polynomials) - 1):
            rhs = self.polynomials[i + 1] + self.polynomials[i] * self.A[i]
            if i:
                rhs = rhs + self.polynomials[i - 1] * self.B[i]
            if x * self.polynomials[i] != rhs:
                return False
        return True


def monic_from_moments(mu, N: int, var: str = "x") -> MonicPolynomialFamily:
    """P_0..P_N by Gram-Schmidt on 1, x, x^2, ... under <f,g> = mu(fg)."""
    mu = _as_mu(mu)
    if len(mu) < 2 * N + 1:
        raise IndexError(f"need {2 * N + 1} moments for P_0..P_{N}")
    field = MomentFunctional([_lift(c) for c in mu.moments])
    polys, norms = [], []
    for i in range(N + 1):
        p = UniPoly([0] * i + [1], var)
        xi = p
        for j, q in enumerate(polys):
            coef = field.pair(xi, q) / norms[j]
            if coef != 0:
                p = p - q * coef
        h = field.pair(p, p)
        if _is_zero(h):
            raise DegenerateMoments(f"zero Hankel minor at order {i + 1}")
        polys.append(p)
        norms.append(h)
    x = UniPoly.x(var)
    # A_N needs one moment more than the polynomials themselves
    last = N + 1 if len(mu) > 2 * N + 1 else N
    A = [field.pair(x * p, p) / h for p, h in zip(polys[:last], norms[:last])]
    B = [Fraction(0)] + [norms[i] / norms[i - 1] for i in range(1, N + 1)]
    polys = [p.map_coeffs(_lower) for p in polys]
    return MonicPolynomialFamily(polys, [_lower(a) for a in A], [_lower(b) for b in B], "moments")


# -- classical families --------------------------------------------------------

CLASSICAL_TAGS = ("charlier", "laguerre", "hermite", "legendre", "chebyshevU", "krawtchouk", "meixner")


def _param(params, name, default=None):
    if name not in params:
        if default is None:
            raise KeyError(f"missing parameter {name!r}")
        return default
    v = params[name]
    if v is None:
        return MultiPoly.var(name)
    if isinstance(v, str):
        return MultiPoly.var(v)
    return v if isinstance(v, (MultiPoly, UniPoly)) else as_fraction(v)


def recurrence_coefficients(tag: str, N: int, params=None):
    """Lists A_0..A_N, B_0..B_N for x P_n = P_{n+1} + A_n P_n + B_n P_{n-1}."""
    params = params or {}
    A, B = [], []
    for n in range(N + 1):
        if tag == "charlier":
            a = _param(params, "a")
            A.append(a + n)
            B.append(a * n)
        elif tag == "laguerre":
            al = _param(params, "alpha", Fraction(0))
            A.append(al + 2 * n + 1)
            B.append(al * n + n * n)
        elif tag == "hermite":
            A.append(Fraction(0))
            B.append(Fraction(n, 2))
        elif tag == "legendre":
            A.append(Fraction(0))
            B.append(Fraction(n * n, 4 * n * n - 1))
        elif tag == "chebyshevU":
            A.append(Fraction(0))
            B.append(Fraction(1, 4) if n else Fraction(0))
        elif tag == "krawtchouk":
            p, NN = _param(params, "p"), _param(params, "N")
            A.append(p * (NN - n) + (1 - p) * n)
            B.append(p * (1 - p) * (NN + 1 - n) * n)
        elif tag == "meixner":
            beta, c = _param(params, "beta"), _param(params, "gamma")
            A.append((c * (beta + n) + n) / (1 - c))
            B.append(c * (beta + n - 1) * n / ((1 - c) * (1 - c)))
        else:
            raise KeyError(f"unknown classical family {tag!r}")
    return A, B


def family_from_recurrence(A, B, N: int, var: str = "x", tag: str = "") -> MonicPolynomialFamily:
    x = UniPoly.x(var)
    polys = [UniPoly([1], var)]
    if N >= 1:
        polys.append(x - A[0])
    for n in range(1, N):
        polys.append(x * polys[n] - polys[n] * A[n] - polys[n - 1] * B[n])
    return MonicPolynomialFamily(polys[: N + 1], list(A[: N + 1]), list(B[: N + 1]), tag)


def classical_family(tag: str, N: int, params=None, var: str = "x") -> MonicPolynomialFamily:
    A, B = recurrence_coefficients(tag, N, params)
    return family_from_recurrence(A, B, N, var, tag)


def family_moments(tag: str, count: int, params=None):
    """Moments of the (probability-normalized) orthogonality measure."""
    params = params or {}
    if tag == "charlier":
        from .selberg import bell_polynomials

        a = params.get("a")
        return bell_polynomials(count, a)
    if tag == "laguerre":
        al = as_fraction(params.get("alpha", 0))
        return [Fraction(pochhammer(al + 1, m)) for m in range(count)]
    if tag == "hermite":
        # Gaussian e^{-x^2}/sqrt(pi): m-th moment (m-1)!!/2^{m/2} for even m
        out = []
        for m in range(count):
            if m % 2:
                out.append(Fraction(0))
            else:
                out.append(Fraction(pochhammer(Fraction(1, 2), m // 2)))
        return out
    if tag == "legendre":
        return [Fraction(1, m + 1) if m % 2 == 0 else Fraction(0) for m in range(count)]
    if tag == "chebyshevU":
        # semicircle on [-1, 1]: Catalan(m/2)/2^m
        return [Fraction(comb(m, m // 2), (m // 2 + 1) * 2 ** m) if m % 2 == 0 else Fraction(0)
                for m in range(count)]
    if tag == "krawtchouk":
        p, N = as_fraction(params["p"]), int(params["N"])
        return [sum((Fraction(j ** m) * comb(N, j) * p ** j * (1 - p) ** (N - j) for j in range(N + 1)), Fraction(0))
                for m in range(count)]
    raise KeyError(f"no moment generator for {tag!r}")


# -- bimoments and Pfaffians ---------------------------------------------------------

def pprime_gram(mu, family: MonicPolynomialFamily, r: int, size: int) -> SkewMatrix:
    """Skew bimoment matrix M_ij = <x^r P_i, P_j'> - <x^r P_j, P_i'> (i < j).

    With this antisymmetrized form the Pfaffian equals D_{n;r}^{(2)} for every
    r; for r = 0 the subtracted term vanishes by orthogonality and the
    entries reduce to <P_i, P_j'>.
    """
    mu = _as_mu(mu)
    if size % 2:
        raise ValueError("size must be even")
    if len(family) < size:
        raise IndexError(f"need {size} polynomials, family has {len(family)}")
    need = r + 2 * size - 2
    if len(mu) < need:
        raise IndexError(f"need {need} moments, have {len(mu)}")
    xr = UniPoly([0] * r + [1], family[0].var)
    P = family.polynomials[:size]
    D = [p.derivative() for p in P]
    xP = [xr * p for p in P]
    upper = {}
    for i in range(size):
        for j in range(i + 1, size):
            upper[(i, j)] = mu(xP[i] * D[j]) - mu(xP[j] * D[i])
    return SkewMatrix(size, upper)


def check_orthogonal(mu, family: MonicPolynomialFamily, upto: int | None = None) -> bool:
    mu = _as_mu(mu)
    upto = len(family) if upto is None else upto
    for i in range(upto):
        for j in range(i):
            if mu(family[i] * family[j]) != 0:
                return False
    return True


def charlier_pprime_formula(n: int, m: int, a):
    """Closed form of <C_n, C_m'> for the monic Charlier polynomials."""
    if m <= n:
        return a * 0
    sign = -1 if (m - n + 1) % 2 else 1
    return a ** n * Fraction(sign * factorial(m), m - n)


# -- projected multiplication ----------------------------------------------------

def expand_xr(A, B, i: int, r: int):
    """Coefficients (dict j -> value) of x^r P_i in the basis P_j."""
    vec = {i: Fraction(1)}
    for _ in range(r):
        nxt = {}
        for j, c in vec.items():
            for idx, w in ((j + 1, 1), (j, A[j]), (j - 1, B[j] if j else 0)):
                if idx < 0 or (isinstance(w, int) and w == 0):
                    continue
                t = c * w
                nxt[idx] = t if idx not in nxt else nxt[idx] + t
        vec = nxt
    return vec


def projected_mult_matrix(A, B, r: int, n: int):
    """X_n^{(r)}: column i holds the P-coefficients of x^r P_i, rows j < n."""
    cols = [expand_xr(A, B, i, r) for i in range(n)]
    return [[cols[i].get(j, Fraction(0)) for i in range(n)] for j in range(n)]


def projected_mult_det(family, recurrence=None, r: int = 1, n: int = 1):
    """det X_n^{(r)}; ``family`` may be a MonicPolynomialFamily or (A, B)."""
    if recurrence is None:
        if isinstance(family, MonicPolynomialFamily):
            recurrence = (family.A, family.B)
        else:
            recurrence = family
    A, B = recurrence
    if len(A) < n + r:
        raise IndexError("not enough recurrence coefficients")
    return det(projected_mult_matrix(A, B, r, n))


# -- Wronskians and the Karlin-Szego identity --------------------------------------------

def wronskian(polys, at=None):
    """det(d^i p_j / dx^i), rows indexed by derivative order."""
    polys = list(polys)
    if not polys:
        raise ValueError("empty Wronskian")
    rows, cur = [], polys
    for _ in range(len(polys)):
        rows.append(cur)
        cur = [p.derivative() for p in cur]
    w = det(rows)
    if not isinstance(w, UniPoly):
        w = UniPoly([w], polys[0].var)
    return w if at is None else w(at)


def _superfactorial(r: int) -> int:
    out = 1
    for j in range(1, r):
        out *= factorial(j)
    return out


def _to_multipoly(x, vars):
    if isinstance(x, UniPoly):
        return x.to_multipoly(vars)
    if isinstance(x, MultiPoly):
        return x.with_vars(vars) if x.vars else MultiPoly.const(x.constant_term(), vars)
    return MultiPoly.const(as_fraction(x), vars)


def karlin_szego_check(mu, n: int, r: int, y=None):
    """Both sides of mu_n(Delta^2 prod (y - x_i)^r) as polynomials in y.

    left  = (-1)^{nr} n! det(c_{r+i+j}(y)),  c_m(y) = mu[(x - y)^m]
    right = mu_n(Delta^2) W(p_n, ..., p_{n+r-1})(y) / (1! ... (r-1)!)

    ``y`` may be a value, in which case scalar sides are returned.
    """
    mu = _as_mu(mu)
    need = 2 * n + 2 * r - 1
    if len(mu) < need:
        raise IndexError(f"need {need} moments")
    inner = ()
    for c in mu.moments:
        if isinstance(c, MultiPoly) and c.vars:
            inner = c.vars
            break
    vars = ("y",) + tuple(v for v in inner if v != "y")
    Y = MultiPoly.var("y", vars)
    mom = [_to_multipoly(c, vars) for c in mu.moments]

    def cy(m):
        acc = MultiPoly.const(Fraction(0), vars)
        for j in range(m + 1):
            acc = acc + mom[j] * (-Y) ** (m - j) * comb(m, j)
        return acc

    cys = [cy(m) for m in range(2 * (n - 1) + r + 1)]
    mat = [[cys[r + i + j] for j in range(n)] for i in range(n)]
    left = det(mat) * ((-1) ** (n * r) * factorial(n))
    fam = monic_from_moments(mu, n + r, var="y")
    D1 = hankel_fast(mu.moments[: 2 * n - 1], n, 1) if n else Fraction(1)
    mun = _to_multipoly(D1, vars) * factorial(n)
    if r:
        W = wronskian(fam.polynomials[n:n + r])
        right = mun * _to_multipoly(W, vars) / _superfactorial(r)
    else:
        right = mun
    if y is not None:
        return left.subs({"y": y}), right.subs({"y": y})
    return left, right


def kzbell_sides(n: int, r: int):
    """D_{n;r}^{(1)}(b(a)) and (-1)^{rn} W(C_n..C_{n+r-1})(0)/(1!..(r-1)!) D_n^{(1)}."""
    from .selberg import bell_polynomials

    b = bell_polynomials(2 * (n - 1) + r + 1)
    lhs = hankel_fast(b, n, 1, r)
    fam = classical_family("charlier", n + r, {"a": None})
    W = wronskian(fam.polynomials[n:n + r], at=0) if r else Fraction(1)
    rhs = hankel_fast(b, n, 1) * W * ((-1) ** (r * n)) / _superfactorial(r)
    return lhs, rhs


# -- Bell polynomials ----------------------------------------------------------------

def bell_triangle(k: int):
    """T_{k,1..k}: coefficients of D_2^{(k)}(b(a)) in a."""
    from .selberg import bell_polynomials

    if k < 1:
        raise ValueError("k must be positive")
    D = apolar_sum(bell_polynomials(2 * k + 1), k)
    return [int(D.coefficient((j,))) for j in range(1, k + 1)]


def bell_triangle_egf(k: int):
    """Same row from the exponential generating function (1/2) exp(a(e^x + e^-x - 2)).

    e^x + e^-x - 2 = sum_{m>=1} 2 x^{2m}/(2m)!, so the coefficient of a^j is
    (1/2) * (1/j!) * [x^{2k}/(2k)!] (sum 2 x^{2m}/(2m)!)^j.
    """
    top = 2 * k
    base = [Fraction(0)] * (top + 1)
    for m in range(1, k + 1):
        base[2 * m] = Fraction(2, factorial(2 * m))
    row = []
    power = [Fraction(1)] + [Fraction(0)] * top
    for j in range(1, k + 1):
        nxt = [Fraction(0)] * (top + 1)
        for i, a in enumerate(power):
            if a:
                for l, b in enumerate(base):
                    if b and i + l <= top:
                        nxt[i + l] += a * b
        power = nxt
        row.append(int(power[top] * factorial(top) / (2 * factorial(j))))
    return row


def falling_factorial_sides(r: int, n: int, k: int):
    """D_n^{(k)} of c'_m = sum_j s(r,j) b_{m+j}(a), and a^{nr} D_n^{(k)}(b)."""
    from .selberg import bell_polynomials

    size = 2 * k * (n - 1) + r + 1
    b = bell_polynomials(size)
    cp = []
    for m in range(2 * k * (n - 1) + 1):
        acc = b[0] * 0
        for j in range(r + 1):
            s = stirling(1, r, j)
            if s:
                acc = acc + b[m + j] * s
        cp.append(acc)
    lhs = hankel_fast(cp, n, k)
    rhs = hankel_fast(b, n, k) * MultiPoly.var("a") ** (n * r)
    return lhs, rhs


# -- binomial distribution suite (section on Hankel-Wronskians) ------------------------

def binomial_moments(N: int, count: int, var: str = "u"):
    """c_m = sum_j j^m binom(N, j) u^j as polynomials in u = e^t."""
    return [UniPoly([Fraction(j ** m * comb(N, j)) for j in range(N + 1)], var) for m in range(count)]


def binomial_hankel_sides(N: int, n: int):
    """Both sides of D_n^{(1)} (1+u)^{n(n-1-N)} = (-u)^{n(n-1)/2} prod j! (-N)_j, cleared of denominators."""
    c = binomial_moments(N, 2 * n - 1)
    D = hankel_fast(c, n, 1)
    u = UniPoly.x("u")
    const = Fraction(1)
    for j in range(n):
        const *= factorial(j) * pochhammer(-N, j)
    rhs = (-u) ** (n * (n - 1) // 2) * const
    e = n * (n - 1 - N)
    one_u = UniPoly([1, 1], "u")
    if e >= 0:
        return D * one_u ** e, rhs
    return D, rhs * one_u ** (-e)


def krawtchouk_symbolic(n: int):
    """det X_n for the monic Krawtchouk recurrence and the value (N)_n p^n (falling)."""
    vars = ("p", "N")
    p, N = MultiPoly.gens(*vars)
    A, B = recurrence_coefficients("krawtchouk", n + 1, {"p": p, "N": N})
    lhs = projected_mult_det((A, B), r=1, n=n)
    rhs = falling(N, n) * p ** n
    if not isinstance(lhs, MultiPoly):
        lhs = MultiPoly.const(lhs, vars)
    if not isinstance(rhs, MultiPoly):
        rhs = MultiPoly.const(as_fraction(rhs), vars)
    return lhs, rhs


def lawden_sides(n: int):
    """The N = -1, r = 2 Krawtchouk determinant as a polynomial identity in u = e^t.

    With p = u/(1+u), det X_n^{(2)} = f(p) = sum f_i p^i; both sides are
    multiplied by (1+u)^{2n+1}.
    """
    P = UniPoly.x("p")
    A, B = recurrence_coefficients("krawtchouk", n + 2, {"p": P, "N": Fraction(-1)})
    f = projected_mult_det((A, B), r=2, n=n)
    if not isinstance(f, UniPoly):
        f = UniPoly([f], "p")
    if f.degree > 2 * n + 1:
        raise ArithmeticError("determinant degree exceeds 2n+1")
    u = UniPoly.x("u")
    one_u = UniPoly([1, 1], "u")
    lhs = UniPoly([], "u")
    for i, c in enumerate(f.coeffs):
        lhs = lhs + u ** i * one_u ** (2 * n + 1 - i) * c
    sign = -1 if (n + 1) % 2 else 1
    rhs = u ** n * (u ** (n + 1) - sign) * factorial(n) ** 2
    return lhs, rhs


def binomial_shift_moments(r: int, N: int, count: int, var: str = "u"):
    """a'_m = (-1)^r sum_j (-j)^m binom(j, r) binom(N, j) (-u)^j, u = e^{-t}."""
    sign = -1 if r % 2 else 1
    out = []
    for m in range(count):
        coeffs = [Fraction(sign * (-j) ** m * comb(j, r) * comb(N, j) * (-1) ** j) for j in range(N + 1)]
        out.append(UniPoly(coeffs, var))
    return out


def binomial_shift_sides(r: int, N: int, n: int, k: int):
    """d_n^{(k)}(r; N) and binom(N,r)^n u^{nr} d_n^{(k)}(0; N-r)."""
    if not 0 <= r <= N:
        raise ValueError("need 0 <= r <= N")
    size = 2 * k * (n - 1) + 1
    lhs = hankel_fast(binomial_shift_moments(r, N, size), n, k)
    base = hankel_fast(binomial_shift_moments(0, N - r, size), n, k)
    u = UniPoly.x("u")
    if not isinstance(base, UniPoly):
        base = UniPoly([base], "u")
    if not isinstance(lhs, UniPoly):
        lhs = UniPoly([lhs], "u")
    return lhs, base * u ** (n * r) * comb(N, r) ** n


def sequence_transform_check(case: str, n: int, k: int, r: int = 0, N: int | None = None):
    if case == "falling_factorial":
        return falling_factorial_sides(r, n, k)
    if case == "binomial_shift":
        if N is None:
            raise ValueError("binomial_shift needs N")
        return binomial_shift_sides(r, N, n, k)
    raise KeyError(f"unknown transform {case!r}")


__all__ = [
    "CLASSICAL_TAGS",
    "DegenerateMoments",
    "MomentFunctional",
    "MonicPolynomialFamily",
    "bell_triangle",
    "bell_triangle_egf",
    "binomial_hankel_sides",
    "binomial_moments",
    "binomial_shift_moments",
    "binomial_shift_sides",
    "charlier_pprime_formula",
    "check_orthogonal",
    "classical_family",
    "expand_xr",
    "falling_factorial_sides",
    "family_from_recurrence",
    "family_moments",
    "karlin_szego_check",
    "krawtchouk_symbolic",
    "kzbell_sides",
    "lawden_sides",
    "monic_from_moments",
    "pprime_gram",
    "projected_mult_det",
    "projected_mult_matrix",
    "recurrence_coefficients",
    "sequence_transform_check",
    "wronskian",
]
