"""Dense univariate polynomials over an exact coefficient ring."""

from __future__ import annotations

from fractions import Fraction


def _is_scalar(x) -> bool:
    return not isinstance(x, UniPoly)


class UniPoly:
    """Polynomial ``sum(coeffs[i] * var**i)``.

    Coefficients may be any exact ring elements (Fraction, MultiPoly,
    RationalFunction, ExactScalar) as long as one polynomial does not mix
    incompatible kinds.  Trailing zeros are stripped, so the zero polynomial
    has an empty coefficient list and degree -1.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str = "x"):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs
        self.var = var

    @classmethod
    def x(cls, var: str = "x"):
        return cls([0, 1], var)

    @classmethod
    def const(cls, c, var: str = "x"):
        return cls([c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _check(self, other):
        if isinstance(other, UniPoly) and other.var != self.var and other.degree > 0 and self.degree > 0:
            raise ValueError(f"indeterminates differ: {self.var} vs {other.var}")

    def __add__(self, other):
        if _is_scalar(other):
            other = UniPoly([other], self.var)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return UniPoly([c * other for c in self.coeffs], self.var)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                t = a * b
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        return UniPoly([Fraction(0) if c is None else c for c in out], self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly([1], self.var)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if _is_scalar(other):
            other = UniPoly([other], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        return poly_eval(self, x)

    def map_coeffs(self, f) -> "UniPoly":
        return UniPoly([f(c) for c in self.coeffs], self.var)

    def divmod(self, other: "UniPoly"):
        """Division by a polynomial whose leading coefficient is invertible."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lc = other.leading()
        for i in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lc
            q[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - c * b
        return UniPoly(q, self.var), UniPoly(rem, self.var)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
                continue
            mono = self.var if i == 1 else f"{self.var}^{i}"
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UniPoly({str(self)!r}, var={self.var!r})"

    def to_multipoly(self, vars=None):
        """Flatten into a MultiPoly; MultiPoly coefficients contribute their variables."""
        from .multipoly import MultiPoly

        inner = ()
        for c in self.coeffs:
            if isinstance(c, MultiPoly) and c.vars:
                inner = c.vars
                break
        vars = tuple(vars) if vars is not None else (self.var,) + tuple(inner)
        x = MultiPoly.var(self.var, vars)
        acc = MultiPoly({}, vars)
        xp = MultiPoly.const(Fraction(1), vars)
        for c in self.coeffs:
            if isinstance(c, MultiPoly):
                c = c.with_vars(vars) if c.vars else c.constant_term()
            acc = acc + xp * c
            xp = xp * x
        return acc


def poly_derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def poly_eval(p: UniPoly, x):
    """Horner evaluation at any ring element (ExactScalar, Fraction, MultiPoly, ...)."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
