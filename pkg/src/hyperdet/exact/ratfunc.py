"""Quotients of multivariate polynomials."""

from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly, uni_gcd


def _active(p: MultiPoly):
    return {i for m in p.terms for i, e in enumerate(m) if e}


def _sympy_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    import sympy

    syms = sympy.symbols(list(a.vars))

    def to_sympy(p):
        return sympy.Poly.from_dict({m: sympy.Rational(c.numerator, c.denominator)
                                     for m, c in p.terms.items()}, *syms, domain="QQ")

    g = sympy.gcd(to_sympy(a), to_sympy(b))
    terms = {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in g.as_dict().items()}
    return MultiPoly(terms, a.vars)


class RationalFunction:
    """``num / den`` with a deterministic normal form.

    The pair is reduced by a polynomial gcd (a univariate Euclid when only one
    variable occurs, sympy otherwise) and the denominator is scaled so its
    leading lexicographic coefficient is 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, MultiPoly):
            raise TypeError("numerator must be a MultiPoly")
        if den is None:
            den = MultiPoly.const(Fraction(1), num.vars)
        elif not isinstance(den, MultiPoly):
            den = MultiPoly.const(Fraction(den), num.vars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.vars != num.vars:
            if den.is_constant():
                den = MultiPoly.const(den.constant_term(), num.vars)
            elif num.is_constant():
                num = MultiPoly.const(num.constant_term(), den.vars)
            else:
                raise ValueError("numerator and denominator use different variables")
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num, den):
        if num.is_zero():
            return num, MultiPoly.const(Fraction(1), num.vars)
        if not den.is_constant():
            q, r = num.divmod_lex(den)
            if r.is_zero():
                num, den = q, MultiPoly.const(Fraction(1), num.vars)
            else:
                act = _active(num) | _active(den)
                g = uni_gcd(num, den) if len(act) <= 1 else _sympy_gcd(num, den)
                if not g.is_constant():
                    num, den = num.divexact(g), den.divexact(g)
        _, lc = den.leading()
        return num / lc, den / lc

    @property
    def vars(self):
        return self.num.vars

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            if other.is_constant() and other.vars != self.vars:
                other = MultiPoly.const(other.constant_term(), self.vars)
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(MultiPoly.const(Fraction(other), self.vars))
        return NotImplemented

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def to_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not a polynomial")
        return self.num / self.den.constant_term()

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(self.den ** (-e), self.num ** (-e))
        return RationalFunction(self.num ** e, self.den ** e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial():
            return str(self.to_poly())
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def simplify(x):
    """Collapse a polynomial-valued RationalFunction to a MultiPoly."""
    if isinstance(x, RationalFunction) and x.is_polynomial():
        return x.to_poly()
    return x
