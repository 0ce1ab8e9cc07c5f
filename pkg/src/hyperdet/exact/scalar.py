"""Rationals times a half-integer power of pi."""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial

from .combinat import as_fraction, double_factorial


class PiPowerMismatch(ArithmeticError):
    """Raised when adding scalars that carry different powers of pi."""


class ExactScalar:
    """The value ``coeff * pi**(pi_half_power / 2)``.

    Instances are immutable.  Addition requires equal powers of pi; there is
    no silent coercion.  A zero coefficient absorbs any pi power, so ``0``
    can be added to anything.
    """

    __slots__ = ("_coeff", "_pow")

    def __init__(self, coeff=0, pi_half_power: int = 0):
        c = as_fraction(coeff)
        object.__setattr__(self, "_coeff", c)
        object.__setattr__(self, "_pow", 0 if c == 0 else int(pi_half_power))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @property
    def coeff(self) -> Fraction:
        return self._coeff

    @property
    def pi_half_power(self) -> int:
        return self._pow

    @classmethod
    def coerce(cls, x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        return cls(as_fraction(x), 0)

    def is_rational(self) -> bool:
        return self._pow == 0

    def to_fraction(self) -> Fraction:
        if self._pow != 0:
            raise PiPowerMismatch(f"{self} is not a plain rational")
        return self._coeff

    def __add__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o._coeff == 0:
            return self
        if self._coeff == 0:
            return o
        if o._pow != self._pow:
            raise PiPowerMismatch(f"cannot add {self} and {o}")
        return ExactScalar(self._coeff + o._coeff, self._pow)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self._coeff, self._pow)

    def __sub__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self._coeff * o._coeff, self._pow + o._pow)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o._coeff == 0:
            raise ZeroDivisionError("division by zero scalar")
        return ExactScalar(self._coeff / o._coeff, self._pow - o._pow)

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return ExactScalar(1) / (self ** (-e))
        return ExactScalar(self._coeff ** e, self._pow * e)

    def __eq__(self, other):
        try:
            o = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._coeff == o._coeff and self._pow == o._pow

    def __hash__(self):
        if self._pow == 0:
            return hash(self._coeff)
        return hash((self._coeff, self._pow))

    def __repr__(self):
        return f"ExactScalar({str(self._coeff)!r}, {self._pow})"

    def __str__(self):
        if self._pow == 0:
            return str(self._coeff)
        return f"{self._coeff}*pi^({self._pow}/2)"

    @classmethod
    def parse(cls, text: str) -> "ExactScalar":
        m = re.fullmatch(r"\s*([-+]?\d+(?:/\d+)?)\s*(?:\*\s*pi\^\((-?\d+)/2\))?\s*", text)
        if not m:
            raise ValueError(f"not an exact scalar: {text!r}")
        return cls(Fraction(m.group(1)), int(m.group(2) or 0))


def gamma_exact(x) -> ExactScalar:
    """Gamma at a positive integer or half-integer."""
    x = as_fraction(x)
    if x <= 0 or x.denominator not in (1, 2):
        raise ValueError(f"gamma_exact needs a positive integer or half-integer, got {x}")
    if x.denominator == 1:
        return ExactScalar(factorial(int(x) - 1))
    # Gamma(m + 1/2) = (2m-1)!! / 2^m * sqrt(pi)
    m = int(x - Fraction(1, 2))
    return ExactScalar(Fraction(double_factorial(2 * m - 1), 2 ** m), 1)


def beta_exact(a, b) -> ExactScalar:
    return gamma_exact(a) * gamma_exact(b) / gamma_exact(as_fraction(a) + as_fraction(b))


def pochhammer_exact(a, n: int) -> Fraction:
    """``(a)_n`` for rational ``a``."""
    a = as_fraction(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
    return result
