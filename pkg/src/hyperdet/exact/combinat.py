"""Integer and rational combinatorial helpers."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def pochhammer(a, n: int):
    """Rising factorial a(a+1)...(a+n-1); works for any ring element ``a``."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    result = 1
    for i in range(n):
        result = result * (a + i)
    return result


def falling(a, n: int):
    """Falling factorial a(a-1)...(a-n+1)."""
    if n < 0:
        raise ValueError("falling factorial length must be nonnegative")
    result = 1
    for i in range(n):
        result = result * (a - i)
    return result


def double_factorial(n: int) -> int:
    # (-1)!! = 1 is needed by the Catalan product at j = 0
    if n < -1:
        raise ValueError("double factorial undefined below -1")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def _stirling1(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return _stirling1(n - 1, k - 1) - (n - 1) * _stirling1(n - 1, k)


def stirling(kind: int, n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind s(n,k) or second kind S(n,k)."""
    if n < 0 or k < 0:
        raise IndexError("Stirling indices must be nonnegative")
    if k > n:
        raise IndexError(f"Stirling number needs k <= n, got n={n}, k={k}")
    if kind == 1:
        return _stirling1(n, k)
    if kind == 2:
        return _stirling2(n, k)
    raise ValueError("kind must be 1 or 2")


def multinomial(*parts: int) -> int:
    total, result = 0, 1
    for p in parts:
        total += p
        result *= comb(total, p)
    return result


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


__all__ = [
    "comb",
    "factorial",
    "pochhammer",
    "falling",
    "double_factorial",
    "stirling",
    "multinomial",
    "as_fraction",
]
