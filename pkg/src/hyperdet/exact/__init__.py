"""Exact scalar and polynomial arithmetic shared across the package."""

from .combinat import (
    double_factorial,
    falling,
    multinomial,
    pochhammer,
    stirling,
)
from .linalg import det, solve
from .multipoly import MultiPoly, uni_gcd
from .ratfunc import RationalFunction, simplify
from .scalar import ExactScalar, PiPowerMismatch, beta_exact, gamma_exact, pochhammer_exact
from .unipoly import UniPoly, poly_derivative, poly_eval

__all__ = [
    "ExactScalar",
    "PiPowerMismatch",
    "MultiPoly",
    "RationalFunction",
    "UniPoly",
    "beta_exact",
    "det",
    "double_factorial",
    "falling",
    "gamma_exact",
    "multinomial",
    "pochhammer",
    "pochhammer_exact",
    "poly_derivative",
    "poly_eval",
    "simplify",
    "solve",
    "stirling",
    "uni_gcd",
]
