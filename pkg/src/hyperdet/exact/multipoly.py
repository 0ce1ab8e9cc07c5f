"""Sparse multivariate polynomials with exact coefficients.

A :class:`MultiPoly` carries an ordered tuple of variable names; two
polynomials combine only when those tuples are identical.  Constants (plain
ints/Fractions, or polynomials over no variables) mix with anything.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations_with_replacement

Monomial = tuple


def _zero_like(c):
    return c * 0


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, terms=None, vars=()):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            nv = len(self.vars)
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != nv:
                    raise ValueError(f"exponent tuple {mono} does not match variables {self.vars}")
                if c != 0:
                    clean[mono] = c if not isinstance(c, int) else Fraction(c)
        self.terms = clean

    # -- construction -------------------------------------------------
    @classmethod
    def const(cls, c, vars=()):
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        mono = tuple(1 if v == name else 0 for v in vars)
        if sum(mono) != 1:
            raise ValueError(f"{name!r} not in {vars}")
        return cls({mono: Fraction(1)}, vars)

    @classmethod
    def gens(cls, *names):
        return tuple(cls.var(n, names) for n in names)

    def with_vars(self, vars) -> "MultiPoly":
        """Re-embed into a (super)set of variables."""
        vars = tuple(vars)
        idx = []
        for v in self.vars:
            if v not in vars:
                raise ValueError(f"variable {v!r} missing from {vars}")
            idx.append(vars.index(v))
        out = {}
        for mono, c in self.terms.items():
            e = [0] * len(vars)
            for i, p in zip(idx, mono):
                e[i] = p
            out[tuple(e)] = c
        return MultiPoly(out, vars)

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars == self.vars:
                return other
            if not other.vars or other.is_constant():
                return MultiPoly.const(other.constant_term(), self.vars)
            if not self.vars or self.is_constant():
                return None  # caller swaps
            raise ValueError(f"variable lists differ: {self.vars} vs {other.vars}")
        if isinstance(other, (int, Fraction)) or hasattr(other, "pi_half_power"):
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    def _binary(self, other, op):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            lhs = MultiPoly.const(self.constant_term(), other.vars)
            return op(lhs, other)
        return op(self, o)

    # -- queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree(self, var) -> int:
        i = self.vars.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _add(a, b):
        out = dict(a.terms)
        for m, c in b.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                s = v + c
                if s == 0:
                    del out[m]
                else:
                    out[m] = s
        return MultiPoly._raw(out, a.vars)

    @staticmethod
    def _mul(a, b):
        out = {}
        get = out.get
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return MultiPoly({m: c for m, c in out.items() if c != 0}, a.vars)

    @classmethod
    def _raw(cls, terms, vars):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        return p

    def __add__(self, other):
        return self._binary(other, MultiPoly._add)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return MultiPoly.const(self.constant_term(), other.vars) - other
        return MultiPoly._add(self, -o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or hasattr(other, "pi_half_power"):
            if other == 0:
                return MultiPoly({}, self.vars)
            return MultiPoly._raw({m: c * other for m, c in self.terms.items()}, self.vars)
        return self._binary(other, MultiPoly._mul)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if other.is_constant():
                other = other.constant_term()
            else:
                return self.divexact(other)
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return MultiPoly._raw({m: c / other for m, c in self.terms.items()}, self.vars)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = MultiPoly.const(Fraction(1), self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                if self.is_constant() and other.is_constant():
                    return self.constant_term() == other.constant_term()
                return False
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)) or hasattr(other, "pi_half_power"):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus and substitution -------------------------------------------
    def diff(self, var, times: int = 1) -> "MultiPoly":
        i = self.vars.index(var)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e < times:
                continue
            f = 1
            for j in range(times):
                f *= e - j
            mm = list(m)
            mm[i] = e - times
            out[tuple(mm)] = c * f
        return MultiPoly(out, self.vars)

    def subs(self, values: dict) -> "MultiPoly":
        """Substitute values (scalars or MultiPolys over ``self.vars``) for variables.

        Variables not listed are kept; the result lives over the same variable
        list unless every variable is replaced by a scalar.
        """
        idx = {v: i for i, v in enumerate(self.vars)}
        for v in values:
            if v not in idx:
                raise KeyError(v)
        keep = [i for i, v in enumerate(self.vars) if v not in values]
        target_vars = None
        for val in values.values():
            if isinstance(val, MultiPoly) and val.vars:
                target_vars = val.vars
        if target_vars is None:
            target_vars = self.vars
        powers_cache = {}

        def power(v, e):
            key = (v, e)
            if key not in powers_cache:
                powers_cache[key] = values[v] ** e
            return powers_cache[key]

        kept = tuple(self.vars[i] for i in keep)
        acc = MultiPoly({}, target_vars)
        for m, c in self.terms.items():
            term = MultiPoly({tuple(m[i] for i in keep): c}, kept)
            if kept != target_vars:
                term = term.with_vars(target_vars)
            for v, val in values.items():
                e = m[idx[v]]
                if e:
                    term = term * power(v, e)
            acc = acc + term
        return acc

    def evaluate(self, values: dict):
        """Full evaluation; returns a scalar."""
        if set(values) != set(self.vars):
            raise KeyError(f"need values for all of {self.vars}")
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in zip(self.vars, m):
                if e:
                    t = t * values[v] ** e
            total = total + t
        return total

    def rename(self, vars) -> "MultiPoly":
        vars = tuple(vars)
        if len(vars) != len(self.vars):
            raise ValueError("rename needs the same number of variables")
        return MultiPoly._raw(dict(self.terms), vars)

    # -- division ---------------------------------------------------------------
    def leading(self):
        """Leading (monomial, coeff) in lexicographic order."""
        m = max(self.terms)
        return m, self.terms[m]

    def divmod_lex(self, divisor: "MultiPoly"):
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lm, lc = divisor.leading()
        q = {}
        r = {}
        p = MultiPoly(dict(self.terms), self.vars)
        while p.terms:
            m, c = p.leading()
            if all(x >= y for x, y in zip(m, lm)):
                qm = tuple(x - y for x, y in zip(m, lm))
                qc = c / lc
                q[qm] = q.get(qm, 0) + qc
                p = p - MultiPoly({qm: qc}, self.vars) * divisor
            else:
                r[m] = c
                del p.terms[m]
        return MultiPoly(q, self.vars), MultiPoly(r, self.vars)

    def divexact(self, divisor) -> "MultiPoly":
        if not isinstance(divisor, MultiPoly):
            return self / divisor
        q, r = self.divmod_lex(divisor)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        from math import gcd

        num, den = 0, 1
        for c in self.terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(0)

    # -- printing --------------------------------------------------------------
    def sorted_terms(self):
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={self.vars})"

    def to_json_obj(self):
        return {
            "vars": list(self.vars),
            "terms": {",".join(map(str, m)): str(c) for m, c in self.sorted_terms()},
        }

    @classmethod
    def from_json_obj(cls, obj):
        from .scalar import ExactScalar

        vars = tuple(obj["vars"])
        terms = {}
        for key, val in obj["terms"].items():
            mono = tuple(int(x) for x in key.split(",")) if key else ()
            s = ExactScalar.parse(val)
            terms[mono] = s.coeff if s.is_rational() else s
        return cls(terms, vars)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def monomials_of_degree(nvars: int, degree: int):
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def uni_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd of polynomials that involve at most one variable."""
    active = {i for p in (a, b) for m in p.terms for i, e in enumerate(m) if e}
    if len(active) > 1:
        raise ValueError("uni_gcd needs univariate input")
    while not b.is_zero():
        _, r = a.divmod_lex(b)
        a, b = b, r
    if a.is_zero():
        return a
    _, lc = a.leading()
    return a / lc
