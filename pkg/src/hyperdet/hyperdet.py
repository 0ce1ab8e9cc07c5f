"""Hyperdeterminant kernels.

``det_even`` and ``det_plus`` are the brute-force alternating sums over tuples
of permutations.  ``hankel_fast`` evaluates Hankel hyperdeterminants by
expanding the even power of the Vandermonde product instead, which is the
same sum over strictly lower triangular exponent matrices.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb, factorial

from .exact import ExactScalar, MultiPoly, UniPoly


class OrderMismatch(ValueError):
    pass


class InsufficientMoments(ValueError):
    pass


def _zero():
    return Fraction(0)


def promote(values):
    """Bring scalar-like values to one kind (Fraction < ExactScalar, Fraction < MultiPoly)."""
    values = [Fraction(v) if isinstance(v, int) else v for v in values]
    kinds = {type(v) for v in values}
    if MultiPoly in kinds:
        vars = next(v.vars for v in values if isinstance(v, MultiPoly) and v.vars)
        out = []
        for v in values:
            if isinstance(v, MultiPoly):
                out.append(v if v.vars == vars else v.with_vars(vars))
            else:
                out.append(MultiPoly.const(v, vars))
        return out
    if ExactScalar in kinds:
        return [ExactScalar.coerce(v) for v in values]
    return values


@dataclass(frozen=True)
class MomentSequence:
    moments: tuple
    family_tag: str | None = None
    params: dict = field(default_factory=dict)

    def __init__(self, moments, family_tag=None, params=None):
        object.__setattr__(self, "moments", tuple(promote(list(moments))))
        object.__setattr__(self, "family_tag", family_tag)
        object.__setattr__(self, "params", dict(params or {}))

    def __len__(self):
        return len(self.moments)

    def __getitem__(self, i):
        return self.moments[i]

    def require(self, n: int, k: int, r: int = 0):
        need = 2 * k * (n - 1) + r + 1
        if len(self.moments) < need:
            raise InsufficientMoments(
                f"need {need} moments for n={n}, k={k}, r={r}; have {len(self.moments)}"
            )

    def shifted(self, r: int) -> "MomentSequence":
        return MomentSequence(self.moments[r:], self.family_tag, self.params)


def _as_seq(c) -> MomentSequence:
    return c if isinstance(c, MomentSequence) else MomentSequence(c)


class HyperTensor:
    """Dense order-``d`` tensor of dimension ``n`` stored row-major."""

    def __init__(self, order: int, dim: int, entries):
        entries = list(entries)
        if order < 1 or dim < 1:
            raise ValueError("order and dimension must be positive")
        if len(entries) != dim ** order:
            raise ValueError(f"expected {dim ** order} entries, got {len(entries)}")
        self.order = order
        self.dim = dim
        self.entries = promote(entries)
        self._strides = [dim ** (order - 1 - i) for i in range(order)]

    @classmethod
    def from_function(cls, order, dim, f):
        return cls(order, dim, [f(idx) for idx in product(range(dim), repeat=order)])

    def __getitem__(self, idx):
        return self.entries[sum(i * s for i, s in zip(idx, self._strides))]

    def to_nested(self):
        def build(prefix, depth):
            if depth == self.order:
                return self[prefix]
            return [build(prefix + (i,), depth + 1) for i in range(self.dim)]

        return build((), 0)

    @classmethod
    def from_nested(cls, nested):
        order, probe = 0, nested
        while isinstance(probe, list):
            order += 1
            probe = probe[0]
        dim = len(nested)
        flat = []

        def walk(x, depth):
            if depth == order:
                flat.append(x)
                return
            if len(x) != dim:
                raise ValueError("ragged tensor")
            for y in x:
                walk(y, depth + 1)

        walk(nested, 0)
        return cls(order, dim, flat)


def hankel_tensor(c, n: int, order: int, r: int = 0) -> HyperTensor:
    c = _as_seq(c)
    if len(c) < order * (n - 1) + r + 1:
        raise InsufficientMoments("not enough moments for the Hankel tensor")
    return HyperTensor.from_function(order, n, lambda idx: c[sum(idx) + r])


def toeplitz_tensor(f, n: int, k: int) -> HyperTensor:
    """T with first k indices i and last k indices j, entry f(sum i - sum j)."""

    def entry(idx):
        d = sum(idx[:k]) - sum(idx[k:])
        try:
            return f[d]
        except (KeyError, IndexError):
            raise KeyError(f"Toeplitz symbol missing offset {d}") from None

    return HyperTensor.from_function(2 * k, n, entry)


def pseudo_hankel_tensor(c, m, k: int) -> HyperTensor:
    """Order 2k+1 tensor A[i, j1..j2k] = c[m[i] + j1 + ... + j2k]."""
    c = _as_seq(c)
    n = len(m)
    if len(c) < max(m) + 2 * k * (n - 1) + 1:
        raise InsufficientMoments("not enough moments for the pseudo-Hankel tensor")
    return HyperTensor.from_function(2 * k + 1, n, lambda idx: c[m[idx[0]] + sum(idx[1:])])


@lru_cache(maxsize=None)
def _signed_perms(n: int):
    out = []
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        out.append((p, -1 if inv % 2 else 1))
    return tuple(out)


def _alternating_sum(A: HyperTensor, nfree: int, first_fixed: bool):
    n = A.dim
    perms = _signed_perms(n)
    identity = tuple(range(n))
    total = None
    for combo in product(perms, repeat=nfree):
        sign = 1
        for _, s in combo:
            sign *= s
        term = None
        for i in range(n):
            idx = (i,) + tuple(p[i] for p, _ in combo) if first_fixed else (identity[i],) + tuple(p[i] for p, _ in combo)
            e = A[idx]
            term = e if term is None else term * e
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


def det_even(A: HyperTensor, k: int | None = None):
    """Det_{2k}(A): the normalized alternating sum with the first permutation fixed."""
    if k is None:
        k = A.order // 2
    if A.order != 2 * k:
        raise OrderMismatch(f"det_even needs order {2 * k}, got {A.order}")
    # summand invariant under simultaneous relabeling, so sigma_1 = id absorbs 1/n!
    return _alternating_sum(A, 2 * k - 1, True)


def det_plus(A: HyperTensor):
    """Pseudo-hyperdeterminant of an odd-order tensor (first index unpermuted)."""
    if A.order % 2 == 0 or A.order < 3:
        raise OrderMismatch(f"det_plus needs odd order >= 3, got {A.order}")
    return _alternating_sum(A, A.order - 1, True)


# -- fast Hankel path ---------------------------------------------------------

def iter_m_matrices(n: int, k: int):
    """Row-major odometer over strictly lower triangular M with 0 <= m_ij <= 2k.

    Yields ``(entries, weight, alpha)``: the free entries in row-major order,
    the signed binomial weight, and the exponent vector alpha_p(M).
    """
    cells = [(i, j) for i in range(n) for j in range(i)]
    top = 2 * k
    for entries in product(range(top + 1), repeat=len(cells)):
        weight = 1
        alpha = [2 * k * p for p in range(n)]
        for (i, j), m in zip(cells, entries):
            weight *= comb(top, m)
            alpha[j] += m
            alpha[i] -= m
        if sum(entries) % 2:
            weight = -weight
        yield entries, weight, tuple(alpha)


@lru_cache(maxsize=None)
def vandermonde_terms(n: int, k: int):
    """Multiset-aggregated expansion of Delta^{2k}/n!.

    Returns a tuple of ``(alpha_sorted, coefficient)`` pairs so that
    D_n^{(k)}(c) = sum coefficient * prod c[alpha_p].  The expansion walks the
    same M-matrix sum cell by cell, merging partial exponent vectors.
    """
    top = 2 * k
    binoms = [comb(top, m) * (-1 if m % 2 else 1) for m in range(top + 1)]
    states = {tuple(2 * k * p for p in range(n)): 1}
    for i in range(n):
        for j in range(i):
            nxt = {}
            for alpha, w in states.items():
                for m, b in enumerate(binoms):
                    a = list(alpha)
                    a[j] += m
                    a[i] -= m
                    a = tuple(a)
                    nxt[a] = nxt.get(a, 0) + w * b
            states = {a: w for a, w in nxt.items() if w}
    agg = {}
    for alpha, w in states.items():
        key = tuple(sorted(alpha))
        agg[key] = agg.get(key, 0) + w
    nf = factorial(n)
    return tuple(sorted((a, Fraction(w, nf)) for a, w in agg.items() if w))


def _evaluate_terms(terms, c, r):
    total = None
    cache = {}
    for alpha, coef in terms:
        prod_ = None
        for a in alpha:
            v = c[a + r]
            prod_ = v if prod_ is None else prod_ * v
        t = prod_ * coef
        total = t if total is None else total + t
    return total


def _threads_from_env(threads):
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("HYPERDET_THREADS")
    return max(1, int(env)) if env else 1


def hankel_fast(c, n: int, k: int, r: int = 0, *, method: str = "dp", threads: int | None = None):
    """D_{n;r}^{(k)}(c), the Hankel hyperdeterminant of the shifted sequence.

    ``method="dp"`` uses the cached aggregated expansion; ``"enumerate"`` walks
    every M-matrix with the odometer.  Parallel evaluation splits the term
    list into contiguous chunks and reduces them in order.
    """
    c = _as_seq(c)
    if n < 1:
        raise ValueError("n must be positive")
    c.require(n, k, r)
    if n == 1:
        return c[r]
    if method == "enumerate":
        nf = factorial(n)
        total = None
        for _, w, alpha in iter_m_matrices(n, k):
            prod_ = None
            for a in alpha:
                prod_ = c[a + r] if prod_ is None else prod_ * c[a + r]
            t = prod_ * w
            total = t if total is None else total + t
        return total * Fraction(1, nf)
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    terms = vandermonde_terms(n, k)
    workers = _threads_from_env(threads)
    if workers == 1 or len(terms) < 64:
        return _evaluate_terms(terms, c, r)
    size = -(-len(terms) // workers)
    chunks = [terms[i:i + size] for i in range(0, len(terms), size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda ch: _evaluate_terms(ch, c, r), chunks))
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total


def apolar_sum(c, k: int):
    """(1/2) sum (-1)^i binom(2k,i) c_i c_{2k-i}, which equals D_2^{(k)}(c)."""
    total = None
    for i in range(2 * k + 1):
        t = c[i] * c[2 * k - i] * (comb(2 * k, i) * (-1 if i % 2 else 1))
        total = t if total is None else total + t
    return total * Fraction(1, 2)


def toeplitz_det(f, n: int, k: int):
    return det_even(toeplitz_tensor(f, n, k), k)


# -- Pfaffians -----------------------------------------------------------------

class SkewMatrix:
    """Even-size skew-symmetric matrix stored by its strictly upper triangle."""

    def __init__(self, size: int, upper):
        if size % 2:
            raise ValueError("skew matrix for a Pfaffian must have even size")
        self.size = size
        self.upper = {}
        for (i, j), v in dict(upper).items():
            if not 0 <= i < j < size:
                raise ValueError(f"entry ({i},{j}) is not strictly upper triangular")
            self.upper[(i, j)] = v

    @classmethod
    def from_function(cls, size, f):
        return cls(size, {(i, j): f(i, j) for i in range(size) for j in range(i + 1, size)})

    def __getitem__(self, ij):
        i, j = ij
        if i == j:
            return Fraction(0)
        if i < j:
            return self.upper.get((i, j), Fraction(0))
        return -self.upper.get((j, i), Fraction(0))

    def dense(self):
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]


def pfaffian(M):
    """Pfaffian by expansion along the first row, memoized on index subsets."""
    if not isinstance(M, SkewMatrix):
        rows = M
        if len(rows) % 2:
            raise ValueError("Pfaffian of an odd-size matrix")
        M = SkewMatrix.from_function(len(rows), lambda i, j: rows[i][j])
    memo = {}

    def pf(idx):
        if not idx:
            return Fraction(1)
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = None
        for pos, j in enumerate(rest):
            a = M[first, j]
            if a == 0:
                continue
            sub = pf(rest[:pos] + rest[pos + 1:])
            t = a * sub
            if pos % 2:
                t = -t
            total = t if total is None else total + t
        memo[idx] = Fraction(0) if total is None else total
        return memo[idx]

    return pf(tuple(range(M.size)))


def det4_via_pfaffian(mu, family, n: int, r: int = 0):
    """D_{n;r}^{(2)} as the Pfaffian of the derivative bimoment matrix."""
    from .orthopoly import pprime_gram

    return pfaffian(pprime_gram(mu, family, r, 2 * n))


def parse_scalar(value):
    """JSON moment value: int, "p/q", "p/q*pi^(m/2)" or a polynomial object."""
    if isinstance(value, dict):
        return MultiPoly.from_json_obj(value)
    if isinstance(value, int):
        return Fraction(value)
    s = ExactScalar.parse(str(value))
    return s.coeff if s.is_rational() else s


def hankel_from_json(obj, **kwargs):
    """Evaluate a request ``{"moments": [...], "n": int, "k": int, "r": int}``."""
    moments = [parse_scalar(v) for v in obj["moments"]]
    return hankel_fast(moments, int(obj["n"]), int(obj["k"]), int(obj.get("r", 0)), **kwargs)


__all__ = [
    "HyperTensor",
    "MomentSequence",
    "SkewMatrix",
    "OrderMismatch",
    "InsufficientMoments",
    "apolar_sum",
    "det_even",
    "det_plus",
    "det4_via_pfaffian",
    "hankel_fast",
    "hankel_from_json",
    "hankel_tensor",
    "iter_m_matrices",
    "pfaffian",
    "pseudo_hankel_tensor",
    "toeplitz_det",
    "toeplitz_tensor",
    "vandermonde_terms",
]
