"""Command-line front end: ``hyperdet <subcommand> ...``.

Scalar results print as exact text by default; structured results (identity
checks, expansions, polynomials with ``--format json``) print as canonical
JSON carrying ``"schema": "hyperdet/1"``.  Exit status is 0 on success, 1 on
a domain error (with a JSON error object) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import ExactScalar, MultiPoly, UniPoly
from .hyperdet import HyperTensor, det_even, det_plus, det4_via_pfaffian, hankel_fast, parse_scalar, toeplitz_det
from .kaneko import kaneko_check
from .orthopoly import binomial_shift_sides, falling_factorial_sides, kzbell_sides, monic_from_moments
from .selberg import (
    SequenceFamily,
    appendixA_consistency,
    closed_form_hankel,
    pseudo_bruteforce,
    pseudo_closed_form,
)
from .symfun import SymExpansion, hankel_hyperdet_schur, ubiquitous_identities
from .turanians import TURANIAN_FAMILIES, TuranianSpec, laplacian_power_check, turanian_bruteforce, turanian_closed_form

SCHEMA = "hyperdet/1"
IDENTITIES = ("appendixA", "appendixC", "KZbell", "bQ", "fibonacci", "laplacian", "binomial-shift")


# -- serialization ----------------------------------------------------------------


def _scalar_text(v) -> str:
    if isinstance(v, ExactScalar) and v.is_rational():
        v = v.to_fraction()
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


def to_jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction, ExactScalar)):
        return _scalar_text(v)
    if isinstance(v, UniPoly):
        return to_jsonable(v.to_multipoly((v.var,)))
    if isinstance(v, MultiPoly):
        if not v.vars or v.is_constant():
            return _scalar_text(v.constant_term())
        return {
            "vars": list(v.vars),
            "terms": {",".join(map(str, m)): _scalar_text(c) for m, c in v.sorted_terms()},
        }
    if isinstance(v, SymExpansion):
        return v.to_json_obj()
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    raise TypeError(f"cannot serialize {type(v).__name__}")


def to_text(v) -> str:
    if isinstance(v, (MultiPoly, UniPoly)):
        if isinstance(v, MultiPoly) and (not v.vars or v.is_constant()):
            return _scalar_text(v.constant_term())
        return str(v)
    if isinstance(v, SymExpansion):
        return str(v)
    return _scalar_text(v)


def dump(obj) -> str:
    payload = {"schema": SCHEMA}
    payload.update(to_jsonable(obj))
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _equal(a, b) -> bool:
    if isinstance(a, UniPoly) and isinstance(b, UniPoly):
        return a == b
    if isinstance(a, UniPoly):
        a = a.to_multipoly((a.var,))
    if isinstance(b, UniPoly):
        b = b.to_multipoly((b.var,))
    return a == b


def _pair(name, lhs, rhs, **extra):
    out = {"identity": name, "lhs": lhs, "rhs": rhs, "equal": _equal(lhs, rhs)}
    out.update(extra)
    return out


# -- input helpers ---------------------------------------------------------------


def _load_json(args):
    if getattr(args, "input", None) == "-":
        return json.load(sys.stdin)
    if getattr(args, "input", None):
        with open(args.input, encoding="utf-8") as fh:
            return json.load(fh)
    if getattr(args, "json", None):
        return json.loads(args.json)
    raise ValueError("provide --input FILE or --json TEXT")


def _params(items):
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise ValueError(f"parameter {item!r} is not key=value")
        out[key.strip()] = None if val.strip() in ("", "symbolic") else Fraction(val.strip())
    return out


def _moments_from_args(args, count):
    if args.family:
        return SequenceFamily.parse(args.family).moments(count)
    data = _load_json(args)
    moments = data["moments"] if isinstance(data, dict) else data
    return [parse_scalar(v) for v in moments]


# -- subcommands -------------------------------------------------------------------


def cmd_det(args):
    data = _load_json(args)
    nested = data["tensor"] if isinstance(data, dict) else data

    def conv(x):
        return [conv(y) for y in x] if isinstance(x, list) else parse_scalar(x)

    A = HyperTensor.from_nested(conv(nested))
    return det_plus(A) if args.plus else det_even(A)


def cmd_hankel(args):
    count = 2 * args.k * (args.n - 1) + args.r + 1
    c = _moments_from_args(args, count)
    return hankel_fast(c, args.n, args.k, args.r, method=args.method, threads=args.threads)


def cmd_toeplitz(args):
    data = _load_json(args)
    f = data["f"] if isinstance(data, dict) and "f" in data else data
    if isinstance(f, dict):
        f = {int(k): parse_scalar(v) for k, v in f.items()}
    else:
        raise ValueError("toeplitz input must map offsets to values")
    return toeplitz_det(f, args.n, args.k)


def cmd_pfaffian4(args):
    count = 2 * (2 * args.n) + args.r + 2
    c = _moments_from_args(args, count)
    fam = monic_from_moments(c, 2 * args.n)
    pf = det4_via_pfaffian(c, fam, args.n, args.r)
    direct = hankel_fast(c, args.n, 2, args.r)
    return {"pfaffian": pf, "hankel": direct, "equal": _equal(pf, direct)}


def cmd_closed_form(args):
    return closed_form_hankel(SequenceFamily.parse(args.family), args.n, args.k, args.r)


def cmd_turanian(args):
    spec = TuranianSpec(args.family, args.n, args.k, args.r, _params(args.param))
    if args.method == "brute":
        return turanian_bruteforce(spec)
    if args.method == "closed":
        return turanian_closed_form(spec)
    closed, brute = turanian_closed_form(spec), turanian_bruteforce(spec)
    return {"closed_form": closed, "bruteforce": brute, "equal": closed == brute}


def cmd_kaneko(args):
    lhs, rhs = kaneko_check(args.n, args.r, args.a, args.b, args.k)
    return {"lhs": lhs, "rhs": rhs, "equal": lhs == rhs}


def cmd_schur(args):
    return {"expansion": hankel_hyperdet_schur(args.n, args.k, args.route)}


def cmd_identity(args):
    name = args.name
    if name == "fibonacci":
        return _pair(name, *ubiquitous_identities("fibonacci", k=args.k))
    if name == "laplacian":
        return _pair(name, *laplacian_power_check(args.n, args.k))
    if name == "KZbell":
        return _pair(name, *kzbell_sides(args.n, args.r))
    if name == "bQ":
        return _pair(name, *falling_factorial_sides(args.r, args.n, args.k))
    if name == "binomial-shift":
        return _pair(name, *binomial_shift_sides(args.r, args.N, args.n, args.k))
    if name == "appendixC":
        lhs = pseudo_closed_form(args.case, args.n, args.k, args.s, args.m, _params(args.param))
        rhs = pseudo_bruteforce(args.case, args.n, args.k, args.s, args.m, _params(args.param))
        return _pair(name, lhs, rhs)
    if name == "appendixA":
        rep = appendixA_consistency(args.n, args.a, args.b, args.k)
        return {"identity": name, "routes": rep.as_dict(), "equal": rep.consistent}
    raise ValueError(f"unknown identity {name!r}")  # pragma: no cover


# -- parser -------------------------------------------------------------------------


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def _add_input(p):
    p.add_argument("--input", help="JSON file, or - for standard input")
    p.add_argument("--json", help="inline JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperdet", description="Exact Hankel hyperdeterminants.")
    parser.add_argument("--format", choices=("auto", "text", "json"), default="auto")
    parser.add_argument("--threads", type=_positive, default=None, help="worker threads (default: HYPERDET_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="naive Det_2k (or Det_+ with --plus) of a nested tensor")
    _add_input(p)
    p.add_argument("--plus", action="store_true")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("hankel", help="fast Hankel hyperdeterminant")
    p.add_argument("--family", help="family tag, e.g. factorial or pochhammer_ratio:a=1,b=3")
    _add_input(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--method", choices=("dp", "enumerate"), default="dp")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("toeplitz", help="Toeplitz hyperdeterminant from offsets")
    _add_input(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_toeplitz)

    p = sub.add_parser("pfaffian4", help="order-4 Hankel hyperdeterminant as a Pfaffian")
    p.add_argument("--family")
    _add_input(p)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.set_defaults(func=cmd_pfaffian4)

    p = sub.add_parser("closed-form", help="closed-form value for a named family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("turanian", help="Turanian of an orthogonal polynomial family")
    p.add_argument("--family", choices=TURANIAN_FAMILIES, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--param", action="append", help="key=value, e.g. alpha=1")
    p.add_argument("--method", choices=("closed", "brute", "both"), default="brute")
    p.set_defaults(func=cmd_turanian)

    p = sub.add_parser("kaneko-check", help="both sides of Kaneko's integral identity")
    for name, default in (("n", None), ("r", None), ("a", 1), ("b", 1), ("k", 1)):
        p.add_argument(f"--{name}", type=_positive if name != "r" else _nonneg, required=default is None, default=default)
    p.set_defaults(func=cmd_kaneko)

    p = sub.add_parser("schur", help="Schur expansion of D_n^(k)(h)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--route", choices=("nvars", "sym1", "phi"), default="nvars")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("identity", help="named identity check")
    p.add_argument("name", choices=IDENTITIES)
    p.add_argument("--n", type=_positive, default=2)
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--N", type=_nonneg, default=2)
    p.add_argument("--a", type=Fraction, default=Fraction(1))
    p.add_argument("--b", type=Fraction, default=Fraction(3))
    p.add_argument("--case", type=int, choices=(1, 2, 3), default=1)
    p.add_argument("--s", type=_nonneg, default=0)
    p.add_argument("--m", type=_nonneg, default=0)
    p.add_argument("--param", action="append")
    p.set_defaults(func=cmd_identity)

    # Global options are also accepted after the subcommand name.
    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("auto", "text", "json"), default=argparse.SUPPRESS)
        sp.add_argument("--threads", type=_positive, default=argparse.SUPPRESS)
    return parser


def _emit(result, fmt: str) -> str:
    structured = isinstance(result, dict)
    if fmt == "json" or (fmt == "auto" and structured):
        return dump(result if structured else {"value": result})
    if structured:
        return dump(result)
    return to_text(result)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        out = _emit(result, args.format)
    except (ValueError, ArithmeticError, KeyError, IndexError, TypeError, OSError) as exc:
        err = {"schema": SCHEMA, "error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(err, sort_keys=True, separators=(",", ":")))
        return 1
    print(out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
