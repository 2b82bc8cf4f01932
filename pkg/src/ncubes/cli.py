"""Command-line entry point.

One subcommand per library operation:

    equiv         decide equivalence to a sum of n cubes over C or R
    equiv-q       decide equivalence to P_d over Q and emit the matrix
    pit           black-box identity test for sums of powers of forms
    hitset        emit the equivalence hitting set or the transversal family
    essvars       count essential variables
    minvars       emit a change of variables eliminating redundant variables
    lie           emit a basis of the Lie algebra of a polynomial
    factor-forms  factor a form into powers of rational linear forms
    slices        dump the slice matrices of a cubic

Polynomial files use the text grammar ("2 x1^3 - 6 x1 x2^2") or the JSON
object form; matrices are always emitted as JSON.  Verdict subcommands print
a single machine-parseable line (ACCEPT / REJECT / ZERO / NONZERO) followed
by witness or trace data; --json prints one structured object instead.

Exit codes: 0 verdict or output produced, 1 internal failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blackbox import BlackBoxPoly
from .equivalence import Field, deterministic_equivalence, randomized_equivalence
from .errors import (
    NotCubicError,
    NotHomogeneousError,
    ParseError,
    SymmetryError,
)
from .hitting import equivalence_hitting_set, pit_sum_of_powers, transversal_family
from .lie import (
    FactorizationFailed,
    derand_lie_factor,
    lie_algebra_dense,
    lie_algebra_product_forms,
    lie_equivalence_Q,
)
from .poly import SparsePoly, parse_poly, poly_from_json, poly_to_json, poly_to_str
from .polydep import essential_variable_count, minimize_variables
from .rational import format_rational, q
from .slices import slices_of


class _InputError(Exception):
    pass


def _load_poly(path: str, n: int | None = None) -> SparsePoly:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    text = text.strip()
    if not text:
        raise _InputError(f"{path} is empty")
    try:
        if text.startswith("{"):
            f = poly_from_json(json.loads(text))
            if n is not None and f.n != n:
                raise _InputError(f"{path} has n={f.n}, expected n={n}")
            return f
        return parse_poly(text, n)
    except (ParseError, json.JSONDecodeError) as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _fmt_point(p) -> str:
    return " ".join(format_rational(q(c)) for c in p)


def _mat_json(M) -> dict:
    return M.to_json()


def _print_or_json(args, text_lines, obj):
    if args.json:
        print(json.dumps(obj))
    else:
        for line in text_lines:
            print(line)


# -- subcommand handlers -------------------------------------------------


def _cmd_equiv(args) -> int:
    f = _load_poly(args.file)
    field = Field.Complex if args.field == "C" else Field.Real
    if args.mode == "det":
        v = deterministic_equivalence(f, field)
    else:
        v = randomized_equivalence(f, field, args.seed, args.sample_bits)
    if v:
        _print_or_json(args, ["ACCEPT"], {"verdict": "ACCEPT", "trace": None})
    else:
        trace = v.trace.value
        _print_or_json(
            args, [f"REJECT trace={trace}"], {"verdict": "REJECT", "trace": trace}
        )
    return 0


def _cmd_equiv_q(args) -> int:
    f = _load_poly(args.file)
    res = lie_equivalence_Q(f, args.degree)
    if res:
        lines = ["ACCEPT", json.dumps(_mat_json(res.A))]
        obj = {"verdict": "ACCEPT", "A": _mat_json(res.A), "reason": None}
    else:
        lines = [f"REJECT reason={res.reason}"]
        obj = {"verdict": "REJECT", "A": None, "reason": res.reason}
    _print_or_json(args, lines, obj)
    return 0


def _cmd_pit(args) -> int:
    f = _load_poly(args.poly, n=args.n)
    if f.total_degree() > args.d:
        raise _InputError(
            f"polynomial has degree {f.total_degree()}, exceeds bound {args.d}"
        )
    box = BlackBoxPoly.from_sparse(f)
    res = pit_sum_of_powers(box, args.n, args.d, threads=args.threads)
    if res.is_zero:
        _print_or_json(
            args, ["ZERO"], {"verdict": "ZERO", "witness": None, "evaluations": res.evaluations}
        )
    else:
        w = res.witness
        _print_or_json(
            args,
            ["NONZERO", _fmt_point(w)],
            {
                "verdict": "NONZERO",
                "witness": [format_rational(q(c)) for c in w],
                "evaluations": res.evaluations,
            },
        )
    return 0


def _cmd_hitset(args) -> int:
    if args.kind == "equiv":
        if args.d is None:
            raise _InputError("hitset equiv requires -d")
        pts = equivalence_hitting_set(args.n, args.d)
        _print_or_json(
            args,
            [_fmt_point(p) for p in pts],
            {"n": args.n, "d": args.d, "points": [list(p) for p in pts]},
        )
    else:
        if args.r is None:
            raise _InputError("hitset transversal requires -r")
        fam = transversal_family(args.n, args.r)
        _print_or_json(
            args,
            [json.dumps(_mat_json(A)) for A in fam],
            {"n": args.n, "r": args.r, "matrices": [_mat_json(A) for A in fam]},
        )
    return 0


def _cmd_essvars(args) -> int:
    f = _load_poly(args.file)
    if args.blackbox:
        t = essential_variable_count(BlackBoxPoly.from_sparse(f))
    else:
        t = essential_variable_count(f)
    _print_or_json(args, [str(t)], {"essential_variables": t})
    return 0


def _cmd_minvars(args) -> int:
    f = _load_poly(args.file)
    A, g = minimize_variables(f)
    _print_or_json(
        args,
        [json.dumps(_mat_json(A)), poly_to_str(g)],
        {"A": _mat_json(A), "g": poly_to_json(g)},
    )
    return 0


def _cmd_lie(args) -> int:
    f = _load_poly(args.file)
    if args.blackbox:
        if args.d is None:
            raise _InputError("lie --blackbox requires -d")
        if f.is_zero() or not f.is_homogeneous(args.d):
            raise _InputError(f"input is not homogeneous of degree {args.d}")
        basis = lie_algebra_product_forms(BlackBoxPoly.from_sparse(f), f.n, args.d)
    else:
        basis = lie_algebra_dense(f)
    _print_or_json(
        args,
        [f"dim {basis.dim}"] + [json.dumps(_mat_json(B)) for B in basis.basis],
        {"dim": basis.dim, "basis": [_mat_json(B) for B in basis.basis]},
    )
    return 0


def _cmd_factor_forms(args) -> int:
    f = _load_poly(args.file)
    try:
        fact = derand_lie_factor(f)
    except FactorizationFailed as exc:
        reason = exc.reason.value
        _print_or_json(
            args, [f"REJECT reason={reason}"], {"verdict": "REJECT", "reason": reason}
        )
        return 0
    pieces = [format_rational(fact.lam)]
    for w, a in zip(fact.forms, fact.exponents):
        pieces.append(f"({poly_to_str(SparsePoly.linear_form(w))}) ^ {a}")
    obj = {
        "verdict": "ACCEPT",
        "lambda": format_rational(fact.lam),
        "factors": [
            {"form": [format_rational(q(c)) for c in w], "exponent": a}
            for w, a in zip(fact.forms, fact.exponents)
        ],
    }
    _print_or_json(args, ["; ".join(pieces)], obj)
    return 0


def _cmd_slices(args) -> int:
    f = _load_poly(args.file)
    S = slices_of(f)
    _print_or_json(
        args,
        [json.dumps(_mat_json(T)) for T in S],
        {"n": S.n, "slices": [_mat_json(T) for T in S]},
    )
    return 0


# -- parser ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ncubes",
        description="Exact decision procedures for sums of cubes and linear-form factorization.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, handler, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(handler=handler)
        return p

    p = add("equiv", _cmd_equiv, help="equivalence to a sum of n cubes over C or R")
    p.add_argument("--field", choices=("C", "R"), required=True)
    p.add_argument("--mode", choices=("det", "rand"), default="det")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample-bits", type=int, default=None, dest="sample_bits")
    p.add_argument("file")

    p = add("equiv-q", _cmd_equiv_q, help="equivalence to P_d over Q, with witness matrix")
    p.add_argument("-d", type=int, required=True, dest="degree", choices=(3, 4, 5))
    p.add_argument("file")

    p = add("pit", _cmd_pit, help="identity test for a sum of powers of independent forms")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--threads", type=int, default=1)

    p = add("hitset", _cmd_hitset, help="emit hitting-set points or transversal matrices")
    p.add_argument("kind", choices=("equiv", "transversal"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, default=None)
    p.add_argument("-r", type=int, default=None)

    p = add("essvars", _cmd_essvars, help="count essential variables")
    p.add_argument("file")
    p.add_argument("--blackbox", action="store_true")

    p = add("minvars", _cmd_minvars, help="eliminate redundant variables")
    p.add_argument("file")

    p = add("lie", _cmd_lie, help="basis of the Lie algebra of a polynomial")
    p.add_argument("file")
    p.add_argument("--blackbox", action="store_true")
    p.add_argument("-d", type=int, default=None)

    p = add("factor-forms", _cmd_factor_forms, help="factor into powers of rational linear forms")
    p.add_argument("file")

    p = add("slices", _cmd_slices, help="dump the slice matrices of a cubic")
    p.add_argument("file")

    return top


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 2 if code else 0
    try:
        return args.handler(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, NotCubicError, NotHomogeneousError, SymmetryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
