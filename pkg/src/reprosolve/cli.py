"""Command-line front end.

Exit codes: 0 success or consistent, 2 inconsistent, 1 usage/parse/precondition error.
"""

from __future__ import annotations

import argparse
import sys

from . import sweeps
from .cline import cline_consistent, cline_context, cline_f_generator, cline_g_generator, cline_particular
from .errors import Inconsistent, ReprosolveError, ValidationError
from .field import parse_field
from .fileformat import (build_problem, dumps, generator_to_json, matrix_to_json, parse_generator,
                         parse_matrix_map, parse_problem, parse_single_matrix, solution_set_to_json)
from .generator import AffineGenerator, is_reproductive
from .inverse import all_one_inverses, certify, index, one_inverse
from .matrix import Matrix
from .oracle import DEFAULT_CAP, enumerate_solutions, solve
from .penrose import penrose_consistent, penrose_context, penrose_f_generator, penrose_g_generator
from .kcomm import find_kcomm_inverse, kcomm_consistent, kcomm_context, kcomm_f_generator, kcomm_g_generator, \
    kcomm_lemma_report

EXIT_OK, EXIT_ERROR, EXIT_INCONSISTENT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _verdict_json(v) -> dict:
    return {
        "reproductive": v.reproductive,
        "linear_idempotent": v.linear_idempotent,
        "constant_fixed": v.constant_fixed,
        "defect": matrix_to_json(v.defect),
    }


def _report_json(report) -> dict:
    return {
        "consistent": report.consistent,
        "clauses": [{"identity": name, "holds": d.is_zero(), "defect": matrix_to_json(d)}
                    for name, d in report.defects.items()],
        "witnesses": {k: matrix_to_json(v) for k, v in report.witnesses.items()},
        "notes": list(report.notes),
    }


def _overrides(args, field) -> dict[str, Matrix]:
    return parse_matrix_map(args.one_inverse, field) if args.one_inverse else {}


def _g_section(g: AffineGenerator, canonical: Matrix) -> dict:
    v = is_reproductive(g)
    return {
        "generator": generator_to_json(g),
        "reproductive": v.reproductive,
        "x0_equals_canonical": g.constant == canonical,
        "verdict": _verdict_json(v),
    }


def cmd_solve(args, pf) -> int:
    prob = build_problem(pf)
    out = {"problem": pf.problem, "field": str(pf.field), "params": pf.params}
    x0 = parse_single_matrix(args.with_x0, pf.field) if args.with_x0 else None
    over = _overrides(args, pf.field)
    if pf.problem == "cline":
        ctx = cline_context(prob, over.get("GA"), over.get("GB"), allow_small_power=args.allow_small_power)
        report = cline_consistent(ctx, prob)
        out["power_below_index"] = ctx.below_index
        out["consistency"] = _report_json(report)
        if report.consistent:
            f = cline_f_generator(ctx, prob)
            canonical = cline_particular(ctx, prob)
            g_of = lambda x: cline_g_generator(ctx, prob, x)  # noqa: E731
    elif pf.problem == "penrose":
        ctx = penrose_context(prob, over.get("GA"), over.get("GD"), allow_small_power=args.allow_small_power)
        report = penrose_consistent(ctx, prob)
        out["power_below_index"] = ctx.below_index
        out["consistency"] = _report_json(report)
        out["x1_literal_reading"] = {
            "matrix": matrix_to_json(ctx.x1_literal),
            "differs": ctx.literal_reading_differs,
            "solves_system": prob.is_solution(ctx.x1_literal),
        }
        if report.consistent:
            f = penrose_f_generator(ctx, prob)
            canonical = ctx.x1
            g_of = lambda x: penrose_g_generator(ctx, prob, x)  # noqa: E731
    elif pf.problem == "kcomm":
        ctx = kcomm_context(prob, over["Abar"]) if "Abar" in over else find_kcomm_inverse(prob)
        report = kcomm_consistent(prob, ctx)
        out["singular"] = prob.singular
        out["consistency"] = _report_json(report)
        if report.consistent:
            f = kcomm_f_generator(ctx, prob)
            canonical = ctx.xhat
            g_of = lambda x: kcomm_g_generator(ctx, prob, x)  # noqa: E731
            out["lemmas"] = [{"identity": c.identity, "holds": c.passed, "defect": matrix_to_json(c.defect)}
                             for c in kcomm_lemma_report(ctx, prob, x0).checks]
    else:
        raise ValidationError(f"solve does not handle {pf.problem!r} problems; use the {pf.problem} command")

    if not report.consistent:
        _emit(out)
        return EXIT_INCONSISTENT
    out["generator"] = generator_to_json(f)
    out["reproductivity"] = _verdict_json(is_reproductive(f))
    if x0 is not None:
        out["with_x0"] = _g_section(g_of(x0), canonical)
    _emit(out)
    return EXIT_OK


def cmd_check_repro(args) -> int:
    field = parse_field(args.field) if args.field else None
    h = parse_generator(args.file, field)
    _emit({"formula": h.formula(), **_verdict_json(is_reproductive(h))})
    return EXIT_OK


def cmd_oneinv(args, pf) -> int:
    a = pf.matrices["A"]
    if args.one_inverse:
        cert = certify(a, parse_single_matrix(args.one_inverse, pf.field, "G"))
    else:
        cert = one_inverse(a)
    every = all_one_inverses(a)
    _emit({
        "field": str(pf.field),
        "rank": cert.input_rank,
        "construction": cert.construction,
        "one_inverse": matrix_to_json(cert.g),
        "all_one_inverses": {"dimension": every.dimension, "particular": matrix_to_json(every.particular),
                             "basis": [matrix_to_json(b) for b in every.basis]},
    })
    return EXIT_OK


def cmd_index(args, pf) -> int:
    if "A" not in pf.matrices:
        raise ValidationError("index needs a matrix named A")
    print(index(pf.matrices["A"]))
    return EXIT_OK


def _system_of(pf):
    prob = build_problem(pf)
    if pf.problem in ("cline", "penrose", "kcomm", "oracle"):
        return prob if pf.problem == "oracle" else prob.system()
    if pf.problem == "oneinv":
        from .inverse import one_inverse_system
        return one_inverse_system(prob)
    raise ValidationError(f"{pf.problem!r} problems have no solution set")


def cmd_oracle(args, pf) -> int:
    s = solve(_system_of(pf))
    _emit({"field": str(pf.field), "problem": pf.problem, **solution_set_to_json(s)})
    return EXIT_OK if s.consistent else EXIT_INCONSISTENT


def cmd_enumerate(args, pf) -> int:
    s = solve(_system_of(pf))
    sols = [matrix_to_json(x) for x in enumerate_solutions(s, args.cap)]
    _emit({"field": str(pf.field), "problem": pf.problem, "count": len(sols), "solutions": sols})
    return EXIT_OK if s.consistent else EXIT_INCONSISTENT


def cmd_sweep(args) -> int:
    suite = sweeps.SUITES[args.suite]
    kwargs = {}
    if args.suite in ("repro", "primitives", "kcomm"):
        kwargs["seed"] = args.seed
    if args.field and args.suite in ("cline", "penrose", "unreached"):
        kwargs["field"] = parse_field(args.field)
    result = suite(**kwargs)
    _emit(result.to_json())
    return EXIT_OK if result.passed else EXIT_ERROR


def _emit(obj):
    sys.stdout.write(dumps(obj) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q or GFp (e.g. GF3); overrides the file's field")
    common.add_argument("--with-x0", metavar="FILE", help="particular solution for the g-generator")
    common.add_argument("--one-inverse", metavar="FILE",
                        help="override {1}-inverses: GA/GB (cline), GA/GD (penrose), Abar (kcomm), G (oneinv)")
    common.add_argument("--allow-small-power", action="store_true", help="accept m < Ind(A) or n < Ind(B)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")

    parser = _Parser(prog="reprosolve", description="Exact general solutions of matrix equations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in [
        ("solve", "consistency report and general solution generator"),
        ("oneinv", "a {1}-inverse and the set of all {1}-inverses"),
        ("index", "index of the square matrix A"),
        ("oracle", "raw solution set from the vectorized linear system"),
        ("enumerate", "list every solution (finite fields only)"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", help="problem file (JSON)")
    p = sub.add_parser("check-repro", parents=[common], help="decide whether a generator is reproductive")
    p.add_argument("file", help="generator JSON, or a solve report containing one")
    p = sub.add_parser("sweep", parents=[common], help="run an exhaustive or randomized suite")
    p.add_argument("suite", choices=sorted(sweeps.SUITES))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check-repro":
            return cmd_check_repro(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        field = parse_field(args.field) if args.field else None
        pf = parse_problem(args.file, field)
        handler = {"solve": cmd_solve, "oneinv": cmd_oneinv, "index": cmd_index,
                   "oracle": cmd_oracle, "enumerate": cmd_enumerate}[args.command]
        return handler(args, pf)
    except Inconsistent as exc:
        print(f"reprosolve: inconsistent: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ReprosolveError as exc:
        print(f"reprosolve: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
