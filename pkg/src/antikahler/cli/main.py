"""Command-line interface.

Commands: check, curvature, classify, catalog (list | show | export) and
verify.  Every command accepts --output human|machine; machine output is a
single JSON document whose numbers are exact rational strings, never floats.
Exit codes: 0 success, 1 semantic failure (classify on a non-anti-Kahler
input, verify with failing assertions), 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .. import catalog
from ..classify4 import (
    NormalizationFailedError,
    NotAntiKahlerError,
    classify,
)
from ..geometry import (
    curvature,
    curvature_is_pure,
    is_anti_kahler,
    is_bi_invariant_metric,
    is_einstein,
    is_flat,
    is_ricci_flat,
    killing_anti_invariant,
    levi_civita,
    ricci,
)
from ..liealg import (
    LieAlgebra,
    is_abelian_j,
    is_anti_abelian_j,
    is_bi_invariant_j,
    nijenhuis_is_zero,
)
from ..scalars import format_rational, signature
from ..theta import anti_kahler_via_theta
from ..verifier import GeneratorConfig, UnknownSuiteError, list_suites, run_suite
from .textio import StructureFileError, StructureSyntaxError, format_structure, parse_structure


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antikahler",
        description="exact computations with left-invariant anti-Kahler structures")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", choices=("human", "machine"), default="human")

    p_check = sub.add_parser("check", help="validate a file and run the predicate ladder")
    p_check.add_argument("file")
    add_output(p_check)

    p_curv = sub.add_parser("curvature", help="dump connection, curvature and Ricci")
    p_curv.add_argument("file")
    add_output(p_curv)

    p_cls = sub.add_parser("classify", help="run the dimension-4 classification")
    p_cls.add_argument("file")
    add_output(p_cls)

    p_cat = sub.add_parser("catalog", help="list, show or export built-in structures")
    p_cat.add_argument("action", choices=("list", "show", "export"))
    p_cat.add_argument("name", nargs="?")
    add_output(p_cat)

    p_ver = sub.add_parser("verify", help="run a randomized proposition suite")
    p_ver.add_argument("suite")
    p_ver.add_argument("--seed", type=int, default=20240601)
    p_ver.add_argument("--samples", type=int, default=12)
    p_ver.add_argument("--dim", type=int, choices=(4, 6), default=4)
    add_output(p_ver)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "curvature":
            return _cmd_curvature(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "catalog":
            return _cmd_catalog(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except (StructureSyntaxError, StructureFileError) as exc:
        _emit_error(args, getattr(exc, "code", "SyntaxError"),
                    getattr(exc, "line", 0), str(exc))
        return 2
    except OSError as exc:
        _emit_error(args, "IOError", 0, str(exc))
        return 2
    parser.error(f"unknown command {args.command}")
    return 2


def _emit_error(args, code: str, line: int, message: str):
    if getattr(args, "output", "human") == "machine":
        print(json.dumps({"error": {"class": code, "line": line,
                                    "message": message}},
                         indent=2, sort_keys=True))
    else:
        print(f"error[{code}] {message}", file=sys.stderr)


def _load(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_structure(handle.read())


def _emit(args, document: dict, human_lines: list):
    if args.output == "machine":
        print(json.dumps(document, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _cmd_check(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, LieAlgebra):
        doc = {
            "command": "check",
            "valid": True,
            "dim": obj.dim,
            "structure": "algebra",
            "predicates": {
                "unimodular": obj.is_unimodular(),
                "abelian": obj.is_abelian(),
            },
            "derived_dim": obj.derived_dim(),
            "center_dim": obj.center_dim(),
        }
        human = [f"valid algebra, dim {obj.dim}",
                 f"unimodular: {_flag(doc['predicates']['unimodular'])}",
                 f"derived_dim: {doc['derived_dim']}",
                 f"center_dim: {doc['center_dim']}"]
        _emit(args, doc, human)
        return 0
    s = obj
    einstein, lam = is_einstein(s)
    predicates = {
        "anti_hermitian": True,
        "abelian_complex_structure": is_abelian_j(s.algebra, s.J),
        "bi_invariant_complex_structure": is_bi_invariant_j(s.algebra, s.J),
        "anti_abelian_complex_structure": is_anti_abelian_j(s.algebra, s.J),
        "nijenhuis_zero": nijenhuis_is_zero(s.algebra, s.J),
        "unimodular": s.algebra.is_unimodular(),
        "anti_kahler_nabla": is_anti_kahler(s),
        "anti_kahler_theta": anti_kahler_via_theta(s),
        "flat": is_flat(s),
        "einstein": einstein,
        "ricci_flat": is_ricci_flat(s),
        "curvature_pure": curvature_is_pure(s),
        "killing_anti_invariant": killing_anti_invariant(s),
        "bi_invariant_metric": is_bi_invariant_metric(s),
    }
    doc = {
        "command": "check",
        "valid": True,
        "dim": s.dim,
        "structure": "anti_hermitian",
        "signature": list(signature(s.g)),
        "predicates": predicates,
        "einstein_constant": format_rational(lam) if einstein else None,
    }
    human = [f"valid anti-Hermitian structure, dim {s.dim}",
             f"signature: {signature(s.g)}"]
    human += [f"{key}: {_flag(val)}" for key, val in predicates.items()]
    if einstein:
        human.append(f"einstein_constant: {format_rational(lam)}")
    _emit(args, doc, human)
    return 0


def _cmd_curvature(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, LieAlgebra):
        _emit_error(args, "SyntaxError", 0,
                    "curvature needs metric and complex-structure sections")
        return 2
    s = obj
    conn = levi_civita(s)
    r = curvature(s, conn)
    rc, ric = ricci(s, conn)
    n = s.dim
    gamma = [[[format_rational(conn.gamma(i, j, k)) for k in range(n)]
              for j in range(n)] for i in range(n)]
    riemann = [[[[format_rational(r.component(i, j, k, l)) for l in range(n)]
                 for k in range(n)] for j in range(n)] for i in range(n)]
    doc = {
        "command": "curvature",
        "dim": n,
        "gamma": gamma,
        "riemann": riemann,
        "ricci": [[format_rational(rc[i][j]) for j in range(n)] for i in range(n)],
        "ricci_operator": [[format_rational(ric[i][j]) for j in range(n)]
                           for i in range(n)],
    }
    human = []
    for i in range(n):
        for j in range(n):
            col = conn.nabla_basis(i).col(j)
            terms = [f"{format_rational(col[k])} e{k + 1}"
                     for k in range(n) if col[k]]
            if terms:
                human.append(f"nabla e{i + 1} e{j + 1} = " + " + ".join(terms))
    flat = r.is_zero()
    human.append(f"flat: {_flag(flat)}")
    if not flat:
        for i in range(n):
            for j in range(i + 1, n):
                op = r.op(i, j)
                for k in range(n):
                    col = op.col(k)
                    terms = [f"{format_rational(col[l])} e{l + 1}"
                             for l in range(n) if col[l]]
                    if terms:
                        human.append(
                            f"R(e{i + 1}, e{j + 1}) e{k + 1} = " + " + ".join(terms))
    human.append("ricci:")
    for i in range(n):
        human.append("  " + " ".join(format_rational(rc[i][j]) for j in range(n)))
    _emit(args, doc, human)
    return 0


def _cmd_classify(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, LieAlgebra) or obj.dim != 4:
        _emit_error(args, "SyntaxError", 0,
                    "classify needs a dimension-4 anti-Hermitian structure")
        return 2
    try:
        report = classify(obj)
    except NotAntiKahlerError as exc:
        doc = {"command": "classify", "anti_kahler": False,
               "error": {"class": "NotAntiKahler", "message": str(exc)}}
        _emit(args, doc, [f"not anti-Kahler: {exc}"])
        return 1
    except NormalizationFailedError as exc:
        _emit_error(args, "NormalizationFailed", 0, str(exc))
        return 2
    doc = {
        "command": "classify",
        "anti_kahler": True,
        "verdict": report.verdict,
        "zeta": str(report.zeta) if report.zeta is not None else None,
        "flat": report.flat,
        "einstein": report.einstein,
        "lambda": (format_rational(report.einstein_constant)
                   if report.einstein_constant is not None else None),
        "ricci_flat": report.ricci_flat,
        "witness": [[format_rational(x) for x in row] for row in report.witness.rows]
        if report.witness is not None else None,
    }
    human = [f"verdict: {report.verdict}"]
    if report.zeta is not None:
        human.append(f"zeta: {report.zeta}")
    human.append(f"flat: {_flag(report.flat)}")
    human.append(f"einstein: {_flag(report.einstein)}")
    if report.einstein_constant is not None:
        human.append(f"lambda: {format_rational(report.einstein_constant)}")
    human.append(f"ricci_flat: {_flag(report.ricci_flat)}")
    _emit(args, doc, human)
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        names = catalog.list_names()
        _emit(args, {"command": "catalog", "names": list(names)}, list(names))
        return 0
    if args.name is None:
        _emit_error(args, "SyntaxError", 0, "catalog show/export needs a name")
        return 2
    try:
        entry = catalog.get(args.name)
    except catalog.UnknownEntryError:
        _emit_error(args, "UnknownEntry", 0, f"no catalog entry {args.name!r}")
        return 2
    if args.action == "export":
        sys.stdout.write(format_structure(entry.structure))
        return 0
    s = entry.structure
    einstein, lam = is_einstein(s)
    doc = {
        "command": "catalog",
        "name": entry.name,
        "description": entry.description,
        "dim": s.dim,
        "anti_kahler": is_anti_kahler(s),
        "flat": is_flat(s),
        "einstein": einstein,
        "lambda": format_rational(lam) if einstein else None,
        "unimodular": s.algebra.is_unimodular(),
        "signature": list(signature(s.g)),
    }
    human = [f"{entry.name}: {entry.description}",
             f"dim: {s.dim}",
             f"anti_kahler: {_flag(doc['anti_kahler'])}",
             f"flat: {_flag(doc['flat'])}",
             f"einstein: {_flag(einstein)}"]
    if einstein:
        human.append(f"lambda: {format_rational(lam)}")
    _emit(args, doc, human)
    return 0


def _cmd_verify(args) -> int:
    config = GeneratorConfig(master_seed=args.seed, samples=args.samples,
                             dim=args.dim)
    try:
        report = run_suite(args.suite, config)
    except UnknownSuiteError:
        _emit_error(args, "UnknownSuite", 0,
                    f"unknown suite {args.suite!r}; known: {', '.join(list_suites())}")
        return 2
    if args.output == "machine":
        print(json.dumps(report.to_machine(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(report.to_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
