"""``lieforge`` command line.

Exit status: 0 on success, 1 when a requested check fails, 2 on bad input.
Results go to stdout (or ``--out``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import build_algebra
from .analysis import CHECKS, verify
from .classical import ConventionError, build_classical, compare_structure_constants, extract_coordinate_algebra
from .codes import BUILTIN_NAMES, CodeInputError, builtin, dual, minimum_distance, parse_code_text, weight_enumerator
from .lattices import identify_root_system, roots_of_code_lattice
from .liealg import LieAlgebra, build_lie_algebra, format_label

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _frac(x: Fraction):
    return [x.numerator, x.denominator]


def _load_code(source: str):
    if source in BUILTIN_NAMES:
        return builtin(source)
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_code_text(fh.read())
    raise InputError(f"{source!r} is neither a built-in code ({', '.join(BUILTIN_NAMES)}) nor a file")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# --------------------------------------------------------------- commands


def cmd_code_info(args) -> int:
    code = _load_code(args.name)
    info = {
        "code": str(code),
        "n": code.n,
        "k": code.k,
        "d": minimum_distance(code),
        "weight_enumerator": weight_enumerator(code),
        "self_dual": dual(code) == code,
        "generator": [str(w) for w in code.generator],
    }
    if args.format == "json":
        _emit(_dump(info), None)
    else:
        lines = [
            info["code"],
            "weight enumerator: " + " ".join(map(str, info["weight_enumerator"])),
            f"self-dual: {'yes' if info['self_dual'] else 'no'}",
            "generator:",
        ] + ["  " + g for g in info["generator"]]
        _emit("\n".join(lines), None)
    return EXIT_OK


def cmd_lattice_roots(args) -> int:
    code = _load_code(args.code)
    roots = roots_of_code_lattice(code)
    if not roots:
        print(f"{code} has no roots", file=sys.stderr)
        return EXIT_FAIL
    rep = identify_root_system(roots)
    if args.format == "json":
        d = rep.to_json()
        d["coordinates"] = "doubled"
        d["roots"] = [list(r) for r in roots]
        _emit(_dump(d), args.out)
    else:
        lines = [f"type: {rep.dynkin_type}", f"roots: {len(roots)} (doubled coordinates)"]
        lines += [" ".join(f"{x:2d}" for x in r) for r in roots]
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_algebra_build(args) -> int:
    L = build_algebra(args.type)
    if args.out:
        _emit(L.dumps(), args.out)
        print(f"wrote {L.name} (dim {L.dim}) to {args.out}", file=sys.stderr)
    elif args.format == "table":
        _emit(f"{L.name}: dim {L.dim}, rank {L.rank}, {len(L.table)} nonzero brackets", None)
    else:
        _emit(L.dumps(), None)
    return EXIT_OK


def _load_algebra(path: str) -> LieAlgebra:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None
    try:
        return LieAlgebra.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_checks(text: str) -> tuple[str, ...]:
    checks = tuple(c.strip() for c in text.split(",") if c.strip())
    bad = [c for c in checks if c not in CHECKS]
    if bad or not checks:
        raise InputError(f"unknown checks {bad}; choose from {','.join(CHECKS)}")
    return checks


def cmd_verify(args) -> int:
    checks = _parse_checks(args.checks)
    L = _load_algebra(args.input)
    rep = verify(L, checks, backend=args.backend)
    if args.format == "json":
        _emit(_dump(rep.to_json(L)), args.out)
    else:
        lines = [f"{L.name or 'algebra'}: dim {rep.dimension}, rank {rep.rank}"]
        if rep.jacobi is not None:
            j = rep.jacobi
            lines.append("jacobi: " + ("pass" if j.passed else "FAIL at " + ", ".join(
                format_label(L.basis[k]) for k in j.triple)))
        if rep.killing_nondegenerate is not None:
            lines.append(f"killing: {'pass' if rep.killing_nondegenerate else 'FAIL'} (nondegenerate)")
        if rep.cartan_centralizer_dim is not None:
            lines.append(f"centralizer: {'pass' if rep.cartan_self_centralizing else 'FAIL'} "
                         f"(dim {rep.cartan_centralizer_dim})")
        if rep.spectra is not None:
            lines.append(f"spectrum: {'pass' if rep.spectra_ok else 'FAIL'}")
        if rep.roots_ok is not None:
            kind = rep.roots.dynkin_type if rep.roots else "?"
            n = len(rep.roots.roots) if rep.roots else 0
            lines.append(f"roots: {'pass' if rep.roots_ok else 'FAIL'} ({n} roots, type {kind})")
        _emit("\n".join(lines), args.out)
    for err in rep.errors:
        print(err, file=sys.stderr)
    if not rep.passed:
        print("verification failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_classical_build(args) -> int:
    try:
        M = build_classical(args.series, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not M.check_skew():
        print("matrix basis is not skew for the form", file=sys.stderr)
        return EXIT_FAIL
    try:
        A = extract_coordinate_algebra(M)
    except ConventionError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    L = build_lie_algebra(A)
    L.name = f"{args.series}{M.n}"
    same = not compare_structure_constants(L, M.lie_algebra)
    roots = verify(L, ("roots",)).roots
    summary = {
        "name": L.name,
        "dim": M.dim,
        "ambient": M.ambient,
        "blocks": [[kind, str(x), d] for kind, x, d in M.blocks],
        "S": [str(c) for c in A.S],
        "e_products": [
            [str(c), str(d), _frac(A.e_coefficient(c, d))]
            for c in A.S for d in A.S if c != d and A.e_coefficient(c, d)
        ],
        "mu": [[str(c), i + 1, _frac(A.mu[(c, i)])] for c in A.S for i in c.support],
        "rebuild_matches": same,
        "root_type": roots.dynkin_type if roots else None,
    }
    if args.out:
        _emit(L.dumps(), args.out)
    if args.format == "json":
        _emit(_dump(summary), None)
    else:
        lines = [
            f"{summary['name']}: dim {summary['dim']} on a {summary['ambient']}-dimensional space",
            "blocks: " + ", ".join(f"{k}:{x}({d})" for k, x, d in summary["blocks"]),
            "S: " + " ".join(summary["S"]),
            "mu: " + " ".join(f"{c}@{i}={Fraction(*v)}" for c, i, v in summary["mu"]),
            f"rebuild matches matrices: {'yes' if same else 'NO'}",
            f"root type: {summary['root_type']}",
        ]
        _emit("\n".join(lines), None)
    return EXIT_OK if same else EXIT_FAIL


# ----------------------------------------------------------------- parser


def _with_format(parser: argparse.ArgumentParser, default: str = "table") -> argparse.ArgumentParser:
    parser.add_argument("--format", choices=("json", "table"), default=default)
    return parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lieforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    code = sub.add_parser("code", help="binary codes").add_subparsers(dest="action", required=True)
    ci = _with_format(code.add_parser("info", help="parameters and weight enumerator"))
    ci.add_argument("--name", required=True, help=f"built-in ({', '.join(BUILTIN_NAMES)}) or code file")
    ci.set_defaults(func=cmd_code_info)

    lat = sub.add_parser("lattice", help="Construction A lattices").add_subparsers(dest="action", required=True)
    lr = _with_format(lat.add_parser("roots", help="roots and Dynkin type"))
    lr.add_argument("--code", required=True)
    lr.add_argument("--out")
    lr.set_defaults(func=cmd_lattice_roots)

    alg = sub.add_parser("algebra", help="exceptional algebras").add_subparsers(dest="action", required=True)
    ab = _with_format(alg.add_parser("build", help="structure constants as JSON"), "json")
    ab.add_argument("--type", required=True, type=str.lower, choices=("e7", "e8", "f4"))
    ab.add_argument("--out")
    ab.set_defaults(func=cmd_algebra_build)

    ver = _with_format(sub.add_parser("verify", help="check a structure-constant file"))
    ver.add_argument("--in", dest="input", required=True)
    ver.add_argument("--checks", default=",".join(CHECKS))
    ver.add_argument("--backend", choices=("numba", "numpy"))
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    cl = sub.add_parser("classical", help="matrix realizations").add_subparsers(dest="action", required=True)
    cb = _with_format(cl.add_parser("build", help="build, extract and cross-check"))
    cb.add_argument("--series", required=True, type=str.lower, choices=("c", "d", "b"))
    cb.add_argument("--n", required=True, type=int)
    cb.add_argument("--out")
    cb.set_defaults(func=cmd_classical_build)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CodeInputError) as exc:
        print(f"lieforge: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
