"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a check reports violations,
2 for usage, input or format errors.  ``--json`` switches to machine output
with sorted keys.
"""
import argparse
import os
import sys
from typing import List, Optional

from . import io
from .axioms import D_STATEMENTS, AxiomReport, verify_D_statement, verify_d_axioms, verify_t_axioms
from .errors import NotAMatroid, ValmatError
from .matroid import contract, delete, direct_sum_matroid, dual, generic_extension, is_essential
from .valgroup import fmt

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _threads() -> int:
    """Worker bound from ``VALMAT_THREADS``; every command currently runs in one process."""
    raw = os.environ.get("VALMAT_THREADS", "1")
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"VALMAT_THREADS={raw!r} is not an integer") from None
    if k < 1:
        raise UsageError("VALMAT_THREADS must be at least 1")
    return k


def _emit(args, payload, text: Optional[str] = None, out=None):
    out = out or sys.stdout
    if args.json or text is None:
        out.write(io.dumps(payload))
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _write_output(args, payload):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(io.dumps(payload))
    else:
        sys.stdout.write(io.dumps(payload))


def _load_matroid(path):
    return io.matroid_from_json(io.load_json(path))


def _report_text(rep: AxiomReport) -> List[str]:
    status = "PASS" if rep.passed else "FAIL"
    lines = [f"{rep.name}: {status} ({rep.checked} instances, {len(rep.violations)} violations)"]
    for v in rep.violations:
        vals = ", ".join(str(fmt(x)) if not isinstance(x, (tuple, list)) else str(x) for x in v.values)
        lines.append(f"  {v.axiom} A={{{','.join(map(str, v.A))}}} witness={list(v.witness)} "
                     f"i={fmt(v.index) if v.index is not None else '-'} values=({vals})"
                     + (f" {v.note}" if v.note else ""))
    return lines


# -- subcommands ------------------------------------------------------------------------------

def cmd_check(args) -> int:
    M = _load_matroid(args.file)
    reports = []
    if args.axioms in ("t", "all"):
        reports.append(verify_t_axioms(M))
    if args.axioms in ("d", "all"):
        reports.append(verify_d_axioms(M))
    if args.axioms in ("D", "all"):
        reports.extend(verify_D_statement(M, w) for w in D_STATEMENTS)
    ok = all(r.passed for r in reports)
    payload = {"file": os.path.basename(args.file), "passed": ok,
               "reports": [r.to_json() for r in reports]}
    text = []
    for r in reports:
        text.extend(_report_text(r))
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_realize(args) -> int:
    from .realize import p_local, realize, realize_multi
    data = io.load_json(args.file)
    if args.primes:
        primes = [int(p) for p in args.primes.split(",")]
        X = io.matrix_from_json(data, p_local(primes[0]))
        locs, relevant = realize_multi(X.rows, X.elements, primes, X.relations)
        _write_output(args, io.multi_to_json(locs, relevant))
        return EXIT_OK
    ring = p_local(args.prime) if args.prime else None
    X = io.matrix_from_json(data, ring)
    _write_output(args, io.matroid_to_json(realize(X)))
    return EXIT_OK


def _poly_from_file(path):
    from .polyhedral.lifted import build_P, build_P_multi
    data = io.load_json(path)
    if isinstance(data, dict) and data.get("format") == "valmat-multi/1":
        MZ = io.multi_from_json(data)
        return build_P_multi(MZ), MZ.n
    M = io.matroid_from_json(data)
    return build_P(M), M.n


def cmd_poly(args) -> int:
    from .polyhedral.lifted import check_edge_directions
    P, n = _poly_from_file(args.file)
    payload = {"format": "polyhedron/1", "polyhedron": P.to_json()}
    text = [f"dim {P.dim}: {len(P.vertices)} vertices, {len(P.rays)} rays"]
    code = EXIT_OK
    if args.edges:
        bounded, unbounded = P.edges()
        payload["edges"] = [[[fmt(x) for x in v], [fmt(x) for x in w]] for v, w in bounded]
        payload["unbounded_edges"] = [[[fmt(x) for x in v], [fmt(x) for x in r]] for v, r in unbounded]
        text.append(f"{len(bounded)} bounded edges, {len(unbounded)} unbounded edges")
    if args.faces:
        faces = P.faces()
        payload["faces"] = [[sorted(vs), sorted(rs)] for vs, rs in faces]
        text.append(f"{len(faces)} faces")
    if args.verify_directions:
        bad = check_edge_directions(P, n)
        payload["direction_violations"] = [
            {"from": [fmt(x) for x in v], "to": [fmt(x) for x in w], "direction": [fmt(x) for x in d]}
            for v, w, d in bad]
        text.append(f"direction violations: {len(bad)}")
        for v, w, d in bad:
            text.append(f"  {[fmt(x) for x in v]} -- {[fmt(x) for x in w]} direction {[fmt(x) for x in d]}")
        if bad:
            code = EXIT_VIOLATION
    if args.json:
        _emit(args, payload)
    elif args.edges or args.faces or args.verify_directions:
        _emit(args, payload, "\n".join(text))
    else:
        _emit(args, payload)
    return code


def _matroid_out(args, M) -> int:
    _write_output(args, io.matroid_to_json(M))
    return EXIT_OK


def cmd_dual(args) -> int:
    M = _load_matroid(args.file)
    if not is_essential(M):
        sys.stderr.write("warning: M(E) has free summands; the dual loses them\n")
    return _matroid_out(args, dual(M))


def cmd_minor(args) -> int:
    M = _load_matroid(args.file)
    for a in args.delete or []:
        M = delete(M, a)
    for a in args.contract or []:
        M = contract(M, a)
    return _matroid_out(args, M)


def cmd_sum(args) -> int:
    return _matroid_out(args, direct_sum_matroid(_load_matroid(args.first), _load_matroid(args.second)))


def cmd_genext(args) -> int:
    return _matroid_out(args, generic_extension(_load_matroid(args.file)))


def cmd_trop(args) -> int:
    from .tropical import (TFlagPluecker, TPluecker, check_pluecker_full, check_three_term,
                           check_W, class_parameters, extract_flag, extract_t_vector,
                           matroid_from_pluecker, xi_blocks, xi_embed, check_flag)
    data = io.load_json(args.file)
    if args.action == "check":
        fmt_name = data.get("format") if isinstance(data, dict) else None
        if fmt_name == "tflag/1":
            reps = [check_pluecker_full(TFlagPluecker.from_json(data))]
        else:
            p = TPluecker.from_json(data)
            reps = [check_three_term(p), check_pluecker_full(p)]
        ok = all(r.passed for r in reps)
        text = []
        for r in reps:
            text.extend(_report_text(r))
        _emit(args, {"passed": ok, "reports": [r.to_json() for r in reps]}, "\n".join(text))
        return EXIT_OK if ok else EXIT_VIOLATION
    if args.action == "lift":
        p = TPluecker.from_json(data)
        M = matroid_from_pluecker(p, auto_shift=args.shift)
        _write_output(args, io.matroid_to_json(M))
        return EXIT_OK
    M = io.matroid_from_json(data)
    if args.action == "vector":
        if args.rank is None or args.index is None:
            raise UsageError("trop vector needs --rank and --index")
        _write_output(args, extract_t_vector(M, args.rank, args.index).to_json())
        return EXIT_OK
    if args.action == "flag":
        if args.profile is None:
            raise UsageError("trop flag needs --profile i0,...,in")
        prof = [int(x) for x in args.profile.split(",")]
        flag = extract_flag(M, prof)
        rep = check_flag(flag)
        payload = {"format": "tflag/1", "profile": prof,
                   "flag": TFlagPluecker.from_flag(flag).to_json(), "check": rep.to_json()}
        _write_output(args, payload)
        return EXIT_OK if rep.passed else EXIT_VIOLATION
    if args.action == "embed":
        r, k0, l0 = class_parameters(M)
        k = k0 if args.k is None else args.k
        ell = l0 if args.l is None else args.l
        q = xi_embed(M, r, M.n, k, ell)
        G, Z = xi_blocks(M.n, r, k, ell)
        reps = [check_pluecker_full(q), check_W(q, M.n, G, Z)]
        payload = {"vector": q.to_json(), "params": {"r": r, "k": k, "l": ell},
                   "checks": [x.to_json() for x in reps]}
        _write_output(args, payload)
        return EXIT_OK if all(x.passed for x in reps) else EXIT_VIOLATION
    raise UsageError(f"unknown trop action {args.action!r}")


def cmd_param(args) -> int:
    from . import paramspace as ps
    from .tropical import class_parameters
    if args.action == "word":
        missing = [x for x in ("r", "n", "k", "l") if getattr(args, x) is None]
        if missing:
            raise UsageError("param word needs --r --n --k --l")
        w = ps.build_word(args.r, args.n, args.k, args.l)
        payload = {"letters": list(w.letters), "factors": [list(f) for f in w.factors],
                   "initial_profile": list(ps.index_profile(w, 0)),
                   "final_profile": list(ps.index_profile(w, len(w))),
                   "D": ps.D_bound(args.k, args.l, args.r, args.n),
                   "pair_count": ps.pair_count(args.k, args.l, args.r, args.n)}
        _emit(args, payload, f"w = {w}\nD = {payload['D']}")
        return EXIT_OK
    M = _load_matroid(args.file)
    if args.action == "cone":
        rep = ps.check_cone_C(M, extra=args.extra)
        _emit(args, rep.to_json(), "\n".join(_report_text(rep)))
        return EXIT_OK if rep.passed else EXIT_VIOLATION
    if args.action == "pi":
        if not is_essential(M):
            raise UsageError("the matroid is not essential")
        r, k0, l0 = class_parameters(M)
        k = k0 if args.k is None else args.k
        ell = l0 if args.l is None else args.l
        point = ps.project_pi(M, r, M.n, k, ell)
        rep = ps.check_ZDw(point)
        payload = {"point": point.to_json(), "check": rep.to_json()}
        _write_output(args, payload)
        return EXIT_OK if rep.passed else EXIT_VIOLATION
    raise UsageError(f"unknown param action {args.action!r}")


def cmd_enumerate(args) -> int:
    from .enumerate import enumerate_matroids
    count = recount = 0
    tables = []
    for M in enumerate_matroids(args.n, args.flavor, args.max_len, args.max_summands):
        count += 1
        recount += verify_d_axioms(M).passed
        if args.list:
            tables.append(io.matroid_to_json(M))
    payload = {"n": args.n, "max_len": args.max_len, "max_summands": args.max_summands,
               "count": count, "d_verifier_count": recount}
    if args.list:
        payload["tables"] = tables
    _emit(args, payload, f"{count} tables ({recount} confirmed by the d-verifier)")
    return EXIT_OK if count == recount else EXIT_VIOLATION


# -- parser -----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="valmat", description="Matroids over valuation rings.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("check", cmd_check, "verify the axioms of a valmat/1 table")
    p.add_argument("file")
    p.add_argument("--axioms", choices=["t", "d", "D", "all"], default="t")

    p = add("realize", cmd_realize, "matroid of a valmatrix/1 presentation")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--prime", type=int)
    g.add_argument("--primes", help="comma-separated primes for the multi-prime table")
    p.add_argument("-o", "--output")

    p = add("poly", cmd_poly, "the lifted polyhedron of a table")
    p.add_argument("file")
    p.add_argument("--edges", action="store_true")
    p.add_argument("--faces", action="store_true")
    p.add_argument("--verify-directions", action="store_true")

    for name, func, text in (("dual", cmd_dual, "dual matroid"),
                             ("genext", cmd_genext, "generic extension")):
        p = add(name, func, text)
        p.add_argument("file")
        p.add_argument("-o", "--output")

    p = add("minor", cmd_minor, "delete or contract elements (by label)")
    p.add_argument("file")
    p.add_argument("--delete", type=int, action="append")
    p.add_argument("--contract", type=int, action="append")
    p.add_argument("-o", "--output")

    p = add("sum", cmd_sum, "direct sum of two tables")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output")

    p = add("trop", cmd_trop, "tropical vectors, flags and embeddings")
    p.add_argument("action", choices=["check", "lift", "vector", "flag", "embed"])
    p.add_argument("file")
    p.add_argument("--rank", type=int)
    p.add_argument("--index", type=int)
    p.add_argument("--profile")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--shift", action="store_true", help="normalise the minimum to zero before lifting")
    p.add_argument("-o", "--output")

    p = add("param", cmd_param, "word, flag sequence and cone checks")
    p.add_argument("action", choices=["word", "pi", "cone"])
    p.add_argument("file", nargs="?")
    for x in ("r", "n", "k", "l"):
        p.add_argument(f"--{x}", type=int)
    p.add_argument("--extra", action="store_true", help="include the two optional cone families")
    p.add_argument("-o", "--output")

    p = add("enumerate", cmd_enumerate, "count small tables satisfying the axioms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-len", type=int, default=1)
    p.add_argument("--max-summands", type=int, default=2)
    p.add_argument("--flavor", choices=["int", "rat"], default="int")
    p.add_argument("--list", action="store_true", help="include every table in the output")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "param" and args.action != "word" and not args.file:
        sys.stderr.write("valmat: param pi/cone needs a file\n")
        return EXIT_USAGE
    try:
        _threads()
        return args.func(args)
    except NotAMatroid as exc:
        sys.stderr.write(f"valmat: {exc}\n")
        return EXIT_VIOLATION
    except (UsageError, ValmatError, OSError, KeyError, ValueError) as exc:
        sys.stderr.write(f"valmat: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
