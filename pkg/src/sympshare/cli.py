"""Command-line front end.

Every subcommand prints one JSON report to stdout::

    {"command": [...], "parameters": {...}, "results": {...}, "seed": ..., "version": ...}

Exit codes: 0 ok, 1 bad input, 2 a checked property failed (the report holds
the witness), 3 an enumeration or simulation cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .errors import ParseError, ResourceLimitError, SympShareError
from .field import gf
from .gv import GVQuery, gv_finite, gv_search
from .io import dumps, load_scheme, save_scheme, scheme_to_json
from .qsim import verify_scheme
from .rs import (
    build_insecure,
    build_strong_rs,
    closed_form_report,
    determined_coordinates,
    ms_compare,
    params_of,
    puncture,
)
from .scheme import access_report, classify, iter_subsets, strong_security_check

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION, EXIT_LIMIT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def parse_subset(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(x) for x in text.replace(" ", "").split(",") if x}))
    except ValueError as exc:
        raise ParseError(f"bad subset {text!r}") from exc


def _check_subset(A: tuple[int, ...], n: int) -> None:
    bad = [i for i in A if not 1 <= i <= n]
    if bad:
        raise ParseError(f"participants {bad} outside 1..{n}")


def _report(args: argparse.Namespace, argv: Sequence[str], results: dict, seed=None) -> dict:
    params = {k: v for k, v in vars(args).items() if k not in ("func",) and v is not None}
    return {
        "command": list(argv),
        "parameters": params,
        "results": results,
        "seed": seed,
        "version": __version__,
    }


# -- analyze -------------------------------------------------------------------


def cmd_analyze(args, argv) -> tuple[dict, int]:
    scheme = load_scheme(args.scheme)
    results: dict = {"n": scheme.n, "k": scheme.k, "s": scheme.s, "q": scheme.q}
    code = EXIT_OK
    if args.subset:
        rows = []
        for text in args.subset:
            A = parse_subset(text)
            _check_subset(A, scheme.n)
            c = classify(scheme, A)
            rows.append({"A": list(A), "class": c.kind.value, "ell": c.ell})
        results["subsets"] = rows
    if args.all_subsets or (not args.subset and not args.bounds and not args.strong):
        results["access"] = access_report(scheme, exhaustive=True).to_json()
    elif args.bounds:
        results["access"] = access_report(scheme, exhaustive=False).to_json()
    if args.strong:
        res = strong_security_check(scheme)
        results["strong_security"] = res.to_json()
        if not res.passed:
            code = EXIT_VIOLATION
    return results, code


# -- gv ------------------------------------------------------------------------


def cmd_gv(args, argv) -> tuple[dict, int]:
    query = GVQuery(args.q, args.n, args.k, args.s, args.dt, args.dr)
    res = gv_finite(query)
    results = res.to_json()
    if args.search is not None:
        w = gv_search(query, trials=args.search, seed=args.seed)
        if w is None:
            results["witness"] = None
        else:
            results["witness"] = {
                "trial": w.trial,
                "c_s": [list(r) for r in w.c_s.basis],
                "c_r": [list(r) for r in w.c_r.basis],
                "ds_C_R/C_S": w.ds_rc,
                "ds_C_S_dual/C_R_dual": w.ds_dual,
            }
    return results, EXIT_OK


# -- rs ------------------------------------------------------------------------


def _punct_set(text: str, n: int) -> tuple[int, ...]:
    if "," in text:
        A = parse_subset(text)
    else:
        try:
            A = tuple(range(1, int(text) + 1))
        except ValueError as exc:
            raise ParseError(f"bad --punct value {text!r}") from exc
    _check_subset(A, n)
    return A


def _emit_scheme(scheme, out: str | None) -> dict:
    if out:
        save_scheme(scheme, out)
        return {"written": out, "n": scheme.n, "k": scheme.k, "s": scheme.s, "q": scheme.q}
    return {"scheme": scheme_to_json(scheme)}


def cmd_rs_build(args, argv) -> tuple[dict, int]:
    scheme = build_strong_rs(gf(args.q), args.k, args.s)
    if args.punct:
        scheme = puncture(scheme, _punct_set(args.punct, scheme.n))
    return _emit_scheme(scheme, args.out), EXIT_OK


def cmd_rs_insecure(args, argv) -> tuple[dict, int]:
    scheme = build_insecure(args.q)
    results = _emit_scheme(scheme, args.out)
    A = tuple(range(1, scheme.n // 2 + 2))
    results["example"] = {
        "A": list(A),
        "ell": classify(scheme, A).ell,
        "determined_coordinates": determined_coordinates(scheme, A),
    }
    return results, EXIT_OK


def cmd_rs_verify(args, argv) -> tuple[dict, int]:
    scheme = load_scheme(args.scheme)
    results: dict = {"n": scheme.n, "k": scheme.k, "s": scheme.s, "q": scheme.q}
    code = EXIT_OK
    if args.closed_forms:
        rep = closed_form_report(scheme, params_of(scheme))
        results["closed_forms"] = rep
        if not rep["ok"]:
            code = EXIT_VIOLATION
    if args.strong:
        res = strong_security_check(scheme)
        results["strong_security"] = res.to_json()
        if not res.passed:
            code = EXIT_VIOLATION
    if not (args.closed_forms or args.strong):
        results["access"] = access_report(scheme).to_json()
    return results, code


def cmd_ms_compare(args, argv) -> tuple[dict, int]:
    return ms_compare(args.q, args.k, args.s), EXIT_OK


# -- qverify -------------------------------------------------------------------


def cmd_qverify(args, argv) -> tuple[dict, int]:
    scheme = load_scheme(args.scheme)
    if args.subset:
        subsets = [parse_subset(t) for t in args.subset]
        for A in subsets:
            _check_subset(A, scheme.n)
    else:
        subsets = list(iter_subsets(scheme.n))
    rows = [verify_scheme(scheme, A).to_json() for A in subsets]
    ok = all(r["match"] for r in rows)
    return {"subsets": rows, "all_match": ok}, EXIT_OK if ok else EXIT_VIOLATION


def _qverify_text(results: dict) -> str:
    lines = []
    for r in results["subsets"]:
        A = ",".join(map(str, r["A"])) or "-"
        lines.append(f"{A:<20} {r['class_quantum']:<13} ell={r['ell']} states={r['distinct_states']} "
                     f"{'ok' if r['match'] else 'MISMATCH'}")
    lines.append("all match" if results["all_match"] else "MISMATCH")
    return "\n".join(lines) + "\n"


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sympshare", description="Symplectic secret-sharing analysis")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="access structure of a scheme file")
    a.add_argument("scheme")
    a.add_argument("--all-subsets", action="store_true")
    a.add_argument("--subset", action="append", help="comma-separated 1-based participants; repeatable")
    a.add_argument("--bounds", action="store_true", help="coset-distance and RGSW bounds")
    a.add_argument("--strong", action="store_true", help="run the strong-security check")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("gv", help="finite GV condition and optional random search")
    for name in ("q", "n", "k", "s", "dt", "dr"):
        g.add_argument(f"--{name}", type=int, required=True)
    g.add_argument("--search", type=int, metavar="TRIALS")
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gv)

    r = sub.add_parser("rs", help="Reed-Solomon constructions")
    rsub = r.add_subparsers(dest="rs_command", required=True, parser_class=_Parser)
    b = rsub.add_parser("build")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--punct", help="keep shares 1..N, or a comma-separated list")
    b.add_argument("--out")
    b.set_defaults(func=cmd_rs_build)
    i = rsub.add_parser("insecure")
    i.add_argument("--q", type=int, required=True)
    i.add_argument("--out")
    i.set_defaults(func=cmd_rs_insecure)
    v = rsub.add_parser("verify")
    v.add_argument("scheme")
    v.add_argument("--strong", action="store_true")
    v.add_argument("--closed-forms", action="store_true")
    v.set_defaults(func=cmd_rs_verify)

    m = sub.add_parser("ms", help="McEliece-Sarwate baseline")
    msub = m.add_subparsers(dest="ms_command", required=True, parser_class=_Parser)
    c = msub.add_parser("compare")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c.set_defaults(func=cmd_ms_compare)

    qv = sub.add_parser("qverify", help="check a scheme against the qudit simulator")
    qv.add_argument("scheme")
    grp = qv.add_mutually_exclusive_group()
    grp.add_argument("--subset", action="append")
    grp.add_argument("--all", action="store_true")
    qv.add_argument("--json", action="store_true")
    qv.set_defaults(func=cmd_qverify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        results, code = args.func(args, argv)
        seed = getattr(args, "seed", None)
        report = _report(args, argv, results, seed)
    except ResourceLimitError as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_LIMIT
    except SympShareError as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_INPUT
    if args.command == "qverify" and not args.json:
        sys.stdout.write(_qverify_text(results))
    else:
        sys.stdout.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
