"""Command-line front end.

Exit codes: 0 success / verified, 1 a verification failed, 2 usage error,
3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Dict, Iterable, List, Optional

from . import brauer, chern, divisor, quot, symmetric
from .curve import GenusContext
from .errors import ResourceLimitError
from .polynomial import PoincarePolynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

DEFAULT_GENUS_MAX = 3
DEFAULT_DEGREE_MAX = 4
DEFAULT_RANK_MAX = 3


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative: %s" % text)
    return value


# -- betti / poincare --------------------------------------------------------


def _poly(args) -> PoincarePolynomial:
    method = args.method
    if args.space == "sym":
        return quot.sym_poincare(args.genus, args.degree, method, args.max_basis)
    return quot.poincare_quot(args.genus, args.rank, args.degree, method, args.max_basis)


def _emit_poly(poly: PoincarePolynomial, fmt: str, k: Optional[int], out) -> None:
    if k is not None:
        if not 0 <= k <= 2 * poly.dim:
            raise ValueError("degree k=%d out of range 0..%d" % (k, 2 * poly.dim))
        value = poly.betti[k]
        if fmt == "json":
            out.write(dumps({"k": k, "betti": value}) + "\n")
        elif fmt == "csv":
            out.write("k,betti\n%d,%d\n" % (k, value))
        else:
            out.write("b_%d = %d\n" % (k, value))
        return
    if fmt == "json":
        out.write(dumps(poly.to_dict()) + "\n")
    elif fmt == "csv":
        out.write("k,betti\n" + "".join("%d,%d\n" % kv for kv in enumerate(poly.betti)))
    else:
        out.write("dim %d\n" % poly.dim)
        for k, b in enumerate(poly.betti):
            out.write("b_%d = %d\n" % (k, b))


def cmd_betti(args, out) -> int:
    _emit_poly(_poly(args), args.format, args.k, out)
    return EXIT_OK


def cmd_poincare(args, out) -> int:
    poly = _poly(args)
    if args.format == "text":
        out.write("P(t) = %s\n" % poly)
    else:
        _emit_poly(poly, args.format, None, out)
    return EXIT_OK


# -- brauer / pairing --------------------------------------------------------


def _default_rho(g: int) -> int:
    return brauer.rho_range(g)[0]


def cmd_brauer(args, out) -> int:
    rho = _default_rho(args.genus) if args.rho is None else args.rho
    report = brauer.verify_theorem1(args.genus, args.rank, args.degree, rho)
    if args.format == "json":
        out.write(dumps(report) + "\n")
    elif args.format == "csv":
        keys = ["rank_pic", "rank_sym", "rank_quot", "rho", "pass"]
        out.write(",".join(keys) + "\n" + ",".join(str(report[k]).lower() for k in keys) + "\n")
    else:
        out.write(
            "Br'(Pic^d) rank %(rank_pic)d, Br'(Sym^d) rank %(rank_sym)d, Br'(Q) rank %(rank_quot)d (rho=%(rho)d)\n" % report
        )
        out.write("PASS\n" if report["pass"] else "FAIL\n")
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_pairing(args, out) -> int:
    table = divisor.pairing_table(args.genus, args.degree)
    if args.format == "json":
        out.write(dumps(table.to_dict()) + "\n")
    else:
        out.write(table.to_csv())
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _values(pinned: Optional[int], lo: int, hi: int) -> List[int]:
    return [pinned] if pinned is not None else list(range(lo, hi + 1))


def _macdonald(args) -> Iterable[dict]:
    for g in _values(args.genus, 0, DEFAULT_GENUS_MAX):
        for d in _values(args.degree, 1, DEFAULT_DEGREE_MAX):
            report = symmetric.generation_check(g, d, max_basis=args.max_basis)
            orbit = symmetric.sym_betti(g, d, "orbit", args.max_basis)
            closed = symmetric.sym_betti(g, d, "closed")
            yield {
                "suite": "macdonald",
                "g": g,
                "d": d,
                "betti": orbit,
                "generation": report.passed,
                "closed_form": orbit == closed,
                "pass": report.passed and orbit == closed,
            }


def _divisor(args) -> Iterable[dict]:
    for g in _values(args.genus, 0, DEFAULT_GENUS_MAX):
        for d in _values(args.degree, 1, DEFAULT_DEGREE_MAX):
            symmetric.check_basis_size(g, d + 1, args.max_basis)
            ctx = GenusContext(g)
            eq = divisor.verify_eq_D(g, d)
            control = divisor.verify_eq_D(g, d, d + 1)
            props = divisor.verify_prop_classes(g, d)
            table = divisor.pairing_table(g, d)
            basis = divisor.degree2_basis(ctx, d + 1)
            table_ok = all(
                table.rows[k - 1][c] == divisor.expected_entry(ctx, d, k, b)
                for k in range(1, d + 1)
                for c, b in enumerate(basis)
            )
            ok = eq.passed and not control.passed and props.passed and table_ok
            yield {
                "suite": "divisor",
                "g": g,
                "d": d,
                "eq_D": eq.passed,
                "eq_D_rejects_n_plus_1": not control.passed,
                "prop_classes": props.passed,
                "pairing_table": table_ok,
                "pass": ok,
            }


def _chern(args) -> Iterable[dict]:
    for g in _values(args.genus, 0, DEFAULT_GENUS_MAX):
        for d in _values(args.degree, 1, DEFAULT_DEGREE_MAX):
            report = chern.verify_c_identities(g, d)
            yield dict(report, suite="chern", g=g, d=d)


def _pullback(args) -> Iterable[dict]:
    for g in _values(args.genus, 0, DEFAULT_GENUS_MAX):
        for d in _values(args.degree, 2, DEFAULT_DEGREE_MAX):
            if d < 2:
                raise ValueError("pullback needs d >= 2")
            ok = brauer.is_identity(brauer.f_d_pullback_matrix(g, d))
            yield {"suite": "pullback", "g": g, "d": d, "size": len(brauer.f_d_pullback_matrix(g, d)), "pass": ok}


def _theorem1(args) -> Iterable[dict]:
    for g in _values(args.genus, 0, DEFAULT_GENUS_MAX):
        rho = _default_rho(g) if args.rho is None else args.rho
        for r in _values(args.rank, 2, DEFAULT_RANK_MAX):
            for d in _values(args.degree, 2, DEFAULT_DEGREE_MAX):
                t1 = brauer.verify_theorem1(g, r, d, rho)
                delta = brauer.verify_delta_diagram(g, r, d, rho)
                yield dict(t1, suite="theorem1", g=g, r=r, d=d, delta=delta["pass"], **{"pass": t1["pass"] and delta["pass"]})


SUITES: Dict[str, Callable] = {
    "macdonald": _macdonald,
    "divisor": _divisor,
    "chern": _chern,
    "pullback": _pullback,
    "theorem1": _theorem1,
}


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        results.extend(SUITES[name](args))
    ok = all(r["pass"] for r in results)
    if args.format == "json":
        out.write(dumps({"results": results, "pass": ok}) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "g", "r", "d", "pass"])
        for r in results:
            writer.writerow([r["suite"], r["g"], r.get("r", ""), r["d"], str(r["pass"]).lower()])
        out.write(buf.getvalue())
    else:
        for r in results:
            params = " ".join("%s=%s" % (k, r[k]) for k in ("g", "r", "d") if k in r)
            out.write("%s %s %s\n" % ("PASS" if r["pass"] else "FAIL", r["suite"], params))
            if not r["pass"]:
                out.write("  %s\n" % dumps(r))
        out.write("all passed\n" if ok else "FAILURES\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--max-basis", type=nonneg_int, default=symmetric.DEFAULT_MAX_BASIS,
                        help="refuse H^*(X^d) with more basis words than this")

    parser = argparse.ArgumentParser(prog="quotcohom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def space_args(p, rank_required):
        p.add_argument("space", choices=["sym", "quot"])
        p.add_argument("--genus", type=nonneg_int, required=True)
        p.add_argument("--degree", type=nonneg_int, required=True)
        p.add_argument("--rank", type=nonneg_int, default=None)
        p.add_argument("--method", choices=["orbit", "closed"], default="orbit")

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of Sym^d X or Q(r, d)")
    space_args(p, True)
    p.add_argument("--k", type=nonneg_int, default=None, help="a single degree")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("poincare", parents=[common], help="Poincare polynomial of Sym^d X or Q(r, d)")
    space_args(p, True)
    p.set_defaults(func=cmd_poincare, k=None)

    p = sub.add_parser("brauer", parents=[common], help="Brauer ranks of Pic^d, Sym^d and Q(r, d)")
    p.add_argument("--genus", type=nonneg_int, required=True)
    p.add_argument("--rank", type=nonneg_int, required=True)
    p.add_argument("--degree", type=nonneg_int, required=True)
    p.add_argument("--rho", type=nonneg_int, default=None)
    p.set_defaults(func=cmd_brauer)

    p = sub.add_parser("pairing", parents=[common], help="pairing table of the diagonals D_k")
    p.add_argument("--genus", type=nonneg_int, required=True)
    p.add_argument("--degree", type=nonneg_int, required=True)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--genus", type=nonneg_int, default=None)
    p.add_argument("--degree", type=nonneg_int, default=None)
    p.add_argument("--rank", type=nonneg_int, default=None)
    p.add_argument("--rho", type=nonneg_int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "space", None) == "quot" and args.rank is None:
        err.write("error: --rank is required for quot\n")
        return EXIT_USAGE
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except ResourceLimitError as exc:
        err.write("resource limit: %s\n" % exc)
        return EXIT_RESOURCE
    except (ValueError, IndexError) as exc:
        err.write("error: %s\n" % exc)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
