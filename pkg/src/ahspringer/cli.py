"""Command-line interface.

Subcommands::

    ah-coeffs   print Artin-Hasse coefficients mod p (or exact rationals)
    exp         Artin-Hasse exponential of a nilpotent matrix (JSON in/out)
    log         its inverse on unipotent matrices
    embed       Witt-vector product embedding at a nilpotent matrix
    witt        add | neg | pow-p | order | from-int on Witt vectors
    parabolic   eps | class for block compositions of GL_n
    verify      run named property suites and write a JSON report

Exit codes: 0 success / all properties pass, 1 any property failed,
2 usage error (bad arguments or malformed input files).
"""

from __future__ import annotations

import argparse
import sys

from .groups import nilpotent_order
from .expmaps import ah_exp, ah_log, witt_embed
from .matrices import load_matrix
from .parabolic import Composition, ParabolicGL, eps_p, nilpotence_class
from .series import ah_coeffs_mod_p, ah_rational_coeffs
from .suites import SUITES, SuiteConfig, run_suite
from .witt import (
    witt_add,
    witt_entries_from_string,
    witt_from_integer,
    witt_neg,
    witt_order,
    witt_pow_p,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ahspringer",
        description="Exact Artin-Hasse exponentials, Witt vectors, and "
        "verification suites over small finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("ah-coeffs", help="Artin-Hasse series coefficients")
    coeffs.add_argument("--p", type=int, required=True, help="prime")
    coeffs.add_argument("--n", type=int, required=True, help="truncation degree")
    coeffs.add_argument(
        "--rational", action="store_true", help="print exact rationals instead of mod-p values"
    )

    for name, help_text in (
        ("exp", "Artin-Hasse exponential of a nilpotent matrix"),
        ("log", "inverse Artin-Hasse map of a unipotent matrix"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--matrix", required=True, help="input matrix JSON file")

    embed = sub.add_parser("embed", help="Witt-vector embedding at a nilpotent matrix")
    embed.add_argument("--matrix", required=True, help="input matrix JSON file")
    embed.add_argument("--vector", required=True, help="Witt entries, e.g. 1,0,1")

    witt = sub.add_parser("witt", help="Witt vector arithmetic")
    witt_sub = witt.add_subparsers(dest="witt_command", required=True)
    common = dict(p="prime", m="Witt length (<= 3)", e="extension degree (default 1)")
    for wname in ("add", "neg", "pow-p", "order", "from-int"):
        cmd = witt_sub.add_parser(wname)
        cmd.add_argument("--p", type=int, required=True, help=common["p"])
        cmd.add_argument("--m", type=int, required=True, help=common["m"])
        cmd.add_argument("--e", type=int, default=1, help=common["e"])
        if wname == "add":
            cmd.add_argument("--lhs", required=True, help="left Witt vector, e.g. 1,0")
            cmd.add_argument("--rhs", required=True, help="right Witt vector")
        elif wname == "from-int":
            cmd.add_argument("--int", dest="value", type=int, required=True, help="integer to embed")
        else:
            cmd.add_argument("--vector", required=True, help="Witt vector, e.g. 1,0")

    para = sub.add_parser("parabolic", help="standard parabolics of GL_n")
    para_sub = para.add_subparsers(dest="parabolic_command", required=True)
    eps_cmd = para_sub.add_parser("eps", help="block exponential on the nilradical")
    eps_cmd.add_argument("--comp", required=True, help="block sizes, e.g. 2,1")
    eps_cmd.add_argument("--matrix", required=True, help="input matrix JSON file")
    class_cmd = para_sub.add_parser("class", help="nilpotence class of the unipotent radical")
    class_cmd.add_argument("--comp", required=True, help="block sizes, e.g. 2,1")
    class_cmd.add_argument("--p", type=int, default=2, help="prime (class is independent of it)")

    verify = sub.add_parser("verify", help="run property suites")
    verify.add_argument(
        "--suite", required=True,
        help="comma-separated suite names, or 'all' (known: %s)" % ", ".join(SUITES),
    )
    verify.add_argument("--p", default="2,3,5,7", help="comma-separated primes")
    verify.add_argument("--trials", type=int, default=None, help="override per-suite trial counts")
    verify.add_argument("--seed", type=int, default=0, help="base seed")
    verify.add_argument("--report", default=None, help="write the JSON report here")
    verify.add_argument("--max-dim", type=int, default=8, help="cap matrix dimensions")
    verify.add_argument(
        "--kinds", default="GL,SL,SO,Sp", help="comma-separated group kinds to exercise"
    )
    return parser


def _cmd_ah_coeffs(args) -> int:
    if args.rational:
        series = ah_rational_coeffs(args.p, args.n)
        print(" ".join(str(c) for c in series.coeffs))
    else:
        series = ah_coeffs_mod_p(args.p, args.n)
        print(" ".join(str(c) for c in series.coeffs))
    return 0


def _cmd_exp(args) -> int:
    print(ah_exp(load_matrix(args.matrix)).dumps())
    return 0


def _cmd_log(args) -> int:
    print(ah_log(load_matrix(args.matrix)).dumps())
    return 0


def _cmd_embed(args) -> int:
    x = load_matrix(args.matrix)
    m = nilpotent_order(x)
    w = witt_entries_from_string(x.p, m, args.vector, x.e)
    print(witt_embed(x, w).dumps())
    return 0


def _cmd_witt(args) -> int:
    p, m, e = args.p, args.m, args.e
    if args.witt_command == "add":
        lhs = witt_entries_from_string(p, m, args.lhs, e)
        rhs = witt_entries_from_string(p, m, args.rhs, e)
        print(witt_add(lhs, rhs))
    elif args.witt_command == "neg":
        print(witt_neg(witt_entries_from_string(p, m, args.vector, e)))
    elif args.witt_command == "pow-p":
        print(witt_pow_p(witt_entries_from_string(p, m, args.vector, e)))
    elif args.witt_command == "order":
        print(witt_order(witt_entries_from_string(p, m, args.vector, e)))
    else:  # from-int
        if e != 1:
            raise ValueError("from-int is defined over the base field only (e = 1)")
        print(witt_from_integer(p, m, args.value))
    return 0


def _cmd_parabolic(args) -> int:
    comp = Composition.parse(args.comp)
    if args.parabolic_command == "class":
        print(nilpotence_class(ParabolicGL(comp, args.p)))
        return 0
    x = load_matrix(args.matrix)
    par = ParabolicGL(comp, x.p, x.e)
    print(eps_p(par, x).dumps())
    return 0


def _cmd_verify(args) -> int:
    suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
    primes = tuple(int(s) for s in args.p.split(",") if s.strip())
    kinds = tuple(s.strip() for s in args.kinds.split(",") if s.strip())
    cfg = SuiteConfig(
        suites=suites,
        primes=primes,
        kinds=kinds,
        max_dim=args.max_dim,
        trials=args.trials,
        seed=args.seed,
        report_path=args.report,
    )
    report = run_suite(cfg)
    for record in report.suites:
        status = "PASS" if record["failed"] == 0 else "FAIL"
        print(f"{status} {record['name']}: {record['passed']}/{record['cases']} cases")
    if args.report:
        print(f"report written to {args.report}")
    return 0 if report.failed == 0 else 1


_COMMANDS = {
    "ah-coeffs": _cmd_ah_coeffs,
    "exp": _cmd_exp,
    "log": _cmd_log,
    "embed": _cmd_embed,
    "witt": _cmd_witt,
    "parabolic": _cmd_parabolic,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:  # includes DomainError and file-format errors
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
