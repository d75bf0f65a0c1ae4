"""Command-line interface.

Exit codes: 0 all good, 1 at least one verification case failed, 2 usage or
parse error, 3 enumeration bound exceeded or cache integrity failure.
"""

from __future__ import annotations

import argparse
import sys

from .cache import CacheError, cache_lattice, load_lattice
from .groups import BoundExceededError, quotient_type
from .isolation import is_isolated_brute, is_isolated_psi, is_isolated_structural
from .lattice import all_subgroups, goursat_subgroups, subgroups_of_order
from .literals import (
    LiteralError,
    format_generators,
    format_group_literal,
    parse_group_literal,
    parse_subgroup,
)
from .psi import psi_brute, psi_closed
from .report import write_cases_csv, write_report
from .suites import run_suite, suite_names

EXIT_OK = 0
EXIT_CASE_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abiso",
        description="Exact computations on finite abelian groups: sum of element "
        "orders, subgroup lattices, isolated subgroups, and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_psi = sub.add_parser("psi", help="sum of element orders of a group literal")
    p_psi.add_argument("literal", help="group literal such as 2x4 ('' for trivial)")
    p_psi.add_argument("--brute", action="store_true", help="sum over all elements")
    p_psi.add_argument("--bound", type=int, default=None,
                       help="enumeration bound override for --brute")

    p_sub = sub.add_parser("subgroups", help="list the subgroup lattice")
    p_sub.add_argument("literal")
    p_sub.add_argument("--order", type=int, default=None, help="only subgroups of this order")
    p_sub.add_argument("--backend", choices=("join", "goursat"), default="join")
    p_sub.add_argument("--bound", type=int, default=None, help="full-lattice order bound override")
    p_sub.add_argument("--cache-dir", default=None, help="read/write the lattice cache here")

    p_iso = sub.add_parser("isolated", help="enumerate isolated subgroups")
    p_iso.add_argument("literal")
    p_iso.add_argument("--method", choices=("brute", "psi", "structural"), default="structural")
    p_iso.add_argument("--bound", type=int, default=None, help="full-lattice order bound override")

    p_quot = sub.add_parser("quotient", help="canonical type of group/subgroup")
    p_quot.add_argument("literal")
    p_quot.add_argument("--subgroup", required=True,
                        help="generators, e.g. \"(1,2);(0,2)\" in the canonical layout")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", help="one of: " + ", ".join(suite_names()))
    p_ver.add_argument("--json", default=None, help="write the JSON report here")
    p_ver.add_argument("--order-max", type=int, default=None, help="sweep bound override")
    p_ver.add_argument("--figures", default=None,
                       help="directory for PNG figures and the delimited case dump")
    p_ver.add_argument("--cache-dir", default=None, help="lattice cache directory")
    p_ver.add_argument("--verify-cache", action="store_true",
                       help="insist cached lattices are byte-identical to recomputation")
    return parser


def _echo_layout(G) -> None:
    literal = format_group_literal(G)
    print(f"group\t{literal or '(trivial)'}")
    print(f"layout\t{' '.join(str(q) for q in G.cyclic_orders) or '-'}")
    print(f"order\t{G.order}")


def _cmd_psi(args) -> int:
    G = parse_group_literal(args.literal)
    if args.brute:
        kwargs = {"bound": args.bound} if args.bound else {}
        value = psi_brute(G, **kwargs)
        method = "brute"
    else:
        value = psi_closed(G)
        method = "closed-form"
    _echo_layout(G)
    print(f"psi\t{value}\t({method})")
    return EXIT_OK


def _cmd_subgroups(args) -> int:
    G = parse_group_literal(args.literal)
    if args.backend == "goursat":
        orders = G.cyclic_orders
        left = parse_group_literal(str(orders[0]) if orders else "")
        right = parse_group_literal("x".join(str(q) for q in orders[1:]))
        lattice = goursat_subgroups(left, right, bound=args.bound)
    else:
        lattice = None
        if args.cache_dir:
            lattice = load_lattice(G, args.cache_dir)
        if lattice is None:
            lattice = all_subgroups(G, bound=args.bound)
            if args.cache_dir:
                cache_lattice(G, lattice, args.cache_dir)
    _echo_layout(G)
    members = (
        subgroups_of_order(lattice, args.order) if args.order else list(lattice.subgroups)
    )
    print(f"subgroups\t{len(members)}\t(backend {lattice.backend})")
    print("order\tgenerators")
    for H in members:
        print(f"{H.order}\t{format_generators(H) or '-'}")
    return EXIT_OK


def _cmd_isolated(args) -> int:
    G = parse_group_literal(args.literal)
    decide = {
        "brute": is_isolated_brute,
        "psi": is_isolated_psi,
        "structural": is_isolated_structural,
    }[args.method]
    lattice = all_subgroups(G, bound=args.bound)
    isolated = [H for H in lattice.subgroups if decide(G, H)]
    _echo_layout(G)
    print(f"isolated\t{len(isolated)}\t(method {args.method}, lattice {len(lattice.subgroups)})")
    print("order\tgenerators")
    for H in isolated:
        print(f"{H.order}\t{format_generators(H) or '-'}")
    return EXIT_OK


def _cmd_quotient(args) -> int:
    G = parse_group_literal(args.literal)
    H = parse_subgroup(args.subgroup, G)
    Q = quotient_type(G, H)
    _echo_layout(G)
    print(f"subgroup_order\t{H.order}")
    print(f"quotient\t{format_group_literal(Q) or '(trivial)'}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    params: dict = {}
    if args.order_max is not None:
        params["order_max"] = args.order_max
    if args.cache_dir:
        params["cache_dir"] = args.cache_dir
    if args.verify_cache:
        params["verify_cache"] = True
        params.setdefault("cache_dir", ".abiso-cache")
    report = run_suite(args.suite, params)

    summary = report.summary
    print(f"suite\t{report.suite}")
    failures = report.failures()
    shown = report.cases if summary["total"] <= 50 else failures
    if shown:
        print("group\tsubgroup\tlabel\texpected\tactual\tpass")
        for c in shown:
            gens = (
                ";".join("(" + ",".join(map(str, g)) + ")" for g in c.subgroup_generators)
                if c.subgroup_generators is not None
                else "-"
            )
            print(f"{c.group}\t{gens}\t{c.label or '-'}\t{c.expected}\t{c.actual}\t{c.passed}")
    if summary["total"] > 50 and not failures:
        print(f"(all {summary['total']} cases pass; table elided)")
    print(f"summary\ttotal={summary['total']}\tpassed={summary['passed']}\tfailed={summary['failed']}")

    if args.json:
        print(f"report\t{write_report(report, args.json)}")
    if args.figures:
        from .plots import render_report_figures

        for path in render_report_figures(report, args.figures):
            print(f"figure\t{path}")
        csv_path = write_cases_csv(report, f"{args.figures}/{report.suite}-cases.csv")
        print(f"cases\t{csv_path}")
    return EXIT_OK if not failures else EXIT_CASE_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    commands = {
        "psi": _cmd_psi,
        "subgroups": _cmd_subgroups,
        "isolated": _cmd_isolated,
        "quotient": _cmd_quotient,
        "verify": _cmd_verify,
    }
    try:
        return commands[args.command](args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (LiteralError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
