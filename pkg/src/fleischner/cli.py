"""Command-line entry point: ``fleischner <subcommand> ...``.

Exit status is 0 when everything checks out, 1 when a verifier or oracle
rejects the result, and 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Sequence

from .construction import construct
from .corpus import NAMES, named, random_class_G
from .drawing import export_drawing
from .errors import ConstructionError, FleischnerError
from .oracle import bonds_via_dual_cycles, cross_check, hamilton_search
from .planar_map import PlaneMultigraph, check_class_G
from .pmg import emit_cycle, emit_edge_list, emit_pmg, parse_cycle, parse_edge_list, read_pmg
from .report import emit_report
from .two_factor import (
    TwoFactor,
    default_two_factor,
    enumerate_perfect_matchings,
    validate_two_factor,
)
from .verify import verify, verify_certificate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

HIGHLIGHT_KEYS = {"x": "X", "m": "M", "chords": "chords", "h": "H", "diamonds": "diamonds"}


class InputError(Exception):
    """Bad command-line input; maps to exit status 2."""


def _read_map(path: str) -> PlaneMultigraph:
    try:
        return read_pmg(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except FleischnerError as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _two_factor(G: PlaneMultigraph, args) -> TwoFactor:
    if getattr(args, "two_factor", None):
        try:
            return validate_two_factor(G, parse_edge_list(_read_text(args.two_factor)))
        except FleischnerError as exc:
            raise InputError(f"{args.two_factor}: {exc}") from None
    method = getattr(args, "method", None)
    try:
        return default_two_factor(G, method)
    except FleischnerError as exc:
        raise InputError(str(exc)) from None


def _require_class(G: PlaneMultigraph, path: str) -> None:
    rep = check_class_G(G)
    if not rep.member:
        raise InputError(f"{path}: not in the class: {'; '.join(rep.failures)}")


def _write(path: str | None, text: str) -> None:
    if path is None:
        return
    Path(path).write_text(text, encoding="utf-8")


# -- subcommands ------------------------------------------------------------


def cmd_construct(args) -> int:
    G = _read_map(args.input)
    _require_class(G, args.input)
    X = _two_factor(G, args)
    try:
        result = construct(G, X, check=False)
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = verify(G, X, result)
    _write(args.out, emit_pmg(result.J))
    _write(args.cycle, emit_cycle(result.H.vertices))
    _write(args.x_out, emit_edge_list(sorted(X.edges)))
    text = emit_report(report, result.metrics)
    _write(args.report, text)
    if args.report is None:
        sys.stdout.write(text)
    for line in report.diagnostics:
        print(line, file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    G = _read_map(args.g)
    J = _read_map(args.j)
    try:
        H = parse_cycle(_read_text(args.h))
    except FleischnerError as exc:
        raise InputError(f"{args.h}: {exc}") from None
    _require_class(G, args.g)
    X = _two_factor(G, args)
    report = verify_certificate(G, X.edges, J, H)
    metrics = {
        "edges_g": G.n_edges,
        "edges_j": J.n_edges,
        "components_x": X.n,
        "max_degree_j": max(len(r) for r in J.rotation.values()),
    }
    sys.stdout.write(emit_report(report, metrics))
    for line in report.diagnostics:
        print(line, file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_gen(args) -> int:
    if args.random:
        if args.n is None:
            raise InputError("--random needs --n")
        try:
            G = random_class_G(args.n, args.seed, allow_multi=args.multi)
        except FleischnerError as exc:
            raise InputError(str(exc)) from None
    else:
        if args.name is None:
            raise InputError(f"give a corpus name ({', '.join(NAMES)}) or --random")
        try:
            G = named(args.name)
        except FleischnerError as exc:
            raise InputError(str(exc)) from None
    text = emit_pmg(G)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = _read_map(args.input)
    try:
        if args.hamilton:
            H = hamilton_search(G)
            print("none" if H is None else emit_cycle(H), end="" if H else "\n")
            return EXIT_OK
        if args.matchings:
            for m in enumerate_perfect_matchings(G, limit=args.limit):
                print(" ".join(map(str, sorted(m.edges))))
            return EXIT_OK
        if args.bonds:
            for b in bonds_via_dual_cycles(G):
                print(" ".join(map(str, sorted(b))))
            return EXIT_OK
        _require_class(G, args.input)
        X = _two_factor(G, args)
        rep = cross_check(G, X)
    except InputError:
        raise
    except FleischnerError as exc:
        raise InputError(str(exc)) from None
    payload = {
        "bonds_agree": rep.bonds_agree,
        "ordering_bonds_listed": rep.ordering_bonds_listed,
        "even_bonds_in_x": rep.even_bonds_in_x,
        "hamilton_found": rep.hamilton_found,
        "hamilton_accepted": rep.hamilton_accepted,
        "n_bonds": rep.n_bonds,
        "passed": rep.passed,
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    for note in rep.notes:
        print(note, file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_export(args) -> int:
    G = _read_map(args.input)
    keys = [k.strip().lower() for k in (args.highlight or "").split(",") if k.strip()]
    unknown = [k for k in keys if k not in HIGHLIGHT_KEYS]
    if unknown:
        raise InputError(f"unknown highlight keys: {', '.join(unknown)}")
    target, highlight = G, None
    if keys:
        _require_class(G, args.input)
        X = _two_factor(G, args)
        try:
            result = construct(G, X)
        except ConstructionError as exc:
            print(f"construction failed: {exc}", file=sys.stderr)
            return EXIT_FAIL
        target = result.J
        chords = sorted(set(result.J.edge_ids) - set(G.edge_ids))
        full = {
            "X": sorted(X.edges),
            "M": sorted(set(G.edge_ids) - X.edges),
            "chords": chords,
            "H": list(result.H.edges),
            "diamonds": [(d.a, d.b, d.c, d.d) for d in result.diamonds],
        }
        highlight = {HIGHLIGHT_KEYS[k]: full[HIGHLIGHT_KEYS[k]] for k in keys}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        text = export_drawing(target, highlight, args.format)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _add_two_factor_options(p: argparse.ArgumentParser, choose: bool = True) -> None:
    if not choose:
        p.add_argument("--two-factor", metavar="FILE", help="file of 2-factor edge ids")
        return
    g = p.add_mutually_exclusive_group()
    g.add_argument("--two-factor", metavar="FILE", help="file of 2-factor edge ids")
    g.add_argument("--min-components", dest="method", action="store_const",
                   const="min-components", help="2-factor with the fewest cycles")
    g.add_argument("--first-matching", dest="method", action="store_const",
                   const="first-matching", help="complement of a maximum matching")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fleischner",
        description="Hamilton cycles in squares of cubic plane graphs via diamond insertion.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build J and a Hamilton cycle H from G")
    p.add_argument("input", help="input .pmg map")
    _add_two_factor_options(p)
    p.add_argument("--out", help="write J as .pmg")
    p.add_argument("--cycle", help="write H as a cycle file")
    p.add_argument("--x-out", help="write the 2-factor edge ids used (input for verify)")
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check an external J and H against G")
    p.add_argument("g")
    p.add_argument("j")
    p.add_argument("h")
    _add_two_factor_options(p, choose=False)
    p.set_defaults(func=cmd_verify, method=None)

    p = sub.add_parser("gen", help="emit a corpus or random map")
    p.add_argument("name", nargs="?", help=f"one of {', '.join(NAMES)}")
    p.add_argument("--random", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--multi", action="store_true", help="allow parallel edges")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force checks on small maps")
    p.add_argument("input")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--hamilton", action="store_true")
    g.add_argument("--matchings", action="store_true")
    g.add_argument("--bonds", action="store_true")
    g.add_argument("--cross-check", action="store_true")
    p.add_argument("--limit", type=int, default=None, help="cap on listed matchings")
    p.add_argument("--two-factor", metavar="FILE")
    p.set_defaults(func=cmd_oracle, method=None)

    p = sub.add_parser("export", help="draw a map as DOT or SVG")
    p.add_argument("input")
    p.add_argument("--format", choices=("dot", "svg"), default="dot")
    p.add_argument("--highlight", help="comma list of x, m, chords, h, diamonds (draws J)")
    _add_two_factor_options(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
