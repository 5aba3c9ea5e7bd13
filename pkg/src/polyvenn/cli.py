"""Command-line interface: ``polyvenn gen|validate|render|scd|count|search``."""

from __future__ import annotations

import argparse
import sys

from .layout import layout_naive, layout_scd
from .polyomino import (
    PolyominoError,
    count_column_convex,
    count_column_convex_bruteforce,
    count_fixed_polyominoes,
    count_free_polyominoes,
)
from .pvn import PvnError, parse_pvn, serialize_pvn
from .render import render_ascii, render_svg
from .scd import format_chain, scd_aigner, scd_christmas_tree
from .search import SearchLimits, search_fill_box, search_min_area
from .validation import validate_venn

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_NOT_FOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_gen(args) -> int:
    try:
        if args.method == "naive":
            d = layout_naive(args.n)
        elif args.method == "scd-aigner":
            d = layout_scd(args.n, scd_aigner(args.n))
        else:
            d = layout_scd(args.n, scd_christmas_tree(args.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(serialize_pvn(d), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    report = validate_venn(parse_pvn(_read(args.file)))
    sys.stdout.write(report.render())
    return EXIT_OK if report.overall else EXIT_INVALID


def cmd_render(args) -> int:
    d = parse_pvn(_read(args.file))
    if args.format == "ascii":
        text = render_ascii(d)
    else:
        try:
            text = render_svg(d)
        except ValueError as exc:
            print(f"polyvenn: {exc}", file=sys.stderr)
            return EXIT_INVALID
    _emit(text, args.out)
    return EXIT_OK


def cmd_scd(args) -> int:
    try:
        dec = scd_aigner(args.n) if args.method == "aigner" else scd_christmas_tree(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for chain in dec.chains:
        print(format_chain(chain))
    return EXIT_OK


def cmd_count(args) -> int:
    k = args.polyominoes
    try:
        if args.cls == "fixed":
            value = count_fixed_polyominoes(k)
        elif args.cls == "free":
            value = count_free_polyominoes(k)
        elif args.oracle:
            value = count_column_convex_bruteforce(k)
        else:
            value = count_column_convex(k)
    except PolyominoError as exc:
        raise UsageError(str(exc)) from None
    print(value)
    return EXIT_OK


def _parse_box(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise UsageError(f"--box must look like WxH, got {text!r}") from None


def cmd_search(args) -> int:
    try:
        limits = SearchLimits(nodes=args.nodes, seconds=args.seconds)
        if args.target == "min-area":
            outcome = search_min_area(args.n, limits)
        else:
            if not args.box:
                raise UsageError("--target fill-box needs --box WxH")
            outcome = search_fill_box(args.n, *_parse_box(args.box), limits)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"status {outcome.status}")
    print(f"nodes {outcome.nodes}")
    if outcome.found:
        sys.stdout.write(serialize_pvn(outcome.diagram))
        return EXIT_OK
    return EXIT_NOT_FOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyvenn", description="Venn diagrams from polyomino perimeters.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="construct a diagram and print it as PVN")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--method", choices=["naive", "scd-aigner", "scd-christmas"], required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="check every Venn condition of a PVN file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("render", help="draw a PVN file")
    r.add_argument("file")
    r.add_argument("--format", choices=["ascii", "svg"], required=True)
    r.add_argument("--out")
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("scd", help="print a symmetric chain decomposition")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--method", choices=["aigner", "christmas"], required=True)
    s.set_defaults(func=cmd_scd)

    c = sub.add_parser("count", help="count small polyominoes")
    c.add_argument("--polyominoes", type=int, required=True, metavar="K")
    c.add_argument("--class", dest="cls", choices=["fixed", "free", "column-convex"], required=True)
    c.add_argument("--oracle", action="store_true", help="brute-force column-convex counts")
    c.set_defaults(func=cmd_count)

    q = sub.add_parser("search", help="exhaustive search for optimal diagrams")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--target", choices=["min-area", "fill-box"], required=True)
    q.add_argument("--box", metavar="WxH")
    q.add_argument("--nodes", type=int)
    q.add_argument("--seconds", type=float)
    q.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"polyvenn: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PvnError as exc:
        print(f"polyvenn: {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
