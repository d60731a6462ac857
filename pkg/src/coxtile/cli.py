"""``coxtile`` command line: quotients, embeddings, tilings and verification.

Exit codes: 0 ok, 2 invalid input, 3 J equals S, 4 order is not a Bruhat
refinement, 5 word not reduced, 6 verification found violations.  Errors are
reported on stderr as a single line ``coxtile: error[<kind>]: <detail>``.
"""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

import numpy as np

from .coxeter import CoxeterGroup, GroupSpecError
from .embedding import (EmbeddingTable, build_embedding, verify_E, verify_strong_E,
                        verify_strong_E_reflections)
from .orders import RefinementError, build_poset, refine
from .parabolic import ParabolicError, enumerate_min_reps
from .tiling import NotReducedError, render_json, render_svg, step_frames, tile_word

EXIT_INVALID, EXIT_J_FULL, EXIT_ORDER, EXIT_NOT_REDUCED, EXIT_VIOLATION = 2, 3, 4, 5, 6
SPREADS = {"narrow": np.pi / 2, "regular": np.pi}


class CliError(Exception):
    def __init__(self, code: int, kind: str, detail: str):
        super().__init__(detail)
        self.code = code
        self.kind = kind


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def _parse_letters(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "e"):
        return []
    tokens = re.split(r"[\s,]+", text.replace("s", " ").strip())
    try:
        return [int(tok) for tok in tokens if tok]
    except ValueError:
        raise CliError(EXIT_INVALID, "invalid-word", f"cannot parse word {text!r}") from None


def parse_order_file(text: str) -> list[list[int]]:
    """One element per line as a space-separated word; the first line is the identity."""
    lines = text.split("\n")
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() not in ("", "e"):
        raise CliError(EXIT_ORDER, "bad-order", "first line of an order file must be empty or 'e'")
    return [_parse_letters(line) for line in lines]


def resolve_word(group: CoxeterGroup, text: str) -> list[int]:
    """Inline letters, ``@file``, or the shorthands ``w0``, ``lexmin-w0``, ``c^k``."""
    text = _read_arg(text).strip()
    if text == "w0":
        return group.longest_element().reduced_word("left")
    if text == "lexmin-w0":
        return group.longest_element().reduced_word("right")
    m = re.fullmatch(r"c(?:\^(\d+))?", text)
    if m:
        return list(range(1, group.rank + 1)) * int(m.group(1) or 1)
    return _parse_letters(text)


def _setup_group(args) -> tuple[CoxeterGroup, list[int]]:
    try:
        group = CoxeterGroup(_read_arg(args.group))
        J = _parse_letters(args.J.replace(",", " ")) if args.J else []
        group.check_word(J)
    except (GroupSpecError, ValueError, OSError) as exc:
        raise CliError(EXIT_INVALID, "invalid-spec", str(exc)) from None
    return group, J


def _build_table(args) -> EmbeddingTable:
    group, J = _setup_group(args)
    try:
        cosets = enumerate_min_reps(group, J)
    except ParabolicError as exc:
        raise CliError(EXIT_J_FULL, "J-equals-S", str(exc)) from None
    poset = build_poset(cosets.reps)
    order = args.order
    try:
        if order.startswith("@"):
            strategy = parse_order_file(_read_arg(order))
            try:
                ext = refine(poset, strategy)
            except KeyError as exc:
                raise CliError(EXIT_ORDER, "bad-order", str(exc).strip('"')) from None
            ext.name = order
        else:
            ext = refine(poset, order)
    except RefinementError as exc:
        raise CliError(EXIT_ORDER, "not-a-refinement", str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_ORDER, "bad-order", str(exc)) from None
    return build_embedding(cosets, ext)


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_quotient(args) -> int:
    group, J = _setup_group(args)
    try:
        cosets = enumerate_min_reps(group, J)
    except ParabolicError as exc:
        raise CliError(EXIT_J_FULL, "J-equals-S", str(exc)) from None
    poset = build_poset(cosets.reps)
    _emit(args, poset.to_dot() if args.format == "dot" else poset.to_json() + "\n")
    return 0


def cmd_embed(args) -> int:
    table = _build_table(args)
    if args.output:
        Path(args.output).write_text(table.to_json() + "\n")
        print(f"m = {table.m}")
        for s, img in sorted(table.images.items()):
            print(f"s{s}: {img}")
    else:
        sys.stdout.write(table.to_json() + "\n")
    return 0


def cmd_tile(args) -> int:
    table = _build_table(args)
    word = resolve_word(table.group, args.word)
    try:
        word = table.group.check_word(word)
    except ValueError as exc:
        raise CliError(EXIT_INVALID, "invalid-word", str(exc)) from None
    try:
        doc = tile_word(table, word, spread=SPREADS[args.spread])
    except NotReducedError as exc:
        a, b = exc.transposition
        raise CliError(EXIT_NOT_REDUCED, "not-reduced",
                       f"position={exc.position} letter={exc.letter} transposition={a},{b}") from None
    if args.format == "frames":
        if not args.output:
            raise CliError(EXIT_INVALID, "invalid-output", "--format frames needs -o DIRECTORY")
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for k, svg in enumerate(step_frames(doc)):
            (out / f"frame_{k:04d}.svg").write_text(svg)
    elif args.format == "json":
        _emit(args, render_json(doc) + "\n")
    else:
        _emit(args, render_svg(doc))
    print(f"m = {doc.m}, letters = {len(word)}, tiles = {len(doc.tiles)}", file=sys.stderr)
    return 0


def _parse_scope(text: str | None, group: CoxeterGroup):
    if text is None:
        return "exhaustive" if group.order() <= 100_000 else 1000
    if text == "exhaustive":
        return text
    m = re.fullmatch(r"sampled(?::(\d+))?", text)
    if not m:
        raise CliError(EXIT_INVALID, "invalid-scope", f"unknown scope {text!r}")
    return int(m.group(1) or 1000)


def cmd_verify(args) -> int:
    if args.embedding:
        group, _ = _setup_group(args)
        try:
            table = EmbeddingTable.from_json(Path(args.embedding).read_text(), group)
        except (OSError, ValueError, KeyError) as exc:
            raise CliError(EXIT_INVALID, "invalid-embedding", str(exc)) from None
    else:
        table = _build_table(args)
    scope = _parse_scope(args.scope, table.group)
    failed = False
    for check in (verify_E, verify_strong_E, verify_strong_E_reflections):
        report = check(table, scope, seed=args.seed)
        print(report.summary())
        for v in report.violations[:5]:
            print(f"  witness word={v.word} letter={v.letter} {v.detail}")
        failed |= not report.passed
    if failed:
        raise CliError(EXIT_VIOLATION, "violation", "embedding verification failed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxtile", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        p.add_argument("-g", "--group", required=True, help="group spec, e.g. D5 or A2xA3")
        p.add_argument("-J", default="", help="parabolic generators, e.g. 1,2,3,4")
        if order:
            p.add_argument("--order", default="length-lex-desc",
                           help="length-lex-asc, length-lex-desc or @FILE")
        p.add_argument("-o", "--output", help="output path (stdout by default)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("quotient", help="Bruhat poset on the minimal coset representatives")
    common(p, order=False)
    p.add_argument("-f", "--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("embed", help="generator images of the coset embedding")
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("tile", help="tiling of a reduced word")
    common(p)
    p.add_argument("--word", required=True, help="letters, @FILE, w0, lexmin-w0 or c^k")
    p.add_argument("-f", "--format", choices=["svg", "json", "frames"], default="svg")
    p.add_argument("--spread", choices=sorted(SPREADS), default="narrow",
                   help="edge direction fan (regular may fold for some words)")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("verify", help="check the E and strong E conditions")
    common(p)
    p.add_argument("--embedding", help="embedding JSON to verify instead of building one")
    p.add_argument("--scope", help="exhaustive or sampled[:N]")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"coxtile: error[{exc.kind}]: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
