"""Command-line interface.

Subcommands:

* ``spintab table --signature p,q [--mode real|complex] [--format text|json|latex]``
* ``spintab verify (--all | --signature p,q) [--mode ...] [--fixtures DIR]``
* ``spintab orderings --n N [--kind KIND]``
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

from .core import Signature, basis_blades
from .emit import emit
from .goldens import (
    GoldenFixture,
    available_fixtures,
    load_fixture,
    verify_against_golden,
)
from .ordering import OrderingKind, sort_blades
from .table import COMPLEX, REAL, build_table

__all__ = ["main"]


def _parse_signature(text: str) -> Tuple[int, int]:
    try:
        p_text, q_text = text.split(",")
        p, q = int(p_text), int(q_text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"signature must look like 'p,q', got {text!r}"
        ) from None
    if p < 0 or q < 0:
        raise argparse.ArgumentTypeError("signature components must be >= 0")
    return p, q


def _cmd_table(args: argparse.Namespace) -> int:
    p, q = args.signature
    table = build_table(Signature(p, q), args.mode)
    sys.stdout.write(emit(table, args.format))
    return 0


def _verify_one(path_text: str) -> Tuple[str, bool, str]:
    """Builds and verifies one fixture; module-level for process pools."""
    fixture = load_fixture(Path(path_text))
    p, q = fixture.signature
    table = build_table(Signature(p, q), fixture.mode)
    report = verify_against_golden(table, fixture)
    return path_text, report.passed, report.summary()


def _cmd_verify(args: argparse.Namespace) -> int:
    directory = Path(args.fixtures) if args.fixtures else None
    if args.all:
        paths = available_fixtures(directory)
        if not paths:
            print("no fixtures found", file=sys.stderr)
            return 1
    else:
        if args.signature is None:
            print("verify needs --all or --signature", file=sys.stderr)
            return 2
        p, q = args.signature
        from .goldens import fixture_path

        path = fixture_path(p, q, args.mode, directory)
        if not path.exists():
            print(f"no fixture at {path}", file=sys.stderr)
            return 1
        paths = [path]
    texts = [str(p) for p in paths]
    if len(texts) > 1 and args.jobs != 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, texts))
    else:
        results = [_verify_one(t) for t in texts]
    all_passed = True
    for _, passed, summary in results:
        print(summary)
        all_passed = all_passed and passed
    print(f"{'ALL PASS' if all_passed else 'FAILURES'} "
          f"({sum(1 for _, ok, _ in results if ok)}/{len(results)})")
    return 0 if all_passed else 1


def _cmd_orderings(args: argparse.Namespace) -> int:
    sig = Signature(args.n, 0)
    blades = basis_blades(sig)
    kinds = (
        [OrderingKind.parse(args.kind)] if args.kind else OrderingKind.all_kinds()
    )
    for kind in kinds:
        ordered = sort_blades(kind, blades, descending=True)
        listing = ", ".join(str(b) for b in ordered)
        print(f"{kind}: {{{listing}}}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spintab",
        description="Exact spinor data tables for real and complex Clifford algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="build and print one algebra's table")
    table.add_argument("--signature", type=_parse_signature, required=True)
    table.add_argument("--mode", choices=[REAL, COMPLEX], default=REAL)
    table.add_argument("--format", choices=["text", "json", "latex"], default="text")
    table.set_defaults(func=_cmd_table)

    verify = sub.add_parser("verify", help="verify tables against golden fixtures")
    verify.add_argument("--all", action="store_true")
    verify.add_argument("--signature", type=_parse_signature)
    verify.add_argument("--mode", choices=[REAL, COMPLEX], default=REAL)
    verify.add_argument("--fixtures", help="fixture directory (default: bundled)")
    verify.add_argument("--jobs", type=int, default=None,
                        help="worker processes for --all (default: cpu count)")
    verify.set_defaults(func=_cmd_verify)

    orderings = sub.add_parser("orderings", help="print basis blade orderings")
    orderings.add_argument("--n", type=int, required=True)
    orderings.add_argument("--kind", help="one ordering, e.g. InvDeg[Lex]")
    orderings.set_defaults(func=_cmd_orderings)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
