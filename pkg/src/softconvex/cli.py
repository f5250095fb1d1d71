"""Command-line interface.

Exit codes: 0 when the property holds or the operation succeeded, 1 when a
property is refuted, 2 for usage, format or validation errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, TextIO

from . import algebra, analysis
from .core import ValidationError
from .document import DocumentError, dump, format_points, load, serialize, subset_from_names
from .suite import LAW_NAMES, GeneratorConfig, SuiteReport, theorem_suite

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="softconvex", description="Soft-set algebra and convexity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide convexity or concavity of a soft set")
    p.add_argument("--mode", choices=("convex", "concave"), required=True)
    p.add_argument("--oracle", action="store_true", help="use the direct-definition oracle")
    p.add_argument("file")

    p = sub.add_parser("op", help="apply union, intersection or complement")
    p.add_argument("--kind", choices=("union", "intersect", "complement"), required=True)
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("files", nargs="+", metavar="FILE")

    p = sub.add_parser("alpha", help="list the alpha-inclusion points")
    p.add_argument("--set", dest="alpha", required=True, help="comma-separated element names")
    p.add_argument("file")

    p = sub.add_parser("subset", help="decide whether A is a soft subset of B")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("fuzz", help="run the randomized theorem suite")
    p.add_argument("--trials", type=_positive, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=_positive, default=1)
    p.add_argument("--box-side", type=_positive, default=3)
    p.add_argument("--universe", type=_positive, default=2)
    p.add_argument("--law", default="all", choices=("all",) + LAW_NAMES)
    return parser


def format_report(report: SuiteReport) -> str:
    cfg = report.config
    universe = cfg.universe()
    header = (
        f"# fuzz seed={report.master_seed} trials={report.trials} dim={cfg.dim} "
        f"box-side={cfg.box_side} universe={cfg.universe_size}"
    )
    rows = [("law", "expect", "trials", "violations", "status", "first-witness")]
    for r in report.results:
        witness = "-"
        if r.first is not None:
            witness = f"trial {r.first.trial}"
            if r.first.witness is not None:
                witness += ": " + r.first.witness.format(universe)
        rows.append((
            r.name,
            "holds" if r.expect_holds else "refutable",
            str(r.trials),
            str(r.violations),
            r.status,
            witness,
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = [header]
    for row in rows:
        cells = [c.ljust(w) for c, w in zip(row, widths)] + [row[5]]
        lines.append("  ".join(cells).rstrip())
    lines.append("result: " + ("PASS" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"


def _check(args, out: TextIO) -> int:
    s = load(args.file)
    if args.mode == "convex":
        find = analysis.convex_witness_oracle if args.oracle else analysis.convex_witness
    else:
        find = analysis.concave_witness_oracle if args.oracle else analysis.concave_witness
    witness = find(s)
    if witness is None:
        out.write(f"{args.mode}: yes\n")
        return EXIT_OK
    out.write(f"{args.mode}: no\n{witness.format(s.universe)}\n")
    return EXIT_REFUTED


def _op(args, out: TextIO) -> int:
    need = 1 if args.kind == "complement" else 2
    if len(args.files) != need:
        raise UsageError(f"--kind {args.kind} takes {need} file(s), got {len(args.files)}")
    sets = [load(f) for f in args.files]
    if args.kind == "complement":
        result = algebra.complement(sets[0])
    elif args.kind == "union":
        result = algebra.union(*sets)
    else:
        result = algebra.intersection(*sets)
    if args.out:
        dump(result, args.out)
    else:
        out.write(serialize(result))
    return EXIT_OK


def _alpha(args, out: TextIO) -> int:
    s = load(args.file)
    names = [n.strip() for n in args.alpha.split(",") if n.strip()]
    out.write(format_points(algebra.alpha_inclusion(s, subset_from_names(s.universe, names))))
    return EXIT_OK


def _subset(args, out: TextIO) -> int:
    verdict = algebra.is_soft_subset(load(args.a), load(args.b))
    out.write(f"subset: {'yes' if verdict else 'no'}\n")
    return EXIT_OK if verdict else EXIT_REFUTED


def _fuzz(args, out: TextIO) -> int:
    config = GeneratorConfig(dim=args.dim, box_side=args.box_side, universe_size=args.universe)
    laws = None if args.law == "all" else [args.law]
    report = theorem_suite(args.trials, config, args.seed, laws)
    out.write(format_report(report))
    return EXIT_OK if report.passed else EXIT_REFUTED


_COMMANDS = {"check": _check, "op": _op, "alpha": _alpha, "subset": _subset, "fuzz": _fuzz}


def main(argv: Optional[list[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as e:
        err.write(f"softconvex: usage error: {e}\n")
    except DocumentError as e:
        err.write(f"softconvex: invalid document: {e}\n")
    except ValidationError as e:
        err.write(f"softconvex: invalid input: {e}\n")
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_ERROR
    return EXIT_ERROR
