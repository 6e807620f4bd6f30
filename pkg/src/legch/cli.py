"""Command-line interface.  Exit codes: 0 success, 1 input or usage error,
2 flooding failure."""

from __future__ import annotations

import argparse
import os
import sys
from contextlib import redirect_stderr, redirect_stdout

from .algebra import HeightAssignment, StructureError, validate_dga
from .augment import enumerate_augmentations, linearized_differential
from .diagram import area_inequalities, assign_heights, flood
from .fileio import (
    KnotData,
    KnotFileError,
    format_extended,
    load_barcode,
    load_knot,
    render_barcode,
    serialize_barcode_file,
)
from .metrics import check_strong_morse, interleaving_distance
from .persist import Barcode, build_filtered_complex, compute_barcode

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FLOOD_FAILURE = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _FloodFailure(Exception):
    def __init__(self, tiering):
        self.tiering = tiering


def _build_parser() -> _Parser:
    parser = _Parser(prog="legch", description="Persistent contact homology of knot diagrams")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("validate", help="check a knot file")
    p.add_argument("file")

    p = sub.add_parser("augment", help="list the augmentations of a knot file")
    p.add_argument("file")

    p = sub.add_parser("linearize", help="print the linearized differential")
    p.add_argument("file")
    p.add_argument("--aug", type=int, default=0, metavar="I")

    p = sub.add_parser("flood", help="tier the crossings and assign heights")
    p.add_argument("file")

    p = sub.add_parser("barcode", help="compute the barcode of a knot file")
    p.add_argument("file")
    p.add_argument("--aug", type=int, default=0, metavar="I")
    p.add_argument("--heights", choices=("file", "flood"), default=None)
    p.add_argument("--render", choices=("text", "svg"), default=None)

    p = sub.add_parser("distance", help="distance between two barcode files")
    p.add_argument("barcode1")
    p.add_argument("barcode2")

    p = sub.add_parser("morse", help="counting polynomials and the strong Morse check")
    p.add_argument("file")
    p.add_argument("--aug", type=int, default=0, metavar="I")

    return parser


def _names(kd: KnotData, gids) -> str:
    return " ".join(kd.dga.generator(g).name for g in sorted(gids))


def _pick_augmentation(kd: KnotData, index: int):
    augs = enumerate_augmentations(kd.dga)
    if not augs:
        raise KnotFileError("NO_AUGMENTATION", "this differential admits no augmentation")
    if not 0 <= index < len(augs):
        raise KnotFileError(
            "BAD_AUG_INDEX", f"augmentation index {index} out of range 0..{len(augs) - 1}"
        )
    return augs[index]


def _resolve_heights(kd: KnotData, mode: str | None) -> HeightAssignment:
    if mode == "file" or (mode is None and kd.heights is not None):
        if kd.heights is None:
            raise KnotFileError("NO_HEIGHTS", "knot file carries no heights")
        return kd.heights
    tiering = flood(area_inequalities(kd.diagram), kd.diagram.crossings)
    if tiering.status != "success":
        raise _FloodFailure(tiering)
    return assign_heights(tiering)


def _print_flood_failure(kd: KnotData, tiering) -> None:
    for i, tier in enumerate(tiering.tiers, start=1):
        print(f"T{i}: {_names(kd, tier) or '(empty)'}")
    print(f"unassigned: {_names(kd, tiering.unassigned)}")


def _cmd_validate(args) -> int:
    kd = load_knot(args.file)
    report = validate_dga(kd.dga)
    if not report.ok:  # load_knot already rejects these; belt and braces
        for v in report.violations:
            print(f"violation ({v.kind}): {v.detail}")
        return EXIT_ERROR
    heights = "present" if kd.heights is not None else "absent"
    print(
        f"OK: {len(kd.dga)} generators, {len(kd.diagram.patches)} patches, heights {heights}"
    )
    return EXIT_OK


def _cmd_augment(args) -> int:
    kd = load_knot(args.file)
    augs = enumerate_augmentations(kd.dga)
    zero_gens = [g for g in kd.dga.generators if g.grading == 0]
    print(f"augmentations: {len(augs)}")
    for i, eps in enumerate(augs):
        assignments = " ".join(f"{g.name}={eps.values[g.gid]}" for g in zero_gens)
        print(f"aug {i}: {assignments}".rstrip())
    return EXIT_OK


def _cmd_linearize(args) -> int:
    kd = load_knot(args.file)
    eps = _pick_augmentation(kd, args.aug)
    lin = linearized_differential(kd.dga, eps)
    for g in kd.dga.generators:
        col = sorted(lin.columns[g.gid])
        if col:
            rhs = " + ".join(kd.dga.generator(p).name for p in col)
        else:
            rhs = "0"
        print(f"d({g.name}) = {rhs}")
    return EXIT_OK


def _cmd_flood(args) -> int:
    kd = load_knot(args.file)
    tiering = flood(area_inequalities(kd.diagram), kd.diagram.crossings)
    if tiering.status != "success":
        _print_flood_failure(kd, tiering)
        return EXIT_FLOOD_FAILURE
    for i, tier in enumerate(tiering.tiers, start=1):
        print(f"T{i}: {_names(kd, tier) or '(empty)'}")
    h = assign_heights(tiering)
    parts = " ".join(
        f"{g.name}={format_extended(h.of(g.gid))}" for g in kd.dga.generators
    )
    print(f"heights: {parts}")
    return EXIT_OK


def _barcode_for(kd: KnotData, aug_index: int, heights_mode: str | None) -> Barcode:
    eps = _pick_augmentation(kd, aug_index)
    heights = _resolve_heights(kd, heights_mode)
    lin = linearized_differential(kd.dga, eps)
    return compute_barcode(build_filtered_complex(lin, heights))


def _cmd_barcode(args) -> int:
    kd = load_knot(args.file)
    barcode = _barcode_for(kd, args.aug, args.heights)
    if args.render is None:
        sys.stdout.write(serialize_barcode_file(barcode).decode("utf-8"))
    else:
        color = args.render == "text" and _color_enabled()
        sys.stdout.write(render_barcode(barcode, args.render, color=color).decode("utf-8"))
    return EXIT_OK


def _color_enabled() -> bool:
    if os.environ.get("LEGCH_COLOR") == "0":
        return False
    try:
        return sys.stdout.isatty()
    except (AttributeError, ValueError):
        return False


def _cmd_distance(args) -> int:
    b1 = load_barcode(args.barcode1)
    b2 = load_barcode(args.barcode2)
    print(format_extended(interleaving_distance(b1, b2)))
    return EXIT_OK


def _cmd_morse(args) -> int:
    kd = load_knot(args.file)
    barcode = _barcode_for(kd, args.aug, None)
    report = check_strong_morse(kd.dga, barcode)
    print(f"MC = {report.mc}")
    print(f"PC = {report.pc}")
    print(f"R = {report.finite_bars}")
    print(f"strong Morse identity: {'HOLDS' if report.holds else 'FAILS'}")
    return EXIT_OK if report.holds else EXIT_ERROR


_COMMANDS = {
    "validate": _cmd_validate,
    "augment": _cmd_augment,
    "linearize": _cmd_linearize,
    "flood": _cmd_flood,
    "barcode": _cmd_barcode,
    "distance": _cmd_distance,
    "morse": _cmd_morse,
}


def cli_dispatch(argv, stdout=None, stderr=None) -> int:
    """Run one command; streams default to the process streams."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            args = parser.parse_args(argv)
        except _UsageError as exc:
            parser.print_usage(sys.stderr)
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        except SystemExit as exc:  # --help
            return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_ERROR
        try:
            return _COMMANDS[args.command](args)
        except _FloodFailure as exc:
            kd = load_knot(args.file)
            _print_flood_failure(kd, exc.tiering)
            return EXIT_FLOOD_FAILURE
        except (KnotFileError, StructureError, OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))
