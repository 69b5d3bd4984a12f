"""Command line interface ``xm``.

Exit codes: 0 success, 1 a verification suite failed, 2 unparsable input,
3 a mathematical precondition does not hold, 4 file I/O failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import formats
from .bijection import BijectionError, phi, phi_inverse
from .crystal import classical_f, enumerate_paths
from .energy import RMatrixError, config_sum
from .fermionic import bethe_count, charge_normalized, m_bar, m_level, m_unrestricted
from .qlaurent import QLaurent, format_poly
from .rigged import RiggedError, enumerate_admissible, rc_f
from .shapes import ShapeError, TensorShape, dominant_weights, multiplicity_of, parse_tensor, parse_weight
from .verify import SUITES, VerifyConfig, component, run_suite

MAX_N = 5
MAX_BOXES = 12

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION, EXIT_IO = 0, 1, 2, 3, 4


class ParseError(Exception):
    pass


class Precondition(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def _instance(args) -> tuple[TensorShape, tuple[int, ...] | None]:
    try:
        n = int(args.n)
    except (TypeError, ValueError):
        raise ParseError(f"--n must be an integer, got {args.n!r}")
    if n < 2:
        raise Precondition(f"rank n={n} violates n >= 2")
    try:
        shape = parse_tensor(args.tensor or "", n)
    except ShapeError as exc:
        raise Precondition(str(exc))
    except ValueError as exc:
        raise ParseError(f"--tensor: {exc}")
    lam = None
    if getattr(args, "lam", None) is not None:
        try:
            lam = parse_weight(args.lam, n)
        except ShapeError as exc:
            raise Precondition(str(exc))
        except ValueError as exc:
            raise ParseError(f"--lambda: {exc}")
        if len(lam) > n:
            raise Precondition(f"lambda has {len(lam)} entries but n={n}")
    _check_caps(n, shape.boxes, args.force)
    return shape, lam


def _check_caps(n: int, boxes: int, force: bool):
    if force:
        return
    if n > MAX_N:
        raise Precondition(f"n={n} exceeds the cap n <= {MAX_N}; pass --force to override")
    if boxes > MAX_BOXES:
        raise Precondition(f"{boxes} boxes exceed the cap of {MAX_BOXES}; pass --force to override")


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _print_poly(p: QLaurent, as_json: bool):
    _emit(formats.dumps(p.to_json()) if as_json else format_poly(p))


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args) -> int:
    shape, lam = _instance(args)
    if lam is None:
        raise ParseError("--lambda is required")
    kind = args.kind
    if kind == "level" and args.level is None:
        raise ParseError("--kind level needs --level")
    if args.side == "x":
        poly = config_sum(shape, lam, kind, args.level, normalization=args.normalization)
    else:
        L = multiplicity_of(shape)
        if kind == "classical":
            poly = m_bar(L, lam)
        elif kind == "unrestricted":
            poly = m_unrestricted(L, lam)
        else:
            poly = m_level(L, lam, args.level, normalization=args.normalization)
        if args.normalization == "charge" and kind != "level":
            poly = charge_normalized(poly, L)
    _print_poly(poly, args.json)
    return EXIT_OK


def cmd_bethe(args) -> int:
    if args.sites < 0 or args.down < 0:
        raise Precondition("sites and down must be nonnegative")
    count = bethe_count(args.sites, args.down)
    _emit(formats.dumps({"sites": args.sites, "down": args.down, "count": str(count)}) if args.json else str(count))
    return EXIT_OK


def _read_json(source: str):
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise IOError(f"cannot read {source}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {source}: {exc}")


def cmd_bij(args) -> int:
    data = _read_json(args.input)
    items = data if isinstance(data, list) else [data]
    out = []
    for item in items:
        try:
            if args.direction == "to-rc":
                b = formats.path_from_json(item)
                _check_caps(b.n, b.shape.boxes, args.force)
                out.append(formats.rc_to_json(phi(b)))
            else:
                rc = formats.rc_from_json(item)
                _check_caps(rc.n, rc.L.total_boxes(), args.force)
                shape = parse_tensor(args.tensor, rc.n) if args.tensor else None
                out.append(formats.path_to_json(phi_inverse(rc, shape)))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed object: {exc!r}")
        except ShapeError as exc:
            raise Precondition(str(exc))
        except ValueError as exc:
            raise ParseError(str(exc))
    text = "\n".join(formats.dumps(o) for o in out) + "\n"
    _write(args.output, text)
    return EXIT_OK


def _write(target: str | None, text: str):
    if target in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise IOError(f"cannot write {target}: {exc}")


def cmd_verify(args) -> int:
    suites = tuple(args.suite) if args.suite else SUITES
    for s in suites:
        if s not in SUITES:
            raise ParseError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    if args.tensor is not None:
        args.n = args.n or args.max_n
        shape, _ = _instance(args)
        config = VerifyConfig(suites=suites, shapes=(shape,), jobs=args.jobs, inject_fault=args.inject_fault)
    else:
        _check_caps(args.max_n, args.max_boxes, args.force)
        config = VerifyConfig(
            max_n=args.max_n, max_boxes=args.max_boxes, suites=suites, jobs=args.jobs, inject_fault=args.inject_fault
        )
    results = [run_suite(s, config) for s in suites]
    if args.json:
        _emit(formats.dumps({"ok": all(r.ok for r in results), "suites": [r.to_json() for r in results]}))
    else:
        for r in results:
            _emit(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def crystal_graphs(shape: TensorShape, lam=None):
    """Path and RC crystal graphs over the components of highest weight ``lam`` (all weights if ``None``)."""
    if not shape.factors:
        return ([], []), ([], [])
    weights = [lam] if lam is not None else list(dominant_weights(shape.boxes, shape.n))
    L = multiplicity_of(shape)
    pn, pe, rn, re_ = [], [], [], []
    for w in weights:
        for top in enumerate_paths(shape, w, "classical"):
            nodes, edges = component(top, classical_f, shape.n)
            pn += nodes
            pe += edges
        for top in enumerate_admissible(L, w):
            nodes, edges = component(top, rc_f, shape.n)
            rn += nodes
            re_ += edges
    return (pn, pe), (rn, re_)


def cmd_export(args) -> int:
    shape, lam = _instance(args)
    if lam is not None and sum(lam) != shape.boxes:
        raise Precondition(f"|lambda| = {sum(lam)} but the tensor product has {shape.boxes} boxes")
    if args.component:
        try:
            seed = formats.path_from_json(json.loads(args.component))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"--component: {exc}")
        if seed.shape != shape:
            raise Precondition(f"--component path has shape {seed.shape}, expected {shape}")
        pn, pe = component(seed, classical_f, shape.n)
        rn, re_ = component(phi(seed), rc_f, shape.n)
    else:
        (pn, pe), (rn, re_) = crystal_graphs(shape, lam)
    universes = ["path", "rc"] if args.universe == "both" else [args.universe]
    try:
        os.makedirs(args.out_dir, exist_ok=True)
    except OSError as exc:
        raise IOError(f"cannot create {args.out_dir}: {exc}")
    written = []
    for u in universes:
        if u == "path":
            dot = formats.to_dot("paths", pn, pe, lambda b: formats.dumps(formats.path_to_json(b)))
            dump = [formats.path_to_json(b) for b in pn]
        else:
            dot = formats.to_dot("rigged", rn, re_, lambda r: formats.dumps(formats.rc_to_json(r)))
            dump = [formats.rc_to_json(r) for r in rn]
        for ext, text in (("dot", dot), ("json", json.dumps(dump, indent=1) + "\n")):
            target = os.path.join(args.out_dir, f"{u}.{ext}")
            _write(target, text)
            written.append(target)
    for w in written:
        _emit(w)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _instance_flags(p: argparse.ArgumentParser, need_lambda: bool = True):
    p.add_argument("--n", required=True, help="rank: type A_{n-1}, letters 1..n")
    p.add_argument("--tensor", default="", help='factors "RxS,RxS,..." listed left to right')
    if need_lambda:
        p.add_argument("--lambda", dest="lam", help="weight, comma separated")
    p.add_argument("--force", action="store_true", help="lift the n <= 5 / 12-box caps")


def _compute_flags(p: argparse.ArgumentParser):
    _instance_flags(p)
    p.add_argument("--kind", choices=["classical", "unrestricted", "level"], default="classical")
    p.add_argument("--level", type=int)
    p.add_argument("--normalization", choices=["cocharge", "charge"], default="cocharge")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xm", description="Configuration sums, fermionic formulas and the bijection between them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute X or M")
    p.add_argument("--side", choices=["x", "m"], default="x")
    _compute_flags(p)
    p.set_defaults(func=cmd_compute)
    for side in ("x", "m"):
        p = sub.add_parser(side, help=f"shorthand for compute --side {side}")
        _compute_flags(p)
        p.set_defaults(func=cmd_compute, side=side)

    p = sub.add_parser("bethe", help="Bethe state count")
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--down", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bethe)

    p = sub.add_parser("bij", help="apply the bijection to JSON objects")
    p.add_argument("--direction", choices=["to-rc", "to-path"], required=True)
    p.add_argument("--input", default="-", help="JSON file (object or list); '-' reads stdin")
    p.add_argument("--output", default="-")
    p.add_argument("--tensor", help="factor order for to-path (default: canonical order)")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_bij)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", action="append", help=f"one of {', '.join(SUITES)}; repeatable (default: all)")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-boxes", type=int, default=5)
    p.add_argument("--n", help="rank for --tensor (default: --max-n)")
    p.add_argument("--tensor", help="verify this single tensor shape instead of the grid")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--inject-fault", action="store_true", help="negative control: corrupt one rigging per path")
    p.add_argument("--force", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write DOT crystal graphs and JSON dumps")
    _instance_flags(p)
    p.add_argument("--universe", choices=["path", "rc", "both"], default="both")
    p.add_argument("--component", help="path JSON; export only the component containing it")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"xm: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Precondition, ShapeError, RiggedError, BijectionError, RMatrixError) as exc:
        print(f"xm: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except IOError as exc:
        print(f"xm: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
