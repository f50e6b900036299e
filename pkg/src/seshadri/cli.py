"""Command-line front end.

Subcommands: builtin, validate, verify, bound, certify, oracle, render.
Machine output (JSON, or the bare rational for ``bound``) goes to stdout
or --out; diagnostics go to stderr.  Exit codes: 0 verified/success,
1 refuted, 2 invalid input, 3 guardrail.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import certify as cert
from .geometry import parse_rational
from .lattice import LatticeSet
from .oracle import (ArityMismatch, GenericPointSet, PrimeTooSmall,
                     SizeGuardrail, MODULAR_DEFAULT_PRIME,
                     system_dimension_exact, system_dimension_modp)
from .render import RenderSpec, render_svg

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INVALID = 2
EXIT_GUARDRAIL = 3

_BUILTINS = {"eckl10": cert.builtin_dissection_eckl10}


class InputError(ValueError):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_dissection(ref: str) -> cert.Dissection:
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        if name not in _BUILTINS:
            raise InputError(f"unknown builtin dissection {name!r}")
        return _BUILTINS[name]()
    try:
        with open(ref, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return cert.dissection_from_json(data)
    except OSError as exc:
        raise InputError(f"cannot read dissection file: {exc}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed dissection file: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seshadri",
        description="Exact certificates for multi-point Seshadri lower bounds "
                    "on the projective plane")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("builtin", help="write a builtin dissection as JSON")
    p.add_argument("--name", required=True)
    p.add_argument("--out")

    p = sub.add_parser("validate", help="structurally validate a dissection")
    p.add_argument("--dissection", required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="verify a target ratio m against a dissection")
    p.add_argument("--dissection", required=True)
    p.add_argument("--m", required=True, type=_rational_arg)
    p.add_argument("--out")

    p = sub.add_parser("bound", help="print the certified ratio of a dissection")
    p.add_argument("--dissection", required=True)
    p.add_argument("--out")

    p = sub.add_parser("certify", help="generate a finite certificate at scale n")
    p.add_argument("--dissection", required=True)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--oracle", choices=["none", "modular", "exact"],
                   default="modular")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")

    p = sub.add_parser("oracle", help="run the rank oracle on a system file")
    p.add_argument("--system", required=True)
    p.add_argument("--mode", choices=["exact", "modular"], default="exact")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--prime", type=int, default=MODULAR_DEFAULT_PRIME)
    p.add_argument("--out")

    p = sub.add_parser("render", help="render a dissection to SVG")
    p.add_argument("--dissection", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--no-labels", action="store_true")

    return parser


def _cmd_builtin(args) -> int:
    if args.name not in _BUILTINS:
        raise InputError(f"unknown builtin dissection {args.name!r}")
    dis = _BUILTINS[args.name]()
    _emit(cert.dump_json(cert.dissection_to_json(dis)), args.out)
    return EXIT_OK


def _cmd_validate(args) -> int:
    dis = _load_dissection(args.dissection)
    report = cert.validate_dissection(dis)
    _emit(cert.dump_json(report.to_json()), args.out)
    return EXIT_OK if report.ok else EXIT_REFUTED


def _cmd_verify(args) -> int:
    dis = _load_dissection(args.dissection)
    if args.m <= 0:
        raise InputError("m must be positive")
    report = cert.verify_asymptotic(dis, args.m)
    _emit(cert.dump_json(report.to_json()), args.out)
    return EXIT_OK if report.overall else EXIT_REFUTED


def _cmd_bound(args) -> int:
    dis = _load_dissection(args.dissection)
    _emit(str(cert.certified_bound(dis)) + "\n", args.out)
    return EXIT_OK


def _cmd_certify(args) -> int:
    dis = _load_dissection(args.dissection)
    if args.n < 1:
        raise InputError("scale n must be a positive integer")
    try:
        c = cert.finite_certificate(dis, args.n, oracle_mode=args.oracle,
                                    seed=args.seed)
    except cert.EmptyPolygonAtScale as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return EXIT_REFUTED
    _emit(cert.dump_json(c.to_json()), args.out)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    try:
        with open(args.system, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        D = LatticeSet.from_json(data["D"])
        spec = tuple(int(m) for m in data["multiplicities"])
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed system file: {exc}") from None
    seed = args.seed if args.seed is not None else int(data.get("seed", 0))
    if args.mode == "exact":
        points = None
        if data.get("points"):
            points = GenericPointSet.explicit(
                [(parse_rational(x), parse_rational(y)) for x, y in data["points"]])
        verdict = system_dimension_exact(D, spec, points=points, seed=seed)
    else:
        verdict = system_dimension_modp(D, spec, seed=seed, prime=args.prime)
    _emit(cert.dump_json(verdict.to_json()), args.out)
    return EXIT_OK if verdict.non_special else EXIT_REFUTED


def _cmd_render(args) -> int:
    dis = _load_dissection(args.dissection)
    spec = RenderSpec(out_path=args.out, size=args.size, labels=not args.no_labels)
    names = cert.BUILTIN_POINT_TABLE if dis.name in _BUILTINS else None
    svg = render_svg(dis, spec, point_names=names)
    _emit(svg, args.out)
    return EXIT_OK


_HANDLERS = {
    "builtin": _cmd_builtin,
    "validate": _cmd_validate,
    "verify": _cmd_verify,
    "bound": _cmd_bound,
    "certify": _cmd_certify,
    "oracle": _cmd_oracle,
    "render": _cmd_render,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return _HANDLERS[args.command](args)
    except SizeGuardrail as exc:
        print(f"guardrail: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except (InputError, cert.InvalidDissection, ArityMismatch, PrimeTooSmall,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
