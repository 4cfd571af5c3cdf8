"""Command-line front end.

    liecharpoly orbit    --type A3 --weight 1,1,1
    liecharpoly weights  --type A2 --highest 0,4
    liecharpoly factor   --type B2 --mu 1,1 [--symbolic | --division]
    liecharpoly charpoly --type A2 --highest 0,4 [--expand]
    liecharpoly verify   --type G2 --rep defining --points 20 --seed 42 [--output report.json]
    liecharpoly sl2      --m 4

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import LieCharPolyError
from .invariant_reduce import latex_names
from .matrix_oracle import check_decomposition, named_rep, verify_points
from .orbital_factor import (a1_in_matrix_entries, assemble, factor_by_division, orbital_factor,
                             sl2_closed_form, sl2_multiplicities)
from .reference_forms import discrepancies
from .root_system import LieType, build, parse_weight
from .weight_system import character_by_orbit
from .weyl_orbit import orbit

SCHEMA = 1


class UsageError(Exception):
    pass


def _dump(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, sort_keys=True)


def _type(args) -> LieType:
    try:
        return LieType.parse(args.type)
    except LieCharPolyError as exc:
        raise UsageError(f"--type {args.type}: {exc}") from None


def _weight(text: str, rank: int, flag: str) -> tuple[int, ...]:
    try:
        return parse_weight(text, rank)
    except ValueError as exc:
        raise UsageError(f"{flag} {text}: {exc}") from None


def cmd_orbit(args) -> tuple[str, int]:
    t = _type(args)
    rs = build(t)
    w = _weight(args.weight, t.rank, "--weight")
    orb = orbit(rs, w)
    if args.format == "json":
        return _dump({"type": str(t), **orb.to_json()}), 0
    if args.format == "latex":
        body = r",\ ".join("(" + ",".join(str(x) for x in e) + ")" for e in orb.elements)
        return rf"O_{{({','.join(map(str, orb.dominant))})}} = \{{{body}\}}", 0
    lines = [f"orbit of {list(orb.dominant)} in {t}: size {orb.size}, stabilizer order {orb.stabilizer_order}"]
    lines += [" ".join(f"{x:3d}" for x in e) for e in orb.elements]
    return "\n".join(lines), 0


def cmd_weights(args) -> tuple[str, int]:
    t = _type(args)
    rs = build(t)
    lam = _weight(args.highest, t.rank, "--highest")
    ch = character_by_orbit(rs, lam)
    if args.format == "json":
        return _dump({"type": str(t), **ch.to_json()}), 0
    if args.format == "latex":
        terms = [rf"{m}\,|O_{{({','.join(map(str, mu))})}}|" for mu, _, m in ch.entries]
        return rf"\dim V = {' + '.join(terms)} = {ch.dimension}", 0
    lines = [f"V({list(lam)}) of {t}, dimension {ch.dimension}", "dominant  orbit  mult"]
    lines += [f"{str(list(mu)):<10}{size:>5}{m:>6}" for mu, size, m in ch.entries]
    return "\n".join(lines), 0


def cmd_factor(args) -> tuple[str, int]:
    t = _type(args)
    rs = build(t)
    mu = _weight(args.mu, t.rank, "--mu")
    if args.division:
        fac = factor_by_division(rs, mu, points=args.points, seed=args.seed)
    else:
        fac = orbital_factor(rs, mu, symbolic=args.symbolic)
    if args.format == "json":
        return _dump(fac.to_json()), 0
    if args.format == "latex":
        return rf"f_{{({','.join(map(str, mu))})}} = {fac.to_latex()}", 0
    return str(fac.poly), 0


def cmd_charpoly(args) -> tuple[str, int]:
    t = _type(args)
    rs = build(t)
    highest = [_weight(h, t.rank, "--highest") for h in args.highest]
    fac = assemble(rs, highest)
    names = latex_names(t)
    if args.format == "json":
        return _dump(fac.to_json(expand=args.expand)), 0
    if args.format == "latex":
        if args.expand:
            return fac.expand().to_latex(names), 0
        parts = []
        for f, m in fac.factors:
            body = rf"\left({f.poly.to_latex(names)}\right)"
            parts.append(body + (f"^{{{m}}}" if m > 1 else ""))
        return " ".join(parts), 0
    if args.expand:
        return str(fac.expand()), 0
    lines = [f"degree {fac.degree} = " + " + ".join(f"{m}*{f.degree}" for f, m in fac.factors)]
    lines += [f"f{list(f.mu)}^{m} = {f.poly}" for f, m in fac.factors]
    return "\n".join(lines), 0


def cmd_verify(args) -> tuple[str, int]:
    t = _type(args)
    try:
        rep = named_rep(t, args.rep)
    except LieCharPolyError as exc:
        raise UsageError(f"--rep {args.rep}: {exc}") from None
    highest = [_weight(h, t.rank, "--highest") for h in args.highest] if args.highest else None
    if highest is None:
        check_decomposition(rep)
    reports = verify_points(rep, args.points, args.seed, highest)
    ok = all(r["passed"] for r in reports)
    report = {"type": str(t), "rep": rep.name, "dimension": rep.dimension, "seed": args.seed,
              "points": args.points, "passed": ok,
              "highest": [list(h) for h in (highest or rep.highest)], "results": reports}
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(_dump(report) + "\n")
    if args.discrepancy_log:
        records = [d.to_json() for d in discrepancies()]
        with open(args.discrepancy_log, "w") as fh:
            fh.write(_dump({"discrepancies": records}) + "\n")
    if args.format == "json":
        return _dump(report), 0 if ok else 1
    lines = [f"{t} {rep.name} (dim {rep.dimension}), seed {args.seed}", "point  result  detail"]
    for r in reports:
        lines.append(f"{r['point']:>5}  {'PASS' if r['passed'] else 'FAIL':<6}  {r.get('detail', '')}".rstrip())
    lines.append(f"{sum(r['passed'] for r in reports)}/{len(reports)} points agree")
    return "\n".join(lines), 0 if ok else 1


def cmd_sl2(args) -> tuple[str, int]:
    if args.m < 0:
        raise UsageError(f"--m {args.m}: highest weight must be nonnegative")
    fac = assemble("A1", [(args.m,)])
    assembled = a1_in_matrix_entries(fac.expand())
    closed = sl2_closed_form(sl2_multiplicities(args.m))
    ok = assembled == closed
    if args.format == "json":
        return _dump({"m": args.m, "assembled": assembled.to_json(), "closed_form": closed.to_json(),
                      "agree": ok}), 0 if ok else 1
    if args.format == "latex":
        return assembled.to_latex(), 0 if ok else 1
    return f"{assembled}\n{'agrees' if ok else 'DIFFERS'} with the closed form", 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liecharpoly",
                                     description="Characteristic polynomials of Lie algebra representations.")
    common = argparse.ArgumentParser(add_help=False)
    # default is resolved per subcommand: parent actions are shared objects, so
    # set_defaults(format=...) on one subparser would leak into the others
    common.add_argument("--format", choices=("json", "latex", "text"), default=None)
    common.add_argument("--output", "-o", help="also write the output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", parents=[common], help="Weyl orbit of a weight")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", required=True, help="comma-separated fundamental coordinates")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("weights", parents=[common], help="dominant weights and multiplicities of V(lambda)")
    p.add_argument("--type", required=True)
    p.add_argument("--highest", required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("factor", parents=[common], help="orbital factor of a dominant weight")
    p.add_argument("--type", required=True)
    p.add_argument("--mu", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true", help="replace nonzero coordinates by l1, l2, ...")
    mode.add_argument("--division", action="store_true", help="obtain the factor by dividing the module polynomial")
    p.add_argument("--points", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("charpoly", parents=[common], help="factored characteristic polynomial of a module")
    p.add_argument("--type", required=True)
    p.add_argument("--highest", required=True, action="append", help="repeat for a direct sum")
    p.add_argument("--expand", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", parents=[common], help="compare with determinants of explicit matrices")
    p.add_argument("--type", required=True)
    p.add_argument("--rep", default="defining", help="defining, adjoint, symK or extK")
    p.add_argument("--highest", action="append", help="override the module decomposition")
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--discrepancy-log", help="write differences from the customary printed forms here")
    p.set_defaults(func=cmd_verify, default_format="text")

    p = sub.add_parser("sl2", parents=[common], help="sl(2) module against the closed product form")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_sl2)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "json")
    try:
        text, code = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except LieCharPolyError as exc:
        print(f"liecharpoly: error: {exc}", file=sys.stderr)
        return 2
    if args.output and args.command != "verify":
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
