"""Command-line front end: ``tidykoszul <command> [options]``.

Exit codes: 0 success or certified, 1 counterexample or witness found,
2 inconclusive, 3 usage error.
"""
import argparse
import asyncio
import logging
import os
import sys
import time
from typing import Dict, List, Optional, Tuple

from .client import AsyncEngine, get_engine
from .exceptions import InvalidArgumentError, TidyKoszulError
from .methods import gallery
from .methods.apolarity import module_graded_dimension
from .methods.grobner import hilbert_function
from .methods.polyring import require_invertible, substitute_linear
from .methods.tidyuniversal import parse_permutation
from .parser import format_ideal, format_linear_change, format_polynomial, ideal_hash, parse_dual, \
    parse_ideal, parse_linear_change
from .acceptance import CHECKS, run_checks, select_checks
from .types.orders import parse_order
from .types.reports import RunReport
from .types.ring import IdealPresentation, normalize_field

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_WITNESS, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3

VERDICT_EXIT = {
    "certified": EXIT_OK,
    "universal": EXIT_OK,
    "counterexample": EXIT_WITNESS,
    "not-universal": EXIT_WITNESS,
    "inconclusive": EXIT_INCONCLUSIVE,
    "no-counterexample-found": EXIT_INCONCLUSIVE,
}


def _with_field(I: IdealPresentation, field: Optional[str]) -> IdealPresentation:
    if field is None or normalize_field(field) == I.field:
        return I
    lines = format_ideal(I).splitlines()
    lines[1] = f"field: {normalize_field(field)}"
    J = parse_ideal("\n".join(lines), label=I.label)
    return IdealPresentation(J.ring, J.generators, I.label, I.excluded_characteristics, I.caveat_modulus)


def load_ideal(spec: str, field: Optional[str] = None) -> IdealPresentation:
    """A file path, ``gallery:NAME`` or a bare gallery name."""
    if not spec:
        raise InvalidArgumentError("--ideal is required")
    if spec.startswith("gallery:") or not os.path.exists(spec):
        return gallery.gallery_ideal(spec, normalize_field(field))
    with open(spec, encoding="utf-8") as f:
        I = parse_ideal(f.read(), label=os.path.basename(spec))
    return _with_field(I, field)


def load_module(spec: str, field: Optional[str] = None):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as f:
            return parse_dual(f.read())
    return gallery.gallery_module(spec[len("gallery:"):] if spec.startswith("gallery:") else spec,
                                  normalize_field(field))


def _inputs(I: IdealPresentation) -> Dict[str, str]:
    return {"ideal": I.label or "", "ideal_hash": ideal_hash(I), "field": I.field}


async def cmd_gb(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    I = load_ideal(args.ideal, args.field)
    order = parse_order(args.order, I.variables) if args.order else None
    G = await engine.grobner.reduced_basis(I, order)
    result = {
        "order": (order or parse_order("revlex", I.variables)).describe(I.variables),
        "basis": [format_polynomial(g) for g in G.polynomials],
        "initial_ideal": [format_polynomial(I.ring.monomial(m)) for m in G.initial_ideal()],
        "is_quadratic": G.is_quadratic,
    }
    if I.is_homogeneous:
        result["hilbert_function"] = hilbert_function(I, range(args.degrees + 1))
    return RunReport({"command": "gb", "inputs": _inputs(I), "result": result}), EXIT_OK


async def cmd_universal(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    I = load_ideal(args.ideal, args.field)
    symmetry = [parse_permutation(text, I.variables) for text in args.symmetry] if args.symmetry else None
    report = await engine.universal.check_revlex_universal(list(I.generators), args.mode, symmetry=symmetry)
    return RunReport({
        "command": "universal", "inputs": _inputs(I), "mode": report.mode, "seed": report.seed,
        "verdicts": {"universal": report.verdict}, "witnesses": {"universal": report.witness},
        "result": report.get_dict(),
    }), VERDICT_EXIT[report.verdict]


async def cmd_koszul(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    I = load_ideal(args.ideal, args.field)
    cert = await engine.koszul.strong_koszul_certify(I, args.mode)
    return RunReport({
        "command": "koszul", "inputs": _inputs(I), "mode": cert.mode, "seed": cert.seed,
        "verdicts": {"strongly_koszul": cert.verdict}, "witnesses": {"strongly_koszul": cert.witness},
        "result": cert.get_dict(),
    }), VERDICT_EXIT[cert.verdict]


async def cmd_apolar(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    M = load_module(args.dual, args.field)
    J = await engine.apolarity.apolar_ideal(M)
    s = M.socle_degree
    result = {
        "ideal": format_ideal(J),
        "generators": len(J),
        "hilbert_function": hilbert_function(J, range(s + 2)),
        "module_dimensions": [module_graded_dimension(M, d) for d in range(s + 1)],
    }
    return RunReport({"command": "apolar", "inputs": {"dual": args.dual}, "result": result}), EXIT_OK


async def cmd_obstruction(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    I = load_ideal(args.ideal, args.field)
    report = await engine.apolarity.ert_obstruction(I)
    return RunReport({
        "command": "obstruction", "inputs": _inputs(I),
        "verdicts": {"obstruction": report.conclusion}, "result": report.get_dict(),
    }), EXIT_OK if report.obstructed else EXIT_INCONCLUSIVE


async def cmd_diagonalize(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    I = load_ideal(args.ideal, args.field)
    if len(I) != 1:
        raise InvalidArgumentError("diagonalize expects an ideal file with exactly one quadric")
    mapping, diagonal = await engine.apolarity.diagonalize_quadric(I.generators[0])
    result = {"change": format_linear_change(mapping), "diagonal": format_polynomial(diagonal)}
    return RunReport({"command": "diagonalize", "inputs": _inputs(I), "result": result}), EXIT_OK


async def cmd_change(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    I = load_ideal(args.ideal, args.field)
    with open(args.change, encoding="utf-8") as f:
        mapping = parse_linear_change(f.read(), I.ring)
    require_invertible(I.ring, mapping)
    changed = I.with_generators(substitute_linear(g, mapping) for g in I.generators)
    order = parse_order(args.order, I.variables) if args.order else None
    G = await engine.grobner.reduced_basis(changed, order)
    result = {
        "ideal": format_ideal(changed),
        "basis": [format_polynomial(g) for g in G.polynomials],
        "is_quadratic": G.is_quadratic,
    }
    return RunReport({"command": "change", "inputs": _inputs(I), "result": result}), EXIT_OK


async def cmd_lines(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    L = gallery.lines27()
    if args.drop_plane is not None:
        L = gallery.drop_plane(L, args.drop_plane)
    report = await engine.gallery.verify_lemma_27lines(L)
    report["structure"] = gallery.check_lines_structure(L)
    if args.lines:
        report["noncoplanar_pair"] = gallery.noncoplanar_pair(L, args.lines.split(","))
    return RunReport({
        "command": "lines", "verdicts": {"lemma": report["holds"]}, "result": report,
    }), EXIT_OK if report["holds"] else EXIT_WITNESS


async def cmd_cayley(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    orders = [args.order.split(",")] if args.order else None
    reports = await engine.gallery.cayley_sweep(orders, count=args.random)
    holds = all(r.holds for r in reports)
    return RunReport({
        "command": "cayley", "seed": engine.get_seed(), "verdicts": {"claims": holds},
        "result": {"orders": len(reports), "reports": [r.get_dict() for r in reports]},
    }), EXIT_OK if holds else EXIT_WITNESS


async def cmd_verify_paper(engine: AsyncEngine, args) -> Tuple[RunReport, int]:
    filters = args.filter or []
    if filters and not select_checks(filters):
        logger.warning("no check matches %s", ", ".join(filters))
    results = await run_checks(engine, filters)
    for r in results:
        print(f"{'PASS' if r['passed'] else 'FAIL'}  {r['name']:<24} {r['seconds']:>8.1f}s", file=sys.stderr)
    passed = all(r["passed"] for r in results)
    return RunReport({
        "command": "verify-paper", "seed": engine.get_seed(),
        "verdicts": {r["name"]: r["passed"] for r in results}, "result": {"checks": results},
    }), EXIT_OK if passed else EXIT_WITNESS


COMMANDS = {
    "gb": cmd_gb,
    "universal": cmd_universal,
    "koszul": cmd_koszul,
    "apolar": cmd_apolar,
    "obstruction": cmd_obstruction,
    "diagonalize": cmd_diagonalize,
    "change": cmd_change,
    "lines": cmd_lines,
    "cayley": cmd_cayley,
    "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="QQ or GF(p); applies to gallery entries and overrides files")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled modes (default: 0)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    common.add_argument("--cap", type=int, default=None, help="largest n allowed in exhaustive mode")
    common.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")

    parser = argparse.ArgumentParser(prog="tidykoszul", description="Tidy universal Gröbner bases and strong "
                                     "Koszulness with respect to the variables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--ideal", required=True, help="ideal file, gallery:NAME or a bare gallery name")
        return p

    p = ideal_command("gb", "reduced Gröbner basis and initial ideal")
    p.add_argument("--order", default=None, help="e.g. revlex:x3,x1,x2 (x3 > x1 > x2)")
    p.add_argument("--degrees", type=int, default=4, help="Hilbert function up to this degree")

    p = ideal_command("universal", "check that the generators form a revlex-universal Gröbner basis")
    p.add_argument("--mode", default="exhaustive", help="exhaustive or sample:N")
    p.add_argument("--symmetry", action="append", default=None,
                   help="images of the variables under a symmetry of the generators, e.g. x2,x3,x1; repeatable")

    p = ideal_command("koszul", "certify strong Koszulness with respect to the variables")
    p.add_argument("--mode", default="exhaustive", help="exhaustive, sample:N or theorem")

    p = sub.add_parser("apolar", parents=[common], help="apolar ideal of an inverse system")
    p.add_argument("--dual", required=True, help="dual-form file or a gallery module such as clebsch or pf:5")

    ideal_command("obstruction", "no quadratic Gröbner basis after any linear change")
    ideal_command("diagonalize", "diagonalise a single quadric")

    p = ideal_command("change", "apply a linear change and recompute the reduced Gröbner basis")
    p.add_argument("--change", required=True, help="file with lines 'x -> linear form'")
    p.add_argument("--order", default=None)

    p = sub.add_parser("lines", parents=[common], help="check the 27 lines incidence lemma")
    p.add_argument("--drop-plane", type=int, default=None, help="remove the plane with this index first")
    p.add_argument("--lines", default=None, help="comma-separated lines to search for a non-coplanar pair")

    p = sub.add_parser("cayley", parents=[common], help="leading-term claims for the Cayley plane")
    p.add_argument("--order", default=None, help="27 comma-separated lines, highest first")
    p.add_argument("--random", type=int, default=50, help="random orders added to the structured ones")

    p = sub.add_parser("verify-paper", parents=[common], help="run the reproduction checks")
    p.add_argument("--filter", action="append", default=None, help="tag or check name; repeatable")
    p.add_argument("--list", action="store_true", help="list checks and tags, then exit")

    return parser


def _engine_options(args) -> Dict:
    options = {"seed": args.seed, "jobs": args.jobs}
    if args.field:
        options["field"] = args.field
    if args.cap is not None:
        options["universal_cap"] = args.cap
        options["koszul_cap"] = args.cap
    return options


async def _run(args) -> Tuple[RunReport, int]:
    engine = await get_engine(**_engine_options(args))
    started = time.perf_counter()
    try:
        report, code = await COMMANDS[args.command](engine, args)
    finally:
        await engine.close()
    report.wall_time = round(time.perf_counter() - started, 3)
    return report, code


def _emit(report: RunReport, out: Optional[str]) -> None:
    text = report.to_json()
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        print(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    if args.command == "verify-paper" and args.list:
        for check in CHECKS:
            print(f"{check.name:<24} [{', '.join(check.tags)}] {check.description}")
        return EXIT_OK

    try:
        report, code = asyncio.run(_run(args))
    except (TidyKoszulError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(report, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
