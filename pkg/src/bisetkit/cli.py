"""
Command line entry point for bisetkit.

Exit codes: 0 success, 1 validation failure or structure error, 2 parse or
usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable
from importlib.metadata import PackageNotFoundError, version

from pydantic import BaseModel

from .algebra import conj_canonical
from .analysis import (
    approx_kernel,
    conj_classes_bounded,
    equivalent_upto,
    level_actions,
    verify_certificate,
)
from .bisets import WreathBiset, as_wreath, lift_conjugacy, tensor, thurston_endomorphism
from .config import Budget, parse_budget_pairs
from .dynamics import Peripheral, TuningSlot, hubbard_to_gob, identity_slots, mating, tuning
from .errors import BudgetExceededError, ParseError, StructureError
from .formats import EntryKind, emit_biset, emit_entries, parse_word
from .gob import GraphOfBisets, fundamental_biset
from .graphs import pi1_presentation
from .logging import configure_logging, logger, timed
from .models import ConjugacyClasses, EquivalenceVerdict, LevelSummary, ValidationReport
from .models.exports import (
    EntryExport,
    FundamentalBisetExport,
    GobExport,
    KernelExport,
    LiftExport,
    Pi1Export,
    ThurstonExport,
    WreathExport,
)
from .workspace import FIXTURE_LIBRARY, Workspace

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3

SCHEMA_MODELS: dict[str, type[BaseModel]] = {
    model.__name__: model
    for model in (
        ValidationReport,
        EntryExport,
        WreathExport,
        Pi1Export,
        FundamentalBisetExport,
        GobExport,
        LiftExport,
        ThurstonExport,
        LevelSummary,
        EquivalenceVerdict,
        ConjugacyClasses,
        KernelExport,
    )
}


def _resolve_log_level(args: argparse.Namespace) -> str | None:
    log_level = getattr(args, "log_level", None)
    if isinstance(log_level, str) and log_level:
        return log_level
    verbose = getattr(args, "verbose", 0)
    if not isinstance(verbose, int):
        return None
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return None


def _print_json(payload: BaseModel | list[BaseModel] | dict) -> None:
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json")
    elif isinstance(payload, list):
        data = [item.model_dump(mode="json") for item in payload]
    else:
        data = payload
    print(json.dumps(data, ensure_ascii=False, indent=2))


def _budget(args: argparse.Namespace) -> Budget:
    overrides = parse_budget_pairs(",".join(getattr(args, "budget", None) or []))
    return Budget.from_env().with_overrides(overrides)


def _workspace(args: argparse.Namespace) -> Workspace:
    workspace = Workspace()
    for path in getattr(args, "file", None) or []:
        if path == "-":
            workspace.load_text(sys.stdin.read(), "<stdin>")
        else:
            workspace.load_file(path)
    return workspace


def _name(workspace: Workspace, name: str | None, kind: EntryKind) -> str:
    return name if name else workspace.last(kind)


def _wreath(workspace: Workspace, name: str) -> WreathBiset:
    return as_wreath(workspace.get(name, EntryKind.BISET))


def _cmd_parse(args: argparse.Namespace, workspace: Workspace) -> int:
    for path in args.paths:
        if path == "-":
            workspace.load_text(sys.stdin.read(), "<stdin>")
        else:
            workspace.load_file(path)
    if args.emit:
        print(workspace.emit(), end="")
    elif args.json:
        _print_json(
            [EntryExport(name=e.name, kind=e.kind.value, line=e.line) for e in workspace]
        )
    else:
        for entry in workspace:
            print(f"{entry.name}: {entry.kind.value}")
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace, workspace: Workspace) -> int:
    names = args.names or workspace.names()
    if not names:
        raise StructureError("Nothing to validate: give names or files")
    reports = [workspace.validate(name) for name in names]
    if args.json:
        _print_json(reports)
    else:
        for report in reports:
            print(report.summary())
    return EXIT_OK if all(r.valid for r in reports) else EXIT_INVALID


def _cmd_pi1(args: argparse.Namespace, workspace: Workspace) -> int:
    name = _name(workspace, args.name, EntryKind.GOG)
    gog = workspace.get(name, EntryKind.GOG)
    base = args.base or gog.graph.vertices[0]
    presentation = pi1_presentation(gog, base)
    if args.json:
        _print_json(Pi1Export.from_presentation(presentation))
        return EXIT_OK
    print(f"pi1({name}, {base}) = {presentation.group}")
    for relator in presentation.relators:
        print(f"relator {relator}")
    print(f"tree {' '.join(sorted(presentation.tree)) or '-'}")
    for generator, loop in presentation.generator_loops().items():
        print(f"{generator} = {loop.format()}")
    return EXIT_OK


def _basepoints(gob: GraphOfBisets, dagger: str | None, star: str | None) -> tuple[str, str]:
    first = gob.carrier.vertices[0]
    return dagger or gob.lam(first), star or gob.rho(first)


def _cmd_fund_biset(args: argparse.Namespace, workspace: Workspace) -> int:
    name = _name(workspace, args.name, EntryKind.GOB)
    gob = workspace.get(name, EntryKind.GOB)
    dagger, star = _basepoints(gob, args.dagger, args.star)
    result = fundamental_biset(gob, dagger, star, jobs=args.jobs)
    if args.json:
        _print_json(FundamentalBisetExport.from_fundamental(result, gob=name))
    elif args.emit:
        print(emit_biset(f"{name}_fb", result.biset))
    else:
        print(result.biset)
    return EXIT_OK


def _cmd_hubbard2gob(args: argparse.Namespace, workspace: Workspace) -> int:
    name = _name(workspace, args.name, EntryKind.HTREE)
    gob = hubbard_to_gob(workspace.get(name, EntryKind.HTREE))
    if args.json:
        _print_json(GobExport.from_gob(gob))
    else:
        print(emit_entries([(f"{name}_gob", EntryKind.GOB, gob)]), end="")
    return EXIT_OK


def _emit_gob(args: argparse.Namespace, name: str, gob: GraphOfBisets) -> None:
    if args.json:
        _print_json(GobExport.from_gob(gob))
    else:
        print(emit_entries([(name, EntryKind.GOB, gob)]), end="")


def _cmd_mate(args: argparse.Namespace, workspace: Workspace) -> int:
    first = _wreath(workspace, args.first)
    second = _wreath(workspace, args.second)
    # vertex names must differ when a biset is mated with itself
    second_name = args.second if args.second != args.first else f"{args.second}'"
    gob = mating(
        Peripheral(first, parse_word(args.first_word, first.right_group), args.first),
        Peripheral(second, parse_word(args.second_word, second.right_group), second_name),
        args.degree,
    )
    _emit_gob(args, args.name or gob.name, gob)
    return EXIT_OK


def _slot(workspace: Workspace, text: str) -> TuningSlot:
    parts = text.split(":")
    if len(parts) != 3:
        raise StructureError(f"Tuning slot {text!r} must look like BISET:LEFT_WORD:RIGHT_WORD")
    biset = _wreath(workspace, parts[0])
    return TuningSlot(
        biset,
        parse_word(parts[1], biset.left_group),
        parse_word(parts[2], biset.right_group),
    )


def _cmd_tune(args: argparse.Namespace, workspace: Workspace) -> int:
    name = _name(workspace, args.name, EntryKind.GOB)
    gob = workspace.get(name, EntryKind.GOB)
    if args.slot:
        slots = [_slot(workspace, text) for text in args.slot]
    else:
        slots = identity_slots(gob, args.cycle)
    tuned = tuning(gob, args.cycle, slots)
    _emit_gob(args, f"{name}_tuned", tuned)
    return EXIT_OK


def _cmd_tensor(args: argparse.Namespace, workspace: Workspace) -> int:
    product = tensor(
        workspace.get(args.first, EntryKind.BISET), workspace.get(args.second, EntryKind.BISET)
    )
    name = args.name or f"{args.first}_{args.second}"
    if args.json:
        wreath = as_wreath(product)
        _print_json(WreathExport.from_biset(wreath.relabeled(wreath.basis, name)))
    else:
        print(emit_biset(name, product))
    return EXIT_OK


def _cmd_lift(args: argparse.Namespace, workspace: Workspace) -> int:
    biset = _wreath(workspace, args.name)
    conj_class = conj_canonical(parse_word(args.conj_class, biset.right_group))
    terms = lift_conjugacy(biset, conj_class)
    if args.json:
        _print_json(LiftExport.from_terms(biset, str(conj_class), terms))
    else:
        print(" + ".join(str(term) for term in terms))
    return EXIT_OK


def _cmd_endo(args: argparse.Namespace, workspace: Workspace) -> int:
    biset = _wreath(workspace, args.name)
    classes = [conj_canonical(parse_word(text, biset.right_group)) for text in args.conj_class]
    result = thurston_endomorphism(biset, classes)
    export = ThurstonExport.from_matrix(biset, result)
    if args.json:
        _print_json(export)
        return EXIT_OK
    width = max((len(entry) for row in export.matrix for entry in row), default=1)
    print("  ".join(export.classes))
    for label, row in zip(export.classes, export.matrix):
        print(f"{label}: " + " ".join(entry.rjust(width) for entry in row))
    if export.extra:
        print(f"outside the span: {', '.join(export.extra)}")
    return EXIT_OK


def _cmd_levels(args: argparse.Namespace, workspace: Workspace) -> int:
    name = _name(workspace, args.name, EntryKind.BISET)
    levels = level_actions(_wreath(workspace, name), args.depth, _budget(args), args.jobs)
    summaries = [level.summary() for level in levels[1:]]
    if args.json:
        _print_json(summaries)
        return EXIT_OK
    for summary in summaries:
        types = "; ".join(
            f"{g}: {','.join(str(c) for c in cycle)}" for g, cycle in summary.cycle_types.items()
        )
        orbits = ",".join(str(size) for size in summary.orbit_sizes)
        print(f"level {summary.level} ({summary.points} points) orbits {orbits} {types}")
    return EXIT_OK


def _cmd_equiv(args: argparse.Namespace, workspace: Workspace) -> int:
    budget = _budget(args)
    first = _wreath(workspace, args.first)
    second = _wreath(workspace, args.second)
    verdict = equivalent_upto(first, second, args.depth, args.wordlen, budget)
    if args.json:
        _print_json(verdict)
    else:
        print(verdict.summary())
        for direction, images in (("forward", verdict.forward), ("backward", verdict.backward)):
            if images:
                pairs = ", ".join(f"{g} -> {w}" for g, w in images.items())
                print(f"{direction}: {pairs}")
        if verdict.search is not None:
            counts = ", ".join(f"{k}={v}" for k, v in verdict.search.candidates.items())
            print(f"candidates: {counts}; matchings tried: {verdict.search.matchings_tried}")
    if args.verify and verdict.certificate is not None:
        if not verify_certificate(first, second, verdict.certificate, budget):
            print("certificate could not be re-verified", file=sys.stderr)
            return EXIT_INVALID
        if not args.json:
            print("certificate verified")
    return EXIT_OK


def _cmd_kernel(args: argparse.Namespace, workspace: Workspace) -> int:
    biset = _wreath(workspace, args.name)
    kernel = approx_kernel(biset, args.level, args.wordlen, _budget(args))
    export = KernelExport(
        biset=args.name,
        level=args.level,
        word_length=args.wordlen,
        kernel=[str(w) for w in kernel],
    )
    if args.json:
        _print_json(export)
    else:
        print("\n".join(export.kernel))
    return EXIT_OK


def _cmd_classes(args: argparse.Namespace, workspace: Workspace) -> int:
    classes = conj_classes_bounded(_wreath(workspace, args.name), args.radius, _budget(args))
    if args.json:
        _print_json(classes)
        return EXIT_OK
    for representative, size in zip(classes.representatives, classes.sizes):
        print(f"{representative} ({size})")
    print(f"# {classes.disclaimer}")
    return EXIT_OK


def _cmd_schema(args: argparse.Namespace, workspace: Workspace) -> int:
    if args.model:
        if args.model not in SCHEMA_MODELS:
            raise StructureError(
                f"Unknown model {args.model!r}; known: {', '.join(sorted(SCHEMA_MODELS))}"
            )
        _print_json(SCHEMA_MODELS[args.model].model_json_schema())
    else:
        _print_json({name: model.model_json_schema() for name, model in SCHEMA_MODELS.items()})
    return EXIT_OK


def _cmd_fixtures(args: argparse.Namespace, workspace: Workspace) -> int:
    if args.names:
        print(workspace.emit(list(args.names)), end="")
        return EXIT_OK
    for name, (kind, _) in FIXTURE_LIBRARY.items():
        print(f"{name}: {kind.value}")
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, Workspace], int]] = {
    "parse": _cmd_parse,
    "validate": _cmd_validate,
    "pi1": _cmd_pi1,
    "fund-biset": _cmd_fund_biset,
    "hubbard2gob": _cmd_hubbard2gob,
    "mate": _cmd_mate,
    "tune": _cmd_tune,
    "tensor": _cmd_tensor,
    "lift": _cmd_lift,
    "endo": _cmd_endo,
    "levels": _cmd_levels,
    "equiv": _cmd_equiv,
    "kernel": _cmd_kernel,
    "classes": _cmd_classes,
    "schema": _cmd_schema,
    "fixtures": _cmd_fixtures,
}


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-f",
        "--file",
        action="append",
        help="Workspace document to load before running the command ('-' reads stdin).",
    )
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON.")
    common.add_argument(
        "--budget",
        action="append",
        metavar="KEY=VALUE",
        help="Budget override on top of BISETKIT_BUDGET (for example max_depth=10).",
    )
    common.add_argument(
        "--jobs", type=int, default=1, help="Worker threads for per-generator computations."
    )
    return common


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bisetkit",
        description="Bisets, graphs of bisets and their fundamental bisets.",
    )
    parser.add_argument(
        "--log-level",
        choices=["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"],
        help="Enable CLI diagnostics at selected log level (printed to stderr).",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase diagnostics verbosity (-v=INFO, -vv=DEBUG).",
    )
    parser.add_argument(
        "--version",
        action="store_true",
        help="Print the installed bisetkit version and exit.",
    )
    common = _common()
    subparsers = parser.add_subparsers(dest="command")

    parse = subparsers.add_parser("parse", parents=[common], help="Parse workspace documents.")
    parse.add_argument("paths", nargs="*", help="Documents to parse ('-' reads stdin).")
    parse.add_argument("--emit", action="store_true", help="Re-emit the parsed entries.")

    validate = subparsers.add_parser(
        "validate", parents=[common], help="Validate workspace entries."
    )
    validate.add_argument("names", nargs="*", help="Entries to validate (default: all loaded).")

    pi1 = subparsers.add_parser(
        "pi1", parents=[common], help="Fundamental group of a graph of groups."
    )
    pi1.add_argument("name", nargs="?", help="Graph of groups (default: last loaded).")
    pi1.add_argument("--base", help="Base vertex (default: first vertex).")

    fund = subparsers.add_parser(
        "fund-biset", parents=[common], help="Fundamental biset of a graph of bisets."
    )
    fund.add_argument("name", nargs="?", help="Graph of bisets (default: last loaded).")
    fund.add_argument("--dagger", help="Base vertex of the left graph of groups.")
    fund.add_argument("--star", help="Base vertex of the right graph of groups.")
    fund.add_argument("--emit", action="store_true", help="Print a parseable biset entry.")

    hubbard = subparsers.add_parser(
        "hubbard2gob", parents=[common], help="Compile a Hubbard tree into a graph of bisets."
    )
    hubbard.add_argument("name", nargs="?", help="Hubbard tree (default: last loaded).")

    mate = subparsers.add_parser("mate", parents=[common], help="Formal mating of two bisets.")
    mate.add_argument("first")
    mate.add_argument("second")
    mate.add_argument("--first-word", required=True, help="Loop around infinity of the first.")
    mate.add_argument("--second-word", required=True, help="Loop around infinity of the second.")
    mate.add_argument("--degree", type=int, help="Degree of the circle biset.")
    mate.add_argument("--name", help="Name of the emitted graph of bisets.")

    tune = subparsers.add_parser(
        "tune", parents=[common], help="Tune a graph of bisets along a periodic cycle."
    )
    tune.add_argument("name", nargs="?", help="Graph of bisets (default: last loaded).")
    tune.add_argument("--cycle", nargs="+", required=True, help="Periodic carrier vertices.")
    tune.add_argument(
        "--slot",
        action="append",
        metavar="BISET:LEFT_WORD:RIGHT_WORD",
        help="Replacement per cycle vertex, in cycle order (default: identity tuning).",
    )

    tensor_cmd = subparsers.add_parser("tensor", parents=[common], help="Tensor two bisets.")
    tensor_cmd.add_argument("first")
    tensor_cmd.add_argument("second")
    tensor_cmd.add_argument("--name", help="Name of the product.")

    lift = subparsers.add_parser(
        "lift", parents=[common], help="Lift a conjugacy class through a biset."
    )
    lift.add_argument("name")
    lift.add_argument("--class", dest="conj_class", required=True, help="Word of the class.")

    endo = subparsers.add_parser(
        "endo", parents=[common], help="Thurston endomorphism on a span of classes."
    )
    endo.add_argument("name")
    endo.add_argument(
        "--class", dest="conj_class", action="append", required=True, help="Word of a class."
    )

    levels = subparsers.add_parser(
        "levels", parents=[common], help="Cycle types of a self-biset on tree levels."
    )
    levels.add_argument("name", nargs="?", help="Biset (default: last loaded).")
    levels.add_argument("--depth", type=int, required=True)

    equiv = subparsers.add_parser(
        "equiv", parents=[common], help="Bounded combinatorial-equivalence test."
    )
    equiv.add_argument("first")
    equiv.add_argument("second")
    equiv.add_argument("--depth", type=int, required=True)
    equiv.add_argument("--wordlen", type=int, required=True)
    equiv.add_argument("--verify", action="store_true", help="Re-check a certificate.")

    kernel = subparsers.add_parser(
        "kernel", parents=[common], help="Short words acting trivially on a level."
    )
    kernel.add_argument("name")
    kernel.add_argument("--level", type=int, required=True)
    kernel.add_argument("--wordlen", type=int, required=True)

    classes = subparsers.add_parser(
        "classes", parents=[common], help="Bounded conjugacy classes of biset elements."
    )
    classes.add_argument("name")
    classes.add_argument("--radius", type=int, required=True)

    schema = subparsers.add_parser("schema", parents=[common], help="Print JSON schemas.")
    schema.add_argument("model", nargs="?", help="One model name (default: all).")

    fixtures = subparsers.add_parser(
        "fixtures", parents=[common], help="List or emit built-in fixtures."
    )
    fixtures.add_argument("names", nargs="*", help="Fixtures to emit.")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    configure_logging(level=_resolve_log_level(args))

    if args.version:
        try:
            print(version("bisetkit"))
        except PackageNotFoundError:
            print("bisetkit (not installed)")
        return EXIT_OK

    handler = COMMANDS.get(args.command or "")
    if handler is None:
        parser.print_help()
        return EXIT_OK

    try:
        workspace = _workspace(args)
        with timed(args.command):
            return handler(args, workspace)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(
            f"budget exceeded: {exc.budget} (limit {exc.limit}, requested {exc.requested})",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    except (StructureError, ValueError, OSError) as exc:
        logger.debug(f"{args.command} failed: {exc!r}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
