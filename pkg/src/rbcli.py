"""
rbcli.py
========

Command line front end of rbident.

Subcommands
===========

* ``check``      evaluate an identity on a model over a sampling plan
* ``solve``      identity space of a model on the monomial basis of a degree
* ``decompose``  write an identity as a combination of consequences of others
* ``repro``      run a reproduction report
* ``models``     list the model spec strings

Usage example
=============

.. code-block:: console

    python shell.py check --identity f4 --model seq:N=6 --samples 200 --seed 42
    python shell.py check --identity f5plus --model poly:mul=star,k=2,n=0 --grid 4
    python shell.py solve --degree 4 --symmetry anticomm --model seq:N=6
    python shell.py repro table1 --format json

Exit code 0 means holds / match / success, 1 means fails / mismatch / not in
span and 2 means a usage, parse or model error.
"""

# Global imports
import argparse
import pathlib
import sys
from typing import List, Optional, Sequence, Tuple

# 3rd party imports
import colorama
import configargparse
from loguru import logger

# Local imports
import freeterm
import idspace
import models
import param
import repro
import verify
from rbcommon import RbidentError, colored, configure_logging, to_json, write_output
from verify import SamplingPlan

OK = 0
FAILED = 1
USAGE = 2


# -----------------------------------------------------------------------------
def _error(msg: str, use_color: bool = True) -> None:
    """Print an error message in red on stderr."""
    print(colored(msg, "LIGHTRED_EX", use_color), file=sys.stderr)


# -----------------------------------------------------------------------------
def _output_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument("--output", help="write the result to this file instead of stdout", default=None)
    return common


# -----------------------------------------------------------------------------
def _identity_options(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--identity", help="builtin identity name, e.g. f4, rcom, tortkara")
    source.add_argument("--file", help="DSL file, the last definition is the target")
    source.add_argument("--text", help="inline DSL expression or definitions")
    parser.add_argument(
        "--kind", choices=freeterm.KINDS, default=None, help="evaluate as plain, lie or jordan words"
    )


# -----------------------------------------------------------------------------
def build_parser() -> configargparse.ArgParser:
    """Top level parser with one subparser per command."""
    parser = configargparse.ArgParser(prog="rbident", description="Identities of Rota-Baxter derived algebras")
    parser.add_argument("-c", "--config", is_config_file=True, help="config file with default option values")
    parser.add_argument(
        "--threads", type=int, env_var="RBIDENT_THREADS", default=None, help="number of evaluation threads"
    )
    parser.add_argument("--logfile", help="write log to file", default=None)
    parser.add_argument(
        "--loglevel", help="loglevel (CRITICAL, ERROR, WARNING, INFO, DEBUG)", default="WARNING"
    )
    parser.add_argument("--nocolor", help="disable color", action="store_true", default=False)

    common = _output_options()
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common], help="evaluate an identity on a model")
    _identity_options(check)
    check.add_argument("--model", default="seq:N=6", help="model spec, see the models command")
    check.add_argument("--grid", type=int, default=None, help="monomial grid with exponents up to GRID")
    check.add_argument("--min-exp", type=int, default=0, help="smallest grid exponent")
    check.add_argument("--divided", action="store_true", default=False, help="grid of divided powers x^i/i!")
    check.add_argument("--samples", type=int, default=None, help="number of random samples")
    check.add_argument("--seed", type=int, default=None, help="random seed (default 42)")
    check.add_argument("--bound", type=int, default=None, help="random entries in -BOUND..BOUND")
    check.add_argument("--search", action="store_true", default=False, help="search for a counterexample")

    solve = commands.add_parser("solve", parents=[common], help="identity space on a monomial basis")
    solve.add_argument("--degree", type=int, required=True, help="degree of the monomial basis")
    solve.add_argument("--symmetry", choices=tuple(idspace.SYMMETRIES), default="none", help="basis symmetry")
    solve.add_argument("--model", default="seq:N=6", help="model spec, see the models command")
    solve.add_argument("--seed", type=int, default=None, help="random seed (default 42)")
    solve.add_argument("--export-csv", default=None, help="write the kernel basis as CSV")
    solve.add_argument("--export-matrix", default=None, help="write the reduced evaluation matrix as CSV")

    decompose = commands.add_parser("decompose", parents=[common], help="decompose an identity")
    _identity_options(decompose)
    decompose.add_argument(
        "--span", action="append", required=True, help="builtin identity generating the span (repeatable)"
    )
    decompose.add_argument("--symmetry", choices=tuple(idspace.SYMMETRIES), default="none", help="normal form")
    decompose.add_argument("--model", default=None, help="allow a residual in this model's identity space")
    decompose.add_argument("--seed", type=int, default=None, help="random seed (default 42)")

    report = commands.add_parser("repro", parents=[common], help="run a reproduction report")
    report.add_argument("report", choices=tuple(repro.REPORTS) + ("all",), help="report name")

    commands.add_parser("models", parents=[common], help="list model spec strings")
    return parser


# -----------------------------------------------------------------------------
def load_identity(args) -> Tuple[str, freeterm.FreePoly]:
    """Name and expansion of the identity given by --identity, --file or --text.

    :raises RbidentError: unknown name or malformed DSL
    """
    if args.identity:
        return args.identity, freeterm.builtin(args.identity, args.kind)
    if args.file:
        text = pathlib.Path(args.file).read_text(encoding="utf-8")
    else:
        text = args.text
    e = freeterm.parse(text)
    name = e.name or "expression"
    return name, freeterm.expand(e, args.kind or freeterm.natural_kind(e))


# -----------------------------------------------------------------------------
def _plan(args, model: models.Model) -> SamplingPlan:
    bound = args.bound if args.bound is not None else param.config.getint("verify", "bound")
    if args.grid is not None:
        return SamplingPlan.grid(args.grid, args.min_exp, divided=args.divided)
    if args.samples is not None:
        return SamplingPlan.random(args.samples, param.seed, bound)
    return verify.default_plan(model)


# -----------------------------------------------------------------------------
def cmd_check(args) -> Tuple[int, dict, List[str]]:
    name, p = load_identity(args)
    model = models.parse_model_spec(args.model)
    result = {"command": "check", "identity": name, "kind": p.kind, "model": model.spec}
    if args.search:
        hit = verify.find_counterexample(p, model, seed=param.seed)
        if hit is None:
            result["search"] = {"status": "none"}
            return OK, result, [f"{name} on {model.spec}: no counterexample within the budget"]
        witness = {freeterm.var_name(i): model.serialize(v) for i, v in enumerate(hit[0], 1)}
        result["search"] = {"status": "found", "witness": witness, "value": model.serialize(hit[1])}
        lines = [f"{name} on {model.spec}: counterexample"]
        lines += [f"  {var} = {value}" for var, value in witness.items()]
        lines.append(f"  value = {model.serialize(hit[1])}")
        return FAILED, result, lines

    verdict = verify.check_identity(p, model, _plan(args, model))
    result["verdict"] = verdict.to_json()
    if model.carrier == models.POLY:
        result["evidence_bound"] = verify.evidence_bound(p, model)
    status = colored(verdict.status, "GREEN" if verdict.holds else "LIGHTRED_EX", not args.nocolor)
    lines = [f"{name} on {model.spec}: {status} ({verdict.samples} samples, {verdict.plan}, {verdict.grade})"]
    if not verdict.holds:
        lines += [f"  {var} = {value}" for var, value in verdict.witness_text.items()]
        lines.append(f"  value = {verdict.value_text}")
    return (OK if verdict.holds else FAILED), result, lines


# -----------------------------------------------------------------------------
def cmd_solve(args) -> Tuple[int, dict, List[str]]:
    model = models.parse_model_spec(args.model)
    basis = idspace.enumerate_basis(args.degree, args.symmetry)
    space = idspace.identity_space(basis, model, seed=param.seed)
    if args.export_csv:
        pathlib.Path(args.export_csv).write_text(space.kernel.to_csv(basis.labels()), encoding="utf-8")
        logger.info(f"wrote {args.export_csv}")
    if args.export_matrix:
        pathlib.Path(args.export_matrix).write_text(space.matrix.to_csv(), encoding="utf-8")
        logger.info(f"wrote {args.export_matrix}")

    result = {"command": "solve", **space.to_json()}
    lines = [
        f"degree {args.degree} {args.symmetry} basis of {len(basis)} monomials on {model.spec}",
        f"rank {space.kernel.rank}, kernel dimension {space.dimension}, {space.samples} samples",
    ]
    if space.kernel.free:
        lines.append("free: " + ", ".join(f"λ{f + 1}" for f in space.kernel.free))
    lines += space.kernel.relations_text()
    lines += [f"identity: {p.to_dsl()}" for p in space.identities()]
    return OK, result, lines


# -----------------------------------------------------------------------------
def cmd_decompose(args) -> Tuple[int, dict, List[str]]:
    name, target = load_identity(args)
    if not target.is_homogeneous():
        raise RbidentError(f"{name} is not homogeneous")
    degree = target.degree
    span: List[idspace.Consequence] = []
    for generator in args.span:
        f = freeterm.builtin(generator, target.kind)
        span += idspace.consequence_span(f, degree, args.symmetry, generator)
    kernel = None
    if args.model:
        model = models.parse_model_spec(args.model)
        basis = idspace.enumerate_basis(degree, args.symmetry)
        kernel = idspace.identity_space(basis, model, seed=param.seed)
    outcome = idspace.decompose(target, span, kernel, args.symmetry)

    result = {"command": "decompose", "identity": name, "span_size": len(span), **outcome.to_json()}
    if isinstance(outcome, idspace.NotInSpan):
        return FAILED, result, [f"{name}: not in the span (rank {outcome.span_rank} of {len(span)} instances)"]
    lines = [f"{name} = {outcome.to_dsl()}"]
    if not outcome.exact:
        lines.append(f"  + residual {outcome.residual.to_dsl()}")
    return OK, result, lines


# -----------------------------------------------------------------------------
def cmd_repro(args) -> Tuple[int, dict, List[str]]:
    names = list(repro.REPORTS) if args.report == "all" else [args.report]
    items = [item for name in names for item in repro.run_report(name)]
    mismatches = [item for item in items if item.status == repro.MISMATCH]
    result = {"command": "repro", "report": args.report, "items": [item.to_json() for item in items]}
    palette = {repro.MATCH: "GREEN", repro.MISMATCH: "LIGHTRED_EX", repro.INFORMATIONAL: "CYAN"}
    lines = []
    for item in items:
        status = colored(f"{item.status:<13}", palette[item.status], not args.nocolor)
        lines.append(f"{status} {item.name}: {item.computed} (expected {item.expected}) [{item.provenance}]")
        if item.note:
            lines.append(f"              {item.note}")
    lines.append(f"{len(items) - len(mismatches)} of {len(items)} items without mismatch")
    return (FAILED if mismatches else OK), result, lines


# -----------------------------------------------------------------------------
def cmd_models(args) -> Tuple[int, dict, List[str]]:
    catalog = models.model_catalog()
    result = {"command": "models", "models": [{"spec": spec, "description": text} for spec, text in catalog]}
    width = max(len(spec) for spec, _ in catalog)
    return OK, result, [f"{spec:<{width}}  {text}" for spec, text in catalog]


COMMANDS = {
    "check": cmd_check,
    "solve": cmd_solve,
    "decompose": cmd_decompose,
    "repro": cmd_repro,
    "models": cmd_models,
}


# -----------------------------------------------------------------------------
def main(argv: Optional[Sequence[str]] = None) -> int:
    """main function of this module.

    :param argv: arguments without the program name, sys.argv when omitted
    :returns: exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK

    configure_logging(args.loglevel, args.logfile)
    logger.debug(f"{args=}")
    if not args.nocolor:
        colorama.just_fix_windows_console()
    if args.threads is not None:
        param.threads = args.threads
    if getattr(args, "seed", None) is not None:
        param.seed = args.seed

    try:
        code, result, lines = COMMANDS[args.command](args)
    except RbidentError as exc:
        _error(f"{type(exc).__name__}: {exc}", not args.nocolor)
        return USAGE
    except OSError as exc:
        _error(str(exc), not args.nocolor)
        return USAGE

    text = to_json(result) if args.format == "json" else "\n".join(lines)
    write_output(text, args.output)
    return code


# ===============================================================================
if __name__ == "__main__":
    sys.exit(main())
