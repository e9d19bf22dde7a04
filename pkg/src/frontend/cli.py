"""
Command-line interface.

    termcert certify <trs> <cert>
    termcert orient <trs> <cert> [--step k]
    termcert search <trs> --regime R --carrier C --grid v1,v2,... [--dim n --sd k --delta p/q] [--ordered]

Exit codes: 0 certified (or found), 1 rejected (or not found),
2 unsupported, 3 unreadable or malformed input.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

import yaml

from src.algebra import WORD_BITS, ArithmeticOverflowError, CarrierSpec, MatrixSpec
from src.checker.certificate import Certificate, Status, TermProblem, UnsupportedStep
from src.checker.checker import check_certificate, obligations_of, remove_claimed
from src.config import configure_logging, load_config
from src.frontend.cert_io import CertificateSchemaError, parse_cert, render_cert
from src.frontend.search import as_ordered, search_interpretation
from src.frontend.trs_parser import TrsParseError, parse_trs
from src.interp.interpretation import InterpretationError, Regime, orient_report
from src.rewriting.terms import Trs

logger = logging.getLogger(__name__)

EXIT_CERTIFIED = 0
EXIT_REJECTED = 1
EXIT_UNSUPPORTED = 2
EXIT_INPUT_ERROR = 3

STATUS_EXIT_CODES = {
    Status.CERTIFIED: EXIT_CERTIFIED,
    Status.REJECTED: EXIT_REJECTED,
    Status.UNSUPPORTED: EXIT_UNSUPPORTED,
}


class InputError(Exception):
    """Unreadable or malformed input; reported on stderr with exit code 3."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e
    except UnicodeDecodeError as e:
        raise InputError(f"cannot read {path}: not UTF-8 text ({e.reason} at byte {e.start})") from e


def _load_trs(path: str) -> Trs:
    try:
        return parse_trs(_read(path))
    except TrsParseError as e:
        raise InputError(f"{path}: {e}") from e


def _load(trs_path: str, cert_path: str, config: dict) -> Tuple[Trs, Certificate]:
    trs = _load_trs(trs_path)
    default_sd = config.get("checker", {}).get("default_sd", 1)
    try:
        cert = parse_cert(_read(cert_path), trs, default_sd=default_sd)
    except CertificateSchemaError as e:
        raise InputError(f"{cert_path}: {e}") from e
    return trs, cert


def cmd_certify(args, config: dict) -> int:
    _, cert = _load(args.trs, args.cert, config)
    verdict = check_certificate(cert)
    print(verdict.render())
    return STATUS_EXIT_CODES[verdict.status]


def cmd_orient(args, config: dict) -> int:
    _, cert = _load(args.trs, args.cert, config)
    if not 0 <= args.step < len(cert.steps):
        raise InputError(f"step {args.step} out of range, certificate has {len(cert.steps)} steps")

    problem = cert.problem
    for step in cert.steps[: args.step]:
        if isinstance(step, UnsupportedStep):
            print(f"UNSUPPORTED\n  feature: {step.feature}")
            return EXIT_UNSUPPORTED
        problem = remove_claimed(problem, step)

    step = cert.steps[args.step]
    if isinstance(step, UnsupportedStep):
        print(f"UNSUPPORTED\n  feature: {step.feature}")
        return EXIT_UNSUPPORTED

    print(f"step {args.step}: {step.interpretation.regime.value} over {step.interpretation.carrier}")
    code = EXIT_CERTIFIED
    for i, rule in enumerate(obligations_of(problem)):
        marker = "*" if i in step.strict else " "
        print(f"{marker}{i}: {rule}")
        try:
            print(f"    {orient_report(step.interpretation, rule).render()}")
        except ArithmeticOverflowError as e:
            print(f"    unsupported: arithmetic beyond {WORD_BITS}-bit range: {e}")
            code = EXIT_UNSUPPORTED
        except (InterpretationError, ValueError) as e:
            print(f"    error: {e}")
    return code


def _search_carrier(args):
    base = CarrierSpec.from_name(args.carrier, args.delta)
    if args.dim is None:
        if args.sd is not None:
            raise ValueError("--sd needs --dim")
        return base
    if base.is_arctic:
        return MatrixSpec(base, args.dim, args.sd)
    sd = args.sd if args.sd is not None else (args.dim if args.ordered else 1)
    return MatrixSpec(base, args.dim, sd)


def cmd_search(args, config: dict) -> int:
    trs = _load_trs(args.trs)
    problem = TermProblem(trs)
    if args.ordered:
        problem = as_ordered(problem)

    limits = config.get("search", {})
    try:
        carrier = _search_carrier(args)
        grid = [v.strip() for v in args.grid.split(",") if v.strip()]
        if not grid:
            raise ValueError("empty coefficient grid")
        outcome = search_interpretation(
            problem,
            Regime(args.regime),
            carrier,
            grid,
            max_rules=limits.get("max_rules", 6),
            max_symbols=limits.get("max_symbols", 4),
            max_candidates=limits.get("max_candidates", 200000),
            max_steps=limits.get("max_steps", 8),
        )
    except (ValueError, OverflowError) as e:
        raise InputError(str(e)) from e

    if not outcome.found:
        print("NOT FOUND")
        print(f"  {outcome.statistics}")
        return EXIT_REJECTED

    text = render_cert(outcome.certificate)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as e:
            raise InputError(f"cannot write {args.output}: {e.strerror or e}") from e
        logger.info(f"Certificate written to {args.output}")
    else:
        sys.stdout.write(text)
    logger.info(f"Search statistics: {outcome.statistics}")
    return EXIT_CERTIFIED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="termcert", description="Check and search termination certificates for rewrite systems"
    )
    parser.add_argument(
        "--config",
        type=str,
        default=None,
        help="Path to configuration file (defaults to src/config/config.yaml)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    certify = commands.add_parser("certify", help="Check a certificate against a TRS")
    certify.add_argument("trs", help="TRS file")
    certify.add_argument("cert", help="Certificate JSON file")
    certify.set_defaults(handler=cmd_certify)

    orient = commands.add_parser("orient", help="Show how one step orients every rule")
    orient.add_argument("trs", help="TRS file")
    orient.add_argument("cert", help="Certificate JSON file")
    orient.add_argument("--step", type=int, default=0, help="Step index (default 0)")
    orient.set_defaults(handler=cmd_orient)

    search = commands.add_parser("search", help="Search a certificate on a coefficient grid")
    search.add_argument("trs", help="TRS file")
    search.add_argument("--regime", required=True, choices=[r.value for r in Regime])
    search.add_argument("--carrier", required=True, help="nat, int, rat, arctic-nat, arctic-int or arctic-rat")
    search.add_argument("--grid", required=True, help="Comma-separated coefficient values, e.g. 0,1,2")
    search.add_argument("--dim", type=int, default=None, help="Matrix dimension")
    search.add_argument("--sd", type=int, default=None, help="Strict dimension")
    search.add_argument("--delta", type=str, default=None, help="Strict margin p/q for rational carriers")
    search.add_argument("--ordered", action="store_true", help="Remove rules as pairs of an ordering problem")
    search.add_argument("--output", type=str, default=None, help="Write the certificate here")
    search.set_defaults(handler=cmd_search)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
    except (OSError, yaml.YAMLError) as e:
        print(f"error: cannot load configuration: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    configure_logging(config)

    try:
        return args.handler(args, config)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
