"""
Command-line front end

    ncx <verb> [files] [options]

Exit codes: 0 success, 1 domain error (or a checker that reports failure),
2 usage or parse error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .errors import NcxError, ParseError
from .services import commands
from .services.field_factory import FieldFactory
from .services.observer import ResultNotifier
from .services.repositories import ChainMapRepository, ComplexRepository, DocumentRepository
from .services.settings import Settings
from .services.strategy import ReportFormatter

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _common_options(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json", help="output format")
    common.add_argument("--field", help=f"q or fp:<p> (default {settings.default_field})")
    common.add_argument("--seed", type=int, default=settings.seed, help="random seed")
    common.add_argument("--cases", type=int, default=settings.selftest_cases, help="selftest cases per property")
    common.add_argument("--out", help="write the output to this file instead of stdout")
    common.add_argument("--log-level", default=settings.log_level, help="logging level")
    return common


def build_parser(settings: Settings = None) -> argparse.ArgumentParser:
    settings = settings or Settings()
    common = _common_options(settings)
    parser = argparse.ArgumentParser(prog="ncx", description="Homological algebra of N-complexes over Q and F_p")
    verbs = parser.add_subparsers(dest="verb", metavar="verb")
    verbs.required = True

    def verb(name, help_text, files=(), N=False):
        sub = verbs.add_parser(name, parents=[common], help=help_text)
        for file_name in files:
            sub.add_argument(file_name)
        if N:
            sub.add_argument("--N", type=int, required=True)
        return sub

    sub = verb("validate", "check d^N = 0 (or commutation with --map)", ["file"])
    sub.add_argument("--map", action="store_true", help="the file holds a chain map")

    sub = verb("homology", "amplitude homology table", ["file"])
    sub.add_argument("--degree", type=int)
    sub.add_argument("--amplitude", type=int)

    verb("cone", "mapping cone triangle of a chain map", ["map"])

    sub = verb("suspend", "suspension Sigma^times X", ["file"])
    sub.add_argument("--times", type=int, default=1)
    sub.add_argument("--strict", action="store_true", help="iterate suspend/cosuspend literally")

    verb("cosuspend", "cosuspension Sigma^-1 X", ["file"])
    verb("pcover", "projective cover P(X) with epsilon and rho", ["file"])
    verb("ihull", "injective hull I(X) with its two maps", ["file"])

    sub = verb("shift", "degree shift Theta^t X", ["file"])
    sub.add_argument("--by", type=int, required=True)

    sub = verb("mu", "the complex mu_r^s k^dim", N=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--s", type=int, required=True)
    sub.add_argument("--dim", type=int, default=1)

    sub = verb("nullhomotopy", "null-homotopy witness of a chain map", ["map"])
    sub.add_argument("--convention", choices=["full", "printed"], default="full")

    sub = verb("homdim", "dimensions of chain maps, null-homotopic maps and Hom_K", ["source", "target"])
    sub.add_argument("--convention", choices=["full", "printed"], default="full")

    verb("qis", "quasi-isomorphism check", ["map"])

    sub = verb("les-single", "long exact sequence of one complex", ["file"])
    sub.add_argument("--l", dest="ell", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)

    verb("les-ses", "long exact sequence of a short exact sequence", ["file"])
    verb("elementary", "elementary morphism p(u, i) and its three conditions", ["file"])
    verb("exact-square-check", "pullback and pushout test for a square", ["file"])

    sub = verb("truncate", "smart or brutal truncation", ["file"])
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--kind", choices=sorted(commands.TRUNCATIONS), default="sigma_le")

    sub = verb("mor", "homology as sequences of N-1 maps", ["file"])
    sub.add_argument("--j", type=int)

    sub = verb("nhn", "Hom_K(mu_r^{i+r-1} k, X) against H^i_(r)(X)", ["file"])
    sub.add_argument("--degree", type=int)
    sub.add_argument("--amplitude", type=int)

    sub = verb("smcatcp2", "shift identities for a single-degree complex", N=True)
    sub.add_argument("--i", type=int, default=1)
    sub.add_argument("--dim", type=int, default=1)

    sub = verb("sigma-mu", "class of Sigma^j mu_r^{N-1} k", N=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--j", type=int, required=True)
    sub.add_argument("--strict", action="store_true")

    verb("decompose", "mu-decomposition by the rank formula", ["file"])

    sub = verb("generate", "random complex with its hidden mu blocks", N=True)
    sub.add_argument("--max-dim", type=int, default=3)
    sub.add_argument("--window", type=int, default=5)

    sub = verb("selftest", "randomized property suite")
    sub.add_argument("--property", action="append", dest="properties", help="run only this property")
    sub.add_argument("--N", type=int, action="append", dest="Ns", help="restrict to this N (repeatable)")
    return parser


def _field(args, parser):
    try:
        return FieldFactory.create_field(args.field or Settings().default_field)
    except ValueError as e:
        parser.error(str(e))


def build_command(args, parser) -> commands.Command:
    """Load the input files and build the command for the chosen verb"""
    complexes = ComplexRepository()
    maps = ChainMapRepository()
    verb = args.verb
    if verb == "validate":
        repository = maps if args.map else complexes
        return commands.ValidateCommand(repository.load(args.file, check_nilpotency=False))
    if verb == "homology":
        return commands.HomologyCommand(complexes.load(args.file), args.degree, args.amplitude)
    if verb == "cone":
        return commands.ConeCommand(maps.load(args.map))
    if verb == "suspend":
        return commands.SuspendCommand(complexes.load(args.file), args.times, args.strict)
    if verb == "cosuspend":
        return commands.SuspendCommand(complexes.load(args.file), -1)
    if verb in ("pcover", "ihull"):
        return commands.CoverCommand(complexes.load(args.file), hull=verb == "ihull")
    if verb == "shift":
        return commands.ShiftCommand(complexes.load(args.file), args.by)
    if verb == "mu":
        return commands.MuCommand(args.N, args.r, args.s, args.dim, _field(args, parser))
    if verb == "nullhomotopy":
        return commands.NullHomotopyCommand(maps.load(args.map), args.convention)
    if verb == "homdim":
        return commands.HomDimCommand(complexes.load(args.source), complexes.load(args.target), args.convention)
    if verb == "qis":
        return commands.QisCommand(maps.load(args.map))
    if verb == "les-single":
        return commands.LesSingleCommand(complexes.load(args.file), args.ell, args.m)
    if verb == "les-ses":
        return commands.LesSesCommand(DocumentRepository("ses").load(args.file))
    if verb == "elementary":
        document = DocumentRepository("elementary").load(args.file)
        return commands.ElementaryCommand(document["complex"], document["u"], document["degree"])
    if verb == "exact-square-check":
        return commands.ExactSquareCommand(DocumentRepository("square").load(args.file))
    if verb == "truncate":
        return commands.TruncateCommand(complexes.load(args.file), args.n, args.kind)
    if verb == "mor":
        return commands.MorCommand(complexes.load(args.file), args.j)
    if verb == "nhn":
        return commands.NhnCommand(complexes.load(args.file), args.degree, args.amplitude)
    if verb == "smcatcp2":
        return commands.Smcatcp2Command(args.N, args.i, args.dim, _field(args, parser))
    if verb == "sigma-mu":
        return commands.SigmaMuCommand(args.N, args.r, args.j, _field(args, parser), args.strict)
    if verb == "decompose":
        return commands.DecomposeCommand(complexes.load(args.file))
    if verb == "generate":
        return commands.GenerateCommand(args.N, _field(args, parser), args.seed, args.max_dim, args.window)
    if verb == "selftest":
        fields = [_field(args, parser)] if args.field else None
        return commands.SelftestCommand(args.seed, args.cases, args.properties, ResultNotifier(), fields, args.Ns)
    parser.error(f"unknown verb {verb}")


def main(argv: Optional[List[str]] = None) -> int:
    settings = Settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
        if args.seed < 0 or args.cases < 0:
            parser.error("--seed and --cases must be nonnegative")
        settings.configure_logging(args.log_level)
        command = build_command(args, parser)
    except SystemExit as e:
        return int(e.code or 0)
    except ParseError as e:
        print(f"ncx: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NcxError as e:
        print(f"ncx: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    try:
        payload = commands.CommandInvoker().execute_command(command)
    except NcxError as e:
        print(f"ncx: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    text = ReportFormatter.for_name(args.format).render(payload)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK if command.ok else EXIT_DOMAIN
