# cli.py
import argparse
import json
import logging
import sys

from backend import config
from backend.compositions import format_composition, parse_composition
from backend.errors import ContractError, InvariantViolationError, NcsfError, ResourceLimitError
from backend.ncsf_core import format_terms
from backend.quotients import T, U, brute_t_product, brute_u_product, t_product, u_product
from backend.statistics_matrices import Pair, transition_matrix
from backend.words import (
    Permutation,
    PackedWord,
    descent_composition,
    format_word,
    genocchi_composition,
    genocchi_descent_set,
    last_occurrence_positions,
    pack,
    parse_word,
    recoil_composition,
    standardize,
    word_composition,
)
from services.expression_parser import ExpressionError, evaluate_terms
from services.serializers import FORMATS, LAYOUTS, expansion_record, render_matrix
from services.verification import SUITES, genocchi_table, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

EXPANSION_TARGETS = ("Psi", "L", "R", "S", "T", "U")


class UsageError(Exception):
    """Custom exception for command-line usage errors."""
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help="largest degree to enumerate (default: NCSF_MAX_DEGREE)")
    common.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--workers", type=int, default=None, help="worker processes for counting passes")
    return common


def build_parser():
    common = _common_options()
    parser = _Parser(prog="ncsf", description="Noncommutative symmetric functions toolkit")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    stats = commands.add_parser("stats", parents=[common], help="statistics of a permutation or packed word")
    stats.add_argument("kind", choices=["perm", "word"])
    stats.add_argument("word")

    matrix = commands.add_parser("matrix", parents=[common], help="transition matrix from the ribbon basis")
    matrix.add_argument("pair", choices=[pair.value for pair in Pair])
    matrix.add_argument("n", type=int)
    matrix.add_argument("--layout", choices=LAYOUTS, default="paper")
    matrix.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    matrix.add_argument("--witnesses", action="store_true")

    expand = commands.add_parser("expand", parents=[common], help="expand an expression in a basis")
    expand.add_argument("expression")
    expand.add_argument("--in", dest="basis", choices=EXPANSION_TARGETS, required=True)
    expand.add_argument("--format", dest="fmt", choices=["text", "json"], default="text")

    verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--max-degree", type=int, default=None)
    verify.add_argument("--golden", default=None, help="directory of golden matrix files")

    genocchi = commands.add_parser("genocchi", parents=[common], help="Genocchi numbers against GC-class sizes")
    genocchi.add_argument("n_max", type=int)

    product = commands.add_parser("product", parents=[common], help="product in the T or U quotient")
    product.add_argument("quotient", choices=[T, U])
    product.add_argument("left")
    product.add_argument("right")
    product.add_argument("--brute", action="store_true", help="multiply representatives instead")
    return parser


def _stats(args, out):
    letters = parse_word(args.word)
    if args.kind == "perm":
        sigma = Permutation(letters)
        gdes = ",".join(str(value) for value in sorted(genocchi_descent_set(sigma)))
        out.write(f"D:     {format_composition(descent_composition(sigma))}\n")
        out.write(f"Rec:   {format_composition(recoil_composition(sigma))}\n")
        out.write(f"GC:    {format_composition(genocchi_composition(sigma))}\n")
        out.write(f"GDes:  {{{gdes}}}\n")
        out.write(f"WC:    {format_composition(word_composition(sigma))}\n")
    else:
        word = PackedWord(letters)
        positions = ",".join(str(position) for position in sorted(last_occurrence_positions(word)))
        out.write(f"D:     {format_composition(descent_composition(word))}\n")
        out.write(f"WC:    {format_composition(word_composition(word))}\n")
        out.write(f"Last:  {{{positions}}}\n")
        out.write(f"Std:   {format_word(standardize(word))}\n")
        out.write(f"Pack:  {format_word(pack(word))}\n")
    return EXIT_OK


def _matrix(args, out):
    matrix = transition_matrix(args.pair, args.n, cap=args.cap, witnesses=args.witnesses)
    out.write(render_matrix(matrix, args.layout, args.fmt, args.witnesses))
    return EXIT_OK


def _expand(args, out):
    label, terms = evaluate_terms(args.expression, args.basis, cap=args.cap)
    text = format_terms(terms, label)
    if args.fmt == "json":
        out.write(json.dumps(expansion_record(args.expression, label, terms, text), indent=2) + "\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


def _verify(args, out):
    report = run_suite(args.suite, args.max_degree, args.golden)
    out.write(report.render() + "\n")
    if not report.passed:
        for check in report.failures:
            logger.error(f"verification failed: {check.name}")
        return EXIT_FAILED
    return EXIT_OK


def _genocchi(args, out):
    out.write(f"{'n':>3}  {'class':<16}{'size':>8}{'Genocchi':>10}\n")
    mismatched = False
    for n, composition, size, number in genocchi_table(args.n_max, cap=args.cap):
        flag = "" if size == number else "  MISMATCH"
        mismatched = mismatched or bool(flag)
        out.write(f"{n:>3}  {format_composition(composition):<16}{size:>8}{number:>10}{flag}\n")
    return EXIT_FAILED if mismatched else EXIT_OK


def _product(args, out):
    left = parse_composition(args.left)
    right = parse_composition(args.right)
    if args.quotient == T:
        function = brute_t_product if args.brute else t_product
    else:
        function = brute_u_product if args.brute else u_product
    out.write(f"{function(left, right, cap=args.cap)}\n")
    return EXIT_OK


HANDLERS = {
    "stats": _stats,
    "matrix": _matrix,
    "expand": _expand,
    "verify": _verify,
    "genocchi": _genocchi,
    "product": _product,
}


def run_command(argv, out=None, err=None):
    """Parse argv, run the subcommand and return the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE

    if args.log_level:
        logging.getLogger().setLevel(args.log_level)
    for option in ("cap", "workers"):
        value = getattr(args, option)
        if value is not None and value < 1:
            err.write(f"--{option} must be positive\n")
            return EXIT_USAGE

    # the options override the configured values for this command only
    saved = config.MAX_DEGREE, config.WORKERS
    config.MAX_DEGREE = args.cap or config.MAX_DEGREE
    config.WORKERS = args.workers or config.WORKERS
    try:
        return HANDLERS[args.command](args, out)
    except InvariantViolationError as e:
        logger.error(f"internal invariant violated: {e}")
        return EXIT_FAILED
    except (ExpressionError, ContractError, ResourceLimitError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except NcsfError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILED
    finally:
        config.MAX_DEGREE, config.WORKERS = saved
