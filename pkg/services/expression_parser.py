# expression_parser.py
"""
Expressions over the bases, e.g. "2*L[2,2] + L[1,3]" or "T[1]*T[1]".

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] (RATIONAL | BASIS '[' INT (',' INT)* ']' | '(' expr ')')

BASIS is one of S, R, L, Psi (the ambient algebra) or T, U (the quotients).
S[I] is the product S^I of complete functions.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import pyparsing as pp

from backend import config
from backend.compositions import Composition
from backend.errors import ContractError, NcsfError
from backend.ncsf_core import BasisId, Element, basis_element, expand_in_basis, format_terms
from backend.quotients import T, U, QuotientExpansion, multiply_expansions

logger = logging.getLogger(__name__)

MAX_INPUT_BYTES = 64 * 1024

AMBIENT_BASES = {"S": BasisId.S_PRODUCT, "R": BasisId.R, "L": BasisId.L, "Psi": BasisId.PSI_MONOMIAL}
QUOTIENT_BASES = (T, U)

# printed label per expansion target, chosen so that printed output parses back
TARGET_LABELS = {
    BasisId.PSI_MONOMIAL: "Psi",
    BasisId.L: "L",
    BasisId.R: "R",
    BasisId.S_PRODUCT: "S",
}


class ExpressionError(NcsfError):
    """Custom exception for expression errors."""
    pass


class ExpressionSyntaxError(ExpressionError):
    """Custom exception for malformed expressions; carries the 1-based line and column."""

    def __init__(self, message, line, column, offset):
        self.line = line
        self.column = column
        self.offset = offset
        super().__init__(f"{message} (line {line}, column {column})")


class ExpressionSemanticError(ExpressionError):
    """Custom exception for well-formed expressions that cannot be evaluated."""
    pass


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Atom:
    basis: str
    parts: tuple


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


def _fold(tokens):
    items = tokens[0]
    node = items[0]
    for position in range(1, len(items), 2):
        node = BinOp(items[position], node, items[position + 1])
    return node


def _build_grammar():
    expr = pp.Forward()
    integer = pp.Word(pp.nums)
    rational = pp.Regex(r"\d+(\s*/\s*\d+)?").set_name("number")
    rational.set_parse_action(_number)

    basis = pp.one_of(["Psi", "S", "R", "L", "T", "U"]).set_name("basis name")
    parts = pp.Group(integer + pp.ZeroOrMore(pp.Suppress(",") - integer))
    atom = basis + pp.Suppress("[") - parts - pp.Suppress("]")
    atom.set_parse_action(lambda t: Atom(t[0], tuple(int(part) for part in t[1])))

    group = pp.Suppress("(") - expr - pp.Suppress(")")
    primary = rational | atom | group
    factor = pp.Optional(pp.Literal("-")) + primary
    factor.set_parse_action(lambda t: Neg(t[1]) if len(t) == 2 else t[0])

    term = pp.Group(factor + pp.ZeroOrMore(pp.Literal("*") - factor))
    term.set_parse_action(_fold)
    sum_of_terms = pp.Group(term + pp.ZeroOrMore(pp.one_of("+ -") - term))
    sum_of_terms.set_parse_action(_fold)
    expr <<= sum_of_terms
    return expr


def _number(text, loc, tokens):
    numerator, _, denominator = tokens[0].partition("/")
    denominator = int(denominator) if denominator.strip() else 1
    if denominator == 0:
        raise pp.ParseFatalException(text, loc, "nonzero denominator")
    return Number(Fraction(int(numerator), denominator))


_GRAMMAR = _build_grammar()


def _atoms(node):
    if isinstance(node, Atom):
        yield node
    elif isinstance(node, Neg):
        yield from _atoms(node.operand)
    elif isinstance(node, BinOp):
        yield from _atoms(node.left)
        yield from _atoms(node.right)


def _family(node):
    """"ambient", "T", "U" or None for a pure number."""
    kinds = {atom.basis if atom.basis in QUOTIENT_BASES else "ambient" for atom in _atoms(node)}
    if len(kinds) > 1:
        raise ExpressionSemanticError(
            "T and U atoms live in the quotients and cannot be mixed with each other or with S, R, L, Psi"
        )
    return kinds.pop() if kinds else None


def parse(text):
    """Parse an expression into its syntax tree."""
    if len(text.encode("utf-8")) > MAX_INPUT_BYTES:
        raise ExpressionSemanticError(f"expression exceeds {MAX_INPUT_BYTES} bytes")
    try:
        tree = _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ExpressionSyntaxError(f"expected {e.msg.removeprefix('Expected ')}", e.lineno, e.col, e.loc)
    for atom in _atoms(tree):
        if any(part < 1 for part in atom.parts):
            raise ExpressionSemanticError(f"parts of {atom.basis}{list(atom.parts)} must be positive")
    _family(tree)
    return tree


def _ambient_value(node, cap):
    if isinstance(node, Number):
        return Element.one() * node.value
    if isinstance(node, Atom):
        composition = Composition(node.parts)
        config.ensure_within_cap(composition.weight, cap, "expand")
        return basis_element(AMBIENT_BASES[node.basis], composition)
    if isinstance(node, Neg):
        return -_ambient_value(node.operand, cap)
    left = _ambient_value(node.left, cap)
    right = _ambient_value(node.right, cap)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if left.degrees() and right.degrees():
        config.ensure_within_cap(left.degrees()[-1] + right.degrees()[-1], cap, "expand")
    return left * right


def _quotient_value(node, label, cap):
    if isinstance(node, Number):
        return QuotientExpansion.constant(label, node.value)
    if isinstance(node, Atom):
        composition = Composition(node.parts)
        config.ensure_within_cap(composition.weight, cap, "expand")
        return QuotientExpansion(label, {composition: Fraction(1)})
    if isinstance(node, Neg):
        return -_quotient_value(node.operand, label, cap)
    left = _quotient_value(node.left, label, cap)
    right = _quotient_value(node.right, label, cap)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if left.degrees() and right.degrees():
        config.ensure_within_cap(max(left.degrees()[-1], right.degrees()[-1]), cap, "expand")
    return multiply_expansions(left, right)


def _resolve_target(target):
    if target in QUOTIENT_BASES:
        return target
    if isinstance(target, str) and target in AMBIENT_BASES:
        return AMBIENT_BASES[target]
    try:
        return BasisId(target)
    except ValueError:
        raise ExpressionSemanticError(f"unknown target basis {target!r}")


def evaluate_terms(expr, target, cap=None):
    """
    Coordinates of an expression in the target basis, as (label, {composition: Fraction}).
    Ambient expressions expand degree by degree; T/U expressions stay in their quotient.
    """
    if isinstance(expr, str):
        expr = parse(expr)
    cap = cap or config.EXPAND_MAX_DEGREE
    target = _resolve_target(target)
    family = _family(expr)

    if target in QUOTIENT_BASES:
        if family not in (None, target):
            raise ExpressionSemanticError(f"{family} expressions cannot be expanded in {target}")
        value = _quotient_value(expr, target, cap)
        return target, value.terms

    if family in QUOTIENT_BASES:
        raise ExpressionSemanticError(f"a {family} expression can only be expanded in {family}")
    element = _ambient_value(expr, cap)
    coordinates = {}
    for degree in element.degrees():
        try:
            coordinates.update(expand_in_basis(element.homogeneous_component(degree), target, cap=cap))
        except ContractError as e:
            raise ExpressionSemanticError(str(e))
    logger.debug(f"expanded expression of degrees {element.degrees()} in {target.value}")
    return TARGET_LABELS[target], coordinates


def evaluate(expr, target, cap=None):
    """Printed expansion of an expression in the target basis."""
    label, terms = evaluate_terms(expr, target, cap)
    return format_terms(terms, label)
