import pytest
from fractions import Fraction

from backend.errors import ResourceLimitError
from services.expression_parser import (
    MAX_INPUT_BYTES,
    Atom,
    BinOp,
    ExpressionSemanticError,
    ExpressionSyntaxError,
    Neg,
    Number,
    evaluate,
    evaluate_terms,
    parse,
)

def test_parse_atom():
    """Test parsing a single basis element"""
    assert parse("R[2,1]") == Atom("R", (2, 1))
    assert parse(" Psi[ 1 , 3 ] ") == Atom("Psi", (1, 3))

def test_parse_precedence():
    """Test that products bind tighter than sums"""
    tree = parse("2*L[2,2] + L[1,3]")
    assert tree == BinOp("+", BinOp("*", Number(Fraction(2)), Atom("L", (2, 2))), Atom("L", (1, 3)))
    assert parse("-(T[1])") == Neg(Atom("T", (1,)))
    assert parse("1/2") == Number(Fraction(1, 2))

def test_syntax_error_position():
    """Test that syntax errors report the line and column"""
    with pytest.raises(ExpressionSyntaxError) as exc_info:
        parse("R[2,1)*")
    assert exc_info.value.line == 1
    assert exc_info.value.column == 6
    assert exc_info.value.offset == 5
    assert "column 6" in str(exc_info.value)

@pytest.mark.parametrize("text", ["", "R[]", "X[1]", "L[1] +", "2 3", "1/0"])
def test_syntax_errors(text):
    """Test malformed expressions"""
    with pytest.raises(ExpressionSyntaxError):
        parse(text)

@pytest.mark.parametrize("text", ["T[1] + L[1]", "T[1]*U[1]", "L[0]", "R[2,0,1]"])
def test_semantic_errors(text):
    """Test well-formed expressions that are refused"""
    with pytest.raises(ExpressionSemanticError):
        parse(text)

def test_input_size_limit():
    """Test that oversized expressions are refused"""
    text = "L[1]+" * (MAX_INPUT_BYTES // 5) + "L[1]"
    with pytest.raises(ExpressionSemanticError):
        parse(text)

def test_evaluate_ribbon_in_l():
    """Test R_(2,2) in the L basis"""
    assert evaluate("R[2,2]", "L") == "2*L[3,1] + 2*L[2,2] + 1*L[2,1,1]"

def test_evaluate_in_psi():
    """Test ribbons and fractions in the Psi-monomial basis"""
    assert evaluate("R[1,1]", "Psi") == "1*Psi[1,1]"
    assert evaluate("1/2*R[1,1]", "Psi") == "1/2*Psi[1,1]"
    assert evaluate("R[2,1]", "Psi") == "2*Psi[2,1] + 2*Psi[1,1,1]"

def test_evaluate_quotients():
    """Test products inside T and U"""
    assert evaluate("T[1]*T[1]", "T") == "1*T[2] + 1*T[1,1]"
    assert evaluate("U[1]*U[1]", "U") == "1*U[2] + 2*U[1,1]"
    assert evaluate("2", "T") == "2"

def test_evaluate_constants_and_zero():
    """Test constants and cancellation"""
    assert evaluate("3", "L") == "3"
    assert evaluate("R[2,1] - R[2,1]", "L") == "0"
    assert evaluate("L[1] + 1", "L") == "1*L[1] + 1"

def test_evaluate_is_linear():
    """Test that expansions of sums are sums of expansions"""
    _, first = evaluate_terms("R[2,1]", "L")
    _, second = evaluate_terms("R[1,2]", "L")
    _, both = evaluate_terms("R[2,1] + R[1,2]", "L")
    expected = {key: first.get(key, 0) + second.get(key, 0) for key in set(first) | set(second)}
    assert both == {key: value for key, value in expected.items() if value}

def test_printed_output_parses_back():
    """Test that printed expansions evaluate to themselves"""
    for target in ("Psi", "L", "R", "S"):
        printed = evaluate("R[2,1]*L[1] - 1/3*Psi[3]", target)
        assert evaluate(printed, target) == printed

def test_evaluate_target_errors():
    """Test refused targets"""
    with pytest.raises(ExpressionSemanticError):
        evaluate("T[1]", "L")
    with pytest.raises(ExpressionSemanticError):
        evaluate("L[1]", "T")
    with pytest.raises(ExpressionSemanticError):
        evaluate("L[1]", "X")

def test_evaluate_cap():
    """Test that degrees above the cap are refused"""
    with pytest.raises(ResourceLimitError):
        evaluate("L[3]*L[3]", "L", cap=5)
    with pytest.raises(ResourceLimitError):
        evaluate("T[6]", "T", cap=5)
