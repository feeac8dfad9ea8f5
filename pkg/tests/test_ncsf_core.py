import pytest
from fractions import Fraction

from backend.compositions import compositions_of
from backend.errors import ContractError, ResourceLimitError
from backend.ncsf_core import (
    BasisId,
    Element,
    L_basis,
    basis_element,
    complete_S,
    expand_in_basis,
    format_element,
    format_terms,
    multiply,
    product_S,
    psi_monomial,
    refinement_matrix,
    ribbon_R,
)

half = Fraction(1, 2)
third = Fraction(1, 3)
sixth = Fraction(1, 6)

def psi(*parts):
    return Element.word(parts)

def test_element_drops_zero_coefficients():
    """Test that zero coefficients are never stored"""
    x = Element({(1,): 1, (2,): 0})
    assert dict(x.terms) == {(1,): 1}
    assert (x - x).is_zero()
    assert Element.zero() == 0

def test_element_rejects_floats():
    """Test that only exact coefficients are accepted"""
    with pytest.raises(ContractError):
        Element({(1,): 0.5})

def test_multiply():
    """Test concatenation of generator words"""
    assert dict(multiply(Element.generator(2), Element.generator(1)).terms) == {(2, 1): 1}
    assert (Element.generator(1) + Element.generator(2)) * Element.zero() == Element.zero()
    assert (psi(1) * half) * (psi(1) * 2) == psi(1, 1)
    assert Element.one() * psi(3) == psi(3)

def test_element_arithmetic_and_degrees():
    """Test arithmetic with scalars and homogeneous components"""
    x = psi(2) + psi(1, 1) * 3 + 1
    assert x.degrees() == [0, 2]
    assert not x.is_homogeneous()
    assert x.homogeneous_component(2) == psi(2) + psi(1, 1) * 3
    assert x.homogeneous_component(0) == Element.one()
    assert 2 - Element.one() == Element.one()
    assert -psi(1) + psi(1) == 0

def test_complete_s():
    """Test the Newton recursion for the complete functions"""
    assert complete_S(0) == Element.one()
    assert complete_S(1) == psi(1)
    assert complete_S(2) == psi(2) * half + psi(1, 1) * half
    assert complete_S(3) == psi(3) * third + psi(1, 2) * third + psi(2, 1) * sixth + psi(1, 1, 1) * sixth

def test_product_s():
    """Test products of complete functions"""
    assert product_S((1, 1)) == psi(1, 1)
    assert product_S((2,)) == complete_S(2)
    assert product_S(()) == Element.one()

def test_ribbon_r():
    """Test ribbons as alternating sums of products of complete functions"""
    assert ribbon_R((3,)) == complete_S(3)
    assert ribbon_R((1, 1)) == psi(1, 1) * half - psi(2) * half
    assert ribbon_R((1, 1)) == psi_monomial((1, 1))

def test_psi_monomial():
    """Test the Psi-monomial basis"""
    assert psi_monomial((3,)) == psi(3)
    assert psi_monomial(()) == Element.one()
    assert psi_monomial((1, 1)) == psi(1, 1) * half - psi(2) * half
    assert psi_monomial((1, 1, 1)) == (
        psi(1, 1, 1) * sixth - psi(1, 2) * sixth - psi(2, 1) * third + psi(3) * third
    )

def test_psi_of_all_ones_is_ribbon_of_all_ones():
    """Test Psi_(1^r) = R_(1^r)"""
    for r in range(1, 6):
        ones = (1,) * r
        assert psi_monomial(ones) == ribbon_R(ones)

@pytest.mark.slow
@pytest.mark.parametrize("r", [6, 7])
def test_psi_of_all_ones_is_ribbon_of_all_ones_large(r):
    """Test Psi_(1^r) = R_(1^r) for r = 6 and 7"""
    ones = (1,) * r
    assert psi_monomial(ones) == ribbon_R(ones)

def test_bases_accept_any_iterable():
    """Test that list and tuple indices give the same basis elements"""
    assert ribbon_R([2, 1]) == ribbon_R((2, 1))
    assert psi_monomial([1, 2]) == psi_monomial((1, 2))
    assert L_basis([2, 1]) == L_basis((2, 1))
    assert basis_element("R", [1, 1]) == ribbon_R((1, 1))

def test_l_basis():
    """Test L as a sum over refinements"""
    assert L_basis((2, 1)) == psi_monomial((2, 1)) + psi_monomial((1, 1, 1))
    assert L_basis((1, 1, 1)) == psi_monomial((1, 1, 1))
    assert L_basis((1,)) == psi(1)

def test_basis_element_dispatch():
    """Test the dispatch from basis names to constructors"""
    assert basis_element(BasisId.R, (2, 1)) == ribbon_R((2, 1))
    assert basis_element("Psi", (1, 2)) == psi_monomial((1, 2))
    assert basis_element(BasisId.S, (3,)) == complete_S(3)
    with pytest.raises(ContractError):
        basis_element(BasisId.S, (2, 1))

def test_expand_ribbon_in_l():
    """Test R_(2,2) in the L basis"""
    assert expand_in_basis(ribbon_R((2, 2)), BasisId.L) == {(3, 1): 2, (2, 2): 2, (2, 1, 1): 1}

def test_expand_ribbon_in_psi():
    """Test ribbons in the Psi-monomial basis"""
    assert expand_in_basis(ribbon_R((1, 1)), BasisId.PSI_MONOMIAL) == {(1, 1): 1}
    assert expand_in_basis(ribbon_R((2, 1)), BasisId.PSI_MONOMIAL) == {(2, 1): 2, (1, 1, 1): 2}

def test_expand_is_identity_on_basis_elements():
    """Test that each basis element has a single unit coordinate"""
    for basis in (BasisId.PSI_MONOMIAL, BasisId.L, BasisId.R, BasisId.S_PRODUCT):
        for composition in compositions_of(4):
            assert expand_in_basis(basis_element(basis, composition), basis) == {composition: 1}

def test_expand_edge_cases():
    """Test zero, constants and invalid input"""
    assert expand_in_basis(Element.zero(), BasisId.L) == {}
    assert expand_in_basis(Element.one() * 3, BasisId.L) == {(): 3}
    with pytest.raises(ContractError):
        expand_in_basis(psi(1) + psi(2), BasisId.L)
    with pytest.raises(ContractError):
        expand_in_basis(psi(2), BasisId.S)
    with pytest.raises(ResourceLimitError):
        expand_in_basis(psi(3), BasisId.L, cap=2)

def test_refinement_matrix():
    """Test the 0/1 matrix of L in the Psi-monomial basis"""
    assert refinement_matrix(3) == [
        [1, 1, 1, 1],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
    ]

def test_format_terms():
    """Test the printed form of linear combinations"""
    terms = {(2, 1): Fraction(2), (3,): Fraction(-1, 2), (): Fraction(1)}
    assert format_terms(terms, "L") == "-1/2*L[3] + 2*L[2,1] + 1"
    assert format_terms({}, "L") == "0"
    assert format_element(psi(1, 1) * half - psi(2) * half) == "-1/2*Psi[2] + 1/2*Psi[1,1]"
