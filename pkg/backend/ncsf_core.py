# ncsf_core.py
"""
Free associative algebra on the generators Psi_1, Psi_2, ... over the rationals,
and the bases of noncommutative symmetric functions realized inside it.

An Element maps generator words to exact rational coefficients; the word
Psi_{j1} Psi_{j2} ... is keyed by the composition (j1, j2, ...).
"""
import logging
import time
from enum import Enum
from fractions import Fraction
from functools import lru_cache, reduce
from types import MappingProxyType

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from backend import config
from backend.compositions import (
    Composition,
    coarsenings,
    compositions_of,
    concatenate,
    format_composition,
    is_finer,
    refinements,
)
from backend.errors import ContractError, InvariantViolationError

logger = logging.getLogger(__name__)


class BasisId(str, Enum):
    PSI_MONOMIAL = "Psi"
    L = "L"
    R = "R"
    S = "S"
    S_PRODUCT = "Sproduct"


EXPANDABLE_BASES = (BasisId.PSI_MONOMIAL, BasisId.L, BasisId.R, BasisId.S_PRODUCT)


def _scalar(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise ContractError(f"coefficients must be exact integers or fractions, got {value!r}")
    return Fraction(value)


def format_terms(terms, label):
    """
    Signed sum "c*Label[j1,j2,...]" in descending lexicographic order of the indices.
    The empty index prints as a bare constant.
    """
    items = sorted(((key, coefficient) for key, coefficient in terms.items() if coefficient), reverse=True)
    if not items:
        return "0"
    pieces = []
    for position, (key, coefficient) in enumerate(items):
        magnitude = abs(coefficient)
        body = str(magnitude) if not key else f"{magnitude}*{label}{format_composition(key)}"
        if position == 0:
            pieces.append(("-" if coefficient < 0 else "") + body)
        else:
            pieces.append((" - " if coefficient < 0 else " + ") + body)
    return "".join(pieces)


class Element:
    """
    Finitely supported linear combination of generator words with Fraction coefficients.
    Immutable: arithmetic always returns new elements; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        cleaned = {}
        for key, coefficient in (terms or {}).items():
            coefficient = _scalar(coefficient)
            if coefficient:
                key = Composition(key)
                total = cleaned.get(key, 0) + coefficient
                if total:
                    cleaned[key] = total
                else:
                    cleaned.pop(key, None)
        self._terms = cleaned
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({Composition(): 1})

    @classmethod
    def generator(cls, n):
        return cls({Composition((n,)): 1})

    @classmethod
    def word(cls, composition, coefficient=1):
        return cls({Composition(composition): coefficient})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, composition):
        return self._terms.get(Composition(composition), Fraction(0))

    def is_zero(self):
        return not self._terms

    def degrees(self):
        return sorted({key.weight for key in self._terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_component(self, n):
        return Element({key: value for key, value in self._terms.items() if key.weight == n})

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Element.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        merged = dict(self._terms)
        for key, value in other._terms.items():
            merged[key] = merged.get(key, 0) + value
        return Element(merged)

    __radd__ = __add__

    def __neg__(self):
        return Element({key: -value for key, value in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Element.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            factor = Fraction(other)
            return Element({key: value * factor for key, value in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = Element.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Element({format_terms(self._terms, 'Psi')})"

    def __str__(self):
        return format_terms(self._terms, "Psi")


def multiply(left, right):
    """Bilinear extension of the concatenation of generator words."""
    product = {}
    for left_key, left_value in left.terms.items():
        for right_key, right_value in right.terms.items():
            key = concatenate(left_key, right_key)
            product[key] = product.get(key, 0) + left_value * right_value
    return Element(product)


@lru_cache(maxsize=None)
def complete_S(n):
    """S_0 = 1 and n*S_n = sum_{k=0}^{n-1} S_k * Psi_{n-k}."""
    if n < 0:
        raise ContractError(f"degree must be nonnegative, got {n}")
    if n == 0:
        return Element.one()
    total = Element.zero()
    for k in range(n):
        total = total + complete_S(k) * Element.generator(n - k)
    return total * Fraction(1, n)


def product_S(composition):
    composition = Composition(composition)
    return reduce(multiply, (complete_S(part) for part in composition), Element.one())


def ribbon_R(composition):
    """R_I = sum over J coarser than I of (-1)^(l(I)-l(J)) S^J."""
    return _ribbon_R(Composition(composition))


@lru_cache(maxsize=None)
def _ribbon_R(composition):
    if not composition:
        raise ContractError("ribbon functions are indexed by nonempty compositions")
    total = Element.zero()
    for coarser in coarsenings(composition):
        sign = -1 if (len(composition) - len(coarser)) % 2 else 1
        total = total + product_S(coarser) * sign
    return total


def psi_monomial(composition):
    """
    r*Psi_I = sum_{s=1}^{r} (-1)^(s-1) Psi_{i1+...+is} * Psi_{(i_{s+1},...,i_r)},
    with Psi_() = 1.
    """
    return _psi_monomial(Composition(composition))


@lru_cache(maxsize=None)
def _psi_monomial(composition):
    if not composition:
        return Element.one()
    r = len(composition)
    total = Element.zero()
    head = 0
    for s in range(1, r + 1):
        head += composition[s - 1]
        sign = 1 if s % 2 == 1 else -1
        tail = _psi_monomial(Composition(composition[s:]))
        total = total + Element.generator(head) * tail * sign
    return total * Fraction(1, r)


def L_basis(composition):
    """L_I = sum of Psi_J over all J finer than I."""
    return _L_basis(Composition(composition))


@lru_cache(maxsize=None)
def _L_basis(composition):
    if not composition:
        raise ContractError("L functions are indexed by nonempty compositions")
    total = Element.zero()
    for finer in refinements(composition):
        total = total + psi_monomial(finer)
    return total


def basis_element(basis, composition):
    basis = BasisId(basis)
    composition = Composition(composition)
    if basis is BasisId.PSI_MONOMIAL:
        return psi_monomial(composition)
    if basis is BasisId.L:
        return L_basis(composition)
    if basis is BasisId.R:
        return ribbon_R(composition)
    if basis is BasisId.S_PRODUCT:
        return product_S(composition)
    if len(composition) != 1:
        raise ContractError(f"S_n takes a single part, got {composition}")
    return complete_S(composition[0])


@lru_cache(maxsize=None)
def _inverse_coordinates(basis, n):
    """
    Inverse of the matrix whose column I holds basis element I in generator words.
    Rows and columns follow compositions_of(n); entries are Fractions.
    """
    started = time.perf_counter()
    order = list(compositions_of(n, cap=n))
    index = {composition: position for position, composition in enumerate(order)}
    size = len(order)
    columns = [basis_element(basis, composition) for composition in order]
    rows = [[QQ(0)] * size for _ in range(size)]
    for column, element in enumerate(columns):
        for key, value in element.terms.items():
            rows[index[key]][column] = QQ(value.numerator, value.denominator)
    try:
        inverse = DomainMatrix(rows, (size, size), QQ).inv().to_Matrix()
    except DMNonInvertibleMatrixError:
        raise InvariantViolationError(f"{basis.value} basis matrix of degree {n} is singular")
    result = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(size))
        for i in range(size)
    )
    logger.debug(
        f"inverted {basis.value} coordinate matrix of degree {n} "
        f"({size}x{size}) in {time.perf_counter() - started:.3f}s"
    )
    return order, result


def expand_in_basis(element, basis, cap=None):
    """
    Coordinates of a homogeneous element in the Psi-monomial, L, R or S^I basis,
    as a dict in table order with zero coordinates omitted.
    """
    basis = BasisId(basis)
    if basis not in EXPANDABLE_BASES:
        raise ContractError(f"{basis.value} is not a basis to expand in")
    if element.is_zero():
        return {}
    degrees = element.degrees()
    if len(degrees) != 1:
        raise ContractError(f"expansion needs a homogeneous element, got degrees {degrees}")
    n = degrees[0]
    if n == 0:
        return {Composition(): element.coefficient(())}
    config.ensure_within_cap(n, cap, "basis expansion")
    order, inverse = _inverse_coordinates(basis, n)
    vector = [element.coefficient(composition) for composition in order]
    coordinates = {}
    for row, composition in enumerate(order):
        value = sum(inverse[row][j] * vector[j] for j in range(len(order)) if vector[j])
        if value:
            coordinates[composition] = value
    rebuilt = Element.zero()
    for composition, value in coordinates.items():
        rebuilt = rebuilt + basis_element(basis, composition) * value
    if rebuilt != element:
        raise InvariantViolationError(f"expansion in {basis.value} does not reconstruct the element")
    return coordinates


def refinement_matrix(n, cap=None):
    """M(L, Psi): entry[I][J] = 1 iff J is finer than I, in table order."""
    order = compositions_of(n, cap)
    return [[1 if is_finer(finer, composition) else 0 for finer in order] for composition in order]


def format_element(element, basis_label="Psi"):
    """Text form of coordinates (a dict) or of an Element written in generator words."""
    terms = element.terms if isinstance(element, Element) else element
    return format_terms(terms, basis_label)
