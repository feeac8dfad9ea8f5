# quotients.py
"""
The quotients T = FQSym/J (permutations up to equal G-composition) and
T' = WQSym/J' (packed words up to equal W-composition), with their
structure constants computed twice: by closed formula and by multiplying
representatives.
"""
import logging
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import permutations
from math import comb

from backend import config
from backend.compositions import (
    Composition,
    coarsenings,
    compositions_of,
    concatenate,
    is_finer,
    near_concatenate,
    refinements,
    split_at_weight,
)
from backend.errors import ContractError
from backend.ncsf_core import BasisId, L_basis, expand_in_basis, format_terms, psi_monomial
from backend.reports import Report
from backend.words import (
    Permutation,
    convolution,
    generate_packed_words,
    genocchi_composition,
    genocchi_representative,
    shifted_shuffle,
    word_composition,
    word_representative,
)

logger = logging.getLogger(__name__)

T = "T"
U = "U"


def _binomial(n, k):
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


class QuotientExpansion:
    """Finitely supported combination of T_K (or U_K); zero coefficients are dropped."""

    def __init__(self, label, terms=None):
        if label not in (T, U):
            raise ContractError(f"unknown quotient {label!r}")
        self.label = label
        cleaned = {}
        for key, value in (terms or {}).items():
            if value:
                cleaned[Composition(key)] = value
        self._terms = dict(sorted(cleaned.items(), reverse=True))

    @classmethod
    def constant(cls, label, value):
        return cls(label, {Composition(): Fraction(value)})

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, composition):
        return self._terms.get(Composition(composition), 0)

    def degrees(self):
        return sorted({key.weight for key in self._terms})

    def _compatible(self, other):
        if not isinstance(other, QuotientExpansion) or other.label != self.label:
            raise ContractError(f"cannot combine {self.label} with {getattr(other, 'label', other)!r}")

    def __add__(self, other):
        self._compatible(other)
        merged = dict(self._terms)
        for key, value in other._terms.items():
            merged[key] = merged.get(key, 0) + value
        return QuotientExpansion(self.label, merged)

    def __neg__(self):
        return QuotientExpansion(self.label, {key: -value for key, value in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return QuotientExpansion(self.label, {key: value * factor for key, value in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, QuotientExpansion):
            self._compatible(other)
            return multiply_expansions(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, QuotientExpansion):
            return self.label == other.label and self._terms == other._terms
        if isinstance(other, dict):
            return self._terms == {Composition(key): value for key, value in other.items() if value}
        return NotImplemented

    def __repr__(self):
        return f"QuotientExpansion({self})"

    def __str__(self):
        return format_terms(self._terms, self.label)


def _check_product_weights(left, right, target):
    left = Composition(left)
    right = Composition(right)
    target = Composition(target)
    if not left or not right or not target:
        raise ContractError("structure constants are indexed by nonempty compositions")
    if target.weight != left.weight + right.weight:
        raise ContractError(
            f"|{target}| = {target.weight} differs from |{left}| + |{right}| = {left.weight + right.weight}"
        )
    return left, right, target


def c_coefficient(left, right, target):
    """
    C_{I,J}^K: zero unless K' is coarser than I and K'' finer than J,
    otherwise binomial(|I| + l(J) - l(I), l(K) - l(I)).
    """
    left, right, target = _check_product_weights(left, right, target)
    head, tail, _ = split_at_weight(target, left.weight)
    if not is_finer(left, head) or not is_finer(tail, right):
        return 0
    return _binomial(left.weight + len(right) - len(left), len(target) - len(left))


def d_coefficient(left, right, target):
    """
    D_{I,J}^K: zero unless K' is coarser than I and K'' equals J,
    otherwise binomial(l(K), l(I)).
    """
    left, right, target = _check_product_weights(left, right, target)
    head, tail, _ = split_at_weight(target, left.weight)
    if not is_finer(left, head) or tail != right:
        return 0
    return _binomial(len(target), len(left))


def _formula_product(label, left, right, cap):
    """
    Only K = K'.K'' or K' |> K'' with K' coarser than I can be nonzero; K'' runs over
    the refinements of J for T and is J itself for U.
    """
    left = Composition(left)
    right = Composition(right)
    if not left or not right:
        raise ContractError("quotient products take nonempty compositions")
    config.ensure_within_cap(max(left.weight, right.weight), cap, f"{label} product")
    coefficient = c_coefficient if label == T else d_coefficient
    tails = refinements(right) if label == T else [right]
    terms = {}
    for head in coarsenings(left):
        for tail in tails:
            for target in (concatenate(head, tail), near_concatenate(head, tail)):
                if target not in terms:
                    terms[target] = coefficient(left, right, target)
    return QuotientExpansion(label, terms)


def t_product(left, right, cap=None):
    """T_I T_J by the closed formula."""
    return _formula_product(T, left, right, cap)


def u_product(left, right, cap=None):
    """U_I U_J by the closed formula."""
    return _formula_product(U, left, right, cap)


def brute_t_product(left, right, cap=None):
    """G-compositions of the shifted shuffle of the lex-least representatives."""
    left = Composition(left)
    right = Composition(right)
    config.ensure_within_cap(max(left.weight, right.weight), cap, "T product")
    sigma = genocchi_representative(left, cap)
    tau = genocchi_representative(right, cap)
    tally = Counter(genocchi_composition(mu) for mu in shifted_shuffle(sigma, tau))
    return QuotientExpansion(T, tally)


def brute_u_product(left, right, cap=None):
    """W-compositions of the convolution of the lex-least representatives."""
    left = Composition(left)
    right = Composition(right)
    config.ensure_within_cap(max(left.weight, right.weight), cap, "U product")
    u = word_representative(left, cap)
    v = word_representative(right, cap)
    tally = Counter(word_composition(w) for w in convolution(u, v))
    return QuotientExpansion(U, tally)


def multiply_expansions(left, right):
    """Bilinear extension of t_product / u_product; the empty index is the unit."""
    product = t_product if left.label == T else u_product
    result = QuotientExpansion(left.label)
    for left_key, left_value in left.terms.items():
        for right_key, right_value in right.terms.items():
            scale = left_value * right_value
            if not left_key:
                term = QuotientExpansion(left.label, {right_key: 1})
            elif not right_key:
                term = QuotientExpansion(left.label, {left_key: 1})
            else:
                term = product(left_key, right_key, cap=left_key.weight + right_key.weight)
            result = result + term.scale(scale)
    return result


def _words_of(label, n):
    if label == T:
        return (Permutation(letters) for letters in permutations(range(1, n + 1))), genocchi_composition
    return generate_packed_words(n), word_composition


def certify_ideal(n_max, cap=None):
    """
    For every pair of degrees with m + n <= n_max, the multiset of statistics of
    sigma * tau must depend only on the classes of sigma and tau.
    """
    config.ensure_within_cap(n_max, cap, "ideal certification")
    report = Report("ideal")
    for label in (T, U):
        name = "shifted shuffle / GC" if label == T else "convolution / WC"
        combine = shifted_shuffle if label == T else convolution
        for m in range(1, n_max):
            for n in range(1, n_max - m + 1):
                left_words, statistic = _words_of(label, m)
                right_words, _ = _words_of(label, n)
                right_words = list(right_words)
                seen = defaultdict(dict)
                for first in left_words:
                    first_class = statistic(first)
                    for second in right_words:
                        multiset = frozenset(Counter(statistic(w) for w in combine(first, second)).items())
                        seen[(first_class, statistic(second))].setdefault(multiset, (first, second))
                violations = [
                    f"{key[0]} x {key[1]}: " + ", ".join(f"{a}*{b}" for a, b in witnesses.values())
                    for key, witnesses in seen.items()
                    if len(witnesses) > 1
                ]
                report.check(
                    f"{label}: {name} well defined in degrees ({m},{n})",
                    not violations,
                    f"{len(seen)} class pairs",
                    violations,
                )
    return report


def _pairs_up_to(max_weight):
    for total in range(2, max_weight + 1):
        for m in range(1, total):
            for left in compositions_of(m, cap=m):
                for right in compositions_of(total - m, cap=total - m):
                    yield left, right


def formula_agreement(label, max_weight):
    """Closed formula against representatives for every I, J with |I| + |J| <= max_weight."""
    formula = t_product if label == T else u_product
    brute = brute_t_product if label == T else brute_u_product
    report = Report(f"{label} products")
    mismatches = []
    count = 0
    for left, right in _pairs_up_to(max_weight):
        count += 1
        expected = brute(left, right, cap=max_weight)
        computed = formula(left, right, cap=max_weight)
        if expected != computed:
            mismatches.append(f"{label}{left}*{label}{right}: formula {computed}, representatives {expected}")
    report.check(f"{label} closed formula equals representative products up to weight {max_weight}",
                 not mismatches, f"{count} pairs", mismatches)
    return report


def associativity(label, max_weight):
    report = Report(f"{label} associativity")
    failures = []
    for total in range(3, max_weight + 1):
        for a in range(1, total - 1):
            for b in range(1, total - a):
                c = total - a - b
                for first in compositions_of(a, cap=a):
                    for second in compositions_of(b, cap=b):
                        for third in compositions_of(c, cap=c):
                            x = QuotientExpansion(label, {first: 1})
                            y = QuotientExpansion(label, {second: 1})
                            z = QuotientExpansion(label, {third: 1})
                            if (x * y) * z != x * (y * z):
                                failures.append(f"{first} {second} {third}")
    report.check(f"{label} product associative up to weight {max_weight}", not failures, witnesses=failures)
    return report


def phi_consistency(max_weight):
    """L_I L_J expanded in L has the coordinates of T_I T_J."""
    report = Report("phi")
    failures = []
    for left, right in _pairs_up_to(max_weight):
        coordinates = expand_in_basis(L_basis(left) * L_basis(right), BasisId.L, cap=max_weight)
        if t_product(left, right, cap=max_weight) != coordinates:
            failures.append(f"L{left}*L{right}")
    report.check(f"L products match T structure constants up to weight {max_weight}", not failures,
                 witnesses=failures)
    return report


def phi_prime_consistency(max_weight):
    """Psi_I Psi_J expanded in the Psi-monomial basis has the coordinates of U_I U_J."""
    report = Report("phi'")
    failures = []
    for left, right in _pairs_up_to(max_weight):
        product = psi_monomial(left) * psi_monomial(right)
        coordinates = expand_in_basis(product, BasisId.PSI_MONOMIAL, cap=max_weight)
        if u_product(left, right, cap=max_weight) != coordinates:
            failures.append(f"Psi{left}*Psi{right}")
    report.check(f"Psi products match U structure constants up to weight {max_weight}", not failures,
                 witnesses=failures)
    return report


def convolution_size(left_length, right_length):
    """|u * v| for packed words over alphabets of sizes a and b."""
    a, b = left_length, right_length
    return sum(_binomial(k, a) * _binomial(a, a + b - k) for k in range(max(a, b), a + b + 1))


def fiber_identities(max_weight):
    """
    Counting identities tying the structure constants to class sizes:
      sum_K C_{I,J}^K = C(m+n, m),  sum_K D_{I,J}^K = |u * v|,
      sum_{I,J} |class I| |class J| C_{I,J}^K = |class K|  (same for D with W-classes).
    """
    report = Report("fibers")
    sizes = {label: {} for label in (T, U)}
    for n in range(1, max_weight + 1):
        for label in (T, U):
            words, statistic = _words_of(label, n)
            sizes[label].update(Counter(statistic(word) for word in words))

    for label in (T, U):
        product = t_product if label == T else u_product
        bad_sums = []
        for left, right in _pairs_up_to(max_weight):
            total = sum(product(left, right, cap=max_weight).terms.values())
            if label == T:
                expected = comb(left.weight + right.weight, left.weight)
            else:
                expected = convolution_size(len(left), len(right))
            if total != expected:
                bad_sums.append(f"{left} {right}: {total} vs {expected}")
        report.check(f"{label} coefficients of each product add up to the product size", not bad_sums,
                     witnesses=bad_sums)

        bad_fibers = []
        for total_weight in range(2, max_weight + 1):
            mass = Counter()
            for m in range(1, total_weight):
                for left in compositions_of(m, cap=m):
                    for right in compositions_of(total_weight - m, cap=total_weight - m):
                        weight = sizes[label][left] * sizes[label][right]
                        for key, value in product(left, right, cap=max_weight).terms.items():
                            mass[key] += weight * value
            for target in compositions_of(total_weight, cap=total_weight):
                expected = sizes[label][target] * (total_weight - 1)
                if mass[target] != expected:
                    bad_fibers.append(f"{target}: {mass[target]} vs {expected}")
        report.check(f"{label} weighted structure constants recover class sizes", not bad_fibers,
                     witnesses=bad_fibers)
    return report
