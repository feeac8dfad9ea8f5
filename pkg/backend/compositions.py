# compositions.py
import re
import logging
from enum import Enum
from itertools import combinations

from backend import config
from backend.errors import (
    ContractError,
    InvalidDescentSetError,
    OutOfRangeError,
    UndefinedOperationError,
)

logger = logging.getLogger(__name__)


class Composition(tuple):
    """
    Finite sequence of positive integer parts.
    Behaves as a tuple (hashable, ordered lexicographically) so it can key dictionaries.
    The empty composition only serves as the identity index of products.
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Composition):
            return parts
        parts = tuple(parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise ContractError(f"composition parts must be positive integers, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def __repr__(self):
        return f"Composition({format_composition(self)})"

    def __str__(self):
        return format_composition(self)


class SplitKind(str, Enum):
    CONCAT = "concat"
    NEAR_CONCAT = "near-concat"


def format_composition(composition):
    return "[" + ",".join(str(part) for part in composition) + "]"


def compact_label(composition):
    """Table header label: parts written side by side ("211"), as in the printed tables."""
    if all(part <= 9 for part in composition):
        return "".join(str(part) for part in composition)
    return format_composition(composition)


def parse_composition(text):
    """
    Parse "[2,2,1]", "2,2,1" or the compact digit form "221".
    """
    cleaned = text.strip()
    if cleaned.startswith("[") and cleaned.endswith("]"):
        cleaned = cleaned[1:-1]
    cleaned = cleaned.strip()
    if not cleaned:
        raise ContractError(f"empty composition: {text!r}")
    if "," in cleaned:
        pieces = [piece.strip() for piece in cleaned.split(",")]
    elif re.fullmatch(r"\d+", cleaned):
        pieces = list(cleaned)
    else:
        raise ContractError(f"malformed composition: {text!r}")
    if not all(re.fullmatch(r"\d+", piece) for piece in pieces):
        raise ContractError(f"malformed composition: {text!r}")
    return Composition(int(piece) for piece in pieces)


def descent_set(composition):
    """
    Partial sums of all parts but the last: {i1, i1+i2, ..., i1+...+i(r-1)}.
    """
    composition = Composition(composition)
    descents = []
    total = 0
    for part in composition[:-1]:
        total += part
        descents.append(total)
    return frozenset(descents)


def composition_from_descents(descents, n):
    if n < 1:
        raise OutOfRangeError(f"weight must be positive, got {n}")
    positions = sorted(set(descents))
    for position in positions:
        if isinstance(position, bool) or not isinstance(position, int) or not 1 <= position <= n - 1:
            raise InvalidDescentSetError(
                f"descent {position!r} outside {{1..{n - 1}}} for weight {n}"
            )
    parts = []
    previous = 0
    for position in positions + [n]:
        parts.append(position - previous)
        previous = position
    return Composition(parts)


def is_finer(finer, coarser):
    """True iff `finer` refines `coarser` (same weight, descents of `coarser` contained in those of `finer`)."""
    finer = Composition(finer)
    coarser = Composition(coarser)
    if finer.weight != coarser.weight:
        return False
    return descent_set(coarser) <= descent_set(finer)


def concatenate(left, right):
    return Composition(tuple(Composition(left)) + tuple(Composition(right)))


def near_concatenate(left, right):
    left = Composition(left)
    right = Composition(right)
    if not left or not right:
        raise UndefinedOperationError("near-concatenation needs two nonempty compositions")
    return Composition(left[:-1] + (left[-1] + right[0],) + right[1:])


def split_at_weight(composition, m):
    """
    The unique (K', K'', kind) with |K'| = m and K = K'.K'' (concat) or K = K' |> K'' (near-concat).
    """
    composition = Composition(composition)
    if not 0 < m < composition.weight:
        raise OutOfRangeError(f"split weight {m} outside (0, {composition.weight})")
    total = 0
    for index, part in enumerate(composition):
        previous = total
        total += part
        if total == m:
            return (
                Composition(composition[: index + 1]),
                Composition(composition[index + 1:]),
                SplitKind.CONCAT,
            )
        if total > m:
            return (
                Composition(composition[:index] + (m - previous,)),
                Composition((total - m,) + composition[index + 1:]),
                SplitKind.NEAR_CONCAT,
            )
    raise OutOfRangeError(f"split weight {m} not reached in {composition}")


def _generate(n):
    # descending lexicographic order: largest first part first
    if n == 0:
        yield Composition()
        return
    for first in range(n, 0, -1):
        for rest in _generate(n - first):
            yield Composition((first,) + rest)


def compositions_of(n, cap=None):
    """All 2^(n-1) compositions of n in table order (descending lexicographic)."""
    if n < 1:
        raise OutOfRangeError(f"weight must be positive, got {n}")
    config.ensure_within_cap(n, cap, "compositions")
    return list(_generate(n))


def refinements(composition):
    """Every J finer than I (I included), in table order."""
    composition = Composition(composition)
    found = [Composition()]
    for part in composition:
        found = [concatenate(prefix, block) for prefix in found for block in _generate(part)]
    return sorted(found, reverse=True)


def coarsenings(composition):
    """Every J coarser than I (I included), in table order."""
    composition = Composition(composition)
    n = composition.weight
    descents = sorted(descent_set(composition))
    found = []
    for size in range(len(descents) + 1):
        for kept in combinations(descents, size):
            found.append(composition_from_descents(kept, n))
    return sorted(found, reverse=True)
