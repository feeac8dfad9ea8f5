# words.py
import re
import logging
from functools import lru_cache
from itertools import combinations, permutations

from backend import config
from backend.compositions import Composition, composition_from_descents
from backend.errors import ContractError, EmptyWordError, InvariantViolationError, OutOfRangeError

logger = logging.getLogger(__name__)


def is_packed(letters):
    letters = tuple(letters)
    if not letters:
        return True
    return set(letters) == set(range(1, max(letters) + 1))


def is_permutation(letters):
    letters = tuple(letters)
    return sorted(letters) == list(range(1, len(letters) + 1))


def _check_letters(letters):
    for letter in letters:
        if isinstance(letter, bool) or not isinstance(letter, int) or letter < 1:
            raise ContractError(f"letters must be positive integers, got {letters!r}")


class PackedWord(tuple):
    """Word whose letters form an initial interval {1..m}."""

    def __new__(cls, letters=()):
        if isinstance(letters, cls):
            return letters
        letters = tuple(letters)
        _check_letters(letters)
        if not is_packed(letters):
            raise ContractError(f"{format_word(letters)} is not a packed word")
        return super().__new__(cls, letters)

    def __repr__(self):
        return f"{type(self).__name__}({format_word(self)})"

    def __str__(self):
        return format_word(self)


class Permutation(PackedWord):
    """Word that is a bijection on {1..n}; every permutation is also a packed word."""

    def __new__(cls, letters=()):
        if isinstance(letters, Permutation):
            return letters
        letters = tuple(letters)
        _check_letters(letters)
        if not is_permutation(letters):
            raise ContractError(f"{format_word(letters)} is not a permutation")
        return tuple.__new__(cls, letters)


def format_word(letters):
    if all(letter <= 9 for letter in letters):
        return "".join(str(letter) for letter in letters)
    return "[" + ",".join(str(letter) for letter in letters) + "]"


def parse_word(text):
    cleaned = text.strip()
    if cleaned.startswith("[") and cleaned.endswith("]"):
        pieces = [piece.strip() for piece in cleaned[1:-1].split(",")]
        if not all(re.fullmatch(r"\d+", piece) for piece in pieces):
            raise ContractError(f"malformed word: {text!r}")
        return tuple(int(piece) for piece in pieces)
    if not re.fullmatch(r"\d+", cleaned):
        raise ContractError(f"malformed word: {text!r}")
    return tuple(int(digit) for digit in cleaned)


def standardize(word):
    """
    Std(w): number the occurrences of the smallest letter 1, 2, ... from left to right,
    then those of the next letter, and so on.
    """
    word = tuple(word)
    if not word:
        raise EmptyWordError("cannot standardize the empty word")
    _check_letters(word)
    order = sorted(range(len(word)), key=lambda position: (word[position], position))
    labels = [0] * len(word)
    for label, position in enumerate(order, start=1):
        labels[position] = label
    return Permutation(labels)


def pack(word):
    word = tuple(word)
    if not word:
        raise EmptyWordError("cannot pack the empty word")
    _check_letters(word)
    ranks = {letter: rank for rank, letter in enumerate(sorted(set(word)), start=1)}
    return PackedWord(ranks[letter] for letter in word)


def descent_composition(word):
    """Composition whose descent set is {i : w_i > w_(i+1)} (strict descents)."""
    word = tuple(word)
    if not word:
        raise EmptyWordError("descent composition of the empty word")
    descents = [i for i in range(1, len(word)) if word[i - 1] > word[i]]
    return composition_from_descents(descents, len(word))


def inverse(permutation):
    permutation = Permutation(permutation)
    result = [0] * len(permutation)
    for position, value in enumerate(permutation, start=1):
        result[value - 1] = position
    return Permutation(result)


def recoil_composition(permutation):
    return descent_composition(inverse(permutation))


def genocchi_descent_set(permutation):
    """
    GDes: the values i >= 2 immediately followed by a smaller letter.
    The last letter is never a G-descent.
    """
    permutation = Permutation(permutation)
    return frozenset(
        permutation[j]
        for j in range(len(permutation) - 1)
        if permutation[j] >= 2 and permutation[j + 1] < permutation[j]
    )


def genocchi_composition(permutation):
    permutation = Permutation(permutation)
    if not permutation:
        raise EmptyWordError("G-composition of the empty permutation")
    shifted = [value - 1 for value in genocchi_descent_set(permutation)]
    return composition_from_descents(shifted, len(permutation))


def last_occurrence_positions(word):
    """Positions (1-based) of the last occurrence of each letter, terminal position included."""
    word = PackedWord(word)
    last = {}
    for position, letter in enumerate(word, start=1):
        last[letter] = position
    return frozenset(last.values())


def word_composition(word):
    word = PackedWord(word)
    if not word:
        raise EmptyWordError("W-composition of the empty word")
    n = len(word)
    return composition_from_descents(last_occurrence_positions(word) - {n}, n)


def is_genocchi_permutation(permutation):
    """
    Classical Genocchi condition: every even value is followed by a smaller one,
    every odd value is followed by a larger one or sits at the last position.
    """
    permutation = Permutation(permutation)
    n = len(permutation)
    for j, value in enumerate(permutation):
        follower = permutation[j + 1] if j + 1 < n else None
        if value % 2 == 0:
            if follower is None or follower > value:
                return False
        elif follower is not None and follower < value:
            return False
    return True


def shuffle(left, right):
    """All interleavings of two words, with multiplicity."""
    if not left:
        yield tuple(right)
    elif not right:
        yield tuple(left)
    else:
        for rest in shuffle(left[1:], right):
            yield (left[0],) + rest
        for rest in shuffle(left, right[1:]):
            yield (right[0],) + rest


def shifted_shuffle(sigma, tau):
    """sigma shuffled with tau shifted up by |sigma|."""
    sigma = Permutation(sigma)
    tau = Permutation(tau)
    shift = len(sigma)
    shifted = tuple(letter + shift for letter in tau)
    return [Permutation(word) for word in shuffle(tuple(sigma), shifted)]


def convolution(left, right):
    """
    Packed words w'.w'' with |w'| = |u|, pack(w') = u and pack(w'') = v.
    Built by choosing the alphabets A of w' and B of w'' with A | B = {1..k}.
    """
    left = PackedWord(left)
    right = PackedWord(right)
    if not left:
        return [right]
    if not right:
        return [left]
    a = max(left)
    b = max(right)
    found = []
    for k in range(max(a, b), a + b + 1):
        for alphabet in combinations(range(1, k + 1), a):
            missing = sorted(set(range(1, k + 1)) - set(alphabet))
            shared = b - len(missing)
            if shared < 0:
                continue
            for extra in combinations(alphabet, shared):
                right_alphabet = sorted(missing + list(extra))
                prefix = tuple(alphabet[letter - 1] for letter in left)
                suffix = tuple(right_alphabet[letter - 1] for letter in right)
                found.append(PackedWord(prefix + suffix))
    return sorted(found)


def permutations_of(n, cap=None):
    """Stream of S_n in lexicographic order."""
    if n < 0:
        raise OutOfRangeError(f"size must be nonnegative, got {n}")
    config.ensure_within_cap(n, cap, "permutation enumeration")
    return (Permutation(letters) for letters in permutations(range(1, n + 1)))


def generate_packed_words(n):
    # extend a prefix letter by letter, keeping a completion to a packed word possible
    prefix = []
    seen = {}

    def extend():
        if len(prefix) == n:
            yield PackedWord(prefix)
            return
        remaining = n - len(prefix) - 1
        top = max(prefix) if prefix else 0
        for letter in range(1, n + 1):
            new_top = max(top, letter)
            distinct = len(seen) + (0 if letter in seen else 1)
            if new_top - distinct > remaining:
                continue
            prefix.append(letter)
            seen[letter] = seen.get(letter, 0) + 1
            yield from extend()
            seen[letter] -= 1
            if not seen[letter]:
                del seen[letter]
            prefix.pop()

    return extend()


def packed_words_of(n, cap=None):
    """Stream of PW_n in lexicographic order (ordered Bell many)."""
    if n < 0:
        raise OutOfRangeError(f"size must be nonnegative, got {n}")
    config.ensure_within_cap(n, cap, "packed word enumeration")
    return generate_packed_words(n)


def nondecreasing_word(composition):
    """1^(i1) 2^(i2) ...: the only nondecreasing packed word with W-composition I."""
    composition = Composition(composition)
    letters = []
    for letter, part in enumerate(composition, start=1):
        letters.extend([letter] * part)
    return PackedWord(letters)


@lru_cache(maxsize=None)
def _first_with(statistic, composition):
    n = composition.weight
    if statistic == "GC":
        stream, function = permutations(range(1, n + 1)), genocchi_composition
    else:
        stream, function = generate_packed_words(n), word_composition
    for letters in stream:
        if function(letters) == composition:
            logger.debug(f"{statistic} representative of {composition}: {format_word(letters)}")
            return letters
    raise InvariantViolationError(f"no word with {statistic} {composition}")


def genocchi_representative(composition, cap=None):
    """Lexicographically least permutation with G-composition I."""
    composition = Composition(composition)
    config.ensure_within_cap(composition.weight, cap, "representative search")
    return Permutation(_first_with("GC", composition))


def word_representative(composition, cap=None):
    """Lexicographically least packed word with W-composition I."""
    composition = Composition(composition)
    config.ensure_within_cap(composition.weight, cap, "representative search")
    return PackedWord(_first_with("WC", composition))
