# statistics_matrices.py
"""
Transition matrices from the ribbon basis, counted by enumeration:

  M(R, L):   entry[I][J] = G_IJ = #{sigma in S_n : D(sigma^-1) = I, GC(sigma) = J}
  M(R, Psi): entry[I][J] = K_IJ = #{u in PW_n : D(u) = I, WC(u) = J}

Storage is in theorem layout (row = ribbon index I). The printed tables are
the transpose ("paper" layout); see services/serializers.py.
"""
import logging
import multiprocessing as mp
import time
from collections import Counter, defaultdict
from enum import Enum
from functools import lru_cache
from itertools import permutations

from backend import config
from backend.compositions import Composition, compositions_of
from backend.errors import ContractError
from backend.ncsf_core import refinement_matrix
from backend.reports import Report
from backend.sequences import factorial, genocchi_for_class, is_genocchi_class, ordered_bell
from backend.words import (
    Permutation,
    descent_composition,
    generate_packed_words,
    genocchi_composition,
    is_genocchi_permutation,
    recoil_composition,
    word_composition,
)

logger = logging.getLogger(__name__)


class Pair(str, Enum):
    RL = "RL"
    RPSI = "RPsi"


def _stream(pair, n):
    if pair is Pair.RL:
        return (Permutation(letters) for letters in permutations(range(1, n + 1)))
    return generate_packed_words(n)


def _cell(pair, word):
    if pair is Pair.RL:
        return recoil_composition(word), genocchi_composition(word)
    return descent_composition(word), word_composition(word)


def _tally_share(pair_value, n, share, shares, keep_witnesses):
    """Count the words of the stream whose index is congruent to `share` modulo `shares`."""
    pair = Pair(pair_value)
    counts = Counter()
    witnesses = defaultdict(list)
    for index, word in enumerate(_stream(pair, n)):
        if index % shares != share:
            continue
        key = _cell(pair, word)
        counts[key] += 1
        if keep_witnesses:
            witnesses[key].append(word)
    return counts, dict(witnesses)


def _tally(pair, n, keep_witnesses, workers):
    started = time.perf_counter()
    tasks = [(pair.value, n, share, workers, keep_witnesses) for share in range(workers)]
    if workers == 1:
        results = [_tally_share(*task) for task in tasks]
    else:
        mp_context = mp.get_context("spawn")
        with mp_context.Pool(processes=workers) as pool:
            results = pool.starmap_async(_tally_share, tasks).get()
    counts = Counter()
    witnesses = defaultdict(list)
    for share_counts, share_witnesses in results:
        counts.update(share_counts)
        for key, words in share_witnesses.items():
            witnesses[key].extend(words)
    witnesses = {key: sorted(words) for key, words in witnesses.items()}
    logger.info(
        f"tallied {sum(counts.values())} words for M_{n}({pair.value}) "
        f"with {workers} worker(s) in {time.perf_counter() - started:.3f}s"
    )
    return dict(counts), (witnesses if keep_witnesses else None)


# counts only; builds with witnesses are redone on every call
@lru_cache(maxsize=16)
def _cached_counts(pair, n, workers):
    counts, _ = _tally(pair, n, False, workers)
    return counts


class TransitionMatrix:
    """
    Square integer matrix indexed by the compositions of n in table order.
    entry(I, J) is the theorem-layout coefficient of the second basis element J in R_I.
    """

    def __init__(self, n, pair, counts, witnesses=None):
        self.n = n
        self.pair = Pair(pair)
        self.order = compositions_of(n, cap=n)
        self._counts = dict(counts)
        self.witnesses = witnesses

    def entry(self, row, column):
        return self._counts.get((Composition(row), Composition(column)), 0)

    def rows(self, layout="theorem"):
        if layout == "paper":
            return [[self.entry(row, column) for row in self.order] for column in self.order]
        if layout != "theorem":
            raise ContractError(f"unknown layout {layout!r}")
        return [[self.entry(row, column) for column in self.order] for row in self.order]

    def cell_witnesses(self, row, column):
        if self.witnesses is None:
            raise ContractError("matrix was built without witnesses")
        return list(self.witnesses.get((Composition(row), Composition(column)), []))

    def total(self):
        return sum(self._counts.values())

    def row_sums(self):
        return {row: sum(self.entry(row, column) for column in self.order) for row in self.order}

    def class_sizes(self):
        """Column sums: how many words carry each statistic value."""
        return {column: sum(self.entry(row, column) for row in self.order) for column in self.order}

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self.n == other.n and self.pair == other.pair and self.rows() == other.rows()

    def __repr__(self):
        return f"TransitionMatrix(n={self.n}, pair={self.pair.value})"


def transition_matrix(pair, n, cap=None, witnesses=False, workers=None):
    """One enumeration pass over S_n (RL) or PW_n (RPsi)."""
    pair = Pair(pair)
    if n < 1:
        raise ContractError(f"degree must be positive, got {n}")
    config.ensure_within_cap(n, cap, f"M_{n}({pair.value})")
    workers = workers or config.WORKERS
    if witnesses:
        counts, cells = _tally(pair, n, True, workers)
    else:
        counts, cells = _cached_counts(pair, n, workers), None
    return TransitionMatrix(n, pair, counts, cells)


def _check_weights(row, column):
    row = Composition(row)
    column = Composition(column)
    if row.weight != column.weight or row.weight < 1:
        raise ContractError(f"weights differ: |{row}| = {row.weight}, |{column}| = {column.weight}")
    return row, column


def g_coefficient(row, column, cap=None):
    """G_IJ: permutations with recoil composition I and G-composition J."""
    row, column = _check_weights(row, column)
    return transition_matrix(Pair.RL, row.weight, cap).entry(row, column)


def k_coefficient(row, column, cap=None):
    """K_IJ: packed words with descent composition I and W-composition J."""
    row, column = _check_weights(row, column)
    return transition_matrix(Pair.RPSI, row.weight, cap).entry(row, column)


def class_sizes(statistic, n, cap=None):
    """Sizes of the GC-classes of S_n or of the WC-classes of PW_n."""
    pair = {"GC": Pair.RL, "WC": Pair.RPSI}.get(statistic)
    if pair is None:
        raise ContractError(f"unknown statistic {statistic!r}")
    return transition_matrix(pair, n, cap).class_sizes()


def matrix_product(left, right):
    size = len(right)
    return [
        [sum(left[i][k] * right[k][j] for k in range(size)) for j in range(len(right[0]))]
        for i in range(len(left))
    ]


def refinement_factorization_holds(n, cap=None):
    """M(R, Psi) = M(R, L) x M(L, Psi), the last factor being the refinement matrix."""
    refinement = refinement_matrix(n, cap)
    rl = transition_matrix(Pair.RL, n, cap).rows()
    rpsi = transition_matrix(Pair.RPSI, n, cap).rows()
    return matrix_product(rl, refinement) == rpsi


def sequence_checks(n_max, cap=None):
    """
    Factorial and ordered Bell totals, recoil row sums, and the Genocchi
    class sizes of (2^k) and (2^k,1) for every degree up to n_max.
    """
    report = Report("sequences")
    for n in range(1, n_max + 1):
        rl = transition_matrix(Pair.RL, n, cap)
        rpsi = transition_matrix(Pair.RPSI, n, cap)
        report.check(f"n={n} total of M(R,L) = {n}!", rl.total() == factorial(n),
                     f"{rl.total()} vs {factorial(n)}")
        report.check(f"n={n} total of M(R,Psi) = ordered Bell", rpsi.total() == ordered_bell(n),
                     f"{rpsi.total()} vs {ordered_bell(n)}")

        recoils = Counter(recoil_composition(sigma) for sigma in _stream(Pair.RL, n))
        sums = rl.row_sums()
        report.check(f"n={n} row sums of M(R,L) count recoil classes",
                     all(sums[row] == recoils.get(row, 0) for row in rl.order))

        sizes = rl.class_sizes()
        for composition in rl.order:
            if is_genocchi_class(composition):
                expected = genocchi_for_class(composition)
                report.check(f"n={n} Genocchi row {composition}", sizes[composition] == expected,
                             f"{sizes[composition]} permutations, Genocchi number {expected}")

        if n % 2 == 0:
            target = Composition((1,) + (2,) * (n // 2 - 1) + (1,))
            mismatched = [
                sigma for sigma in _stream(Pair.RL, n)
                if is_genocchi_permutation(sigma) != (genocchi_composition(sigma) == target)
            ]
            report.check(f"n={n} classical Genocchi permutations form the class {target}",
                         not mismatched, witnesses=mismatched)
    return report


def witnesses(pair, n, cap=None):
    """Per-cell word lists, keyed by (row, column) in theorem layout."""
    return transition_matrix(pair, n, cap, witnesses=True).witnesses
