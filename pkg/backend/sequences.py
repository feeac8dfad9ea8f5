# sequences.py
from functools import lru_cache
from math import comb, factorial

from backend.compositions import Composition
from backend.errors import OutOfRangeError

__all__ = [
    "factorial",
    "ordered_bell",
    "seidel_triangle",
    "genocchi_numbers",
    "genocchi_for_class",
    "is_genocchi_class",
]


@lru_cache(maxsize=None)
def ordered_bell(n):
    """Fubini numbers: a(0) = 1, a(n) = sum_{k=1..n} C(n,k) a(n-k)."""
    if n < 0:
        raise OutOfRangeError(f"ordered Bell index must be nonnegative, got {n}")
    if n == 0:
        return 1
    return sum(comb(n, k) * ordered_bell(n - k) for k in range(1, n + 1))


def seidel_triangle(rows):
    """
    Seidel triangle for the Genocchi numbers.
    Odd rows are filled left to right, even rows right to left;
    each entry adds its running neighbour to the entry above it.
    """
    triangle = [[1]]
    for index in range(2, rows + 1):
        above = triangle[-1]
        if index % 2 == 1:
            row = []
            running = 0
            for position in range(len(above) + 1):
                running += above[position] if position < len(above) else 0
                row.append(running)
        else:
            row = [0] * len(above)
            running = 0
            for position in range(len(above) - 1, -1, -1):
                running += above[position]
                row[position] = running
        triangle.append(row)
    return triangle


def genocchi_numbers(count):
    """
    Unsigned Genocchi numbers G_2, G_4, ..., G_(2*count): 1, 1, 3, 17, 155, 2073, ...
    Entry k-1 is |A001469(k)|, the last entry of row 2k-1 of the Seidel triangle.
    """
    if count < 1:
        return []
    triangle = seidel_triangle(2 * count - 1)
    return [triangle[2 * k - 2][-1] for k in range(1, count + 1)]


def is_genocchi_class(composition):
    """True for compositions of the form (2,...,2) or (2,...,2,1)."""
    composition = Composition(composition)
    if not composition:
        return False
    body = composition[:-1] if composition[-1] == 1 else composition
    return all(part == 2 for part in body)


def genocchi_for_class(composition):
    """
    Genocchi number expected as the size of the G-class of (2^k) or (2^k,1):
    |A001469(ceil(N/2) + 1)| for a composition of weight N.
    """
    composition = Composition(composition)
    if not is_genocchi_class(composition):
        raise OutOfRangeError(f"{composition} is not of the form (2^k) or (2^k,1)")
    index = (composition.weight + 1) // 2 + 1
    return genocchi_numbers(index)[index - 1]
