# published_tables.py
"""
Published transition matrices and their word-filled versions for n = 3 and 4,
transcribed in the "paper" layout: rows are indexed by the statistic (GC or WC),
columns by the recoil or descent composition, both in table order.
"""
from backend.compositions import parse_composition
from backend.statistics_matrices import Pair

MATRICES = {
    (Pair.RL, 3): """
1 . . .
. 2 1 .
. . 1 .
. . . 1
""",
    (Pair.RL, 4): """
1 . . . . . . .
. 3 2 . 1 1 . .
. . 2 . 1 . . .
. . 1 3 . 2 1 .
. . . . 1 . . .
. . . . . 2 1 .
. . . . . . 1 .
. . . . . . . 1
""",
    (Pair.RPSI, 3): """
1 . . .
1 2 1 .
1 . 1 .
1 2 2 1
""",
    (Pair.RPSI, 4): """
1 . . . . . . .
1 3 2 . 1 1 . .
1 . 2 . 1 . . .
1 3 5 3 2 3 1 .
1 . . . 1 . . .
1 3 2 . 2 3 1 .
1 . 2 . 2 . 1 .
1 3 5 3 3 5 3 1
""",
}

# (statistic value, recoil or descent composition) -> words in the cell
WITNESSES = {
    (Pair.RL, 3): {
        ("3", "3"): "123",
        ("21", "21"): "132 312",
        ("21", "12"): "231",
        ("12", "12"): "213",
        ("111", "111"): "321",
    },
    (Pair.RL, 4): {
        ("4", "4"): "1234",
        ("31", "31"): "1243 1423 4123",
        ("31", "22"): "1342 3412",
        ("31", "13"): "2341",
        ("31", "121"): "2413",
        ("22", "22"): "1324 3124",
        ("22", "13"): "2314",
        ("211", "22"): "3142",
        ("211", "211"): "1432 4132 4312",
        ("211", "121"): "2431 4231",
        ("211", "112"): "3241",
        ("13", "13"): "2134",
        ("121", "121"): "2143 4213",
        ("121", "112"): "3421",
        ("112", "112"): "3214",
        ("1111", "1111"): "4321",
    },
    (Pair.RPSI, 3): {
        ("3", "3"): "111",
        ("21", "3"): "112",
        ("21", "21"): "121 221",
        ("21", "12"): "212",
        ("12", "3"): "122",
        ("12", "12"): "211",
        ("111", "3"): "123",
        ("111", "21"): "132 231",
        ("111", "12"): "312 213",
        ("111", "111"): "321",
    },
    (Pair.RPSI, 4): {
        ("4", "4"): "1111",
        ("31", "4"): "1112",
        ("31", "31"): "1121 1221 2221",
        ("31", "22"): "2212 1212",
        ("31", "13"): "2112",
        ("31", "121"): "2121",
        ("22", "4"): "1122",
        ("22", "22"): "1211 2211",
        ("22", "13"): "2122",
        ("211", "4"): "1123",
        ("211", "31"): "1132 1231 2231",
        ("211", "22"): "1213 1312 2213 2312 3312",
        ("211", "211"): "1321 2321 3321",
        ("211", "13"): "2123 3123",
        ("211", "121"): "2132 3132 3231",
        ("211", "112"): "3213",
        ("13", "4"): "1222",
        ("13", "13"): "2111",
        ("121", "4"): "1223",
        ("121", "31"): "1232 1332 2331",
        ("121", "22"): "1323 2313",
        ("121", "13"): "2113 3112",
        ("121", "121"): "2131 3121 3221",
        ("121", "112"): "3212",
        ("112", "4"): "1233",
        ("112", "22"): "1322 2311",
        ("112", "13"): "2133 3122",
        ("112", "112"): "3211",
        ("1111", "4"): "1234",
        ("1111", "31"): "1243 1342 2341",
        ("1111", "22"): "1324 1423 2314 2413 3412",
        ("1111", "211"): "1432 2431 3421",
        ("1111", "13"): "2134 3124 4123",
        ("1111", "121"): "2143 3142 3241 4132 4231",
        ("1111", "112"): "3214 4213 4312",
        ("1111", "1111"): "4321",
    },
}

# T_(2,2,1) T_(1,3) at K = (4,2,1,1,1), from sigma = 32514 and tau = 2134
SHUFFLE_EXAMPLE = {
    "left": "32514",
    "right": "2134",
    "target": "42111",
    "coefficient": 6,
    "words": "372685194 376825194 376829514 736825194 736829514 768392514",
}

# U_(2,2,1) U_(1,3) at K = (4,1,1,3), from the words 11223 and 1222
CONVOLUTION_EXAMPLE = {
    "left": "11223",
    "right": "1222",
    "target": "4113",
    "coefficient": 4,
    "printed_coefficient": 6,
    "words": "112241333 113341222 112231444 223341222",
}

WC_EXAMPLE = {
    "word": "1543421323",
    "positions": (2, 5, 7, 9, 10),
    "composition": "23221",
}


def published_matrix(pair, n):
    """Rows of the published matrix as integers."""
    text = MATRICES[(Pair(pair), n)]
    return [
        [0 if cell == "." else int(cell) for cell in line.split()]
        for line in text.strip().splitlines()
    ]


def published_text(pair, n):
    """The published matrix in the plain-text format written by the serializers."""
    return MATRICES[(Pair(pair), n)].lstrip("\n")


def published_witnesses(pair, n):
    """{(statistic, recoil-or-descent): sorted words}, compositions parsed."""
    return {
        (parse_composition(row), parse_composition(column)): sorted(words.split())
        for (row, column), words in WITNESSES[(Pair(pair), n)].items()
    }
