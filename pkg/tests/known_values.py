"""Frozen expected values for the worked examples used across the tests."""

from kgroth.tableaux import SetValuedFilling


def filling(shape, cellmap) -> SetValuedFilling:
    return SetValuedFilling(tuple(shape), {c: frozenset(s) for c, s in cellmap.items()})


# Standard fillings of degree 5 on the core (3,1,1) at k=2.  The first eight
# carry the documented reading words 21435, 52134, 52134, 32145, 32145,
# 51324, 51243, 41253; the last two complete the enumeration (their words
# are 54123 and 21354).
STANDARD_DEG5_K2_DOCUMENTED = [
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {3, 4}, (0, 2): {5}, (1, 0): {2}, (2, 0): {3, 4}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {3}, (0, 2): {4}, (1, 0): {2}, (2, 0): {3, 5}}),
    filling((3, 1, 1), {(0, 0): {1, 2}, (0, 1): {3}, (0, 2): {4}, (1, 0): {4}, (2, 0): {5}}),
    filling((3, 1, 1), {(0, 0): {1, 2}, (0, 1): {4}, (0, 2): {5}, (1, 0): {3}, (2, 0): {4}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {4}, (0, 2): {5}, (1, 0): {2, 3}, (2, 0): {4}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2, 3}, (0, 2): {4}, (1, 0): {4}, (2, 0): {5}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2}, (0, 2): {3, 4}, (1, 0): {3, 4}, (2, 0): {5}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2}, (0, 2): {3, 5}, (1, 0): {3}, (2, 0): {4}}),
]

STANDARD_DEG5_K2_UNDOCUMENTED = [
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2}, (0, 2): {3}, (1, 0): {3}, (2, 0): {4, 5}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {3}, (0, 2): {4, 5}, (1, 0): {2}, (2, 0): {3}}),
]

DOCUMENTED_READING_WORDS = [
    (2, 1, 4, 3, 5),
    (5, 2, 1, 3, 4),
    (5, 2, 1, 3, 4),
    (3, 2, 1, 4, 5),
    (3, 2, 1, 4, 5),
    (5, 1, 3, 2, 4),
    (5, 1, 2, 4, 3),
    (4, 1, 2, 5, 3),
]

UNDOCUMENTED_READING_WORDS = [(5, 4, 1, 2, 3), (2, 1, 3, 5, 4)]

# Weight (2,1,1,1) members on the same core; the documented three plus the
# completion.
SSASV_W2111_DOCUMENTED = [
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2, 3}, (0, 2): {4}, (1, 0): {4}, (2, 0): {5}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2}, (0, 2): {3, 4}, (1, 0): {3, 4}, (2, 0): {5}}),
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2}, (0, 2): {3, 5}, (1, 0): {3}, (2, 0): {4}}),
]

SSASV_W2111_UNDOCUMENTED = [
    filling((3, 1, 1), {(0, 0): {1}, (0, 1): {2}, (0, 2): {3}, (1, 0): {3}, (2, 0): {4, 5}}),
]

# The three weight-(1,3,1,2,1,1) fillings on the core (8,5,2,1) at k=3,
# written with compressed letters (letter = alphabet block index).
KTAB_8521_W131211 = [
    filling(
        (8, 5, 2, 1),
        {
            (0, 0): {1}, (0, 1): {2}, (0, 2): {2}, (0, 3): {2}, (0, 4): {3},
            (0, 5): {4}, (0, 6): {4}, (0, 7): {6},
            (1, 0): {2}, (1, 1): {3}, (1, 2): {4}, (1, 3): {4}, (1, 4): {6},
            (2, 0): {4}, (2, 1): {6},
            (3, 0): {5},
        },
    ),
    filling(
        (8, 5, 2, 1),
        {
            (0, 0): {1}, (0, 1): {2}, (0, 2): {2}, (0, 3): {2}, (0, 4): {3},
            (0, 5): {4}, (0, 6): {4}, (0, 7): {5},
            (1, 0): {2}, (1, 1): {3}, (1, 2): {4}, (1, 3): {4}, (1, 4): {5},
            (2, 0): {4}, (2, 1): {5},
            (3, 0): {6},
        },
    ),
    filling(
        (8, 5, 2, 1),
        {
            (0, 0): {1}, (0, 1): {2}, (0, 2): {2}, (0, 3): {2}, (0, 4): {4},
            (0, 5): {4}, (0, 6): {5}, (0, 7): {6},
            (1, 0): {2}, (1, 1): {4}, (1, 2): {4}, (1, 3): {5}, (1, 4): {6},
            (2, 0): {3}, (2, 1): {6},
            (3, 0): {4},
        },
    ),
]

# Signed expansions of the two worked strip products at k=3 on (3,2,1).
ROW_PIERI_321_R2_K3 = {
    (3, 2, 2, 1): 1,
    (3, 3, 1, 1): 1,
    (3, 2, 1, 1): -1,
    (3, 2, 2): -2,
    (3, 2, 1): 1,
}

COL_PIERI_321_R2_K3 = {
    (3, 2, 1, 1, 1): 1,
    (3, 2, 2, 1): 1,
    (3, 2, 1, 1): -1,
    (3, 2, 2): -1,
    (3, 2, 1): 1,
}
