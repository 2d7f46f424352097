"""
Hand-checked squares shared by the test suites.
"""
from latin.squares import Cell, LatinSquare, Transversal


# Order 5 cyclic square with a decomposition into five transversals.
# TRANSVERSAL_GRID[i][j] is the index of the transversal holding (i, j).
CYCLIC_FIVE = LatinSquare.cyclic(5)

TRANSVERSAL_GRID = (
    (0, 1, 2, 3, 4),
    (3, 4, 0, 1, 2),
    (1, 2, 3, 4, 0),
    (4, 0, 1, 2, 3),
    (2, 3, 4, 0, 1),
)

# The published mate; it is TRANSVERSAL_GRID with labels 2, 3, 4 renamed
# to 4, 2, 3.
FIVE_MATE = LatinSquare.unchecked((
    (0, 1, 4, 2, 3),
    (2, 3, 0, 1, 4),
    (1, 4, 2, 3, 0),
    (3, 0, 1, 4, 2),
    (4, 2, 3, 0, 1),
))


def five_transversals():
    return [
        Transversal.of(5, [
            Cell(i, j)
            for i in range(5) for j in range(5)
            if TRANSVERSAL_GRID[i][j] == k
        ])
        for k in range(5)
    ]


# An order 10 transversal representation pair with Myrvold colourings.
SQUARE_U = LatinSquare.unchecked((
    (0, 2, 3, 4, 5, 6, 1, 7, 8, 9),
    (1, 0, 4, 9, 7, 2, 6, 5, 3, 8),
    (3, 9, 8, 2, 4, 1, 0, 6, 7, 5),
    (4, 1, 7, 0, 3, 5, 9, 8, 6, 2),
    (5, 8, 0, 1, 2, 7, 3, 9, 4, 6),
    (8, 3, 1, 6, 9, 0, 4, 2, 5, 7),
    (2, 7, 6, 8, 0, 9, 5, 3, 1, 4),
    (9, 6, 2, 5, 1, 8, 7, 4, 0, 3),
    (6, 4, 5, 7, 8, 3, 2, 1, 9, 0),
    (7, 5, 9, 3, 6, 4, 8, 0, 2, 1),
))

DARK_U = (
    (6, 1), (6, 3), (7, 3), (7, 5), (8, 0), (8, 1),
    (8, 2), (8, 4), (9, 0), (9, 2), (9, 4), (9, 5),
)

# Same quotas as DARK_U, but the first two nonwhite cells of each column;
# white tails still tally to U's profile while the dark counts do not
DARK_U_MOVED = (
    (3, 0), (4, 0), (2, 1), (4, 1), (1, 2), (2, 2),
    (0, 3), (1, 3), (0, 4), (1, 4), (0, 5), (3, 5),
)

SQUARE_W = LatinSquare.unchecked((
    (0, 1, 8, 3, 7, 9, 2, 4, 5, 6),
    (1, 6, 7, 4, 2, 0, 8, 3, 9, 5),
    (2, 5, 4, 6, 3, 1, 7, 9, 8, 0),
    (3, 0, 2, 7, 9, 6, 5, 8, 4, 1),
    (5, 9, 6, 0, 1, 3, 4, 7, 2, 8),
    (6, 8, 3, 5, 4, 2, 9, 0, 1, 7),
    (7, 2, 1, 9, 8, 5, 3, 6, 0, 4),
    (8, 4, 9, 2, 0, 7, 1, 5, 6, 3),
    (9, 3, 0, 8, 5, 4, 6, 1, 7, 2),
    (4, 7, 5, 1, 6, 8, 0, 2, 3, 9),
))

DARK_W = (
    (5, 0), (5, 3), (6, 0), (6, 4), (7, 1), (7, 2),
    (8, 3), (8, 5), (9, 1), (9, 2), (9, 4), (9, 5),
)

# Row 0 of U read against W
W_CELLS_OF_U_ROW_0 = (
    (0, 0), (6, 1), (5, 2), (1, 3), (8, 4),
    (3, 5), (7, 6), (4, 7), (2, 8), (9, 9),
)

# Type counts (p1, p2, p3, p4) of each square's decomposition
U_TYPE_COUNTS = (5, 4, 1, 0)
W_TYPE_COUNTS = (6, 2, 2, 0)
