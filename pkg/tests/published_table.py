"""Published character table of the non-quotient irreducibles of SL_2(Z/9Z).

Rows follow the published class representatives; columns follow the published
labels R_k(chi, Delta, sigma) (k = 2 columns use chi = 0 for the trivial character of C).
"""

import numpy as np

z3 = np.exp(2j * np.pi / 3)
z12 = np.exp(2j * np.pi / 12)

CLASS_REPS = [
    ((1, 0), (0, 1)),
    ((8, 0), (0, 8)),
    ((4, 3), (3, 7)),
    ((5, 6), (6, 2)),
    ((0, 1), (8, 0)),
    ((8, 8), (8, 7)),
    ((1, 1), (1, 2)),
    ((4, 0), (6, 7)),
    ((5, 0), (3, 2)),
    ((1, 0), (1, 1)),
    ((8, 0), (8, 8)),
    ((4, 3), (7, 1)),
    ((5, 6), (2, 8)),
    ((7, 6), (4, 1)),
    ((2, 3), (5, 8)),
    ((1, 0), (2, 1)),
    ((8, 0), (7, 8)),
    ((4, 3), (2, 4)),
    ((5, 6), (7, 5)),
    ((7, 6), (2, 7)),
    ((2, 3), (7, 2)),
    ((1, 3), (0, 1)),
    ((8, 6), (0, 8)),
    ((4, 6), (3, 7)),
    ((5, 3), (6, 2)),
]

COLUMNS = [
    "R_0(1,1,1)", "R_0(2,1,1)", "R_0(4,1,1)", "R_0(5,1,1)", "R_0(1,2,1)", "R_0(2,2,1)", "R_1(1,1,1)", "R_1(2,1,1)", "R_1(1,2,1)", "R_1(2,2,1)", "R_1(1,1,2)", "R_1(2,1,2)", "R_1(1,2,2)", "R_1(2,2,2)", "R_2(0,1)", "R_2(1,1)", "R_2(0,2)", "R_2(1,2)",
]

_ROWS = [
    ["6", "6", "6", "6", "12", "12", "4", "4", "4", "4", "4", "4", "4", "4", "4", "4", "4", "4"],
    ["-6", "6", "6", "-6", "-12", "12", "4", "-4", "4", "-4", "4", "-4", "4", "-4", "4", "-4", "4", "-4"],
    ["3", "3", "3", "3", "0", "0", "-2", "-2", "-2", "-2", "-2", "-2", "-2", "-2", "-2", "-2", "-2", "-2"],
    ["-3", "3", "3", "-3", "0", "0", "-2", "2", "-2", "2", "-2", "2", "-2", "2", "-2", "2", "-2", "2"],
    ["0", "0", "0", "0", "-3", "-3", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"],
    ["0", "0", "0", "0", "3", "-3", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1", "1", "-1"],
    ["-3", "-3", "-3", "-3", "3", "3", "-z3 + 2*z3**2", "-z3 + 2*z3**2", "2*z3 - z3**2", "2*z3 - z3**2", "-z3 + 2*z3**2", "-z3 + 2*z3**2", "2*z3 - z3**2", "2*z3 - z3**2", "-z3 + 2*z3**2", "-z3 + 2*z3**2", "2*z3 - z3**2", "2*z3 - z3**2"],
    ["3", "-3", "-3", "3", "-3", "3", "-z3 + 2*z3**2", "z3 - 2*z3**2", "2*z3 - z3**2", "-2*z3 + z3**2", "-z3 + 2*z3**2", "z3 - 2*z3**2", "2*z3 - z3**2", "-2*z3 + z3**2", "-z3 + 2*z3**2", "z3 - 2*z3**2", "2*z3 - z3**2", "-2*z3 + z3**2"],
    ["-3", "-3", "-3", "-3", "3", "3", "2*z3 - z3**2", "2*z3 - z3**2", "-z3 + 2*z3**2", "-z3 + 2*z3**2", "2*z3 - z3**2", "2*z3 - z3**2", "-z3 + 2*z3**2", "-z3 + 2*z3**2", "2*z3 - z3**2", "2*z3 - z3**2", "-z3 + 2*z3**2", "-z3 + 2*z3**2"],
    ["3", "-3", "-3", "3", "-3", "3", "2*z3 - z3**2", "-2*z3 + z3**2", "-z3 + 2*z3**2", "z3 - 2*z3**2", "2*z3 - z3**2", "-2*z3 + z3**2", "-z3 + 2*z3**2", "z3 - 2*z3**2", "2*z3 - z3**2", "-2*z3 + z3**2", "-z3 + 2*z3**2", "z3 - 2*z3**2"],
    ["0", "-2", "2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["-z12**7 + z12**11", "1", "-1", "z12**7 - z12**11", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["z12**7 - z12**11", "1", "-1", "-z12**7 + z12**11", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "-z3", "-z3", "-z3**2", "-z3**2", "-z3**2", "-z3**2", "-z3", "-z3", "1", "1", "1", "1"],
    ["0", "0", "0", "0", "0", "0", "-z3", "z3", "-z3**2", "z3**2", "-z3**2", "z3**2", "-z3", "z3", "1", "-1", "1", "-1"],
    ["0", "0", "0", "0", "0", "0", "-1", "-1", "-1", "-1", "-z3", "-z3", "-z3**2", "-z3**2", "z3**2", "z3**2", "z3", "z3"],
    ["0", "0", "0", "0", "0", "0", "-1", "1", "-1", "1", "-z3", "z3", "-z3**2", "z3**2", "z3**2", "-z3**2", "z3", "-z3"],
    ["0", "0", "0", "0", "0", "0", "-z3**2", "-z3**2", "-z3", "-z3", "-1", "-1", "-1", "-1", "z3", "z3", "z3**2", "z3**2"],
    ["0", "0", "0", "0", "0", "0", "-z3**2", "z3**2", "-z3", "z3", "-1", "1", "-1", "1", "z3", "-z3", "z3**2", "-z3**2"],
    ["0", "0", "0", "0", "0", "0", "-z3**2", "-z3**2", "-z3", "-z3", "-z3", "-z3", "-z3**2", "-z3**2", "1", "1", "1", "1"],
    ["0", "0", "0", "0", "0", "0", "-z3**2", "z3**2", "-z3", "z3", "-z3", "z3", "-z3**2", "z3**2", "1", "-1", "1", "-1"],
    ["0", "0", "0", "0", "0", "0", "-z3", "-z3", "-z3**2", "-z3**2", "-1", "-1", "-1", "-1", "z3**2", "z3**2", "z3", "z3"],
    ["0", "0", "0", "0", "0", "0", "-z3", "z3", "-z3**2", "z3**2", "-1", "1", "-1", "1", "z3**2", "-z3**2", "z3", "-z3"],
    ["0", "0", "0", "0", "0", "0", "-1", "-1", "-1", "-1", "-z3**2", "-z3**2", "-z3", "-z3", "z3", "z3", "z3**2", "z3**2"],
    ["0", "0", "0", "0", "0", "0", "-1", "1", "-1", "1", "-z3**2", "z3**2", "-z3", "z3", "z3", "-z3", "z3**2", "-z3**2"],
]

TABLE = np.array([[complex(eval(c, {"z3": z3, "z12": z12})) for c in row] for row in _ROWS])
