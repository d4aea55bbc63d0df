"""Reference fields and matrices used by ``verify-paper`` and the tests.

Polynomials are coefficient lists c0..cn. Bases are rows of power-basis
coordinates of a root of the defining polynomial.
"""

from fractions import Fraction as Fr
from importlib.resources import files

OCTIC_F = [15, 0, 0, 0, 0, 0, 0, 0, 1]
OCTIC_L = [240, 0, 0, 0, 0, 0, 0, 0, 1]
OCTIC_DISC = 2**10 * 3**7 * 5**7


def _row(denominator, *exponents):
    row = [Fr(0)] * 8
    for k in exponents:
        row[k] += Fr(1, denominator)
    return row


def _weighted(denominator, weights):
    return [Fr(weights.get(k, 0), denominator) for k in range(8)]


OCTIC_BASIS_F = [
    _row(1, 0),
    _row(1, 1),
    _row(1, 2),
    _row(1, 3),
    _row(2, 4, 0),
    _row(2, 5, 1),
    _row(4, 6, 4, 2, 0),
    _row(8, 7, 6, 5, 4, 3, 2, 1, 0),
]

OCTIC_BASIS_L = [
    _row(1, 0),
    _row(1, 1),
    _row(2, 2),
    _weighted(4, {3: 1, 1: 2}),
    _weighted(8, {4: 1, 0: 4}),
    _weighted(16, {5: 1, 2: 4, 1: 12, 0: 8}),
    _weighted(32, {6: 1, 4: 2, 2: 4, 0: 8}),
    _weighted(64, {7: 1, 5: 2, 4: 4, 3: 12, 2: 16, 1: 24, 0: 16}),
]

OCTIC_GRAM_F = [
    [8, 0, 0, 0, 4, 0, 2, 1],
    [0, 0, 0, 0, 0, 0, 0, -15],
    [0, 0, 0, 0, 0, 0, -30, -15],
    [0, 0, 0, 0, 0, -60, 0, -15],
    [4, 0, 0, 0, -28, 0, -14, -7],
    [0, 0, 0, -60, 0, 0, 0, -15],
    [2, 0, -30, 0, -14, 0, -22, -11],
    [1, -15, -15, -15, -7, -15, -11, -13],
]

OCTIC_GRAM_L = [
    [8, 0, 0, 0, 4, 4, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, -30],
    [0, 0, 0, 0, 0, 0, -30, 0],
    [0, 0, 0, 0, 0, -30, 0, -30],
    [4, 0, 0, 0, -28, 2, -14, -14],
    [4, 0, 0, -30, 2, 2, -14, -44],
    [2, 0, -30, 0, -14, -14, -22, -22],
    [2, -30, 0, -30, -14, -44, -22, -52],
]

CUBIC_DISC = -3299
CUBICS = [
    [11, 2, 0, 1],
    [27, -16, 0, 1],
    [-8, 9, -1, 1],
    [10, 3, -1, 1],
]

QUARTIC_DISC = 7537
QUARTICS = [
    [5, -4, 5, -1, 1],
    [6, 5, -3, -2, 1],
]
# x^4 + 4x^2 - 5x + 2 is printed beside the pair above; its discriminant is 7573.
QUARTIC_MISPRINT = [2, -5, 4, 0, 1]
QUARTIC_MISPRINT_DISC = 7573

QUINTIC_DISC = 34129
QUINTICS = [
    [-1, -2, -1, 2, 0, 1],
    [4, -2, 1, 0, -2, 1],
]

SEPTIC_DISC = 2741**2
SEPTIC_SIGNATURE = (3, 2)
SEPTIC_F = [1, -1, -4, 1, 4, 0, -3, 1]
SEPTIC_L = [-1, -1, -2, -3, 4, 2, -3, 1]
SEPTIC_SPLIT_PRIME = 2741
SEPTIC_SPLIT_F = ((1, 1), (1, 1), (1, 1), (2, 2))
SEPTIC_SPLIT_L = ((1, 1), (2, 1), (2, 1), (1, 2))

SPINOR_DISC = 151717
SPINOR_TRIPLE = [
    [1, 0, -10, -1, 19],
    [1, 0, -18, -23, 16],
    [1, -1, -10, 8, 17],
]
# 16x^4 - 23x^2 - 18x + 1, as printed, is not totally real.
SPINOR_MISPRINT = [1, -18, -23, 0, 16]


def quartic_table_path():
    """The shipped table of totally real quartic fields (see tools/make_quartic_table.py)."""
    return files("tracefields") / "data" / "quartic_fields.txt"
