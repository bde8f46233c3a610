"""Named generator-matrix constructions.

Each function returns a LinearCode built from an explicit generator, so
every structural claim about these families (Gram shape, distance, hull)
can be checked downstream instead of trusted.
"""

from __future__ import annotations

import warnings

import numpy as np

from lcdkit.code import LinearCode
from lcdkit.field import check_prime
from lcdkit.matrix import MatGF, block_compose


def repetition(n: int, p: int = 3) -> LinearCode:
    """The [n, 1] code spanned by the all-ones row.

    Its Gram matrix is the 1x1 matrix [n mod p], so it has a trivial hull
    exactly when p does not divide n; its minimum distance is n.
    """
    check_prime(p)
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    return LinearCode(MatGF([[1] * n], p))


def zero_prefixed_repetition(n: int, p: int = 3) -> LinearCode:
    """The [n, 1] code spanned by (0, 1, 1, ..., 1).

    Sacrifices one coordinate of the all-ones row: distance drops to n - 1,
    but the Gram entry becomes (n - 1) mod p, which rescues a trivial hull
    at lengths where the plain repetition row fails.
    """
    check_prime(p)
    if n < 2:
        raise ValueError(f"need n >= 2 for a zero-prefixed row, got {n}")
    return LinearCode(MatGF([[0] + [1] * (n - 1)], p))


def mod9_construction(case: int, m: int) -> LinearCode:
    """Two-row ternary codes of length 9m + 3 (case 3) or 9m + 4 (case 4).

    Both rows are block-constant with disjoint supports:

      case 3, n = 9m + 3:
        row 1 = 3m ones, then 3m + 2 twos, then 3m + 1 zeros
        row 2 = 6m + 2 zeros, then 3m + 1 twos
      case 4, n = 9m + 4:
        row 1 = 3m + 1 ones, then 3m + 2 twos, then 3m + 1 zeros
        row 2 = 6m + 3 zeros, then 3m + 1 twos

    Disjoint supports make the Gram matrix diagonal: diag(2, 1) in case 3
    (always invertible), diag(0, 1) in case 4 (always singular).
    """
    if case not in (3, 4):
        raise ValueError(f"case must be 3 or 4, got {case}")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"m must be a non-negative integer, got {m}")
    if m == 0:
        warnings.warn(
            "m = 0 gives a degenerate instance below the intended length range",
            stacklevel=2,
        )
    if case == 3:
        row1 = [1] * (3 * m) + [2] * (3 * m + 2) + [0] * (3 * m + 1)
        row2 = [0] * (6 * m + 2) + [2] * (3 * m + 1)
    else:
        row1 = [1] * (3 * m + 1) + [2] * (3 * m + 2) + [0] * (3 * m + 1)
        row2 = [0] * (6 * m + 3) + [2] * (3 * m + 1)
    return LinearCode(MatGF([row1, row2], 3))


def between(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """Combine two length-n codes into a [2n, k1 + k2] code.

    The generator is the block matrix

        [ G1   G1 ]
        [ G2  -G2 ]

    whose Gram matrix is block-diagonal with blocks 2 G1 G1^T and
    2 G2 G2^T.  Over a field of odd characteristic the factor 2 is a unit,
    so the result has a trivial hull exactly when both inputs do; the
    construction is rejected over GF(2), where the two copies collapse.
    """
    p = c1.p
    if c2.p != p:
        raise ValueError(f"moduli differ: {c1.p} vs {c2.p}")
    if p == 2:
        raise ValueError("combination needs odd characteristic; 2 G G^T vanishes mod 2")
    if c1.n != c2.n:
        raise ValueError(f"lengths differ: {c1.n} vs {c2.n}")
    g1, g2 = c1.generator, c2.generator
    gen = block_compose(g1, g1, g2, -g2)
    return LinearCode(gen)
