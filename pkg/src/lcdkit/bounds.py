"""Upper bounds on minimum distance, in exact integer arithmetic.

Two of these are classical and safe to assert against any linear code.
The third, stated_upper_bound, is a recorded formula kept for comparison
with search results; it is a claim under test in the claim catalog, not a
trusted invariant, and exhaustive search refutes it over GF(3).
"""

from __future__ import annotations


def _check(n: int, k: int, q: int) -> None:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n} k={k}")
    if q < 2:
        raise ValueError(f"need a field size q >= 2, got {q}")


def stated_upper_bound(n: int, k: int, q: int) -> int:
    """floor(n * q^(k-1) / (q^k - 1)).

    For q = 2 this coincides with plotkin_average_bound and is valid; for
    larger q it undercounts (it omits the q - 1 factor of the average
    nonzero-codeword weight) and genuinely fails -- see claim "remark-bound".
    """
    _check(n, k, q)
    return (n * q ** (k - 1)) // (q**k - 1)


def plotkin_average_bound(n: int, k: int, q: int) -> int:
    """floor(n * q^(k-1) * (q-1) / (q^k - 1)): the average-weight bound.

    The total weight of all q^k codewords is at most n * q^(k-1) * (q-1)
    (each coordinate is nonzero in at most q^(k-1) * (q-1) codewords), and
    the minimum over the q^k - 1 nonzero codewords is at most their average.
    """
    _check(n, k, q)
    return (n * q ** (k - 1) * (q - 1)) // (q**k - 1)


def singleton_bound(n: int, k: int) -> int:
    """n - k + 1."""
    _check(n, k, 2)
    return n - k + 1
