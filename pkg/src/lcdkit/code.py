"""Linear codes over GF(p): duals, hulls, complementary-dual checks, exact
minimum distance and weight distribution by full message enumeration.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from lcdkit.matrix import MatGF, vstack

#: Cap on the number of messages an exhaustive enumeration may visit.
DEFAULT_CODEWORD_BUDGET = 3**13

_CHUNK = 1 << 14


class RankDeficientError(ValueError):
    """Generator rows are linearly dependent."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would visit more codewords than allowed."""


def message_blocks(p: int, k: int, chunk: int = _CHUNK):
    """Yield all p**k messages as (m, k) digit arrays, in chunks.

    Message i maps to its base-p digits, least significant first; the
    ordering is stable, which keeps downstream reports deterministic.
    """
    total = p**k
    powers = p ** np.arange(k, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % p


def error_capability(d: int) -> tuple[int, int]:
    """(t, detect) for minimum distance d: corrects floor((d-1)/2), detects d-1."""
    if d < 1:
        raise ValueError(f"minimum distance must be positive, got {d}")
    return (d - 1) // 2, d - 1


@dataclass(frozen=True)
class CodeMetrics:
    """Exact invariants of one code, as computed by LinearCode.metrics()."""

    p: int
    n: int
    k: int
    d: int
    t: int
    detect: int
    weight_distribution: tuple[int, ...]
    hull_dim: int
    is_lcd: bool

    def __post_init__(self):
        dist = self.weight_distribution
        if len(dist) != self.n + 1 or dist[0] != 1:
            raise ValueError("weight distribution must span 0..n with A_0 = 1")
        if sum(dist) != self.p**self.k:
            raise ValueError("weight distribution must count all p^k codewords")
        if any(dist[w] for w in range(1, self.d)) or dist[self.d] < 1:
            raise ValueError(f"distribution inconsistent with d = {self.d}")
        if (self.t, self.detect) != error_capability(self.d):
            raise ValueError("error capability inconsistent with d")

    def as_dict(self) -> dict:
        out = asdict(self)
        out["weight_distribution"] = list(self.weight_distribution)
        return out


class LinearCode:
    """An [n, k] code over GF(p), given by a full-rank generator matrix."""

    def __init__(self, generator: MatGF):
        if generator.rows < 1:
            raise ValueError("a code needs at least one generator row")
        r = generator.rank()
        if r != generator.rows:
            raise RankDeficientError(
                f"generator rows are dependent: rank {r} < {generator.rows} rows"
            )
        self.generator = generator

    @classmethod
    def from_spanning_rows(cls, rows, p: int) -> "LinearCode":
        """Build a code from any spanning set, discarding dependent rows."""
        basis = MatGF(rows, p).row_basis()
        if basis.rows == 0:
            raise ValueError("spanning set contains only zero vectors")
        return cls(basis)

    # -- shape ----------------------------------------------------------------

    @property
    def p(self) -> int:
        return self.generator.p

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over GF({self.p}))"

    # -- membership / duality --------------------------------------------------

    def contains(self, vector) -> bool:
        """Membership test, computed two independent ways.

        Route one checks orthogonality to the dual basis; route two solves
        against the generator by elimination.  The routes must agree -- a
        disagreement means the kernel computation is broken, so it raises.
        """
        v = np.asarray(vector, dtype=np.int64) % self.p
        if v.shape != (self.n,):
            raise ValueError(f"expected a length-{self.n} word, got shape {v.shape}")
        h = self.dual_basis()
        by_dual = bool(np.all((h.arr @ v) % self.p == 0)) if h.rows else True
        by_solve = vstack([self.generator, MatGF([v], self.p)]).rank() == self.k
        if by_dual != by_solve:
            raise AssertionError("membership routes disagree; kernel basis is wrong")
        return by_dual

    def dual_basis(self) -> MatGF:
        """Basis of the dual code (0 rows when k = n)."""
        return self.generator.nullspace_basis()

    def dual(self) -> "LinearCode":
        basis = self.dual_basis()
        if basis.rows == 0:
            raise ValueError(
                f"dual of an [{self.n}, {self.n}] code is the zero code; "
                "use dual_basis() for the empty basis"
            )
        return LinearCode(basis)

    def gram(self) -> MatGF:
        return self.generator @ self.generator.transpose()

    def hull_basis(self) -> MatGF:
        """Basis of C intersect C-dual, computed from the actual subspaces."""
        return self.generator.rowspace_intersect(self.dual_basis())

    def hull_dim(self) -> int:
        """dim(C intersect C-dual) = k - rank(G G^T).

        This is the Gram route; hull_basis() is the independent subspace
        route, and the two must always agree.
        """
        return self.k - self.gram().rank()

    def is_lcd(self) -> bool:
        """Complementary-dual test: the k x k Gram matrix is invertible.

        Rank and determinant of the Gram matrix are both computed and must
        agree; this check is the keystone of everything downstream, so it
        is deliberately redundant.
        """
        g = self.gram()
        by_rank = g.rank() == self.k
        by_det = g.det() != 0
        if by_rank != by_det:
            raise AssertionError("Gram rank and determinant disagree")
        return by_det

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.gram() == MatGF.zeros(self.k, self.k, self.p)

    # -- exhaustive weight computations ---------------------------------------

    def _check_budget(self, budget) -> None:
        total = self.p**self.k
        cap = DEFAULT_CODEWORD_BUDGET if budget is None else budget
        if total > cap:
            raise BudgetExceededError(
                f"enumerating {total} codewords exceeds the budget of {cap}; "
                "raise the budget explicitly to proceed"
            )

    def weight_distribution(self, budget: int | None = None) -> tuple[int, ...]:
        """(A_0, ..., A_n) with A_w = number of codewords of weight w."""
        self._check_budget(budget)
        counts = np.zeros(self.n + 1, dtype=np.int64)
        g = self.generator.arr
        for msgs in message_blocks(self.p, self.k):
            words = (msgs @ g) % self.p
            weights = np.count_nonzero(words, axis=1)
            counts += np.bincount(weights, minlength=self.n + 1)
        return tuple(int(c) for c in counts)

    def min_distance(self, budget: int | None = None) -> int:
        """Smallest nonzero codeword weight, by enumerating all messages."""
        self._check_budget(budget)
        best = self.n + 1
        g = self.generator.arr
        for msgs in message_blocks(self.p, self.k):
            words = (msgs @ g) % self.p
            weights = np.count_nonzero(words, axis=1)
            nz = weights[np.any(msgs != 0, axis=1)]
            if nz.size:
                best = min(best, int(nz.min()))
                if best == 1:
                    break
        return best

    def metrics(self, budget: int | None = None) -> CodeMetrics:
        """All exact invariants in one frozen record."""
        dist = self.weight_distribution(budget)
        d = next(w for w in range(1, self.n + 1) if dist[w] > 0)
        t, detect = error_capability(d)
        return CodeMetrics(
            p=self.p,
            n=self.n,
            k=self.k,
            d=d,
            t=t,
            detect=detect,
            weight_distribution=dist,
            hull_dim=self.hull_dim(),
            is_lcd=self.is_lcd(),
        )
