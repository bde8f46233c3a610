"""Search for maximal-distance LCD codes over small prime fields.

The exhaustive engine walks systematic generators [I_k | A] with the
columns of A taken as a sorted multiset: every [n, k] code is
column-permutation-equivalent to a systematic one, and column permutation
changes neither the Gram matrix nor any codeword weight, so the maximum
LCD distance over these canonical forms is the maximum over all codes.
Column vectors are identified with integers via big-endian base-p digits,
which makes numeric order on ids coincide with lexicographic order on
columns; iteration order is therefore the lexicographic order on sorted
column multisets, and ties for the best distance resolve to the
lexicographically smallest A, making every output byte-reproducible.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from lcdkit.code import BudgetExceededError, LinearCode
from lcdkit.field import check_prime
from lcdkit.matrix import MatGF

#: Default cap on canonical forms x codewords-per-form for one exhaustive cell.
DEFAULT_SEARCH_BUDGET = 50_000_000

_BATCH_FORMS = 4096
_PARALLEL_CHUNK = 100_000


# -- canonical systematic forms ---------------------------------------------------


@dataclass(frozen=True)
class CanonicalSystematic:
    """A systematic [I_k | A] generator, A given as a sorted column multiset."""

    n: int
    k: int
    p: int
    columns: tuple[int, ...]  # column ids in [0, p^k), nondecreasing

    def __post_init__(self):
        check_prime(self.p)
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got n={self.n} k={self.k}")
        if len(self.columns) != self.n - self.k:
            raise ValueError("column multiset must have n - k entries")
        if any(not 0 <= c < self.p**self.k for c in self.columns):
            raise ValueError("column id out of range")
        if list(self.columns) != sorted(self.columns):
            raise ValueError("columns must be sorted nondecreasing")

    def to_generator(self) -> MatGF:
        vecs = _tables(self.p, self.k).vecs
        a = np.zeros((self.k, self.n), dtype=np.int64)
        a[:, : self.k] = np.eye(self.k, dtype=np.int64)
        if self.columns:
            a[:, self.k :] = vecs[list(self.columns)].T
        return MatGF(a, self.p)


def count_canonical(n: int, k: int, p: int, sign_reduction: bool = False) -> int:
    """Number of canonical forms: multisets of size n-k over the column ids."""
    check_prime(p)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n} k={k}")
    v = len(_column_ids(p, k, sign_reduction))
    r = n - k
    return math.comb(r + v - 1, v - 1) if v > 1 else 1


def canonical_iter(n: int, k: int, p: int, budget: int | None = None):
    """Yield every canonical form exactly once, in deterministic lex order."""
    _check_search_budget(n, k, p, budget, False)
    for cols in itertools.combinations_with_replacement(range(p**k), n - k):
        yield CanonicalSystematic(n, k, p, cols)


def _check_search_budget(n, k, p, budget, sign_reduction) -> int:
    forms = count_canonical(n, k, p, sign_reduction)
    cost = forms * p**k
    cap = DEFAULT_SEARCH_BUDGET if budget is None else budget
    if cost > cap:
        raise BudgetExceededError(
            f"cell (n={n}, k={k}, p={p}) needs {forms} canonical forms x "
            f"{p**k} codewords = {cost} units, over the budget of {cap}"
        )
    return forms


def _column_ids(p: int, k: int, sign_reduction: bool) -> tuple[int, ...]:
    if not sign_reduction:
        return tuple(range(p**k))
    if p != 3:
        raise ValueError("sign reduction applies to GF(3) only")
    vecs = _tables(p, k).vecs
    keep = [0]
    for c in range(1, p**k):
        lead = next(int(x) for x in vecs[c] if x)
        if lead == 1:
            keep.append(c)
    return tuple(keep)


# -- precomputed evaluation tables -------------------------------------------------


@dataclass(frozen=True)
class _EvalTables:
    vecs: np.ndarray  # (p^k, k)     column id -> column vector
    wt_msg: np.ndarray  # (p^k - 1,)   weight of each nonzero message
    nz: np.ndarray  # (p^k - 1, p^k) msg x column -> 1 if inner product != 0
    outer: np.ndarray  # (p^k, k, k)  column id -> outer product v v^T mod p


@lru_cache(maxsize=32)
def _tables(p: int, k: int) -> _EvalTables:
    total = p**k
    ids = np.arange(total, dtype=np.int64)
    shifts = p ** np.arange(k - 1, -1, -1, dtype=np.int64)  # big-endian digits
    vecs = (ids[:, None] // shifts[None, :]) % p
    wt_msg = np.count_nonzero(vecs[1:], axis=1).astype(np.int64)
    inner = (vecs[1:] @ vecs.T) % p
    nz = (inner != 0).astype(np.int8)
    outer = (vecs[:, :, None] * vecs[:, None, :]) % p
    for arr in (vecs, wt_msg, nz, outer):
        arr.setflags(write=False)
    return _EvalTables(vecs, wt_msg, nz, outer)


def _dets_mod(grams: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of small square matrices."""
    k = grams.shape[1]
    if k == 1:
        return grams[:, 0, 0] % p
    if k == 2:
        return (grams[:, 0, 0] * grams[:, 1, 1] - grams[:, 0, 1] * grams[:, 1, 0]) % p
    if k == 3:
        a, b, c = grams[:, 0, 0], grams[:, 0, 1], grams[:, 0, 2]
        d, e, f = grams[:, 1, 0], grams[:, 1, 1], grams[:, 1, 2]
        g, h, i = grams[:, 2, 0], grams[:, 2, 1], grams[:, 2, 2]
        return (a * e * i + b * f * g + c * d * h - c * e * g - b * d * i - a * f * h) % p
    out = np.empty(grams.shape[0], dtype=np.int64)
    for idx in range(grams.shape[0]):
        out[idx] = MatGF(grams[idx] % p, p).det()
    return out


# -- table entries ------------------------------------------------------------------


@dataclass(frozen=True)
class LcdTableEntry:
    """One (n, k, q) cell: the best LCD distance found and how.

    The witness is revalidated on creation: it must generate an LCD code
    whose exact minimum distance equals d_lcd.  A random-method entry with
    no LCD code found carries witness None and d_lcd 0.
    """

    n: int
    k: int
    q: int
    d_lcd: int
    method: str
    witness: MatGF | None
    explored_count: int
    elapsed_ms: float = field(compare=False, default=0.0)
    seed: int | None = None

    def __post_init__(self):
        if self.method not in ("exhaustive", "random"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.witness is None:
            if self.method != "random" or self.d_lcd != 0:
                raise ValueError("only a failed random search may lack a witness")
            return
        code = LinearCode(self.witness)
        if (code.p, code.n, code.k) != (self.q, self.n, self.k):
            raise ValueError("witness shape disagrees with the cell")
        if not code.is_lcd():
            raise ValueError("witness is not an LCD code")
        d = code.min_distance()
        if d != self.d_lcd:
            raise ValueError(f"witness distance {d} != recorded d_lcd {self.d_lcd}")


@dataclass(frozen=True)
class SkippedCell:
    """Marker for a table cell that was not searched, with the reason."""

    n: int
    k: int
    q: int
    reason: str


@dataclass(frozen=True)
class MonotonicityViolation:
    k: int
    q: int
    n: int
    d_at_n: int
    d_at_next: int


# -- exhaustive search ---------------------------------------------------------------


def _scan_range(n: int, k: int, p: int, ids: tuple[int, ...], start: int, stop: int):
    """Best (d, form, rank) over canonical forms with ranks [start, stop).

    Returns (best_d, best_columns, rank_of_best, forms_scanned); best_d is -1
    when no LCD form occurs in the range.  First achiever wins ties, which
    in lex iteration order means the smallest canonical A.
    """
    tables = _tables(p, k)
    eye = np.eye(k, dtype=np.int64)
    best_d, best_form, best_rank = -1, None, -1
    scanned = 0
    stream = itertools.islice(
        itertools.combinations_with_replacement(ids, n - k), start, stop
    )
    offset = start
    while True:
        batch = list(itertools.islice(stream, _BATCH_FORMS))
        if not batch:
            break
        scanned += len(batch)
        cols = np.array(batch, dtype=np.int64).reshape(len(batch), n - k)
        grams = (tables.outer[cols].sum(axis=1) + eye) % p
        lcd = _dets_mod(grams, p) != 0
        if lcd.any():
            weights = tables.wt_msg[:, None] + tables.nz[:, cols].sum(
                axis=2, dtype=np.int64
            )
            d_form = weights.min(axis=0)
            d_form[~lcd] = -1
            local_best = int(d_form.max())
            if local_best > best_d:
                local_idx = int(np.argmax(d_form))
                best_d = local_best
                best_form = batch[local_idx]
                best_rank = offset + local_idx
        offset += len(batch)
    return best_d, best_form, best_rank, scanned


def lcd_max_exhaustive(
    n: int,
    k: int,
    p: int,
    budget: int | None = None,
    jobs: int = 1,
    sign_reduction: bool = False,
) -> LcdTableEntry:
    """Exact maximum minimum-distance over all [n, k]_p LCD codes.

    Ties among witnesses break to the lexicographically smallest canonical
    A block.  Parallel runs partition the canonical stream into contiguous
    chunks and merge deterministically, so the result is identical to a
    serial run.
    """
    t0 = time.perf_counter()
    forms = _check_search_budget(n, k, p, budget, sign_reduction)
    ids = _column_ids(p, k, sign_reduction)
    results = []
    if jobs <= 1 or forms <= 2 * _PARALLEL_CHUNK:
        results.append(_scan_range(n, k, p, ids, 0, forms))
    else:
        spans = [
            (start, min(start + _PARALLEL_CHUNK, forms))
            for start in range(0, forms, _PARALLEL_CHUNK)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_scan_range, n, k, p, ids, start, stop)
                for start, stop in spans
            ]
            results = [f.result() for f in futures]
    best_d, best_form, best_rank = -1, None, -1
    explored = 0
    for d, form, rank, scanned in results:
        explored += scanned
        if d > best_d:
            best_d, best_form, best_rank = d, form, rank
    if best_form is None:  # unreachable: the all-zero A block is always LCD
        raise AssertionError("no LCD code found in an exhaustive scan")
    witness = CanonicalSystematic(n, k, p, tuple(best_form)).to_generator()
    elapsed = (time.perf_counter() - t0) * 1000.0
    return LcdTableEntry(
        n=n,
        k=k,
        q=p,
        d_lcd=best_d,
        method="exhaustive",
        witness=witness,
        explored_count=explored,
        elapsed_ms=elapsed,
    )


# -- randomized search ----------------------------------------------------------------


def lcd_max_random(
    n: int,
    k: int,
    p: int,
    trials: int,
    seed: int,
    budget: int | None = None,
) -> LcdTableEntry:
    """Best LCD code among `trials` uniformly drawn full-rank generators.

    A lower-bound prospector for cells beyond the exhaustive budget:
    reproducible given the seed, and never above the exhaustive value.
    Rank-deficient draws are rejected and redrawn (with a hard cap).
    """
    check_prime(p)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n} k={k}")
    if trials < 1:
        raise ValueError(f"need trials >= 1, got {trials}")
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    best_d, best_gen = 0, None
    accepted = 0
    attempts_left = 1000 + 60 * trials
    while accepted < trials:
        if attempts_left <= 0:
            raise RuntimeError(
                f"could not draw {trials} full-rank generators for "
                f"(n={n}, k={k}, p={p}); resampling cap hit"
            )
        attempts_left -= 1
        cand = MatGF(rng.integers(0, p, size=(k, n), dtype=np.int64), p)
        if cand.rank() != k:
            continue
        accepted += 1
        code = LinearCode(cand)
        if not code.is_lcd():
            continue
        d = code.min_distance(budget)
        if d > best_d:
            best_d, best_gen = d, cand
    elapsed = (time.perf_counter() - t0) * 1000.0
    return LcdTableEntry(
        n=n,
        k=k,
        q=p,
        d_lcd=best_d,
        method="random",
        witness=best_gen,
        explored_count=trials,
        elapsed_ms=elapsed,
        seed=seed,
    )


# -- tables ---------------------------------------------------------------------------


def _cell_seed(master: int, n: int, k: int) -> int:
    return int(np.random.SeedSequence(master, spawn_key=(n, k)).generate_state(1)[0])


def build_table(
    n_values,
    k_values,
    p: int,
    budget: int | None = None,
    jobs: int = 1,
    trials: int = 2000,
    seed: int | None = None,
) -> list:
    """One entry per (n, k) cell, in ascending (n, k) order.

    Cells within the exhaustive budget are searched exactly; cells beyond
    it fall back to seeded random prospecting with the method recorded.
    Cells with an empty hypothesis (k > n) are marked, never silently
    dropped.
    """
    n_values = sorted(set(n_values))
    k_values = sorted(set(k_values))
    if not n_values or not k_values:
        raise ValueError("need at least one n and one k")
    master = seed if seed is not None else int(np.random.SeedSequence().generate_state(1)[0])
    out = []
    for n in n_values:
        for k in k_values:
            if k > n:
                out.append(SkippedCell(n=n, k=k, q=p, reason="empty cell: k > n"))
                continue
            try:
                out.append(lcd_max_exhaustive(n, k, p, budget=budget, jobs=jobs))
            except BudgetExceededError:
                out.append(
                    lcd_max_random(
                        n, k, p, trials=trials, seed=_cell_seed(master, n, k)
                    )
                )
    return out


def check_monotonicity(table) -> list[MonotonicityViolation]:
    """Dips d(n+1) < d(n) between adjacent exhaustive cells at fixed k.

    Random-method cells carry only one-sided information, so they are
    excluded; gaps in n are skipped (only adjacent exhaustive pairs count).
    """
    exact = {}
    for entry in table:
        if isinstance(entry, LcdTableEntry) and entry.method == "exhaustive":
            exact[(entry.q, entry.k, entry.n)] = entry.d_lcd
    violations = []
    for (q, k, n), d in sorted(exact.items()):
        nxt = exact.get((q, k, n + 1))
        if nxt is not None and nxt < d:
            violations.append(
                MonotonicityViolation(k=k, q=q, n=n, d_at_n=d, d_at_next=nxt)
            )
    return violations
