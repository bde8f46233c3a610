import dataclasses
import itertools

import numpy as np
import pytest

import lcdkit.search as search
from lcdkit.bounds import plotkin_average_bound, singleton_bound
from lcdkit.code import BudgetExceededError, LinearCode
from lcdkit.constructions import mod9_construction
from lcdkit.matrix import MatGF
from lcdkit.search import (
    CanonicalSystematic,
    LcdTableEntry,
    SkippedCell,
    build_table,
    canonical_iter,
    check_monotonicity,
    count_canonical,
    lcd_max_exhaustive,
    lcd_max_random,
)


# ---- independent oracle: scan every generator matrix ---------------------------


def lcd_max_by_full_enumeration(n, k, p):
    """Max LCD distance over all p^(k*n) candidate generators (tiny cells only).

    Distance is recomputed by hand per code; no canonical forms involved.
    """
    best = 0
    for entries in itertools.product(range(p), repeat=k * n):
        g = MatGF(np.array(entries, dtype=np.int64).reshape(k, n), p)
        if g.rank() != k or (g @ g.transpose()).det() == 0:
            continue
        d = n + 1
        for msg in itertools.product(range(p), repeat=k):
            if not any(msg):
                continue
            word = np.zeros(n, dtype=np.int64)
            for c, row in zip(msg, g.arr):
                word = (word + c * row) % p
            d = min(d, int(np.count_nonzero(word)))
        best = max(best, d)
    return best


# ---- canonical enumeration ---------------------------------------------------------


def test_count_canonical_values():
    assert count_canonical(3, 2, 3) == 9
    assert count_canonical(4, 2, 3) == 45
    assert count_canonical(12, 2, 3) == 43758
    assert count_canonical(5, 5, 3) == 1  # no A columns at all


def test_canonical_iter_is_sorted_unique_deterministic():
    forms = list(canonical_iter(4, 2, 3))
    assert len(forms) == 45
    seen = {f.columns for f in forms}
    assert len(seen) == 45
    for f in forms:
        assert list(f.columns) == sorted(f.columns)
    assert forms == list(canonical_iter(4, 2, 3))


def test_canonical_iter_budget_message_names_count():
    with pytest.raises(BudgetExceededError) as exc:
        list(canonical_iter(30, 2, 3))
    assert "30260340" in str(exc.value)


def test_canonical_form_validation():
    with pytest.raises(ValueError):
        CanonicalSystematic(4, 2, 3, (3, 1))  # not sorted
    with pytest.raises(ValueError):
        CanonicalSystematic(4, 2, 3, (0, 9))  # id out of range
    with pytest.raises(ValueError):
        CanonicalSystematic(4, 2, 3, (0,))  # wrong multiset size


def test_to_generator_layout():
    form = CanonicalSystematic(4, 2, 3, (1, 3))
    # id 1 -> column (0,1); id 3 -> column (1,0), big-endian digits
    assert form.to_generator() == MatGF([[1, 0, 0, 1], [0, 1, 1, 0]], 3)


# ---- exhaustive search ---------------------------------------------------------------


def test_exhaustive_matches_full_enumeration_oracle():
    for n, k, p in [(2, 1, 2), (3, 1, 3), (4, 1, 3), (3, 2, 3), (4, 2, 3),
                    (3, 2, 2), (4, 2, 2), (5, 2, 2)]:
        assert lcd_max_exhaustive(n, k, p).d_lcd == lcd_max_by_full_enumeration(n, k, p)


def test_known_cells():
    assert lcd_max_exhaustive(2, 1, 2).d_lcd == 1
    assert lcd_max_exhaustive(3, 2, 3).d_lcd == 1
    assert lcd_max_exhaustive(4, 2, 3).d_lcd == 2
    assert lcd_max_exhaustive(4, 3, 3).d_lcd == 2


def test_k1_ternary_closed_form():
    for n in range(2, 10):
        expect = n if n % 3 else n - 1
        assert lcd_max_exhaustive(n, 1, 3).d_lcd == expect


def test_k2_ternary_table_frozen_values():
    expected = {2: 1, 3: 1, 4: 2, 5: 3, 6: 4, 7: 4, 8: 5, 9: 6, 10: 7, 11: 7, 12: 8}
    for n, d in expected.items():
        assert lcd_max_exhaustive(n, 2, 3).d_lcd == d


def test_witness_is_lex_smallest():
    entry = lcd_max_exhaustive(4, 2, 3)
    assert entry.witness == MatGF([[1, 0, 0, 1], [0, 1, 1, 0]], 3)
    # k = 1 witnesses: the all-ones row away from multiples of 3,
    # and a single dead coordinate right after the identity otherwise
    assert lcd_max_exhaustive(5, 1, 3).witness == MatGF([[1, 1, 1, 1, 1]], 3)
    assert lcd_max_exhaustive(6, 1, 3).witness == MatGF([[1, 0, 1, 1, 1, 1]], 3)


def test_entry_fields_and_revalidation():
    entry = lcd_max_exhaustive(4, 2, 3)
    assert entry.method == "exhaustive"
    assert entry.explored_count == 45
    assert entry.elapsed_ms >= 0
    with pytest.raises(ValueError):
        dataclasses.replace(entry, d_lcd=3)  # witness distance is 2
    with pytest.raises(ValueError):
        dataclasses.replace(entry, n=5)  # witness shape mismatch
    with pytest.raises(ValueError):
        LcdTableEntry(n=4, k=2, q=3, d_lcd=1, method="exhaustive",
                      witness=None, explored_count=1)


def test_exhaustive_bounded_by_trusted_bounds():
    for n in range(2, 9):
        for k in (1, 2):
            entry = lcd_max_exhaustive(n, k, 3)
            assert entry.d_lcd <= plotkin_average_bound(n, k, 3)
            assert entry.d_lcd <= singleton_bound(n, k)


def test_constructions_are_lower_bounds():
    c = mod9_construction(3, 1)
    assert c.is_lcd()
    assert lcd_max_exhaustive(12, 2, 3).d_lcd >= c.min_distance()


def test_budget_exceeded_names_cell():
    with pytest.raises(BudgetExceededError) as exc:
        lcd_max_exhaustive(30, 2, 3)
    assert "n=30" in str(exc.value) and "budget" in str(exc.value)


def test_sign_reduction_shrinks_space_but_not_answers():
    for n in range(2, 9):
        full = lcd_max_exhaustive(n, 2, 3)
        reduced = lcd_max_exhaustive(n, 2, 3, sign_reduction=True)
        assert reduced.d_lcd == full.d_lcd
        if n > 2:
            assert reduced.explored_count < full.explored_count
    with pytest.raises(ValueError):
        lcd_max_exhaustive(4, 2, 2, sign_reduction=True)


def test_parallel_equals_serial(monkeypatch):
    monkeypatch.setattr(search, "_PARALLEL_CHUNK", 64)
    serial = lcd_max_exhaustive(8, 2, 3, jobs=1)
    parallel = lcd_max_exhaustive(8, 2, 3, jobs=3)
    assert parallel == serial  # elapsed_ms excluded from comparison
    assert parallel.witness == serial.witness


def test_split_scan_merges_like_serial():
    # two contiguous chunks merged by (d desc, first-rank asc) must equal one pass
    ids = tuple(range(9))
    whole = search._scan_range(5, 2, 3, ids, 0, count_canonical(5, 2, 3))
    left = search._scan_range(5, 2, 3, ids, 0, 70)
    right = search._scan_range(5, 2, 3, ids, 70, count_canonical(5, 2, 3))
    best = max([left, right], key=lambda r: (r[0], -r[2]))
    assert (best[0], best[1], best[2]) == (whole[0], whole[1], whole[2])


# ---- randomized search ----------------------------------------------------------------


def test_random_is_reproducible_and_bounded():
    a = lcd_max_random(12, 2, 3, trials=300, seed=20260816)
    b = lcd_max_random(12, 2, 3, trials=300, seed=20260816)
    assert a == b
    assert a.method == "random" and a.seed == 20260816
    assert a.explored_count == 300
    exact = lcd_max_exhaustive(12, 2, 3)
    assert 4 <= a.d_lcd <= exact.d_lcd


def test_random_single_trial_and_empty_marker():
    saw_empty = saw_hit = False
    for seed in range(60):
        entry = lcd_max_random(2, 1, 2, trials=1, seed=seed)
        if entry.d_lcd == 0:
            assert entry.witness is None
            saw_empty = True
        else:
            assert entry.witness is not None
            saw_hit = True
        if saw_empty and saw_hit:
            break
    assert saw_empty and saw_hit


def test_random_validation():
    with pytest.raises(ValueError):
        lcd_max_random(4, 2, 3, trials=0, seed=1)


# ---- tables -----------------------------------------------------------------------------


def test_build_table_shape_and_order():
    table = build_table(range(2, 9), (1, 2), 3)
    assert len(table) == 14
    assert all(isinstance(e, LcdTableEntry) and e.method == "exhaustive" for e in table)
    assert [(e.n, e.k) for e in table] == [(n, k) for n in range(2, 9) for k in (1, 2)]


def test_build_table_marks_empty_cells():
    table = build_table([1, 2], [2], 3)
    assert isinstance(table[0], SkippedCell)
    assert table[0].reason.startswith("empty cell")
    assert isinstance(table[1], LcdTableEntry)


def test_build_table_falls_back_to_random_over_budget():
    table = build_table([12], [2], 3, budget=1000, trials=40, seed=11)
    (entry,) = table
    assert entry.method == "random"
    assert entry.seed is not None
    # reproducible end to end from the master seed
    again = build_table([12], [2], 3, budget=1000, trials=40, seed=11)
    assert again == table


def test_check_monotonicity_clean_table():
    table = build_table(range(2, 11), [2], 3)
    assert check_monotonicity(table) == []


def test_check_monotonicity_detects_fabricated_dip():
    good = lcd_max_exhaustive(5, 2, 3)
    # a genuine [6,2] LCD code of distance 2, mislabeled as the cell optimum
    fake_witness = MatGF([[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0]], 3)
    fake = LcdTableEntry(n=6, k=2, q=3, d_lcd=2, method="exhaustive",
                         witness=fake_witness, explored_count=1)
    violations = check_monotonicity([good, fake])
    assert len(violations) == 1
    v = violations[0]
    assert (v.n, v.d_at_n, v.d_at_next) == (5, 3, 2)


def test_check_monotonicity_skips_gaps_and_random():
    a = lcd_max_exhaustive(5, 2, 3)
    c = lcd_max_exhaustive(7, 2, 3)  # gap at n = 6
    r = lcd_max_random(6, 2, 3, trials=20, seed=3)
    assert check_monotonicity([a, c, r]) == []
