"""Catalog of claims under test.

Each record states one externally claimed property of LCD codes together
with an evaluable hypothesis (a predicate over the parameter point) and
the default points at which the verifier evaluates it.  The catalog is
static data: verdicts and evidence belong to the verification layer, and
refuted claims stay in the catalog — detecting a false claim with concrete
evidence is a supported outcome, not an error.

Where a claim is encoded under a cleaned-up hypothesis, the condition as
originally stated is kept verbatim in stated_form so reports can show both.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable

VERDICT_CONFIRMED = "confirmed"
VERDICT_REFUTED = "refuted"
VERDICT_OUT_OF_BUDGET = "out_of_budget"


@dataclass(frozen=True)
class ClaimRecord:
    """One claim: stable id, statement, hypothesis, and evaluation points."""

    claim_id: str
    kind: str  # "property" | "bound" | "value" | "construction" | "table"
    statement: str
    hypothesis: Callable[..., bool]
    hypothesis_text: str
    predicted: str
    points: tuple[dict, ...]
    stated_form: str | None = None

    def as_dict(self) -> dict:
        out = asdict(self)
        del out["hypothesis"]  # the callable; hypothesis_text documents it
        out["points"] = [dict(pt) for pt in self.points]
        return out


def _h_massey(n=None, k=None, q=None, m=None) -> bool:
    return (q is None or q in (2, 3, 5, 7)) and (k is None or n is None or 1 <= k <= n)


def _h_binary_examples(n=None, k=None, q=None, m=None) -> bool:
    return (q in (None, 2)) and (n, k) in ((2, 1), (4, 2), (None, None))


def _h_remark(n=None, k=None, q=None, m=None) -> bool:
    if k is not None and k < 1:
        return False
    if n is not None and k is not None and n < k:
        return False
    return q is None or q >= 2


def _h_n2_mod9(n=None, k=None, q=None, m=None) -> bool:
    if q not in (None, 3) or k not in (None, 2):
        return False
    return n is not None and n >= 2 and n % 9 in (3, 4)


def _h_between(n=None, k=None, q=None, m=None) -> bool:
    return q in (None, 3)


def _h_monotone(n=None, k=None, q=None, m=None) -> bool:
    return q in (None, 3) and (k is None or k >= 1) and (n is None or n >= 1)


def _h_k1_coprime(n=None, k=None, q=None, m=None) -> bool:
    return q in (None, 3) and k in (None, 1) and n is not None and n % 3 != 0


def _h_kn1_coprime(n=None, k=None, q=None, m=None) -> bool:
    if q not in (None, 3) or n is None or n % 3 == 0 or n < 2:
        return False
    return k is None or k == n - 1


def _h_k1_multiple(n=None, k=None, q=None, m=None) -> bool:
    return q in (None, 3) and k in (None, 1) and n is not None and n % 3 == 0


def _h_kn1_multiple(n=None, k=None, q=None, m=None) -> bool:
    if q not in (None, 3) or n is None or n % 3 != 0 or n < 2:
        return False
    return k is None or k == n - 1


_CATALOG: tuple[ClaimRecord, ...] = (
    ClaimRecord(
        claim_id="massey-criterion",
        kind="property",
        statement=(
            "A linear code intersects its dual trivially exactly when its "
            "Gram matrix G G^T is invertible; in general the hull dimension "
            "is k - rank(G G^T)."
        ),
        hypothesis=_h_massey,
        hypothesis_text="q in {2,3,5,7}; 1 <= k <= n",
        predicted="Gram-rank route and subspace-intersection route agree on every code",
        points=({"q": 2}, {"q": 3}, {"q": 5}, {"q": 7}),
    ),
    ClaimRecord(
        claim_id="dual-closure",
        kind="property",
        statement="If a code has a trivial hull, so does its dual.",
        hypothesis=_h_massey,
        hypothesis_text="q in {2,3,5,7}; 1 <= k < n",
        predicted="is_lcd(C) implies is_lcd(dual(C))",
        points=({"q": 2}, {"q": 3}, {"q": 5}, {"q": 7}),
    ),
    ClaimRecord(
        claim_id="small-binary-examples",
        kind="value",
        statement=(
            "The binary code {00, 01} has a trivial hull; the binary code "
            "{0000, 1010, 0101, 1111} equals its own dual, so its hull is "
            "the whole code."
        ),
        hypothesis=_h_binary_examples,
        hypothesis_text="q = 2; (n, k) in {(2, 1), (4, 2)}",
        predicted="hull_dim = 0 for the first code; dual = self and hull_dim = 2 for the second",
        points=({"n": 2, "k": 1, "q": 2}, {"n": 4, "k": 2, "q": 2}),
    ),
    ClaimRecord(
        claim_id="remark-bound",
        kind="bound",
        statement=(
            "The largest minimum distance among [n, k] codes over GF(q) with "
            "trivial hull is at most floor(n q^(k-1) / (q^k - 1))."
        ),
        hypothesis=_h_remark,
        hypothesis_text="k >= 1; n >= k; q >= 2",
        predicted="exhaustive max LCD distance <= stated_upper_bound(n, k, q)",
        points=(
            {"n": 4, "k": 2, "q": 3},
            {"n": 12, "k": 2, "q": 3},
            {"n": 4, "k": 1, "q": 3},
            {"n": 2, "k": 1, "q": 2},
            {"n": 3, "k": 1, "q": 2},
            {"n": 4, "k": 2, "q": 2},
            {"n": 6, "k": 2, "q": 2},
        ),
        stated_form=(
            "for dimension 1 the formula reads floor(n/2), sitting below the "
            "value n that the same source reports attainable when 3 does not "
            "divide n; the (4,1,3) point makes that tension a checked fact"
        ),
    ),
    ClaimRecord(
        claim_id="lcd-n2-3",
        kind="construction",
        statement=(
            "For n = 3 or 4 (mod 9), n = 9m + 3 or 9m + 4, the two-row "
            "block construction is an [n, 2] ternary LCD code of minimum "
            "distance floor(3n/8), so LCD[n,2]_3 = floor(3n/8) is attained."
        ),
        hypothesis=_h_n2_mod9,
        hypothesis_text="q = 3; k = 2; n % 9 in {3, 4}; n >= 2",
        predicted="construction is LCD and min_distance = floor(3n/8) = 3m + 1",
        points=(
            {"n": 12, "k": 2, "q": 3, "m": 1},
            {"n": 21, "k": 2, "q": 3, "m": 2},
            {"n": 30, "k": 2, "q": 3, "m": 3},
            {"n": 13, "k": 2, "q": 3, "m": 1},
            {"n": 22, "k": 2, "q": 3, "m": 2},
            {"n": 31, "k": 2, "q": 3, "m": 3},
        ),
        stated_form=(
            "Gram matrix stated as diag(1, 2) for the length-9m+3 case and "
            "diag(2, 2) for the length-9m+4 case; the checker reports what "
            "the printed generators actually give."
        ),
    ),
    ClaimRecord(
        claim_id="between-lcd",
        kind="property",
        statement=(
            "If C1 and C2 are ternary LCD codes of one length n, the "
            "combined code {(c1+c2, c1-c2)} is a ternary LCD code of "
            "length 2n and dimension k1 + k2."
        ),
        hypothesis=_h_between,
        hypothesis_text="q = 3; operands share n",
        predicted=(
            "combined code LCD; Gram block-diagonal with blocks 2 Gi Gi^T; "
            "det = 2^(k1+k2) det(G1 G1^T) det(G2 G2^T)"
        ),
        points=({"q": 3},),
    ),
    ClaimRecord(
        claim_id="monotone-in-n",
        kind="table",
        statement=(
            "The maximal LCD distance is monotone in length: "
            "LCD[n+1,k]_3 >= LCD[n,k]_3 for all n, k >= 1."
        ),
        hypothesis=_h_monotone,
        hypothesis_text="q = 3; n, k >= 1",
        predicted="no adjacent exhaustive pair in the table decreases",
        points=({"k": 1, "q": 3}, {"k": 2, "q": 3}),
    ),
    ClaimRecord(
        claim_id="k1-coprime",
        kind="value",
        statement="If 3 does not divide n, then LCD[n,1]_3 = n.",
        hypothesis=_h_k1_coprime,
        hypothesis_text="q = 3; k = 1; 3 does not divide n",
        predicted="exhaustive LCD[n,1]_3 equals n; all-ones row attains it",
        points=tuple({"n": n, "k": 1, "q": 3} for n in (2, 4, 5, 7, 8)),
    ),
    ClaimRecord(
        claim_id="kn1-coprime",
        kind="value",
        statement="If 3 does not divide n, then LCD[n,n-1]_3 = 2.",
        hypothesis=_h_kn1_coprime,
        hypothesis_text="q = 3; k = n - 1; 3 does not divide n; n >= 2",
        predicted=(
            "dual of the all-ones row is LCD with min_distance 2, and "
            "n - k + 1 = 2 caps every [n, n-1] code"
        ),
        points=tuple({"n": n, "k": n - 1, "q": 3} for n in (4, 5, 7)),
    ),
    ClaimRecord(
        claim_id="k1-multiple",
        kind="value",
        statement="If 3 divides n, then LCD[n,1]_3 = n - 1.",
        hypothesis=_h_k1_multiple,
        hypothesis_text="q = 3; k = 1; 3 divides n",
        predicted="exhaustive LCD[n,1]_3 equals n - 1; zero-prefixed row attains it",
        points=tuple({"n": n, "k": 1, "q": 3} for n in (3, 6, 9)),
        stated_form=(
            "stated under '3 does not divide (n - 1)', which overlaps the "
            "k1-coprime hypothesis; encoded as '3 divides n', under which "
            "the stated condition holds automatically"
        ),
    ),
    ClaimRecord(
        claim_id="kn1-multiple",
        kind="value",
        statement="If 3 divides n, then LCD[n,n-1]_3 = 2.",
        hypothesis=_h_kn1_multiple,
        hypothesis_text="q = 3; k = n - 1; 3 divides n",
        predicted="maximal LCD distance 2 at dimension n - 1",
        points=({"n": 3, "k": 2, "q": 3}, {"n": 6, "k": 5, "q": 3}),
        stated_form=(
            "same stated clause as k1-multiple ('3 does not divide (n - 1)'); "
            "encoded as '3 divides n'"
        ),
    ),
)


def claim_catalog() -> tuple[ClaimRecord, ...]:
    """The fixed claim catalog; claim_ids are stable across releases."""
    return _CATALOG


def get_claim(claim_id: str) -> ClaimRecord:
    for rec in _CATALOG:
        if rec.claim_id == claim_id:
            return rec
    raise KeyError(f"no claim with id {claim_id!r}")


def export_catalog() -> list[dict]:
    """The catalog as plain dicts (one record per claim), ready for JSON."""
    return [rec.as_dict() for rec in _CATALOG]
