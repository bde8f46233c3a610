"""lcdkit: exact GF(p) linear codes, LCD checks, constructions, and search."""

from lcdkit.field import FpElement, SUPPORTED_PRIMES, check_prime
from lcdkit.matrix import MatGF, MatrixFormatError
from lcdkit.code import (
    BudgetExceededError,
    CodeMetrics,
    LinearCode,
    RankDeficientError,
)
from lcdkit.constructions import (
    between,
    mod9_construction,
    repetition,
    zero_prefixed_repetition,
)
from lcdkit.bounds import plotkin_average_bound, singleton_bound, stated_upper_bound
from lcdkit.claims import ClaimRecord, claim_catalog, export_catalog, get_claim
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
from lcdkit.verify import ClaimResult, PointResult, VerifyReport, verify_claims

__all__ = [
    "FpElement",
    "SUPPORTED_PRIMES",
    "check_prime",
    "MatGF",
    "MatrixFormatError",
    "LinearCode",
    "CodeMetrics",
    "RankDeficientError",
    "BudgetExceededError",
    "repetition",
    "zero_prefixed_repetition",
    "mod9_construction",
    "between",
    "stated_upper_bound",
    "plotkin_average_bound",
    "singleton_bound",
    "ClaimRecord",
    "claim_catalog",
    "get_claim",
    "export_catalog",
    "CanonicalSystematic",
    "LcdTableEntry",
    "SkippedCell",
    "canonical_iter",
    "count_canonical",
    "lcd_max_exhaustive",
    "lcd_max_random",
    "build_table",
    "check_monotonicity",
    "ClaimResult",
    "PointResult",
    "VerifyReport",
    "verify_claims",
]

__version__ = "0.1.0"
