"""Exact modular arithmetic over GF(p) for small primes p."""

from __future__ import annotations

from dataclasses import dataclass

SUPPORTED_PRIMES = frozenset({2, 3, 5, 7})


class ModulusMismatchError(ValueError):
    """Operands live in different prime fields."""


def check_prime(p: int) -> int:
    """Validate a field modulus, returning it unchanged."""
    if p not in SUPPORTED_PRIMES:
        raise ValueError(
            f"unsupported modulus {p}: supported primes are {sorted(SUPPORTED_PRIMES)}"
        )
    return p


@dataclass(frozen=True)
class FpElement:
    """A canonical residue in GF(p), p in {2, 3, 5, 7}.

    Arithmetic is widened multiply-then-reduce; results are always
    canonical in [0, p).  Mixing moduli raises ModulusMismatchError.
    """

    value: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.value, int) or not 0 <= self.value < self.p:
            raise ValueError(f"residue {self.value!r} not canonical mod {self.p}")

    def _check_same_field(self, other: "FpElement") -> None:
        if self.p != other.p:
            raise ModulusMismatchError(f"moduli differ: {self.p} vs {other.p}")

    def __add__(self, other: "FpElement") -> "FpElement":
        self._check_same_field(other)
        return FpElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "FpElement") -> "FpElement":
        self._check_same_field(other)
        return FpElement((self.value - other.value) % self.p, self.p)

    def __neg__(self) -> "FpElement":
        return FpElement((-self.value) % self.p, self.p)

    def __mul__(self, other: "FpElement") -> "FpElement":
        self._check_same_field(other)
        return FpElement((self.value * other.value) % self.p, self.p)

    def inverse(self) -> "FpElement":
        """Multiplicative inverse.  Raises ZeroDivisionError for 0."""
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FpElement({self.value}, p={self.p})"
