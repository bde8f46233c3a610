"""Exact matrices over GF(p): elimination, kernels, intersections, text I/O.

Entries are stored as canonical residues in a read-only numpy int64 array;
every operation reduces mod p, so there is no floating point anywhere and
no overflow for the supported moduli.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from lcdkit.field import FpElement, check_prime


class MatrixFormatError(ValueError):
    """Raised when matrix text input is malformed; message carries line/entry position."""


def _as_array(rows, p: int) -> np.ndarray:
    arr = np.array(rows, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D array of entries, got ndim={arr.ndim}")
    return arr % p


class MatGF:
    """A rows x cols matrix over GF(p).

    Zero-row matrices are allowed (they arise naturally as empty kernel or
    intersection bases); zero-column matrices are not.
    """

    __slots__ = ("arr", "p")

    def __init__(self, rows, p: int):
        check_prime(p)
        arr = _as_array(rows, p)
        if arr.shape[1] < 1:
            raise ValueError("matrix must have at least one column")
        arr.setflags(write=False)
        self.arr = arr
        self.p = p

    # -- construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, n: int, p: int) -> "MatGF":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "MatGF":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def empty(cls, cols: int, p: int) -> "MatGF":
        """The 0 x cols matrix (an empty basis)."""
        return cls(np.zeros((0, cols), dtype=np.int64), p)

    # -- basic shape / equality ----------------------------------------------

    @property
    def rows(self) -> int:
        return self.arr.shape[0]

    @property
    def cols(self) -> int:
        return self.arr.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatGF):
            return NotImplemented
        return (
            self.p == other.p
            and self.arr.shape == other.arr.shape
            and bool(np.array_equal(self.arr, other.arr))
        )

    def __hash__(self):
        return hash((self.p, self.arr.shape, self.arr.tobytes()))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(int(v)) for v in row) for row in self.arr)
        return f"MatGF([{body}], p={self.p})"

    def _check_same_field(self, other: "MatGF") -> None:
        if self.p != other.p:
            raise ValueError(f"moduli differ: {self.p} vs {other.p}")

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "MatGF") -> "MatGF":
        self._check_same_field(other)
        if self.arr.shape != other.arr.shape:
            raise ValueError(f"shape mismatch: {self.arr.shape} vs {other.arr.shape}")
        return MatGF((self.arr + other.arr) % self.p, self.p)

    def __sub__(self, other: "MatGF") -> "MatGF":
        self._check_same_field(other)
        if self.arr.shape != other.arr.shape:
            raise ValueError(f"shape mismatch: {self.arr.shape} vs {other.arr.shape}")
        return MatGF((self.arr - other.arr) % self.p, self.p)

    def __neg__(self) -> "MatGF":
        return MatGF((-self.arr) % self.p, self.p)

    def __matmul__(self, other: "MatGF") -> "MatGF":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch for product: {self.arr.shape} @ {other.arr.shape}"
            )
        return MatGF((self.arr @ other.arr) % self.p, self.p)

    def scalar_mul(self, c: int) -> "MatGF":
        return MatGF((self.arr * (c % self.p)) % self.p, self.p)

    def transpose(self) -> "MatGF":
        return MatGF(self.arr.T, self.p)

    # -- elimination -----------------------------------------------------------

    def rref(self) -> tuple["MatGF", int, tuple[int, ...]]:
        """Reduced row echelon form.

        Returns (R, rank, pivot_columns).  Pivots are scaled to 1 and
        cleared above and below; pivot columns are strictly increasing.
        """
        p = self.p
        a = self.arr.copy()
        m, n = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            rows_nz = np.nonzero(a[r:, c])[0]
            if rows_nz.size == 0:
                continue
            pr = r + int(rows_nz[0])
            if pr != r:
                a[[r, pr]] = a[[pr, r]]
            inv = pow(int(a[r, c]), -1, p)
            a[r] = (a[r] * inv) % p
            col = a[:, c].copy()
            col[r] = 0
            mask = col != 0
            if mask.any():
                a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
            pivots.append(c)
            r += 1
        out = MatGF(a, p)
        return out, len(pivots), tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def det(self) -> int:
        """Determinant mod p (square matrices only), via elimination.

        Row swaps contribute a factor of -1; row additions contribute
        nothing, so the result is the signed product of the pivots.
        """
        if self.rows != self.cols:
            raise ValueError(f"determinant needs a square matrix, got {self.arr.shape}")
        p = self.p
        a = self.arr.copy()
        n = self.rows
        det = 1
        for c in range(n):
            rows_nz = np.nonzero(a[c:, c])[0]
            if rows_nz.size == 0:
                return 0
            pr = c + int(rows_nz[0])
            if pr != c:
                a[[c, pr]] = a[[pr, c]]
                det = (-det) % p
            pivot = int(a[c, c])
            det = (det * pivot) % p
            inv = pow(pivot, -1, p)
            below = a[c + 1 :, c]
            mask = below != 0
            if mask.any():
                factors = (below[mask] * inv) % p
                a[c + 1 :][mask] = (a[c + 1 :][mask] - np.outer(factors, a[c])) % p
        return det

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.det() != 0

    def inverse(self) -> "MatGF":
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        aug = MatGF(np.hstack([self.arr, np.eye(n, dtype=np.int64)]), self.p)
        red, rank, pivots = aug.rref()
        if rank < n or pivots[:n] != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return MatGF(red.arr[:, n:], self.p)

    # -- subspace computations ---------------------------------------------

    def row_basis(self) -> "MatGF":
        """Basis of the row space: the nonzero rows of the RREF."""
        red, rank, _ = self.rref()
        return MatGF(red.arr[:rank], self.p) if rank else MatGF.empty(self.cols, self.p)

    def nullspace_basis(self) -> "MatGF":
        """Basis of the right kernel {v : A v = 0}, one vector per row.

        Returns the 0 x cols matrix when the kernel is trivial.
        """
        p = self.p
        red, _, pivots = self.rref()
        n = self.cols
        free = [c for c in range(n) if c not in set(pivots)]
        if not free:
            return MatGF.empty(n, p)
        basis = np.zeros((len(free), n), dtype=np.int64)
        for i, f in enumerate(free):
            basis[i, f] = 1
            for r, c in enumerate(pivots):
                basis[i, c] = (-int(red.arr[r, f])) % p
        return MatGF(basis, p)

    def left_nullspace_basis(self) -> "MatGF":
        """Basis of {x : x A = 0}, one vector per row (0 x rows when trivial)."""
        if self.rows == 0:
            # every x in the zero-dimensional space; convention: no columns to
            # index, so return the 0x0-avoiding empty basis over 1 column is
            # meaningless -- a 0-row matrix has full left-kernel of dim 0.
            raise ValueError("left kernel of a matrix with no rows is not defined")
        return self.transpose().nullspace_basis()

    def rowspace_intersect(self, other: "MatGF") -> "MatGF":
        """Basis of (row space of self) intersect (row space of other).

        Solves x A = y B by taking the left kernel of the stacked matrix
        [[A], [-B]]: any solution z = (x, y) yields the common vector x A.
        The resulting spanning set is reduced to a basis, and its size is
        cross-checked against dim U + dim V - dim(U + V).
        """
        self._check_same_field(other)
        if self.cols != other.cols:
            raise ValueError(f"ambient dimensions differ: {self.cols} vs {other.cols}")
        p = self.p
        if self.rows == 0 or other.rows == 0:
            return MatGF.empty(self.cols, p)
        stacked = np.vstack([self.arr, (-other.arr) % p])
        kern = MatGF(stacked, p).left_nullspace_basis()
        if kern.rows == 0:
            inter = MatGF.empty(self.cols, p)
        else:
            x_part = kern.arr[:, : self.rows]
            spanning = MatGF((x_part @ self.arr) % p, p)
            inter = spanning.row_basis()
        # dimension identity: guards against an elimination bug silently
        # shrinking or inflating the intersection
        du = self.rank()
        dv = other.rank()
        dsum = MatGF(np.vstack([self.arr, other.arr]), p).rank()
        if inter.rows != du + dv - dsum:
            raise AssertionError(
                f"intersection dimension {inter.rows} != {du} + {dv} - {dsum}"
            )
        return inter


# -- block composition ---------------------------------------------------------


def _block_grid(blocks: Sequence[Sequence[MatGF]]) -> MatGF:
    if not blocks or not all(len(row) > 0 for row in blocks):
        raise ValueError("block grid must be non-empty")
    p = blocks[0][0].p
    for row in blocks:
        for b in row:
            if b.p != p:
                raise ValueError("all blocks must share one modulus")
    try:
        arr = np.block([[b.arr for b in row] for row in blocks])
    except ValueError as exc:
        raise ValueError(f"incompatible block shapes: {exc}") from exc
    return MatGF(arr % p, p)


def block_compose(a: MatGF, b: MatGF, c: MatGF, d: MatGF) -> MatGF:
    """The 2x2 block matrix [[a, b], [c, d]] over a shared modulus."""
    return _block_grid([[a, b], [c, d]])


def hstack(mats: Iterable[MatGF]) -> MatGF:
    return _block_grid([list(mats)])


def vstack(mats: Iterable[MatGF]) -> MatGF:
    return _block_grid([[m] for m in mats])


# -- text format ----------------------------------------------------------------
#
# Header line: three integers "p n k" (modulus, columns, rows), then k lines
# of n whitespace-separated canonical residues.  Blank lines are ignored.


def parse_matrix(text: str) -> MatGF:
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise MatrixFormatError("empty input: expected a 'p n k' header line")
    hdr_no, hdr = lines[0]
    parts = hdr.split()
    if len(parts) != 3:
        raise MatrixFormatError(
            f"line {hdr_no}: header must be three integers 'p n k', got {len(parts)} fields"
        )
    try:
        p, n, k = (int(x) for x in parts)
    except ValueError:
        raise MatrixFormatError(f"line {hdr_no}: header fields must be integers: {hdr!r}")
    try:
        check_prime(p)
    except ValueError as exc:
        raise MatrixFormatError(f"line {hdr_no}: {exc}")
    if n < 1 or k < 1:
        raise MatrixFormatError(f"line {hdr_no}: need n >= 1 and k >= 1, got n={n} k={k}")
    body = lines[1:]
    if len(body) != k:
        raise MatrixFormatError(
            f"expected {k} matrix rows after the header, got {len(body)}"
        )
    rows = []
    for line_no, line in body:
        toks = line.split()
        if len(toks) != n:
            raise MatrixFormatError(
                f"line {line_no}: expected {n} entries, got {len(toks)}"
            )
        row = []
        for j, tok in enumerate(toks):
            try:
                v = int(tok)
            except ValueError:
                raise MatrixFormatError(
                    f"line {line_no}, entry {j + 1}: not an integer: {tok!r}"
                )
            if not 0 <= v < p:
                raise MatrixFormatError(
                    f"line {line_no}, entry {j + 1}: value {v} out of range for modulus {p}"
                )
            row.append(v)
        rows.append(row)
    return MatGF(rows, p)


def format_matrix(m: MatGF) -> str:
    """Render a matrix in the 'p n k' text format (inverse of parse_matrix)."""
    if m.rows < 1:
        raise ValueError("cannot format a matrix with no rows")
    out = [f"{m.p} {m.cols} {m.rows}"]
    for row in m.arr:
        out.append(" ".join(str(int(v)) for v in row))
    return "\n".join(out) + "\n"


# -- function-style aliases -------------------------------------------------------


def mat_mul(a: MatGF, b: MatGF) -> MatGF:
    return a @ b


def mat_transpose(a: MatGF) -> MatGF:
    return a.transpose()


def rref(a: MatGF) -> tuple[MatGF, int, tuple[int, ...]]:
    return a.rref()


def det_gf(a: MatGF) -> FpElement:
    return FpElement(a.det(), a.p)


def nullspace_basis(a: MatGF) -> MatGF:
    return a.nullspace_basis()


def rowspace_intersect(a: MatGF, b: MatGF) -> MatGF:
    return a.rowspace_intersect(b)
