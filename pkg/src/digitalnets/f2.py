"""
Bit-packed square matrices over the two-element field.

Each row is stored as a Python integer in which column ``j`` (0-based)
occupies bit ``j``.  Text I/O uses the opposite visual convention: the
leftmost character of a row string is column 0.
"""

from __future__ import annotations

import io
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_DIM = 64


class Singular(ValueError):
    """Raised when a matrix that must be invertible is not."""


class NotDecomposable(ValueError):
    """Raised when a matrix has no unit LU factorization.

    ``minor`` is the order (1-based) of the smallest singular leading
    principal submatrix.
    """

    def __init__(self, minor: int):
        super().__init__(f"leading {minor}x{minor} minor is singular")
        self.minor = minor


def _check_dim(m: int) -> None:
    if not isinstance(m, (int, np.integer)) or not 1 <= m <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {m!r}")


class F2Matrix:
    """Immutable ``dim x dim`` matrix over GF(2).

    Parameters
    ----------
    rows : sequence of int
        Row words; bit ``j`` of ``rows[i]`` is entry ``(i, j)``.
    dim : int, optional
        Matrix dimension.  Defaults to ``len(rows)``.
    """

    __slots__ = ("_rows", "_dim")

    def __init__(self, rows: Iterable[int], dim: int | None = None):
        rows = tuple(int(r) for r in rows)
        if dim is None:
            dim = len(rows)
        _check_dim(dim)
        if len(rows) != dim:
            raise ValueError(f"expected {dim} rows, got {len(rows)}")
        mask = (1 << dim) - 1
        if any(r < 0 or r & ~mask for r in rows):
            raise ValueError("row word has bits outside the matrix width")
        self._rows = rows
        self._dim = dim

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "F2Matrix":
        """Build from row strings such as ``["10", "11"]``."""
        dim = len(rows)
        words = []
        for text in rows:
            if len(text) != dim or set(text) - {"0", "1"}:
                raise ValueError(f"bad row {text!r} for a {dim}x{dim} matrix")
            words.append(sum(1 << j for j, ch in enumerate(text) if ch == "1"))
        return cls(words, dim)

    @classmethod
    def from_array(cls, arr) -> "F2Matrix":
        arr = np.asarray(arr)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("expected a square 2-d array")
        bits = (arr.astype(np.int64) & 1).astype(object)
        weights = [1 << j for j in range(arr.shape[1])]
        return cls([int(sum(b * w for b, w in zip(row, weights))) for row in bits])

    @classmethod
    def zeros(cls, m: int) -> "F2Matrix":
        _check_dim(m)
        return cls([0] * m, m)

    # -- accessors ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self._dim and 0 <= j < self._dim):
            raise IndexError(ij)
        return (self._rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column ``j`` as a word with row ``i`` in bit ``i``."""
        return sum(((r >> j) & 1) << i for i, r in enumerate(self._rows))

    def to_array(self) -> np.ndarray:
        m = self._dim
        return np.array([[(r >> j) & 1 for j in range(m)] for r in self._rows],
                        dtype=np.uint8)

    def to_strings(self) -> list[str]:
        m = self._dim
        return ["".join("1" if (r >> j) & 1 else "0" for j in range(m))
                for r in self._rows]

    def transpose(self) -> "F2Matrix":
        return F2Matrix([self.column(j) for j in range(self._dim)], self._dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self._dim == other._dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._dim, self._rows))

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        return multiply(self, other)

    def __repr__(self) -> str:
        return f"F2Matrix.from_strings({self.to_strings()!r})"

    def __str__(self) -> str:
        return "\n".join(self.to_strings())

    def apply(self, vec: int) -> int:
        """Matrix-vector product; ``vec`` holds component ``j`` in bit ``j``."""
        out = 0
        for i, r in enumerate(self._rows):
            out |= ((r & vec).bit_count() & 1) << i
        return out


# -- structural matrices -------------------------------------------------------

@lru_cache(maxsize=None)
def identity(m: int) -> F2Matrix:
    _check_dim(m)
    return F2Matrix([1 << i for i in range(m)], m)


@lru_cache(maxsize=None)
def anti_diagonal(m: int) -> F2Matrix:
    """Digit-reversal matrix: entry ``(i, j)`` is 1 iff ``i + j == m - 1``."""
    _check_dim(m)
    return F2Matrix([1 << (m - 1 - i) for i in range(m)], m)


@lru_cache(maxsize=None)
def pascal(m: int) -> F2Matrix:
    """Upper-triangular Pascal matrix ``binom(j, i) mod 2`` (0-based).

    By Lucas' theorem the entry is 1 exactly when the bits of ``i`` are a
    subset of the bits of ``j``.
    """
    _check_dim(m)
    rows = []
    for i in range(m):
        rows.append(sum(1 << j for j in range(i, m) if j & i == i))
    return F2Matrix(rows, m)


# -- arithmetic ----------------------------------------------------------------

def _same_dim(a: F2Matrix, b: F2Matrix) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def multiply(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    _same_dim(a, b)
    brows = b.rows
    out = []
    for r in a.rows:
        acc = 0
        while r:
            low = r & -r
            acc ^= brows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return F2Matrix(out, a.dim)


def chain(*mats: F2Matrix) -> F2Matrix:
    """Product of several matrices, left to right."""
    out = mats[0]
    for mat in mats[1:]:
        out = multiply(out, mat)
    return out


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of an arbitrary collection of row words."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


def rank(a: F2Matrix) -> int:
    return rank_of_rows(a.rows)


def inverse(a: F2Matrix) -> F2Matrix:
    """Gauss-Jordan inverse; raises :class:`Singular`."""
    m = a.dim
    left = list(a.rows)
    right = [1 << i for i in range(m)]
    for col in range(m):
        bit = 1 << col
        piv = next((i for i in range(col, m) if left[i] & bit), None)
        if piv is None:
            raise Singular(f"matrix is singular (no pivot in column {col})")
        left[col], left[piv] = left[piv], left[col]
        right[col], right[piv] = right[piv], right[col]
        for i in range(m):
            if i != col and left[i] & bit:
                left[i] ^= left[col]
                right[i] ^= right[col]
    return F2Matrix(right, m)


def is_nonsingular(a: F2Matrix) -> bool:
    return rank(a) == a.dim


def is_lower_triangular_nonsingular(a: F2Matrix) -> bool:
    """True iff ``a`` is lower triangular with unit diagonal."""
    return all(r >> i == 1 for i, r in enumerate(a.rows))


def is_upper_triangular_nonsingular(a: F2Matrix) -> bool:
    """True iff ``a`` is upper triangular with unit diagonal."""
    return all(r & ((2 << i) - 1) == 1 << i for i, r in enumerate(a.rows))


def lu_decompose(b: F2Matrix) -> tuple[F2Matrix, F2Matrix]:
    """Unit LU factorization ``b = L @ U``.

    Over GF(2) the factorization is unique when it exists, and it exists
    iff every leading principal submatrix is nonsingular.

    Raises
    ------
    NotDecomposable
        Carries the order of the first singular leading minor.
    """
    m = b.dim
    work = list(b.rows)
    lower = [1 << i for i in range(m)]
    for k in range(m):
        bit = 1 << k
        if not work[k] & bit:
            raise NotDecomposable(k + 1)
        for i in range(k + 1, m):
            if work[i] & bit:
                work[i] ^= work[k]
                lower[i] |= bit
    return F2Matrix(lower, m), F2Matrix(work, m)


def prefix(a: F2Matrix, k: int) -> F2Matrix:
    """Upper-left ``k x k`` submatrix."""
    if not 1 <= k <= a.dim:
        raise ValueError(f"prefix size {k} outside 1..{a.dim}")
    mask = (1 << k) - 1
    return F2Matrix([r & mask for r in a.rows[:k]], k)


# -- sampling ------------------------------------------------------------------

def _random_word(rng: np.random.Generator, nbits: int) -> int:
    if nbits <= 0:
        return 0
    return int(rng.integers(0, 1 << nbits, dtype=np.uint64))


def random_nonsingular(m: int, rng: np.random.Generator) -> F2Matrix:
    """Uniform element of GL(m, 2) by row-wise rejection sampling."""
    _check_dim(m)
    rows: list[int] = []
    while len(rows) < m:
        r = _random_word(rng, m)
        if rank_of_rows(rows + [r]) == len(rows) + 1:
            rows.append(r)
    return F2Matrix(rows, m)


def random_lower(m: int, rng: np.random.Generator) -> F2Matrix:
    """Uniform unit lower-triangular matrix."""
    _check_dim(m)
    return F2Matrix([_random_word(rng, i) | (1 << i) for i in range(m)], m)


def random_upper(m: int, rng: np.random.Generator) -> F2Matrix:
    """Uniform unit upper-triangular matrix."""
    _check_dim(m)
    return F2Matrix([(_random_word(rng, m - 1 - i) << (i + 1)) | (1 << i)
                     for i in range(m)], m)


# -- enumeration ---------------------------------------------------------------

def all_matrices(m: int) -> Iterator[F2Matrix]:
    """Every ``m x m`` matrix, in row-major bit order (entry (0,0) slowest)."""
    _check_dim(m)
    for code in range(1 << (m * m)):
        rows = []
        for i in range(m):
            chunk = (code >> ((m - 1 - i) * m)) & ((1 << m) - 1)
            rows.append(_reverse_bits(chunk, m))
        yield F2Matrix(rows, m)


def _reverse_bits(x: int, width: int) -> int:
    return int(format(x, f"0{width}b")[::-1], 2)


def _triangular(m: int, lower: bool) -> Iterator[F2Matrix]:
    free = [(i, j) for i in range(m) for j in range(m)
            if (j < i if lower else j > i)]
    n = len(free)
    for code in range(1 << n):
        rows = [1 << i for i in range(m)]
        for pos, (i, j) in enumerate(free):
            if (code >> (n - 1 - pos)) & 1:
                rows[i] |= 1 << j
        yield F2Matrix(rows, m)


def all_lower(m: int) -> Iterator[F2Matrix]:
    """Every unit lower-triangular matrix, row-major bit order."""
    _check_dim(m)
    return _triangular(m, lower=True)


def all_upper(m: int) -> Iterator[F2Matrix]:
    """Every unit upper-triangular matrix, row-major bit order."""
    _check_dim(m)
    return _triangular(m, lower=False)


def all_nonsingular(m: int) -> Iterator[F2Matrix]:
    """Every element of GL(m, 2), row-major bit order."""
    return (a for a in all_matrices(m) if is_nonsingular(a))


# -- text format -----------------------------------------------------------------

def format_matrix(a: F2Matrix) -> str:
    """Text form: dimension line then one ``0``/``1`` string per row."""
    return "\n".join([str(a.dim)] + a.to_strings()) + "\n"


def write_matrices(mats: Iterable[F2Matrix], stream) -> None:
    """Write matrices separated by blank lines."""
    stream.write("\n".join(format_matrix(a) for a in mats))


def parse_matrices(text: str) -> list[F2Matrix]:
    """Parse zero or more matrices in the text format.

    Blank lines between matrices are ignored.
    """
    lines = text.split("\n")
    out = []
    pos = 0
    while pos < len(lines):
        line = lines[pos]
        if not line.strip():
            pos += 1
            continue
        try:
            dim = int(line.strip())
        except ValueError:
            raise ValueError(f"line {pos + 1}: expected a dimension, got {line!r}")
        _check_dim(dim)
        body = lines[pos + 1:pos + 1 + dim]
        if len(body) != dim:
            raise ValueError(f"line {pos + 1}: truncated {dim}x{dim} matrix")
        out.append(F2Matrix.from_strings([r.rstrip("\r") for r in body]))
        pos += dim + 1
    return out


def parse_matrix(text: str) -> F2Matrix:
    mats = parse_matrices(text)
    if len(mats) != 1:
        raise ValueError(f"expected exactly one matrix, found {len(mats)}")
    return mats[0]


def matrices_to_text(mats: Iterable[F2Matrix]) -> str:
    buf = io.StringIO()
    write_matrices(mats, buf)
    return buf.getvalue()
