"""
Digital nets and digital sequences in base 2.

Points are kept exact: a coordinate is an integer numerator over
``2**precision``.  Point sets are stored as a ``(N, s)`` ``uint64`` array
of numerators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .f2 import F2Matrix, anti_diagonal, identity, pascal, prefix

MAX_NET_M = 24


class Dyadic(NamedTuple):
    """The number ``numerator / 2**precision``."""

    numerator: int
    precision: int

    def __float__(self) -> float:
        return self.numerator / (1 << self.precision)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.precision)

    def truncate(self, k: int) -> "Dyadic":
        """Keep the first ``k`` binary digits."""
        if k >= self.precision:
            return Dyadic(self.numerator << (k - self.precision), k)
        return Dyadic(self.numerator >> (self.precision - k), k)


@dataclass(frozen=True, eq=False)
class DyadicPoints:
    """A finite list of points in ``[0, 1)^s`` with a common precision.

    ``numerators[n, j]`` is coordinate ``j`` of point ``n`` times
    ``2**precision``.
    """

    numerators: np.ndarray
    precision: int

    def __post_init__(self):
        arr = np.asarray(self.numerators, dtype=np.uint64)
        if arr.ndim != 2:
            raise ValueError("numerators must be a 2-d array")
        if self.precision < 0 or self.precision > 63:
            raise ValueError("precision must be in 0..63")
        if arr.size and int(arr.max()) >> self.precision:
            raise ValueError("coordinate outside [0, 1)")
        object.__setattr__(self, "numerators", arr)

    @property
    def s(self) -> int:
        return self.numerators.shape[1]

    @property
    def m(self) -> int:
        return self.precision

    def __len__(self) -> int:
        return self.numerators.shape[0]

    def __getitem__(self, n: int) -> tuple[Dyadic, ...]:
        return tuple(Dyadic(int(k), self.precision) for k in self.numerators[n])

    def __eq__(self, other) -> bool:
        if not isinstance(other, DyadicPoints):
            return NotImplemented
        return (self.precision == other.precision
                and np.array_equal(self.numerators, other.numerators))

    def as_float(self) -> np.ndarray:
        return self.numerators.astype(np.float64) / float(1 << self.precision)

    def truncate(self, k: int) -> "DyadicPoints":
        """Coordinate-wise ``k``-digit truncation by bit shifting."""
        if k > self.precision:
            raise ValueError("cannot truncate to more digits than stored")
        return DyadicPoints(self.numerators >> np.uint64(self.precision - k), k)

    def is_net_sized(self) -> bool:
        return len(self) == 1 << self.precision


# A digital net on 2**m points is a DyadicPoints of precision m.
NetPoints = DyadicPoints


@dataclass(frozen=True)
class MatrixPrefix:
    """Finite upper-left window of an infinite generator matrix."""

    window: F2Matrix

    @property
    def depth(self) -> int:
        return self.window.dim

    def at(self, k: int) -> F2Matrix:
        """The ``k x k`` prefix ``C^(k)``."""
        if k > self.depth:
            raise ValueError(f"requested depth {k} exceeds window depth {self.depth}")
        return prefix(self.window, k)

    @classmethod
    def identity(cls, depth: int) -> "MatrixPrefix":
        return cls(identity(depth))

    @classmethod
    def pascal(cls, depth: int) -> "MatrixPrefix":
        return cls(pascal(depth))

    @classmethod
    def anti_diagonal(cls, depth: int) -> "MatrixPrefix":
        # J_m is not the prefix of a single infinite matrix; only the window
        # at exactly this depth is meaningful.
        return cls(anti_diagonal(depth))


def common_depth(gens: Sequence[MatrixPrefix]) -> int:
    return min(g.depth for g in gens)


def check_generators(gens: Sequence[F2Matrix]) -> int:
    """Validate a generator tuple and return its common dimension."""
    if len(gens) == 0:
        raise ValueError("need at least one generator matrix")
    m = gens[0].dim
    if any(c.dim != m for c in gens):
        raise ValueError("generator matrices must share one dimension")
    return m


def digits(n: int, m: int) -> tuple[int, ...]:
    """Base-2 digits ``(z_1, ..., z_m)`` of ``n``, least significant first."""
    if not 0 <= n < (1 << m):
        raise ValueError(f"{n} does not fit in {m} digits")
    return tuple((n >> i) & 1 for i in range(m))


def phi(y: Sequence[int]) -> Dyadic:
    """Map a digit vector ``(y_1, ..., y_k)`` to ``sum y_i / 2**i``."""
    k = len(y)
    if k < 1:
        raise ValueError("digit vector must be non-empty")
    num = 0
    for bit in y:
        num = (num << 1) | (int(bit) & 1)
    return Dyadic(num, k)


def _column_numerators(c: F2Matrix, rows: int) -> list[int]:
    """For each column ``j``: ``phi`` of the top ``rows`` entries, as a numerator."""
    top = c.rows[:rows]
    return [sum(((r >> j) & 1) << (rows - 1 - i) for i, r in enumerate(top))
            for j in range(c.dim)]


def _span_table(cols: Sequence[int], count: int) -> np.ndarray:
    """XOR of ``cols[j]`` over the set bits ``j`` of ``n``, for ``n < count``."""
    out = np.zeros(1, dtype=np.uint64)
    j = 0
    while len(out) < count:
        out = np.concatenate([out, out ^ np.uint64(cols[j])])
        j += 1
    return out[:count]


def net_points(gens: Sequence[F2Matrix]) -> DyadicPoints:
    """The ``2**m`` points of the digital net generated by ``gens``.

    Coordinate ``j`` of point ``n`` is ``phi(C_j @ digits(n))``.  The whole
    table is built by XOR-doubling over the columns, so each coordinate
    costs one pass over ``2**m`` words.
    """
    m = check_generators(gens)
    if m > MAX_NET_M:
        raise ValueError(f"m={m} exceeds the materialization bound {MAX_NET_M}")
    cols = [_column_numerators(c, m) for c in gens]
    table = np.stack([_span_table(cj, 1 << m) for cj in cols], axis=1)
    return DyadicPoints(table, m)


def sequence_points(gens: Sequence[MatrixPrefix], count: int,
                    precision: int) -> DyadicPoints:
    """First ``count`` points of a digital sequence, truncated to ``precision``.

    The result equals the truncation of the infinite-matrix sequence as long
    as the window depth covers both ``precision`` and the digits of
    ``count - 1``.
    """
    if not gens:
        raise ValueError("need at least one generator")
    depth = common_depth(gens)
    if not 1 <= precision <= depth:
        raise ValueError(f"precision {precision} outside 1..{depth}")
    if not 1 <= count <= (1 << depth):
        raise ValueError(f"count {count} exceeds window capacity 2**{depth}")
    if precision > 63:
        raise ValueError("precision above 63 digits is not representable")
    cols = [_column_numerators(g.at(depth), precision) for g in gens]
    table = np.stack([_span_table(cj, count) for cj in cols], axis=1)
    return DyadicPoints(table, precision)


def extend_with_index_coordinate(gens: Sequence[F2Matrix]) -> list[F2Matrix]:
    """Prepend ``J_m`` so that point ``n`` gains the coordinate ``n / 2**m``."""
    m = check_generators(gens)
    return [anti_diagonal(m), *gens]


# -- point text formats ---------------------------------------------------------

POINT_FORMATS = ("frac", "dec", "bin")


def format_coordinate(num: int, precision: int, fmt: str) -> str:
    if fmt == "frac":
        return f"{num}/{1 << precision}"
    if fmt == "dec":
        if precision == 0:
            return "0"
        digits_ = str(num * 5 ** precision).rjust(precision, "0")
        return "0." + digits_
    if fmt == "bin":
        return format(num, f"0{precision}b") if precision else ""
    raise ValueError(f"unknown point format {fmt!r}")


def format_points(pts: DyadicPoints, fmt: str = "frac") -> str:
    p = pts.precision
    lines = [" ".join(format_coordinate(int(k), p, fmt) for k in row)
             for row in pts.numerators]
    return "\n".join(lines) + ("\n" if lines else "")


def _parse_coordinate(token: str) -> tuple[int, int]:
    if "/" in token:
        num, den = token.split("/")
        num, den = int(num), int(den)
        if den <= 0 or den & (den - 1):
            raise ValueError(f"denominator of {token!r} is not a power of 2")
        return num, den.bit_length() - 1
    if token.startswith("0."):
        # k / 2**p is written with exactly p decimal places
        prec = len(token) - 2
        scaled = Fraction(token) * (1 << prec)
        if scaled.denominator != 1:
            raise ValueError(f"{token!r} is not dyadic")
        return int(scaled), prec
    if set(token) <= {"0", "1"}:
        return int(token, 2), len(token)
    raise ValueError(f"cannot parse coordinate {token!r}")


def parse_points(text: str) -> DyadicPoints:
    """Read points written by :func:`format_points` in any of its formats.

    Coordinates are brought to the largest precision seen.
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("no points found")
    s = len(rows[0])
    if any(len(r) != s for r in rows):
        raise ValueError("points have inconsistent dimension")
    parsed = [[_parse_coordinate(tok) for tok in r] for r in rows]
    prec = max(p for r in parsed for _, p in r)
    nums = np.array([[num << (prec - p) for num, p in r] for r in parsed],
                    dtype=np.uint64)
    return DyadicPoints(nums, prec)
