"""
Deciding the (t, m, s)-net property of digital nets.

Two independent routes are provided:

* :func:`strength_by_rank` uses the linear-algebra criterion: the net has
  strength ``k`` iff for every composition ``d_1 + ... + d_s = k`` the first
  ``d_j`` rows of each ``C_j`` are linearly independent.  A slow scalar
  version, :func:`strength_by_rank_naive`, exists for differential testing.
* :func:`is_net_geometric` counts points in every elementary interval of
  the prescribed volume, straight from the definition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .f2 import F2Matrix, anti_diagonal, rank_of_rows
from .nets import DyadicPoints, MatrixPrefix, check_generators, common_depth

GEOMETRIC_MAX_M = 12
DISCREPANCY_MAX_POINTS = 1 << 16


class InstanceTooLarge(ValueError):
    pass


@lru_cache(maxsize=None)
def compositions(k: int, s: int) -> tuple[tuple[int, ...], ...]:
    """All ``(d_1, ..., d_s)`` with nonnegative parts summing to ``k``, in
    lexicographic order."""
    if s == 1:
        return ((k,),)
    out = []
    for first in range(k + 1):
        for rest in compositions(k - first, s - 1):
            out.append((first,) + rest)
    return tuple(out)


@dataclass(frozen=True)
class TReport:
    """Outcome of a rank-based strength computation.

    ``witness`` is the lexicographically smallest composition of
    ``strength + 1`` whose stacked rows are dependent; it is ``None`` when
    ``strength == m``.
    """

    m: int
    s: int
    strength: int
    witness: tuple[int, ...] | None = None

    @property
    def t_value(self) -> int:
        return self.m - self.strength

    def as_dict(self, t: int | None = None) -> dict:
        t = self.t_value if t is None else t
        return {
            "kind": "net",
            "m": self.m,
            "s": self.s,
            "t": t,
            "strength": self.strength,
            "passed": self.t_value <= t,
            "witness": None if self.witness is None
            else {"composition": list(self.witness)},
            "checked_depths": [],
        }


def _batched_full_rank(stacks: np.ndarray, ncols: int) -> np.ndarray:
    """Row-independence test for a batch of ``(N, k)`` row-word stacks."""
    work = stacks.copy()
    n, k = work.shape
    if k == 0:
        return np.ones(n, dtype=bool)
    used = np.zeros((n, k), dtype=bool)
    rank = np.zeros(n, dtype=np.int64)
    batch = np.arange(n)
    for c in range(ncols):
        bit = ((work >> np.uint64(c)) & np.uint64(1)).astype(bool)
        cand = bit & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = cand.argmax(axis=1)
        pivot = np.where(has, work[batch, idx], np.uint64(0))
        elim = bit & has[:, None]
        elim[batch, idx] = False
        work ^= np.where(elim, pivot[:, None], np.uint64(0))
        used[batch[has], idx[has]] = True
        rank += has
    return rank == k


def _rows_array(gens: Sequence[F2Matrix]) -> np.ndarray:
    return np.array([list(c.rows) for c in gens], dtype=np.uint64)


@lru_cache(maxsize=256)
def _stack_index(k: int, s: int) -> tuple[np.ndarray, np.ndarray]:
    """Gather indices (generator, row) stacking each composition of ``k``."""
    comps = compositions(k, s)
    gen_idx = np.empty((len(comps), k), dtype=np.intp)
    row_idx = np.empty((len(comps), k), dtype=np.intp)
    for a, comp in enumerate(comps):
        pos = 0
        for j, d in enumerate(comp):
            gen_idx[a, pos:pos + d] = j
            row_idx[a, pos:pos + d] = np.arange(d)
            pos += d
    return gen_idx, row_idx


def _level_failures(rows: np.ndarray, m: int, k: int) -> np.ndarray:
    """Boolean mask over ``compositions(k, s)``: True where rank is deficient."""
    gen_idx, row_idx = _stack_index(k, rows.shape[0])
    return ~_batched_full_rank(rows[gen_idx, row_idx], m)


def strength_by_rank(gens: Sequence[F2Matrix]) -> TReport:
    """Strength and t-value of the digital net generated by ``gens``.

    Strength is monotone in the level ``k`` (a dependent stack at level
    ``k`` stays dependent once rows are appended), so the first failing
    level is found by bisection, each level being checked for all its
    compositions at once.
    """
    m = check_generators(gens)
    s = len(gens)
    rows = _rows_array(gens)

    def fails(k: int) -> np.ndarray:
        return _level_failures(rows, m, k)

    top = fails(m)
    if not top.any():
        return TReport(m, s, m)
    lo, hi, hi_mask = 0, m, top
    while hi - lo > 1:
        mid = (lo + hi) // 2
        mask = fails(mid)
        if mask.any():
            hi, hi_mask = mid, mask
        else:
            lo = mid
    witness = compositions(hi, s)[int(np.argmax(hi_mask))]
    return TReport(m, s, hi - 1, witness)


def strength_by_rank_naive(gens: Sequence[F2Matrix]) -> TReport:
    """Same contract as :func:`strength_by_rank`, one rank at a time."""
    m = check_generators(gens)
    s = len(gens)
    for k in range(1, m + 1):
        for comp in compositions(k, s):
            stacked = [r for c, d in zip(gens, comp) for r in c.rows[:d]]
            if rank_of_rows(stacked) < k:
                return TReport(m, s, k - 1, comp)
    return TReport(m, s, m)


def t_value(gens: Sequence[F2Matrix]) -> int:
    return strength_by_rank(gens).t_value


# -- geometric oracle -----------------------------------------------------------

@dataclass(frozen=True)
class ElementaryInterval:
    """The box ``prod_i [a_i / 2**c_i, (a_i + 1) / 2**c_i)``."""

    shape: tuple[int, ...]
    offsets: tuple[int, ...]

    def __post_init__(self):
        if len(self.shape) != len(self.offsets):
            raise ValueError("shape and offsets differ in length")
        for c, a in zip(self.shape, self.offsets):
            if c < 0 or not 0 <= a < (1 << c):
                raise ValueError(f"offset {a} invalid for c={c}")

    @property
    def volume(self) -> Fraction:
        return Fraction(1, 1 << sum(self.shape))

    def bounds(self) -> list[tuple[Fraction, Fraction]]:
        return [(Fraction(a, 1 << c), Fraction(a + 1, 1 << c))
                for c, a in zip(self.shape, self.offsets)]

    def count(self, pts: DyadicPoints) -> int:
        nums = pts.numerators
        inside = np.ones(len(pts), dtype=bool)
        for j, (c, a) in enumerate(zip(self.shape, self.offsets)):
            if c > pts.precision:
                raise ValueError("interval finer than point precision")
            inside &= (nums[:, j] >> np.uint64(pts.precision - c)) == a
        return int(inside.sum())


@dataclass(frozen=True)
class GeometricVerdict:
    passed: bool
    t: int
    witness: ElementaryInterval | None = None
    witness_count: int | None = None

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self, m: int, s: int, strength: int | None = None) -> dict:
        return {
            "kind": "net",
            "m": m,
            "s": s,
            "t": self.t,
            "strength": strength,
            "passed": self.passed,
            "witness": None if self.witness is None else {
                "shape": list(self.witness.shape),
                "offsets": list(self.witness.offsets),
            },
            "checked_depths": [],
        }


def is_net_geometric(pts: DyadicPoints, t: int,
                     max_m: int = GEOMETRIC_MAX_M) -> GeometricVerdict:
    """Check the (t, m, s)-net definition by counting points per box.

    Every elementary interval of volume ``2**(t - m)`` must hold exactly
    ``2**t`` points.  Shapes are scanned in lexicographic order; on failure
    the witness is the lexicographically first box of the first failing
    shape that holds *fewer* than ``2**t`` points (one always exists, as
    the counts sum to ``2**m``).
    """
    m = pts.precision
    if not pts.is_net_sized():
        raise ValueError(f"{len(pts)} points is not 2**{m}")
    if not 0 <= t <= m:
        raise ValueError(f"t={t} outside 0..{m}")
    if m > max_m:
        raise InstanceTooLarge(f"m={m} exceeds geometric cap {max_m}")
    s = pts.s
    k = m - t
    target = 1 << t
    nums = pts.numerators
    for shape in compositions(k, s):
        key = np.zeros(len(pts), dtype=np.uint64)
        for j, c in enumerate(shape):
            key = (key << np.uint64(c)) | (nums[:, j] >> np.uint64(m - c))
        counts = np.bincount(key.astype(np.intp), minlength=1 << k)
        if np.all(counts == target):
            continue
        box = int(np.flatnonzero(counts < target)[0])
        found = int(counts[box])
        offsets = []
        for c in reversed(shape):
            offsets.append(box & ((1 << c) - 1))
            box >>= c
        interval = ElementaryInterval(shape, tuple(reversed(offsets)))
        return GeometricVerdict(False, t, interval, found)
    return GeometricVerdict(True, t)


def t_value_geometric(pts: DyadicPoints, max_m: int = GEOMETRIC_MAX_M) -> int:
    """Smallest ``t`` for which :func:`is_net_geometric` passes."""
    for t in range(pts.precision + 1):
        if is_net_geometric(pts, t, max_m):
            return t
    raise AssertionError("t = m always passes")


# -- sequence prefixes --------------------------------------------------------------

@dataclass(frozen=True)
class DepthResult:
    depth: int
    t_value: int
    passed: bool
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class SequenceReport:
    """Per-depth outcome of checking ``(J_m, C_1^(m), ..., C_s^(m))``.

    A pass certifies the (t, s)-sequence property only up to
    ``max_depth``; a failure at any depth is definitive.
    """

    t: int
    s: int
    max_depth: int
    depths: list[DepthResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(d.passed for d in self.depths)

    @property
    def first_failure(self) -> DepthResult | None:
        return next((d for d in self.depths if not d.passed), None)

    @property
    def certified_depth(self) -> int:
        fail = self.first_failure
        return self.max_depth if fail is None else fail.depth - 1

    def as_dict(self) -> dict:
        fail = self.first_failure
        return {
            "kind": "sequence-prefix",
            "m": self.max_depth,
            "s": self.s,
            "t": self.t,
            "strength": None if fail is None else fail.depth - fail.t_value,
            "passed": self.passed,
            "witness": None if fail is None else
            {"composition": list(fail.witness), "depth": fail.depth},
            "checked_depths": [
                {"depth": d.depth, "t_value": d.t_value, "passed": d.passed}
                for d in self.depths
            ],
        }


def check_sequence_prefix(gens: Sequence[MatrixPrefix], max_depth: int,
                          t: int = 0, stop_at_failure: bool = False
                          ) -> SequenceReport:
    """Check ``(J_m, C_1^(m), ..., C_s^(m))`` for ``m = 1..max_depth``.

    Each depth passes when the extended net has t-value at most ``t``.
    """
    if not gens:
        raise ValueError("need at least one generator")
    if not 1 <= max_depth <= common_depth(gens):
        raise ValueError(f"max_depth {max_depth} outside 1..{common_depth(gens)}")
    report = SequenceReport(t, len(gens), max_depth)
    for depth in range(1, max_depth + 1):
        tuple_ = [anti_diagonal(depth)] + [g.at(depth) for g in gens]
        rep = strength_by_rank(tuple_)
        ok = rep.t_value <= t
        report.depths.append(DepthResult(depth, rep.t_value, ok, rep.witness))
        if stop_at_failure and not ok:
            break
    return report


# -- discrepancy -------------------------------------------------------------------

def _pair_min_product_sum(rows: list[list[int]]) -> int:
    """``sum_{n, n'} prod_i min(w[n][i], w[n'][i])`` in exact integers."""
    n, s = len(rows), len(rows[0])
    if max(max(r) for r in rows).bit_length() * s > 64:
        total = 0
        for a in rows:
            for b in rows:
                p = 1
                for x, y in zip(a, b):
                    p *= min(x, y)
                total += p
        return total
    w = np.array(rows, dtype=np.uint64)
    total = 0
    lo_mask = np.uint64(0xFFFFFFFF)
    block = max(1, (1 << 22) // max(n, 1))
    for start in range(0, n, block):
        chunk = w[start:start + block]
        prod = np.ones((len(chunk), n), dtype=np.uint64)
        for i in range(s):
            prod *= np.minimum(chunk[:, None, i], w[None, :, i])
        total += int((prod & lo_mask).sum(dtype=np.uint64))
        total += int((prod >> np.uint64(32)).sum(dtype=np.uint64)) << 32
    return total


def l2_star_discrepancy(pts: DyadicPoints, exact: bool = False):
    """Squared L2 star discrepancy via Warnock's formula.

    Evaluated in exact rational arithmetic from the dyadic numerators.
    Returns a :class:`~fractions.Fraction` when ``exact`` is set, otherwise
    a float rounded to 12 significant digits.
    """
    n = len(pts)
    if n == 0:
        raise ValueError("empty point set")
    if n > DISCREPANCY_MAX_POINTS:
        raise InstanceTooLarge(f"{n} points exceeds {DISCREPANCY_MAX_POINTS}")
    s, p = pts.s, pts.precision
    q = 1 << p
    k = [[int(v) for v in row] for row in pts.numerators]
    single = 0
    for row in k:
        term = 1
        for x in row:
            term *= q * q - x * x
        single += term
    pair = _pair_min_product_sum([[q - x for x in row] for row in k])
    value = (Fraction(1, 3 ** s)
             - Fraction(2 * single, n * (2 * q * q) ** s)
             + Fraction(pair, n * n * q ** s))
    if exact:
        return value
    return float(f"{float(value):.12g}")


def report_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)
