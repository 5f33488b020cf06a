"""
Decision procedures and parametrizations for optimal nets and sequences
in base 2.

A triple ``(A, B, C)`` generates a digital (0, m, 3)-net exactly when it
can be written ``(J M, L1 U M, L2 P U M)`` with ``L1, L2`` unit lower
triangular, ``U`` unit upper triangular and ``M`` nonsingular.  Given the
triple, ``M = J A`` is forced, ``(L1, U)`` is the unit LU factorization of
``B M^-1`` and ``L2 = C M^-1 U^-1 P^-1`` must come out unit lower
triangular.  Pairs and infinite (prefix) matrices follow the same pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .f2 import (
    F2Matrix,
    NotDecomposable,
    Singular,
    all_lower,
    all_nonsingular,
    all_upper,
    anti_diagonal,
    chain,
    inverse,
    is_lower_triangular_nonsingular,
    is_nonsingular,
    is_upper_triangular_nonsingular,
    lu_decompose,
    multiply,
    pascal,
    random_lower,
    random_nonsingular,
    random_upper,
)
from .nets import MatrixPrefix

ENUMERATION_MAX_M = 3


class NotANet(ValueError):
    """Base class for decomposition failures.

    Each failure is a certificate that the input does not generate a net
    with t-value 0.  ``reason`` is a stable machine-readable tag.
    """

    reason = "NotANet"
    minor: int | None = None


class SingularA(NotANet):
    reason = "SingularA"

    def __init__(self):
        super().__init__("first generator matrix is singular")


class NotLU(NotANet):
    reason = "NotLU"

    def __init__(self, minor: int):
        super().__init__(f"B M^-1 has a singular leading {minor}x{minor} minor")
        self.minor = minor


class L2NotLower(NotANet):
    reason = "L2NotLower"

    def __init__(self, depth: int | None = None):
        msg = "C M^-1 U^-1 P^-1 is not unit lower triangular"
        if depth is not None:
            msg += f" (first visible at depth {depth})"
        super().__init__(msg)
        self.minor = depth


@dataclass(frozen=True)
class NetDecomposition3:
    L1: F2Matrix
    L2: F2Matrix
    U: F2Matrix
    M: F2Matrix

    def compose(self) -> tuple[F2Matrix, F2Matrix, F2Matrix]:
        return compose_0m3(self.L1, self.L2, self.U, self.M)

    def factors(self) -> tuple[F2Matrix, ...]:
        return (self.L1, self.L2, self.U, self.M)


@dataclass(frozen=True)
class NetDecomposition2:
    L: F2Matrix
    U: F2Matrix
    M: F2Matrix

    def compose(self) -> tuple[F2Matrix, F2Matrix]:
        return compose_0m2(self.L, self.U, self.M)

    def factors(self) -> tuple[F2Matrix, ...]:
        return (self.L, self.U, self.M)


def _same_dims(*mats: F2Matrix) -> int:
    m = mats[0].dim
    if any(a.dim != m for a in mats):
        raise ValueError("matrices must share one dimension")
    return m


def _normalize_first(a: F2Matrix) -> tuple[F2Matrix, F2Matrix]:
    """Return ``M = J A`` and ``M^-1``; raises :class:`SingularA`."""
    m = a.dim
    big_m = multiply(anti_diagonal(m), a)
    try:
        return big_m, inverse(big_m)
    except Singular:
        raise SingularA() from None


def _factor_lu(b: F2Matrix) -> tuple[F2Matrix, F2Matrix]:
    try:
        return lu_decompose(b)
    except NotDecomposable as exc:
        raise NotLU(exc.minor) from None


def _first_non_lower_depth(a: F2Matrix) -> int | None:
    """Smallest ``k`` whose ``k x k`` prefix is not unit lower triangular.

    Entry ``(i, j)`` is visible in every prefix larger than ``max(i, j)``.
    """
    best = None
    for i, r in enumerate(a.rows):
        if not (r >> i) & 1:
            best = i + 1 if best is None else min(best, i + 1)
        above = r >> (i + 1)
        if above:
            k = i + 1 + (above & -above).bit_length()
            best = k if best is None else min(best, k)
    return best


def decompose_0m3(a: F2Matrix, b: F2Matrix, c: F2Matrix) -> NetDecomposition3:
    """Factor a (0, m, 3)-net triple as ``(J M, L1 U M, L2 P U M)``.

    Raises
    ------
    SingularA
        ``a`` is singular, so its one-dimensional projection is not a net.
    NotLU
        ``B M^-1`` has a singular leading minor; ``minor`` gives its order.
    L2NotLower
        The triangular reduction leaves an upper pair with ``U2 != P U1``.
    """
    m = _same_dims(a, b, c)
    big_m, m_inv = _normalize_first(a)
    l1, u = _factor_lu(multiply(b, m_inv))
    p = pascal(m)  # P is its own inverse over GF(2)
    l2 = chain(c, m_inv, inverse(u), p)
    if not is_lower_triangular_nonsingular(l2):
        raise L2NotLower()
    return NetDecomposition3(l1, l2, u, big_m)


def compose_0m3(l1: F2Matrix, l2: F2Matrix, u: F2Matrix,
                big_m: F2Matrix) -> tuple[F2Matrix, F2Matrix, F2Matrix]:
    """Build ``(J M, L1 U M, L2 P U M)`` after validating the factors."""
    m = _same_dims(l1, l2, u, big_m)
    if not is_lower_triangular_nonsingular(l1):
        raise ValueError("L1 must be unit lower triangular")
    if not is_lower_triangular_nonsingular(l2):
        raise ValueError("L2 must be unit lower triangular")
    if not is_upper_triangular_nonsingular(u):
        raise ValueError("U must be unit upper triangular")
    if not is_nonsingular(big_m):
        raise ValueError("M must be nonsingular")
    um = multiply(u, big_m)
    return (multiply(anti_diagonal(m), big_m),
            multiply(l1, um),
            chain(l2, pascal(m), um))


def is_0m3_net(a: F2Matrix, b: F2Matrix, c: F2Matrix) -> bool:
    try:
        decompose_0m3(a, b, c)
    except NotANet:
        return False
    return True


def decompose_0m2(a: F2Matrix, b: F2Matrix) -> NetDecomposition2:
    """Factor a (0, m, 2)-net pair as ``(J M, L U M)``.

    Raises :class:`SingularA` or :class:`NotLU` when the pair is not a
    (0, m, 2)-net.
    """
    _same_dims(a, b)
    big_m, m_inv = _normalize_first(a)
    lower, upper = _factor_lu(multiply(b, m_inv))
    return NetDecomposition2(lower, upper, big_m)


def compose_0m2(lower: F2Matrix, upper: F2Matrix,
                big_m: F2Matrix) -> tuple[F2Matrix, F2Matrix]:
    m = _same_dims(lower, upper, big_m)
    if not is_lower_triangular_nonsingular(lower):
        raise ValueError("L must be unit lower triangular")
    if not is_upper_triangular_nonsingular(upper):
        raise ValueError("U must be unit upper triangular")
    if not is_nonsingular(big_m):
        raise ValueError("M must be nonsingular")
    return multiply(anti_diagonal(m), big_m), chain(lower, upper, big_m)


def is_0m2_net(a: F2Matrix, b: F2Matrix) -> bool:
    try:
        decompose_0m2(a, b)
    except NotANet:
        return False
    return True


def check_upper_pair(u1: F2Matrix, u2: F2Matrix) -> bool:
    """Whether ``(J, U1, U2)`` is a (0, m, 3)-net, i.e. ``U2 == P U1``."""
    m = _same_dims(u1, u2)
    if not (is_upper_triangular_nonsingular(u1)
            and is_upper_triangular_nonsingular(u2)):
        raise ValueError("both matrices must be unit upper triangular")
    return u2 == multiply(pascal(m), u1)


# -- sequence prefixes ------------------------------------------------------------

@dataclass(frozen=True)
class PrefixVerdict:
    """Outcome of a finite-window sequence test.

    If ``certified`` the property holds for every prefix up to ``depth``;
    nothing is claimed beyond it.  Otherwise the infinite matrices fail the
    property, and ``depth`` is the smallest prefix that exposes it.
    """

    certified: bool
    depth: int
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.certified


def decide_01_sequence_prefix(b: MatrixPrefix) -> PrefixVerdict:
    """(0, 1)-sequence test: every leading minor of ``B`` is nonsingular."""
    try:
        lu_decompose(b.window)
    except NotDecomposable as exc:
        return PrefixVerdict(False, exc.minor, "NotLU")
    return PrefixVerdict(True, b.depth)


def decide_02_sequence_prefix(b: MatrixPrefix, c: MatrixPrefix) -> PrefixVerdict:
    """(0, 2)-sequence test on matching windows.

    Factors ``B = L1 U`` and checks that ``C U^-1 P^-1`` is unit lower
    triangular.  Products with upper-triangular factors on the right commute
    with taking prefixes, so the first bad entry of ``L2`` pinpoints the
    smallest failing depth.
    """
    if b.depth != c.depth:
        raise ValueError(f"depth mismatch: {b.depth} vs {c.depth}")
    d = b.depth
    try:
        _, u = lu_decompose(b.window)
    except NotDecomposable as exc:
        # L2 may already break on the shallower, factorable part.
        if exc.minor > 1:
            shallow = decide_02_sequence_prefix(MatrixPrefix(b.at(exc.minor - 1)),
                                                MatrixPrefix(c.at(exc.minor - 1)))
            if not shallow:
                return shallow
        return PrefixVerdict(False, exc.minor, "NotLU")
    l2 = chain(c.window, inverse(u), pascal(d))
    bad = _first_non_lower_depth(l2)
    if bad is not None:
        return PrefixVerdict(False, bad, "L2NotLower")
    return PrefixVerdict(True, d)


# -- enumeration and sampling ---------------------------------------------------------

def enumerate_0m3(m: int) -> Iterator[tuple[F2Matrix, F2Matrix, F2Matrix]]:
    """Every (0, m, 3)-net generating triple, each exactly once.

    Factors are iterated with ``L1`` outermost, then ``L2``, ``U``, ``M``,
    each in row-major bit order.
    """
    if not 1 <= m <= ENUMERATION_MAX_M:
        raise ValueError(f"full enumeration supports m in 1..{ENUMERATION_MAX_M}")
    lowers = list(all_lower(m))
    uppers = list(all_upper(m))
    gl = list(all_nonsingular(m))
    j, p = anti_diagonal(m), pascal(m)
    jm = [multiply(j, g) for g in gl]
    for l1, l2, u in product(lowers, lowers, uppers):
        l1u = multiply(l1, u)
        l2pu = chain(l2, p, u)
        for g, jg in zip(gl, jm):
            yield jg, multiply(l1u, g), multiply(l2pu, g)


def count_0m3(m: int) -> int:
    """``|GL(m, 2)| * 2**(3 m (m - 1) / 2)``."""
    gl = 1
    for i in range(m):
        gl *= (1 << m) - (1 << i)
    return gl << (3 * m * (m - 1) // 2)


def random_factors_0m3(m: int, rng: np.random.Generator) -> NetDecomposition3:
    return NetDecomposition3(random_lower(m, rng), random_lower(m, rng),
                             random_upper(m, rng), random_nonsingular(m, rng))


def random_0m3(m: int, rng: np.random.Generator
               ) -> tuple[F2Matrix, F2Matrix, F2Matrix]:
    """Uniform random (0, m, 3)-net triple.

    The factor parametrization is a bijection, so uniform factors give a
    uniform triple.
    """
    return random_factors_0m3(m, rng).compose()


def random_0m2(m: int, rng: np.random.Generator) -> tuple[F2Matrix, F2Matrix]:
    return compose_0m2(random_lower(m, rng), random_upper(m, rng),
                       random_nonsingular(m, rng))

