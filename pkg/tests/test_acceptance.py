"""Exit criteria for the package.

Each ``test_criterion_N`` runs one criterion at its stated size and time
budget; the terminal summary prints one PASS/FAIL line per criterion.
"""

import time
from itertools import product

import numpy as np

from digitalnets import f2
from digitalnets.characterize import (
    compose_0m2,
    compose_0m3,
    decide_02_sequence_prefix,
    decompose_0m2,
    decompose_0m3,
    is_0m3_net,
    random_factors_0m3,
)
from digitalnets.f2 import (
    F2Matrix,
    NotDecomposable,
    anti_diagonal,
    identity,
    lu_decompose,
    multiply,
    pascal,
    prefix,
)
from digitalnets.nets import MatrixPrefix, extend_with_index_coordinate, net_points
from digitalnets.verify import (
    check_sequence_prefix,
    is_net_geometric,
    strength_by_rank,
    t_value_geometric,
)

J, I, P = anti_diagonal, identity, pascal


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, \
                f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def det2(a):
    return (a[0, 0] * a[1, 1] + a[0, 1] * a[1, 0]) % 2


def det_mod2(rows):
    """Cofactor expansion mod 2, independent of elimination code."""
    n = len(rows)
    if n == 1:
        return rows[0][0] & 1
    total = 0
    for j in range(n):
        if rows[0][j]:
            total ^= det_mod2([r[:j] + r[j + 1:] for r in rows[1:]])
    return total


def random_tuple(rng, m, s):
    return [F2Matrix([int(x) for x in rng.integers(0, 1 << m, size=m)], m) for _ in range(s)]


def test_criterion_1_canonical_construction():
    with Budget(10):
        for m in range(1, 33):
            assert strength_by_rank([J(m), I(m), P(m)]).t_value == 0, m
        for m in range(1, 11):
            assert is_net_geometric(net_points([J(m), I(m), P(m)]), 0), m


def test_criterion_2_exhaustive_m2_triples():
    with Budget(5):
        mats = list(f2.all_matrices(2))
        by_dec, by_geo, by_rank = set(), set(), set()
        for triple in product(mats, repeat=3):
            if is_0m3_net(*triple):
                by_dec.add(triple)
            if is_net_geometric(net_points(list(triple)), 0):
                by_geo.add(triple)
            if strength_by_rank(list(triple)).t_value == 0:
                by_rank.add(triple)
        assert by_dec == by_geo == by_rank
        # |GL(2,2)| by determinants, times the 2^3 free triangular bits
        gl2 = sum(1 for a in mats if det2(a.to_array()))
        assert gl2 == 6
        assert len(by_geo) == gl2 * 2 ** 3 == 48


def test_criterion_3_sampled_factorizations():
    with Budget(30):
        rng = np.random.default_rng(3)
        for m in (4, 8, 16, 32):
            for _ in range(1000):
                fac = random_factors_0m3(m, rng)
                triple = fac.compose()
                assert strength_by_rank(list(triple)).t_value == 0
                assert decompose_0m3(*triple) == fac


def test_criterion_4_pairs_with_antidiagonal():
    with Budget(10):
        for m in (1, 2, 3):
            jm = J(m)
            for b in f2.all_matrices(m):
                arr = b.to_array().tolist()
                minors = all(det_mod2([r[:k] for r in arr[:k]]) for k in range(1, m + 1))
                try:
                    lu_decompose(b)
                    lu_ok = True
                except NotDecomposable:
                    lu_ok = False
                rank_ok = strength_by_rank([jm, b]).t_value == 0
                geo_ok = bool(is_net_geometric(net_points([jm, b]), 0))
                assert rank_ok == geo_ok == lu_ok == minors, (m, b)


def test_criterion_5_upper_pairs_m3():
    with Budget(1):
        passing = []
        for u1, u2 in product(f2.all_upper(3), repeat=2):
            t0 = strength_by_rank([J(3), u1, u2]).t_value == 0
            assert t0 == (u2 == multiply(P(3), u1))
            if t0:
                passing.append(u1)
        assert len(passing) == 8 and len(set(passing)) == 8


def test_criterion_6_sequence_prefix():
    with Budget(5):
        for d in range(1, 17):
            gens = [MatrixPrefix.identity(d), MatrixPrefix.pascal(d)]
            assert decide_02_sequence_prefix(*gens).certified
            assert check_sequence_prefix(gens, d, 0).passed
        ii = [MatrixPrefix.identity(16), MatrixPrefix.identity(16)]
        verdict = decide_02_sequence_prefix(*ii)
        assert not verdict.certified and verdict.depth == 2
        rep = check_sequence_prefix(ii, 16, 0)
        fail = rep.first_failure
        assert fail.depth == 2 and fail.witness == (0, 1, 1)


def test_criterion_7_invariance():
    with Budget(30):
        rng = np.random.default_rng(7)
        violations = 0
        for trial in range(500):
            m, s = int(rng.integers(1, 9)), int(rng.integers(1, 4))
            if trial % 2:
                gens = list(compose_0m3(*random_factors_0m3(m, rng).factors()))[:s]
            else:
                gens = random_tuple(rng, m, s)
            g = f2.random_nonsingular(m, rng)
            moved = [f2.chain(f2.random_lower(m, rng), c, g) for c in gens]
            violations += strength_by_rank(moved) != strength_by_rank(gens)

        d = 8
        for trial in range(500):
            s = int(rng.integers(1, 3))
            if trial % 2:
                u = f2.random_upper(d, rng)
                wins = [multiply(f2.random_lower(d, rng), u),
                        f2.chain(f2.random_lower(d, rng), P(d), u)][:s]
            else:
                wins = [f2.random_nonsingular(d, rng) for _ in range(s)]
            gens = [MatrixPrefix(w) for w in wins]
            u = f2.random_upper(d, rng)
            moved = [MatrixPrefix(f2.chain(f2.random_lower(d, rng), w, u)) for w in wins]
            a = check_sequence_prefix(gens, d, 0)
            b = check_sequence_prefix(moved, d, 0)
            violations += [x.t_value for x in a.depths] != [x.t_value for x in b.depths]
        assert violations == 0


def test_criterion_8_index_coordinate():
    with Budget(10):
        rng = np.random.default_rng(8)
        for _ in range(100):
            m = int(rng.integers(1, 9))
            # (0, m, 2)-net pair that is the prefix of a (0, 2)-sequence
            u = f2.random_upper(m, rng)
            seq_pair = (multiply(f2.random_lower(m, rng), u),
                        f2.chain(f2.random_lower(m, rng), P(m), u))
            pair = compose_0m2(*decompose_0m2(*seq_pair).factors())
            assert pair == seq_pair
            assert strength_by_rank(list(pair)).t_value == 0
            ext = extend_with_index_coordinate(list(pair))
            assert strength_by_rank(ext).t_value == 0
            pts = net_points(ext)
            np.testing.assert_array_equal(pts.numerators[:, 0], np.arange(2 ** m))


def test_index_coordinate_needs_sequence_prefix():
    """Prepending J to an arbitrary (0,m,2)-net need not keep t = 0."""
    a, b = compose_0m2(I(2), I(2), I(2))  # (J, I)
    assert strength_by_rank([a, b]).t_value == 0
    assert strength_by_rank(extend_with_index_coordinate([a, b])).t_value == 1


def test_criterion_9_oracle_agreement():
    with Budget(60):
        rng = np.random.default_rng(9)
        tuples = []
        for _ in range(200):
            m, s = int(rng.integers(1, 5)), int(rng.integers(1, 4))
            tuples.append(random_tuple(rng, m, s))
        for m in range(1, 5):
            tuples += [[J(m), I(m), P(m)], [I(m), I(m)], [J(m), J(m), I(m)], [P(m)],
                       list(compose_0m3(*random_factors_0m3(m, rng).factors()))]
        for gens in tuples:
            rep = strength_by_rank(gens)
            pts = net_points(gens)
            assert t_value_geometric(pts) == rep.t_value
            assert is_net_geometric(pts, rep.t_value)
            if rep.t_value == 0:
                assert rep.witness is None
            else:
                v = is_net_geometric(pts, rep.t_value - 1)
                assert not v and v.witness.shape == rep.witness


def test_criterion_10_structural_identities():
    with Budget(1):
        for m in range(1, 65):
            assert multiply(P(m), P(m)) == I(m)
            assert multiply(J(m), J(m)) == I(m)
            for k in range(1, m + 1):
                assert prefix(P(m), k) == P(k)
