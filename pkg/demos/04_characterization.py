"""
All (0, m, 3)-nets in base 2
============================

Every generating triple factors as (J M, L1 U M, L2 P U M).  Decompose
a triple, sample new ones uniformly, and enumerate small cases.
"""

# %%
import numpy as np
from digitalnets import (
    NotANet, anti_diagonal, decompose_0m3, enumerate_0m3, identity, pascal,
    random_0m3, strength_by_rank,
)

rng = np.random.default_rng(2024)
A, B, C = random_0m3(6, rng)
print("t-value of a random (0,6,3) triple:", strength_by_rank([A, B, C]).t_value)

dec = decompose_0m3(A, B, C)
assert dec.compose() == (A, B, C)
print("M =", dec.M, sep="\n")

# %%
# Failures come with a reason naming the condition that broke.
for triple in [(identity(4), anti_diagonal(4), pascal(4)),
               (anti_diagonal(4), identity(4), identity(4)),
               (anti_diagonal(4), anti_diagonal(4), identity(4))]:
    try:
        decompose_0m3(*triple)
        print("net")
    except NotANet as exc:
        print(exc.reason, exc.minor)

# %%
# Counting: |GL(m,2)| * 2^(3m(m-1)/2) triples.
for m in (1, 2, 3):
    print(m, sum(1 for _ in enumerate_0m3(m)))
