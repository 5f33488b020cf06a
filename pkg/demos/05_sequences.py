"""
(0, 2)-sequences from finite windows
====================================

Infinite generator matrices are only observed through finite prefixes.
A prefix test either rejects for good (with the depth that exposes the
defect) or certifies up to the window depth.
"""

# %%
import numpy as np
from digitalnets import (
    MatrixPrefix, check_sequence_prefix, decide_02_sequence_prefix,
    random_lower, random_upper, multiply, pascal, sequence_points,
)
from digitalnets.f2 import chain

d = 24
faure = [MatrixPrefix.identity(d), MatrixPrefix.pascal(d)]
print(decide_02_sequence_prefix(*faure))
print(check_sequence_prefix(faure, 12, 0).certified_depth)

# %%
# Any (L1 U, L2 P U) is a (0, 2)-sequence.
rng = np.random.default_rng(5)
u = random_upper(d, rng)
b = MatrixPrefix(multiply(random_lower(d, rng), u))
c = MatrixPrefix(chain(random_lower(d, rng), pascal(d), u))
print(decide_02_sequence_prefix(b, c))

# %%
# The identity pair is not: the defect shows at depth 2.
ii = [MatrixPrefix.identity(d), MatrixPrefix.identity(d)]
print(decide_02_sequence_prefix(*ii))
print(check_sequence_prefix(ii, 4, 0).first_failure)

# %%
# First points of the sequence, truncated to 6 binary digits.
pts = sequence_points([b, c], 8, 6)
print(pts.as_float())
