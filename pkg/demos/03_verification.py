"""
Checking the net property two ways
==================================

The rank criterion and the literal box-counting definition must agree.
"""

# %%
import numpy as np
from digitalnets import (
    F2Matrix, anti_diagonal, identity, is_net_geometric, net_points,
    strength_by_rank, t_value_geometric,
)

m = 4
gens = [anti_diagonal(m), identity(m), identity(m)]
report = strength_by_rank(gens)
print(report, "t =", report.t_value)

# %%
# The failing composition (d_1, d_2, d_3) names the shape of an elementary
# interval that is not evenly filled.
verdict = is_net_geometric(net_points(gens), report.t_value - 1)
print(verdict.witness, "holds", verdict.witness_count, "points")
print("bounds:", verdict.witness.bounds())

# %%
# Random tuples: both routes give the same t-value.
rng = np.random.default_rng(1)
for _ in range(5):
    tup = [F2Matrix([int(x) for x in rng.integers(0, 16, size=4)], 4) for _ in range(3)]
    print(strength_by_rank(tup).t_value, t_value_geometric(net_points(tup)))

# %%
# Squared L2 star discrepancy, exact by Warnock's formula.
from digitalnets import l2_star_discrepancy, pascal

for mm in (4, 6, 8):
    good = net_points([anti_diagonal(mm), identity(mm), pascal(mm)])
    print(mm, l2_star_discrepancy(good))
