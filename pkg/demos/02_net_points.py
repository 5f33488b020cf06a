"""
Points of a digital net
=======================

Generate the 2^m points of the net defined by (J, I, P), print them
exactly, and plot the three two-dimensional projections.
"""

# %%
from digitalnets import anti_diagonal, identity, pascal, net_points
from digitalnets.nets import format_points, extend_with_index_coordinate

m = 3
pts = net_points([anti_diagonal(m), identity(m), pascal(m)])
print(format_points(pts, "frac"))

# %%
# The first coordinate of a net whose first matrix is J is just n / 2^m.
ext = net_points(extend_with_index_coordinate([pascal(m)]))
print(ext.numerators[:, 0])

# %%
# Points are exact dyadic numbers; floats are only for display.
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

big = net_points([anti_diagonal(8), identity(8), pascal(8)]).as_float()
fig, axes = plt.subplots(1, 3, figsize=(12, 4))
for ax, (i, j) in zip(axes, [(0, 1), (0, 2), (1, 2)]):
    ax.scatter(big[:, i], big[:, j], s=3)
    ax.set_title(f"coordinates {i} vs {j}")
    ax.set_aspect("equal")
fig.savefig("net_projections.png", dpi=80)
print("wrote net_projections.png")
