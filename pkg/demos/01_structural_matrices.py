"""
Structural matrices over GF(2)
==============================

The identity, the digit-reversal (anti-diagonal) matrix and the Pascal
matrix mod 2, plus the unit LU factorization that underlies everything
else in the package.
"""

# %%
# Construct the three building blocks and look at them.
from digitalnets import anti_diagonal, identity, pascal, multiply, prefix

m = 8
J, I, P = anti_diagonal(m), identity(m), pascal(m)
print("P_8 =")
print(P)

# %%
# Both J and P are involutions, and the Pascal matrices nest: the upper-left
# corner of P_m is P_k.
assert multiply(J, J) == I
assert multiply(P, P) == I
assert all(prefix(P, k) == pascal(k) for k in range(1, m + 1))

# %%
# Unit LU factorization exists exactly when every leading minor is
# nonsingular; the failing minor is reported otherwise.
import numpy as np
from digitalnets import F2Matrix, NotDecomposable, lu_decompose, random_lower, random_upper

rng = np.random.default_rng(0)
B = multiply(random_lower(m, rng), random_upper(m, rng))
L, U = lu_decompose(B)
print("\nL =", L, "\nU =", U, sep="\n")

try:
    lu_decompose(J)
except NotDecomposable as exc:
    print("\nJ has no LU factorization; first singular minor:", exc.minor)

# %%
# Matrices round-trip through the plain text format used by the CLI.
from digitalnets.f2 import format_matrix, parse_matrix

text = format_matrix(F2Matrix.from_strings(["110", "011", "001"]))
print("\n" + text)
assert parse_matrix(text).to_strings() == ["110", "011", "001"]
