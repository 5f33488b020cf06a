"""Digital (0, m, 3)-nets and (0, 2)-sequences in base 2.

Construction, verification, decomposition, enumeration and sampling of
generator matrices over GF(2).
"""

from .f2 import (
    F2Matrix,
    NotDecomposable,
    Singular,
    anti_diagonal,
    identity,
    inverse,
    is_lower_triangular_nonsingular,
    is_upper_triangular_nonsingular,
    lu_decompose,
    multiply,
    parse_matrices,
    parse_matrix,
    pascal,
    prefix,
    random_lower,
    random_nonsingular,
    random_upper,
    rank,
)
from .nets import (
    Dyadic,
    DyadicPoints,
    MatrixPrefix,
    NetPoints,
    digits,
    extend_with_index_coordinate,
    net_points,
    phi,
    sequence_points,
)
from .verify import (
    ElementaryInterval,
    TReport,
    check_sequence_prefix,
    is_net_geometric,
    l2_star_discrepancy,
    strength_by_rank,
    strength_by_rank_naive,
    t_value_geometric,
)
from .characterize import (
    L2NotLower,
    NotANet,
    NotLU,
    SingularA,
    check_upper_pair,
    compose_0m2,
    compose_0m3,
    decide_01_sequence_prefix,
    decide_02_sequence_prefix,
    decompose_0m2,
    decompose_0m3,
    enumerate_0m3,
    random_0m2,
    random_0m3,
)

__version__ = "0.1.0"
