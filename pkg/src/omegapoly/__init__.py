"""Polynomial analogues of restricted multicolor b-ary partition functions.

The central object is the polynomial ``Omega(n)`` attached to a
:class:`PartitionSpec` (base ``b`` and color bounds ``lambdas``).  Its
monomials are in one-to-one correspondence with the restricted colored
b-ary partitions of ``n``; :mod:`omegapoly.codec` translates between the two.
"""

from .numtheory import (
    DigitVector,
    NonBinaryDigit,
    d_support,
    d_transform,
    enumerate_Mb,
    is_in_Mb,
    starred_multinomial,
    to_digit_vector,
)
from .poly import (
    ExponentPoly,
    Monomial,
    OmegaPoly,
    PartitionSpec,
    SpecMismatch,
    VarIndex,
    expoly_shift,
    poly_add,
    poly_eval,
    poly_from_json,
    poly_mul,
    poly_render,
    poly_substitute_ZT,
)
from .partitions import (
    ColoredPartition,
    count_partitions,
    enumerate_partitions,
    parse_partition,
    render_partition,
)
from .engines import (
    ENGINES,
    compute_omega,
    omega_convolution,
    omega_explicit,
    omega_product,
    omega_recurrence,
    stern_omega,
    y_coefficient,
)
from .codec import (
    CodecError,
    ColorConflict,
    MalformedExponent,
    MixedValue,
    monomial_to_partition,
    omega_to_partitions,
    partition_to_monomial,
)
from .identities import (
    FactorizationReport,
    JRange,
    check_factorization,
    check_functional_equation,
    factorization_j_range,
    uniform_color_count,
)

__version__ = "0.1.0"
