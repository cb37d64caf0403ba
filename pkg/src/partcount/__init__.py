"""Number-of-parts functions for partitions with parts from a set A.

Partition counts, divisor sums over A, Carlitz compositions, a catalog of
convolution identities relating them, and exact finite-difference checks of
the quasi-polynomial asymptotics for finite A.
"""

from .arith import (
    SIGMA,
    SIGMA_S,
    TAU,
    TAU_S,
    DivisorFnKind,
    distinct_odd_count,
    divisor_fn,
    hamming_weight,
    p_adic_valuation,
    pentagonal_omega,
)
from .carlitz import carlitz_table_gf, carlitz_table_rec
from .partitions import (
    np_table_conv,
    np_table_gf,
    nq_table_conv,
    nq_table_gf,
    p_table,
    parity_diff_table,
    part_multiplicity,
    q_table,
)
from .partsets import (
    BINARY,
    NATURALS,
    ODDS,
    PRIMES,
    PartSet,
    contains,
    elements_up_to,
    parse_set_spec,
    ppowers,
    remove_element,
)
from .series import Series, lambert_sum, product_family, series_invert, series_mul

__version__ = "0.1.0"
