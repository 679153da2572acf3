"""Exact and asymptotic counting of partitions with parts in a finite set."""
from .asymptotics import (
    AsymptoticReport,
    DegenerateFit,
    SlopeFit,
    alternating_binomial_check,
    erdos_lehner_coefficient,
    error_slope,
    leading_coefficient,
    leading_term,
    power_sum_check,
    report,
    report_table,
)
from .exact import (
    CapExceeded,
    CountTable,
    ResidueReduction,
    count_any,
    count_dp,
    count_recursive,
    enumerate_partitions,
    residue_reduction,
)
from .partset import (
    EmptySet,
    NathansonSplit,
    NeedsTwoParts,
    NonPositivePart,
    NotCoprime,
    PartitionError,
    PartSet,
    make_part_set,
    reduce_by_gcd,
    split,
)
from .representability import FrobeniusResult, apery_set, frobenius, is_representable

__version__ = "0.1.0"
