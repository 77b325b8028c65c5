"""Exact strict and extended strict order polynomials of finite posets."""

from .errors import (
    BudgetExceeded,
    CycleError,
    GuardExceeded,
    LabelOutOfRange,
    NonTerminating,
    NotAnExtensionError,
    NotDeletableError,
    NotNaturalError,
    OrdopolyError,
    ParseError,
    VerificationError,
)
from .extensions import (
    ClassPartition,
    LinearExtension,
    class_partition,
    deletable_set,
    delete,
    descent_set,
    enumerate_extensions,
    extension,
    insertion_buckets,
    prefix_partition,
    restore,
    stats,
    stats_histogram,
)
from .orderpoly import (
    ExtendedOrderPolynomial,
    OmegaPolynomial,
    antichain_generating_check,
    evaluate,
    extended,
    extended_oracle_eval,
    omega,
)
from .polynomial import (
    BivariatePolynomial,
    StructuredTable,
    antichain_closed_form,
    binom_poly,
    chain_closed_form,
    hyp2f1_terminating,
    two_by_m_determinant,
)
from .poset import Poset, antichain, canonicalize, chain, fence, from_covers, grid

__version__ = "0.1.0"
