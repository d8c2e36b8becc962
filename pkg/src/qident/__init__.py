"""Exact-arithmetic workbench for q-series identities and partition bijections."""

from .errors import (
    BadParams,
    DivisionInexact,
    DomainViolation,
    DslError,
    MissingParam,
    NonConvergent,
    NonIntegerExponent,
    NonUnitConstantTerm,
    NotSelfConjugate,
    ParseError,
    QidentError,
    TruncationRequired,
    UnboundVariable,
    UnknownBijection,
    UnknownDomain,
    UnknownIdentity,
)
from .series import (
    MultiSeries,
    QSeries,
    poch_finite,
    poch_infinite,
    qbinom,
    qq_factorial,
)
from .partitions import (
    DistinctPartition,
    Partition,
    PartitionPair,
    SignedDistinctSet,
    conjugate,
    distinct_odd_to_selfconj,
    domain_validator,
    durfee_size,
    enumerate_domain,
    enumerate_partitions,
    selfconj_to_distinct_odd,
)
from .bijections import (
    BijectionReport,
    check_bijection,
    durfee_join,
    durfee_split,
    nu3_forward,
    nu3_inverse,
    phi,
    phi_inv,
    psi,
    psi_inv,
    rho,
    rho_inv,
    tau,
)
from .identities import (
    IDENTITY_IDS,
    IdentityCase,
    VerifyReport,
    build_side,
    p_nu,
    p_omega,
    q1_limit_check,
    s_sum,
    verify,
)
from .dsl import evaluate, parse, unparse

__version__ = "0.1.0"
