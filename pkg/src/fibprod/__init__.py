"""Exact verification of Fibonacci and Lucas infinite product identities.

The catalog encodes eighteen identities of the shape
prod_{k>=1} (X_k + s_k C)/(X_k - s_k C) = R over Q(sqrt5); the engine
checks exact finite truncations against closed boundary factors and
certifies truncation error with rational tail bounds.  No floating
point is used anywhere.
"""

from .catalog import (
    IdentityDescriptor,
    Params,
    TailModel,
    boundary_factor,
    catalog_json,
    catalog_metadata,
    get_identity,
    lhs_term,
    list_identities,
    rhs_closed_form,
    tail_model,
)
from .engine import (
    PRODUCT_CAP,
    TailCertificationError,
    VerificationReport,
    partial_product,
    special_evaluations,
    tail_bound,
    verify_exact,
    verify_limit,
)
from .exactnum import (
    PHI,
    SQRT5,
    GoldenExt,
    Rational,
    golden_cmp,
    golden_conj,
    golden_norm,
    golden_to_decimal,
)
from .fiblucas import (
    INDEX_CAP,
    FibPair,
    IndexCapError,
    fib,
    fib_pair,
    lucas,
    phi_power,
)

__version__ = "0.1.0"

__all__ = [
    "FibPair",
    "GoldenExt",
    "IdentityDescriptor",
    "IndexCapError",
    "INDEX_CAP",
    "Params",
    "PHI",
    "PRODUCT_CAP",
    "Rational",
    "SQRT5",
    "TailCertificationError",
    "TailModel",
    "VerificationReport",
    "boundary_factor",
    "catalog_json",
    "catalog_metadata",
    "fib",
    "fib_pair",
    "get_identity",
    "golden_cmp",
    "golden_conj",
    "golden_norm",
    "golden_to_decimal",
    "lhs_term",
    "list_identities",
    "lucas",
    "partial_product",
    "phi_power",
    "rhs_closed_form",
    "special_evaluations",
    "tail_bound",
    "tail_model",
    "verify_exact",
    "verify_limit",
    "__version__",
]
