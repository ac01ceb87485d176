"""Declarative registry of verified identities plus the sweep engine."""

from .base import (
    REGISTRY,
    Env,
    IdentityDescriptor,
    UnsatisfiableInField,
    VerifyReport,
    enumerate_cases,
    get_env,
    list_identities,
    mutation_probe,
    verify,
    verify_all,
)
from . import defs_basic  # noqa: E402,F401
from . import defs_summation  # noqa: E402,F401
from . import defs_quadratic  # noqa: E402,F401
from . import defs_product  # noqa: E402,F401

__all__ = [
    "REGISTRY",
    "Env",
    "IdentityDescriptor",
    "UnsatisfiableInField",
    "VerifyReport",
    "enumerate_cases",
    "get_env",
    "list_identities",
    "mutation_probe",
    "verify",
    "verify_all",
]
