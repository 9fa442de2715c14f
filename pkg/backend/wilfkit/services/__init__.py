"""Service layer exports"""

from . import (
    enumeration_service,
    gas_service,
    profile_service,
    semigroup_service,
    verifier_service,
)

__all__ = [
    "enumeration_service",
    "gas_service",
    "profile_service",
    "semigroup_service",
    "verifier_service",
]
