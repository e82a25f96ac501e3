"""Secret sharing of classical secrets over quantum stabilizer states, analysed
through symplectic linear algebra over finite fields."""

__version__ = "0.1.0"

from .errors import ResourceLimitError, SympShareError
from .field import Felt, FieldSpec, field_make, gf
from .linalg import Subspace, rref_basis
from .scheme import (
    Access,
    Scheme,
    access_report,
    classify,
    complement_info,
    info_amount,
    partial_leakage,
    scheme_build,
    strong_security_check,
)
from .symplectic import coset_distance, lagrangian_extend, rgsw, symp_dual, symp_space

__all__ = [
    "Access",
    "Felt",
    "FieldSpec",
    "ResourceLimitError",
    "Scheme",
    "Subspace",
    "SympShareError",
    "access_report",
    "classify",
    "complement_info",
    "coset_distance",
    "field_make",
    "gf",
    "info_amount",
    "lagrangian_extend",
    "partial_leakage",
    "rgsw",
    "rref_basis",
    "scheme_build",
    "strong_security_check",
    "symp_dual",
    "symp_space",
]
