"""Coxeter group balls, k-intermediate orders and their checks."""

from ._core import (
    DomainError,
    Error,
    Group,
    IoError,
    OutOfBallError,
    Poset,
    ResourceError,
    ValidationError,
    dihedral_formula,
    format_poly,
    is_log_concave,
    is_unimodal,
    known_checks,
    nc_lattice,
    run_check_suite,
)

__all__ = [
    "DomainError",
    "Error",
    "Group",
    "IoError",
    "OutOfBallError",
    "Poset",
    "ResourceError",
    "ValidationError",
    "dihedral_formula",
    "format_poly",
    "is_log_concave",
    "is_unimodal",
    "known_checks",
    "nc_lattice",
    "run_check_suite",
]
