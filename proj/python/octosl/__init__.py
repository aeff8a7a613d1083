"""Octonionic 2x2 matrices: determinant, Hessian metric, normal forms."""

from ._core import (
    DomainError,
    Octonion,
    ParseError,
    PreconditionError,
    SingularError,
    associator,
    cdet,
    det,
    grad_det,
    hessian_log_det,
    mu,
    normalize,
    qdet,
    reference,
    retract,
    signature,
    su2_residual,
    suite_names,
    verify,
)

__all__ = [
    "DomainError",
    "Octonion",
    "ParseError",
    "PreconditionError",
    "SingularError",
    "associator",
    "cdet",
    "det",
    "grad_det",
    "hessian_log_det",
    "mu",
    "normalize",
    "qdet",
    "reference",
    "retract",
    "signature",
    "su2_residual",
    "suite_names",
    "verify",
]
