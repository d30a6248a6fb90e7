"""Macdonald polynomials through permutation statistics, dual equivalence and folding bijections."""

from .core import (
    BudgetExceeded,
    Cell,
    DomainError,
    Filling,
    FundExpansion,
    InvariantViolation,
    NotSymmetricError,
    QtPoly,
    SchurExpansion,
    UnsupportedShapeError,
    as_partition,
    as_perm,
    format_word,
    partitions,
)
from .dual_equivalence import D_mu, ClassPartition, d, d_twisted, enumerate_classes
from .folding import phi_mu, phi_mu_inverse
from .macdonald import compare_methods, kostka_macdonald, macdonald_fund
from .schur import decompose_to_schur, enumerate_syt
from .stats import inv_mu, maj_mu, qt_weight

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Cell",
    "DomainError",
    "Filling",
    "FundExpansion",
    "InvariantViolation",
    "NotSymmetricError",
    "QtPoly",
    "SchurExpansion",
    "UnsupportedShapeError",
    "as_partition",
    "as_perm",
    "format_word",
    "partitions",
    "D_mu",
    "ClassPartition",
    "d",
    "d_twisted",
    "enumerate_classes",
    "phi_mu",
    "phi_mu_inverse",
    "compare_methods",
    "kostka_macdonald",
    "macdonald_fund",
    "decompose_to_schur",
    "enumerate_syt",
    "inv_mu",
    "maj_mu",
    "qt_weight",
]
