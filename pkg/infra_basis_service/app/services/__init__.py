"""Services layer - construcción de la base, verificación y expansión."""

from .basis import basis_element, enumerate_basis, gram, infr_dimension
from .fourier import Expansion, project, reconstruct, residual_norm2
from .identities import check_identities, check_legendre_recurrences
from .report import render_report, verify_reference_formulas
from .verification import run_checks

__all__ = [
    "Expansion",
    "basis_element",
    "check_identities",
    "check_legendre_recurrences",
    "enumerate_basis",
    "gram",
    "infr_dimension",
    "project",
    "reconstruct",
    "render_report",
    "residual_norm2",
    "run_checks",
    "verify_reference_formulas",
]
