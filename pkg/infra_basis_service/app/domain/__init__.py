"""Domain layer - álgebra exacta de polinomios cuaterniónicos."""

from .harmonics import inner_product, norm2, solid_harmonic
from .ids import BasisId, Family, HarmonicId, InvalidIndexError, LegendrePhase, Parity
from .operators import D_LEFT, D_RIGHT, DBAR_LEFT, DBAR_RIGHT, apply_cr, classify, sandwich
from .pi_rational import PiRational
from .qpoly import QPolynomial

__all__ = [
    "BasisId",
    "D_LEFT",
    "D_RIGHT",
    "DBAR_LEFT",
    "DBAR_RIGHT",
    "Family",
    "HarmonicId",
    "InvalidIndexError",
    "LegendrePhase",
    "Parity",
    "PiRational",
    "QPolynomial",
    "apply_cr",
    "classify",
    "inner_product",
    "norm2",
    "sandwich",
    "solid_harmonic",
]
