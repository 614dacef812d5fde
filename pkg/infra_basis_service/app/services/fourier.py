"""Expansión de Fourier exacta en la base ortogonal, grado por grado.

Cada componente homogénea fₙ se proyecta sobre 𝓑ₙ con
aₙ,ⱼ = ⟨fₙ, Bₙ,ⱼ⟩ / ‖Bₙ,ⱼ‖²; los factores π se cancelan y los
coeficientes son racionales exactos.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..domain.harmonics import inner_product, norm2
from ..domain.ids import BasisId, LegendrePhase
from ..domain.pi_rational import PiRational
from ..domain.qpoly import QPolynomial, Rational, format_rational, parse_rational
from ..schemas import ExpansionDocument
from .basis import basis_element, enumerate_basis, resolve_phase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Expansion:
    """Coeficientes no nulos por elemento de la base, todos de grado ≤ max_degree."""

    max_degree: int
    coefficients: Dict[BasisId, Rational] = field(default_factory=dict)
    phase: LegendrePhase = LegendrePhase.HOBSON

    def __post_init__(self) -> None:
        for bid, value in self.coefficients.items():
            if bid.n > self.max_degree:
                raise ValueError(f"{bid.key} excede max_degree={self.max_degree}")
            if not value:
                raise ValueError(f"Coeficiente nulo almacenado para {bid.key}")

    def ordered(self) -> List[Tuple[BasisId, Rational]]:
        """Pares en el orden canónico de la base."""
        order = {bid: i for n in range(self.max_degree + 1) for i, bid in enumerate(enumerate_basis(n))}
        return sorted(self.coefficients.items(), key=lambda kv: (kv[0].n, order[kv[0]]))

    def to_document(self) -> ExpansionDocument:
        return ExpansionDocument(
            max_degree=self.max_degree,
            coefficients={bid.key: format_rational(v) for bid, v in self.ordered()},
        )

    @classmethod
    def from_document(
        cls, document: ExpansionDocument, phase: Optional[LegendrePhase | str] = None
    ) -> "Expansion":
        coefficients = {BasisId.parse(k): parse_rational(v) for k, v in document.coefficients.items()}
        return cls(
            max_degree=document.max_degree,
            coefficients={k: v for k, v in coefficients.items() if v},
            phase=resolve_phase(phase),
        )


@lru_cache(maxsize=None)
def _degree_norms(n: int, phase: LegendrePhase) -> Tuple[PiRational, ...]:
    """Diagonal de la Gram de grado n (‖B‖² no depende de la fase)."""
    return tuple(norm2(basis_element(bid, phase)) for bid in enumerate_basis(n))


def project(
    f: QPolynomial, max_degree: int, phase: Optional[LegendrePhase | str] = None
) -> Expansion:
    """Proyección ortogonal de cada parte homogénea fₙ (n ≤ max_degree) sobre 𝓑ₙ.

    Raises:
        ValueError: Si f tiene componente e3.
    """
    if not f.is_reduced:
        raise ValueError("project requiere un polinomio reducido (componente e3 nula)")
    resolved = resolve_phase(phase)
    coefficients: Dict[BasisId, Rational] = {}
    for n in range(max_degree + 1):
        part = f.homogeneous_part(n)
        if part.is_zero:
            continue
        for bid, norm in zip(enumerate_basis(n), _degree_norms(n, resolved)):
            value = inner_product(part, basis_element(bid, resolved)) / norm
            if value:
                coefficients[bid] = value
    logger.info("Proyección hasta grado %d: %d coeficientes", max_degree, len(coefficients))
    return Expansion(max_degree=max_degree, coefficients=coefficients, phase=resolved)


def reconstruct(expansion: Expansion) -> QPolynomial:
    total = QPolynomial.zero()
    for bid, value in expansion.ordered():
        total = total + basis_element(bid, expansion.phase) * value
    return total


def residual_norm2(f: QPolynomial, expansion: Expansion) -> PiRational:
    """‖f − reconstruct(e)‖²."""
    return norm2(f - reconstruct(expansion))


def parseval_by_degree(f: QPolynomial, expansion: Expansion) -> Dict[int, bool]:
    """‖fₙ‖² = ‖fₙ − Rₙ‖² + Σⱼ aₙ,ⱼ²‖Bₙ,ⱼ‖² para cada n ≤ max_degree."""
    checks: Dict[int, bool] = {}
    for n in range(expansion.max_degree + 1):
        part = f.homogeneous_part(n)
        rebuilt = QPolynomial.zero()
        energy = PiRational.zero()
        for bid, norm in zip(enumerate_basis(n), _degree_norms(n, expansion.phase)):
            value = expansion.coefficients.get(bid)
            if value:
                rebuilt = rebuilt + basis_element(bid, expansion.phase) * value
                energy = energy + norm * (value * value)
        checks[n] = norm2(part) == norm2(part - rebuilt) + energy
    return checks
