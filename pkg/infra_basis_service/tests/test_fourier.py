"""Pruebas de la expansión de Fourier exacta por grados."""

import pytest
from sympy.polys.domains import QQ

from app.config import settings
from app.domain.ids import LegendrePhase
from app.domain.qpoly import E1, X0, QPolynomial
from app.schemas import ExpansionDocument
from app.services.basis import basis_element
from app.services.fourier import (
    Expansion,
    parseval_by_degree,
    project,
    reconstruct,
    residual_norm2,
)
from app.services.sampling import random_basis_combination


def test_project_single_element(bid):
    b = bid(2, "X", "+", 1)
    expansion = project(basis_element(b), 2)
    assert expansion.coefficients == {b: 1}


def test_project_combination(bid):
    y, x = bid(2, "Y", "+", 0), bid(3, "X", "-", 2)
    f = basis_element(y) * 5 - basis_element(x) * 3
    expansion = project(f, 3)
    assert expansion.coefficients == {y: 5, x: -3}
    assert reconstruct(expansion) == f
    assert residual_norm2(f, expansion).is_zero


def test_round_trip_across_degrees(bid):
    f = basis_element(bid(3, "Z", "-", 1)) + basis_element(bid(0, "B", "+", 0)) * 7
    assert reconstruct(project(f, 3)) == f


def test_reconstruct_empty():
    assert reconstruct(Expansion(max_degree=2)).is_zero


def test_non_member_has_positive_residual():
    """x0²e1 no es inframonogénica: el residuo es estrictamente positivo."""
    f = QPolynomial.scalar(X0**2) * E1
    expansion = project(f, 2)
    assert residual_norm2(f, expansion).is_positive
    assert all(parseval_by_degree(f, expansion).values())


def test_project_rejects_non_reduced():
    with pytest.raises(ValueError):
        project(QPolynomial.unit(3), 1)


def test_random_combinations_round_trip(rng):
    """El proyector recupera cada coeficiente y Parseval se cumple exactamente."""
    samples = max(settings.EXPANSION_SAMPLES, 100)
    for _ in range(samples):
        coefficients, f = random_basis_combination(rng, max_degree=5)
        expansion = project(f, 5)
        assert expansion.coefficients == coefficients
        assert all(parseval_by_degree(f, expansion).values())


def test_projection_is_idempotent_and_linear(rng, bid):
    f = QPolynomial.scalar(X0**2) * E1 + basis_element(bid(2, "Y", "+", 1))
    g = basis_element(bid(1, "B", "+", 5)) + QPolynomial.scalar(X0**3)
    first = project(f, 3)
    assert project(reconstruct(first), 3).coefficients == first.coefficients

    lam = QQ(-2, 3)
    combined = project(f + g * lam, 3)
    expected = dict(first.coefficients)
    for key, value in project(g, 3).coefficients.items():
        expected[key] = expected.get(key, QQ.zero) + value * lam
    assert combined.coefficients == {k: v for k, v in expected.items() if v}


def test_projection_is_phase_consistent(bid):
    """El polinomio reconstruido no depende de la fase usada."""
    f = basis_element(bid(3, "Y", "-", 2)) + basis_element(bid(2, "Z", "+", 0))
    for phase in LegendrePhase:
        assert reconstruct(project(f, 3, phase)) == f


def test_expansion_validation(bid):
    with pytest.raises(ValueError):
        Expansion(max_degree=1, coefficients={bid(2, "X", "+", 0): QQ(1)})
    with pytest.raises(ValueError):
        Expansion(max_degree=2, coefficients={bid(2, "X", "+", 0): QQ(0)})


def test_expansion_document_roundtrip(bid):
    expansion = Expansion(
        max_degree=3,
        coefficients={bid(3, "X", "+", 1): QQ(-1, 2), bid(0, "B", "+", 1): QQ(4)},
    )
    document = expansion.to_document()
    assert list(document.coefficients) == ["0:B:+:1", "3:X:+:1"]
    assert document.coefficients["3:X:+:1"] == "-1/2"
    restored = Expansion.from_document(ExpansionDocument.model_validate(document.model_dump()))
    assert restored.coefficients == expansion.coefficients


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
