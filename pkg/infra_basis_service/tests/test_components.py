"""Pruebas de la expansión literal en armónicos sólidos."""

import pytest

from app.domain.harmonics import harmonic_or_zero
from app.domain.ids import LegendrePhase, Parity
from app.domain.qpoly import E1, E2, X0, X1, X2, QPolynomial
from app.services.basis import basis_element
from app.services.components import (
    components_expansion,
    describe_relation,
    expected_scale,
    proportionality,
)


def test_x_expansion_is_conjugate_under_hobson(bid, x10):
    """En fase de Hobson la fórmula de tipo 0 da 2x0 − x1e1 − x2e2 = conj(X⁺₁,₀)."""
    expansion = components_expansion(bid(1, "X", "+", 0), LegendrePhase.HOBSON)
    assert expansion == QPolynomial.from_components(X0 * 2, -X1, -X2)
    assert describe_relation(expansion, x10) == "1·conj(elemento)"


@pytest.mark.parametrize("n", range(0, 5))
def test_x_expansion_matches_under_condon_shortley(bid, n):
    for parity in (Parity.PLUS, Parity.MINUS):
        for m in range(1 if parity is Parity.MINUS else 0, n + 2):
            b = bid(n, "X", parity.value, m)
            cs = LegendrePhase.CONDON_SHORTLEY
            assert components_expansion(b, cs) == basis_element(b, cs)


@pytest.mark.parametrize("n", range(2, 5))
def test_zu_zero_order_expansion(bid, n):
    """Zu⁺ₙ,₀ = U⁻ₙ,₁e1 − U⁺ₙ,₁e2."""
    expected = harmonic_or_zero(n, 1, Parity.MINUS) * E1 - harmonic_or_zero(n, 1, Parity.PLUS) * E2
    b = bid(n, "Zu", "+", 0)
    assert components_expansion(b, LegendrePhase.HOBSON) == expected
    assert expected_scale(b) == 1


def test_expected_scale(bid):
    assert expected_scale(bid(3, "X", "+", 2)) == 1
    assert expected_scale(bid(3, "Y", "-", 1)) == 5
    assert expected_scale(bid(3, "Zu", "+", 2)) == 5


def test_expansion_rejects_other_families(bid):
    with pytest.raises(ValueError):
        components_expansion(bid(2, "Z", "+", 1))
    with pytest.raises(ValueError):
        components_expansion(bid(1, "B", "+", 0))


def test_proportionality():
    f = QPolynomial.from_components(X0, X1)
    assert proportionality(f * 3, f) == 3
    assert proportionality(f.conjugate(), f) is None
    assert proportionality(QPolynomial.zero(), f) is None


def test_describe_relation_without_match():
    f = QPolynomial.from_components(X0, X1)
    g = QPolynomial.from_components(X2)
    assert describe_relation(f, g) is None


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
