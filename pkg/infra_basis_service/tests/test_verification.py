"""Pruebas de los invariantes duros y de la detección de mutaciones."""

import pytest

from app.domain.qpoly import X0, QPolynomial
from app.services.basis import basis_element
from app.services.verification import expected_dimension, format_summary, run_checks


def test_expected_dimension():
    assert [expected_dimension(n) for n in range(7)] == [3, 9, 15, 21, 27, 33, 39]


def test_constants_pass():
    summary = run_checks(0)
    assert summary.passed
    assert format_summary(summary).splitlines() == ["dims: 3", "OK"]


def test_all_invariants_up_to_four(phase):
    summary = run_checks(4, phase)
    assert summary.passed, format_summary(summary)
    assert summary.dims == [3, 9, 15, 21, 27]
    invariants = {r.invariant for r in summary.results}
    assert {"dimension", "annihilation", "independence", "gram_diagonal", "alpha", "appell"} <= invariants
    assert "cross_degree_odd" in invariants


def _mutated(target_key: str):
    """Provider que cambia el signo de un coeficiente del elemento indicado."""

    def provider(b):
        element = basis_element(b)
        if b.key != target_key:
            return element
        return element - QPolynomial.scalar(X0**2) * 16
    return provider


def test_mutation_is_detected():
    """Cambiar 8x0² por −8x0² en Y⁺₂,₀ rompe la anulación."""
    summary = run_checks(2, provider=_mutated("2:Y:+:0"))
    assert not summary.passed
    failing = {r.invariant for r in summary.failures}
    assert "annihilation" in failing
    text = format_summary(summary)
    assert "FALLO annihilation (n=2): 2:Y:+:0" in text


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
