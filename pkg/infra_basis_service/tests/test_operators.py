"""Pruebas de los operadores de Cauchy–Riemann, el sándwich y la clasificación."""

import pytest
from pydantic import ValidationError

from app.domain.harmonics import solid_harmonic
from app.domain.ids import HarmonicId, Parity
from app.domain.operators import (
    D_LEFT,
    DBAR_LEFT,
    ClassFlags,
    OperatorSpec,
    Side,
    apply_cr,
    classify,
    is_inframonogenic,
    laplacian,
    sandwich,
    sandwich_right_first,
)
from app.domain.qpoly import E1, RHO2, X0, X1, X2, QPolynomial
from app.services.sampling import random_harmonic_plane, random_polynomial, scalar_inframonogenic


def test_dbar_of_x0_is_one():
    assert apply_cr(DBAR_LEFT, QPolynomial.variable(0)) == QPolynomial.constant(1)


def test_d_of_u20():
    """∂U⁺₂,₀ = 2x0 + x1e1 + x2e2."""
    u20 = solid_harmonic(HarmonicId(n=2, m=0))
    assert apply_cr(D_LEFT, u20) == QPolynomial.from_components(X0 * 2, X1, X2)


def test_fueter_variable_is_monogenic():
    """∂̄(x1 − x0e1) = 0."""
    fueter = QPolynomial.from_components(X1, -X0)
    assert apply_cr(DBAR_LEFT, fueter).is_zero


def test_sandwich_rejected_by_apply_cr():
    with pytest.raises(ValueError):
        apply_cr(OperatorSpec(side=Side.SANDWICH), QPolynomial.variable(0))


@pytest.mark.parametrize(
    "f, expected",
    [
        (QPolynomial.variable(0), QPolynomial.zero()),
        (QPolynomial.scalar(X0**2), QPolynomial.constant(2)),
        (QPolynomial.scalar(X0**2) * E1, QPolynomial.constant(2) * E1),
    ],
)
def test_sandwich_values(f, expected):
    """Valores del operador ∂̄f∂̄ sobre polinomios sencillos."""
    assert sandwich(False, f) == expected


def test_sandwich_annihilates_table_y20(y20_table):
    assert sandwich(False, y20_table).is_zero


def test_sandwich_order_independence(rng):
    """Izquierda-derecha y derecha-izquierda coinciden."""
    for _ in range(30):
        f = random_polynomial(rng, max_degree=4, reduced=False)
        for conjugated in (False, True):
            assert sandwich(conjugated, f) == sandwich_right_first(conjugated, f)


def test_sandwich_preserves_reduced(rng):
    """Para f reducida el resultado no tiene componente e3."""
    for _ in range(30):
        f = random_polynomial(rng, max_degree=5)
        assert sandwich(False, f).is_reduced
        assert sandwich(True, f).is_reduced


def test_laplacian():
    """Δ|x|² = 6, Δ(|x|²x0) = 10x0, Δ²(|x|²x0) = 0, ΔU⁺₃,₂ = 0."""
    assert laplacian(QPolynomial.scalar(RHO2)) == QPolynomial.constant(6)
    f = QPolynomial.scalar(RHO2 * X0)
    assert laplacian(f) == QPolynomial.scalar(X0 * 10)
    assert laplacian(f, 2).is_zero
    assert laplacian(solid_harmonic(HarmonicId(n=3, m=2))).is_zero


def test_laplacian_iterations_validated():
    with pytest.raises(ValueError):
        laplacian(QPolynomial.variable(0), 3)


def test_classify_monogenic():
    flags = classify(QPolynomial.from_components(X0 * 2, X1, X2))
    assert flags.monogenic and flags.inframonogenic and flags.harmonic and flags.reduced


def test_classify_not_inframonogenic():
    flags = classify(QPolynomial.scalar(X0**2) * E1)
    assert not flags.inframonogenic
    assert not is_inframonogenic(QPolynomial.scalar(X0**2) * E1)


def test_scalar_inframonogenic_family(rng):
    """c0(2x0² + x1² + x2²) + c1x0 + c2 + h(x1, x2) es inframonogénica."""
    for _ in range(10):
        h = random_harmonic_plane(4, rng)
        f = scalar_inframonogenic(rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-5, 5), h)
        assert is_inframonogenic(f)


def test_scalar_family_is_complete_in_degree_two():
    """x0x1 no está en la familia escalar y no es inframonogénica."""
    assert not is_inframonogenic(QPolynomial.scalar(X0 * X1))
    assert is_inframonogenic(QPolynomial.scalar(X1 * X2))


def test_class_flags_consistency():
    """Una clasificación monogénica pero no inframonogénica es inválida."""
    with pytest.raises(ValidationError):
        ClassFlags(
            harmonic=True,
            biharmonic=True,
            monogenic=True,
            antimonogenic=False,
            inframonogenic=False,
            antiinframonogenic=False,
            reduced=True,
        )


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
