"""Pruebas de armónicos sólidos, integración en la bola y dimensiones."""

import pytest
from pydantic import ValidationError
from sympy.polys.domains import QQ

from app.domain.harmonics import (
    ball_monomial_integral,
    biharmonic_dimension,
    harmonic_dimension,
    harmonic_inner_closed_form,
    harmonic_or_zero,
    inner_product,
    meridian_legendre,
    norm2,
    solid_harmonic,
)
from app.domain.ids import HarmonicId, InvalidIndexError, LegendrePhase, Parity
from app.domain.operators import laplacian
from app.domain.pi_rational import PiRational
from app.domain.qpoly import RHO2, X0, X1, X2, QPolynomial


def pi(p: int, q: int = 1) -> PiRational:
    return PiRational(QQ(p, q))


@pytest.mark.parametrize(
    "n, m, parity, expected",
    [
        (1, 0, "+", X0),
        (2, 1, "+", X0 * X1 * 3),
        (2, 2, "-", X1 * X2 * 6),
        (2, 0, "+", X0**2 - (X1**2 + X2**2) * QQ(1, 2)),
    ],
)
def test_solid_harmonic_values(n, m, parity, expected):
    """U±ₙ,ₘ en fase de Hobson."""
    assert solid_harmonic(HarmonicId(n=n, m=m, parity=Parity(parity))) == QPolynomial.scalar(expected)


def test_substitution_rule_for_order_minus_one():
    """U⁺₂,₋₁ = −U⁺₂,₁ / (n(n+1)) = −x0x1/2."""
    assert solid_harmonic(HarmonicId(n=2, m=-1)) == QPolynomial.scalar(X0 * X1 * QQ(-1, 2))


def test_condon_shortley_phase_flips_odd_orders():
    hobson = solid_harmonic(HarmonicId(n=3, m=1), LegendrePhase.HOBSON)
    cs = solid_harmonic(HarmonicId(n=3, m=1), LegendrePhase.CONDON_SHORTLEY)
    assert cs == -hobson
    assert solid_harmonic(HarmonicId(n=3, m=2), LegendrePhase.CONDON_SHORTLEY) == solid_harmonic(
        HarmonicId(n=3, m=2)
    )


@pytest.mark.parametrize("n", range(0, 11))
def test_solid_harmonics_are_harmonic(n, phase):
    for m in range(0, n + 1):
        for parity in (Parity.PLUS, Parity.MINUS):
            u = harmonic_or_zero(n, m, parity, phase)
            assert u.is_homogeneous(n)
            assert laplacian(u).is_zero


@pytest.mark.parametrize("n", range(1, 11))
def test_order_one_pair_cross_derivatives(n, phase):
    """∂₂U⁺ₙ,₁ = ∂₁U⁻ₙ,₁."""
    plus = solid_harmonic(HarmonicId(n=n, m=1), phase)
    minus = solid_harmonic(HarmonicId(n=n, m=1, parity=Parity.MINUS), phase)
    assert plus.partial(2) == minus.partial(1)


@pytest.mark.parametrize("n", range(0, 7))
def test_rho_squared_times_harmonic_is_biharmonic(n):
    """|x|²U es biarmónico; no es armónico salvo que U sea cero."""
    for m in range(0, n + 1):
        for parity in (Parity.PLUS, Parity.MINUS):
            u = harmonic_or_zero(n, m, parity)
            f = u * RHO2
            assert laplacian(f, 2).is_zero
            assert laplacian(f).is_zero == u.is_zero


def test_edge_conventions():
    """Fuera de rango se devuelve cero; U⁻ₙ,₀ también es cero."""
    assert harmonic_or_zero(2, 3, Parity.PLUS).is_zero
    assert harmonic_or_zero(-1, 0, Parity.PLUS).is_zero
    assert harmonic_or_zero(3, 0, Parity.MINUS).is_zero


def test_harmonic_id_validation():
    with pytest.raises(ValidationError):
        HarmonicId(n=2, m=3)
    with pytest.raises(ValueError):
        HarmonicId(n=0, m=-1)


@pytest.mark.parametrize(
    "exponents, expected",
    [
        ((0, 0, 0), pi(4, 3)),
        ((1, 0, 0), pi(0)),
        ((2, 0, 0), pi(4, 15)),
        ((2, 2, 0), pi(4, 105)),
    ],
)
def test_ball_monomial_integral(exponents, expected):
    assert ball_monomial_integral(exponents) == expected


def test_ball_integral_rejects_negative_exponents():
    with pytest.raises(ValueError):
        ball_monomial_integral((0, -2, 0))


def test_inner_products():
    """⟨x0, x0⟩ = 4π/15, ⟨U⁺₂,₁, U⁻₂,₁⟩ = 0, ‖U⁺₂,₁‖² = 12π/35."""
    x0 = QPolynomial.variable(0)
    u21p = solid_harmonic(HarmonicId(n=2, m=1))
    u21m = solid_harmonic(HarmonicId(n=2, m=1, parity=Parity.MINUS))
    assert inner_product(x0, x0) == pi(4, 15)
    assert inner_product(u21p, u21m).is_zero
    assert norm2(u21p) == pi(12, 35)


def test_inner_product_uses_all_components():
    f = QPolynomial.variable(0) * QPolynomial.unit(3)
    assert norm2(f) == pi(4, 15)


def _harmonic_ids(n):
    return [HarmonicId(n=n, m=m, parity=Parity.PLUS) for m in range(n + 1)] + [
        HarmonicId(n=n, m=m, parity=Parity.MINUS) for m in range(1, n + 1)
    ]


CLOSED_FORM_DEGREES = [(n, n2) for n in range(0, 7) for n2 in range(n, 7)]


@pytest.mark.parametrize("n, n2", CLOSED_FORM_DEGREES)
def test_closed_form_matches_integration(n, n2):
    """⟨ρ²ᵏU, ρ²ᵏ′U′⟩ por fórmula cerrada y por integración exacta, k, k′ ≤ 2."""
    for hid in _harmonic_ids(n):
        for hid2 in _harmonic_ids(n2):
            u, u2 = solid_harmonic(hid), solid_harmonic(hid2)
            for k in range(3):
                for k2 in range(3):
                    expected = harmonic_inner_closed_form(k, k2, hid, hid2)
                    assert expected == inner_product(u * (RHO2**k), u2 * (RHO2**k2))


def test_closed_form_degree_delta():
    assert harmonic_inner_closed_form(0, 0, HarmonicId(n=2, m=1), HarmonicId(n=3, m=1)).is_zero
    with pytest.raises(InvalidIndexError):
        harmonic_inner_closed_form(0, 0, HarmonicId(n=2, m=-1), HarmonicId(n=2, m=-1))


@pytest.mark.parametrize("n", range(0, 7))
def test_harmonic_dimension(n):
    assert harmonic_dimension(n) == 2 * n + 1


@pytest.mark.parametrize("n", range(2, 7))
def test_biharmonic_dimension(n):
    assert biharmonic_dimension(n) == 4 * n - 2


def test_meridian_legendre_restricts_u_plus():
    """ρⁿPₙᵐ(x0/ρ) es U⁺ₙ,ₘ sobre x2 = 0."""
    for n in range(0, 5):
        for m in range(0, n + 1):
            u = harmonic_or_zero(n, m, Parity.PLUS).component(0)
            assert meridian_legendre(n, m) == u.subs(X2, 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
