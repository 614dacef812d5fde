"""Arnés de identidades exactas sobre pares aleatorios y recurrencias de Legendre."""

import pytest

from app.config import settings
from app.domain.harmonics import solid_harmonic
from app.domain.ids import HarmonicId, LegendrePhase, Parity
from app.domain.operators import (
    D_LEFT,
    D_RIGHT,
    DBAR_LEFT,
    DBAR_RIGHT,
    apply_cr,
    classify,
    is_inframonogenic,
    sandwich,
)
from app.domain.qpoly import RHO2, X0, X1, X2, X_BAR, QPolynomial
from app.services.basis import monogenic_x
from app.services.identities import (
    GENERAL_IDENTITIES,
    MONOGENIC_IDENTITIES,
    check_identities,
    check_legendre_recurrences,
    monogenic_left_right_equivalence,
)
from app.services.sampling import (
    biharmonic_generator,
    random_antimonogenic,
    random_harmonic_plane,
    random_monogenic,
    random_polynomial,
)


def _statuses(f, g):
    return {r.identity: r.status for r in check_identities(f, g)}


def test_simple_pair():
    """f = x0, g = x1e1: todas las identidades generales se cumplen."""
    statuses = _statuses(QPolynomial.variable(0), QPolynomial.from_components(0, X1))
    assert all(statuses[name] == "pass" for name in GENERAL_IDENTITIES)
    assert all(statuses[name] == "n/a" for name in MONOGENIC_IDENTITIES)


def test_random_pairs(rng):
    """Ninguna identidad falla sobre 200 pares aleatorios reducidos de grado ≤ 4."""
    samples = max(settings.IDENTITY_SAMPLES, 200)
    for _ in range(samples):
        f = random_polynomial(rng, max_degree=4)
        g = random_polynomial(rng, max_degree=4)
        assert "fail" not in _statuses(f, g).values()


BILATERAL_EXPANSIONS = [
    "bilateral_vec_anticommutator",
    "bilateral_vec_scalar",
    "bilateral_vec_vector",
    "bilateral_dbar_vector",
    "bilateral_dbar_scalar_piece",
    "bilateral_dbar_e1_piece",
    "bilateral_dbar_e2_piece",
    "two_sided_dbar",
    "two_sided_d",
]


@pytest.mark.parametrize("name", BILATERAL_EXPANSIONS)
def test_bilateral_expansions_are_checked(name, rng):
    """Cada expansión bilateral tiene su fila y se cumple para f general."""
    assert name in GENERAL_IDENTITIES
    for _ in range(10):
        f = random_polynomial(rng, max_degree=4)
        assert GENERAL_IDENTITIES[name](f, f)


def test_two_sided_sums_on_examples():
    """x0²e1: ∂̄f + f∂̄ = 4x0e1 y ∂f + f∂ = 4x0e1; x1e1: ∂̄f + f∂̄ = −2, ∂f + f∂ = 2."""
    f = QPolynomial.from_components(0, X0**2)
    expected = QPolynomial.from_components(0, X0 * 4)
    assert apply_cr(DBAR_LEFT, f) + apply_cr(DBAR_RIGHT, f) == expected
    assert apply_cr(D_LEFT, f) + apply_cr(D_RIGHT, f) == expected

    g = QPolynomial.from_components(0, X1)
    assert apply_cr(DBAR_LEFT, g) + apply_cr(DBAR_RIGHT, g) == QPolynomial.constant(-2)
    assert apply_cr(D_LEFT, g) + apply_cr(D_RIGHT, g) == QPolynomial.constant(2)


def test_sandwich_pieces_per_unit():
    """∂̄(x0x1)∂̄ = 2e1, ∂̄(x0x1e1)∂̄ = −2, ∂̄(x1x2e2)∂̄ = −2e1."""
    assert sandwich(False, QPolynomial.scalar(X0 * X1)) == QPolynomial.unit(1) * 2
    assert sandwich(False, QPolynomial.from_components(0, X0 * X1)) == QPolynomial.constant(-2)
    assert sandwich(False, QPolynomial.from_components(0, 0, X1 * X2)) == QPolynomial.unit(1) * (-2)


def test_non_reduced_pairs_are_not_applicable(rng):
    f = random_polynomial(rng, reduced=False) + QPolynomial.unit(3)
    statuses = _statuses(f, QPolynomial.variable(1))
    assert set(statuses.values()) == {"n/a"}


def test_monogenic_identities(rng):
    for degree in range(0, 4):
        f = random_monogenic(rng, degree)
        statuses = _statuses(f, QPolynomial.variable(0))
        assert all(statuses[name] == "pass" for name in MONOGENIC_IDENTITIES)


def test_monogenic_example():
    """f = 2x0 + x1e1 + x2e2: ∂̄(x̄f + fx̄)∂̄ = 8 y ∂̄(|x|²f)∂̄ = −2 conj(f)."""
    f = QPolynomial.from_components(X0 * 2, X1, X2)
    assert sandwich(False, X_BAR * f + f * X_BAR) == QPolynomial.constant(8)
    assert sandwich(False, f * RHO2) == f.conjugate() * (-2)


def test_left_right_equivalence(rng):
    for _ in range(20):
        assert monogenic_left_right_equivalence(random_polynomial(rng, max_degree=3))


def test_biharmonic_generator_is_inframonogenic():
    """∂̄(|x|²U)∂̄ anula ∂̄·∂̄ por ambos lados cuando U es armónico."""
    for n in range(0, 4):
        for m in range(0, n + 1):
            u = solid_harmonic(HarmonicId(n=n, m=m))
            assert is_inframonogenic(biharmonic_generator(u, conjugated=True))
            assert sandwich(True, biharmonic_generator(u, conjugated=False)).is_zero


def test_antimonogenic_does_not_imply_inframonogenic(rng):
    """conj(X⁺₂,₀) es antimonogénica pero ∂̄f∂̄ ≠ 0."""
    f = monogenic_x(2, 0, Parity.PLUS).conjugate()
    flags = classify(f)
    assert flags.antimonogenic
    assert not flags.inframonogenic
    g = random_antimonogenic(rng, 2)
    assert apply_cr(D_LEFT, g).is_zero


def test_recurrences_hold_in_condon_shortley():
    results = check_legendre_recurrences(5, LegendrePhase.CONDON_SHORTLEY)
    assert results
    assert all(r.holds for r in results)


def test_recurrences_under_hobson():
    """Con la fase de Hobson solo la recurrencia de m fijo sigue valiendo."""
    results = check_legendre_recurrences(4, LegendrePhase.HOBSON)
    by_name = {}
    for r in results:
        by_name.setdefault(r.name, []).append(r.holds)
    assert all(by_name["rec3"])
    assert not all(by_name["rec2"])


def test_plane_harmonic_sample_is_harmonic(rng):
    h = random_harmonic_plane(5, rng)
    assert apply_cr(D_LEFT, apply_cr(DBAR_LEFT, h)).is_zero


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
