"""Fixtures compartidas de la suite."""

import pytest

from app.domain.ids import BasisId, Family, LegendrePhase, Parity
from app.domain.qpoly import E1, E2, X0, X1, X2, QPolynomial
from app.services.basis import basis_element
from app.services.sampling import make_rng


@pytest.fixture
def rng():
    """Generador determinista con la semilla por defecto de la configuración."""
    return make_rng()


@pytest.fixture
def y20_table() -> QPolynomial:
    """Y⁺₂,₀ tal como aparece en la tabla de grado 2."""
    return (
        QPolynomial.scalar(X0**2 * 8 + X1**2 * 6 + X2**2 * 6)
        - QPolynomial.scalar(X0 * X1 * 2) * E1
        - QPolynomial.scalar(X0 * X2 * 2) * E2
    )


@pytest.fixture
def x10() -> QPolynomial:
    """X⁺₁,₀ = 2x0 + x1e1 + x2e2."""
    return basis_element(BasisId(n=1, family=Family.X, parity=Parity.PLUS, m=0))


@pytest.fixture(params=[LegendrePhase.HOBSON, LegendrePhase.CONDON_SHORTLEY], ids=["hobson", "cs"])
def phase(request) -> LegendrePhase:
    return request.param


@pytest.fixture
def bid():
    """Atajo para construir ids: bid(2, "Y", "+", 0)."""

    def _make(n: int, family: str, parity: str = "+", m: int = 0) -> BasisId:
        return BasisId(n=n, family=Family(family), parity=Parity(parity), m=m)

    return _make
