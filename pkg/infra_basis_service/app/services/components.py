"""Expansión literal de X, Y y Z̲ en armónicos sólidos.

Las fórmulas se evalúan tal como están impresas, con las reglas de borde
U±ₙ,ₙ₊₁ = 0, U⁻ₙ,₀ = 0 y la sustitución de U±ₙ,₋₁. El resultado incluye el
prefactor (2n−1) de los tipos 1 y 2, así que se compara contra
`expected_scale(id) · basis_element(id)`.
"""

from __future__ import annotations

from typing import Optional

from sympy.polys.domains import QQ

from ..domain.harmonics import harmonic_or_zero
from ..domain.ids import BasisId, Family, LegendrePhase, Parity
from ..domain.qpoly import E1, E2, RHO2, QPolynomial, format_rational
from .basis import resolve_phase


def _flip(parity: Parity) -> Parity:
    return Parity.MINUS if parity is Parity.PLUS else Parity.PLUS


def expected_scale(bid: BasisId) -> int:
    """Prefactor del lado izquierdo de la fórmula impresa."""
    if bid.family is Family.X:
        return 1
    if bid.family is Family.ZU and bid.m == 0:
        return 1
    return 2 * bid.n - 1


def _type0(n: int, m: int, parity: Parity, phase: LegendrePhase) -> QPolynomial:
    s = parity.sign
    other = _flip(parity)

    def u(deg: int, order: int, par: Parity) -> QPolynomial:
        return harmonic_or_zero(deg, order, par, phase)

    factor = (n + m) * (n + m + 1)
    e1_part = (u(n, m - 1, parity) * factor - u(n, m + 1, parity)) * QQ(1, 2)
    e2_part = (u(n, m - 1, other) * factor + u(n, m + 1, other)) * QQ(1, 2)
    return u(n, m, parity) * (n + m + 1) + e1_part * E1 - e2_part * E2 * s


def _type1(n: int, m: int, parity: Parity, phase: LegendrePhase) -> QPolynomial:
    s = parity.sign
    other = _flip(parity)

    def u(deg: int, order: int, par: Parity) -> QPolynomial:
        return harmonic_or_zero(deg, order, par, phase)

    edge = (n + m) * (n - m + 1) * (2 * m - 1)
    lower_low = (2 * n + 1) * (n + m) * (n + m - 1) * (n + m - 2)
    lower_high = (2 * n + 1) * (n + m)

    scalar = (
        u(n, m, parity) * (2 * (n - 2 * m * m))
        + u(n - 2, m, parity) * RHO2 * (2 * (2 * n + 1) * (n + m) * (n - 1 + m))
    )
    a = (
        u(n, m - 1, parity) * edge
        + u(n - 2, m - 1, parity) * RHO2 * lower_low
        + u(n, m + 1, parity) * (2 * m + 1)
        - u(n - 2, m + 1, parity) * RHO2 * lower_high
    )
    b = (
        u(n, m - 1, other) * edge
        + u(n - 2, m - 1, other) * RHO2 * lower_low
        - u(n, m + 1, other) * (2 * m + 1)
        - u(n - 2, m + 1, other) * RHO2 * (lower_high * s)
    )
    return scalar + a * E1 - b * E2 * s


def _type2(n: int, m: int, parity: Parity, phase: LegendrePhase) -> QPolynomial:
    s = parity.sign
    other = _flip(parity)

    def u(deg: int, order: int, par: Parity) -> QPolynomial:
        return harmonic_or_zero(deg, order, par, phase)

    if m == 0:
        return u(n, 1, Parity.MINUS) * E1 - u(n, 1, Parity.PLUS) * E2

    edge = (n + m) * (n - m + 1) * (2 * m - 1)
    lower_low = QQ((2 * n + 3) * (n + m) * (n + m - 1) * (n + m - 2), 2)
    lower_high = QQ((2 * n + 3) * (n + m), 2)

    scalar = (
        u(n, m, parity) * (-(2 * m - 1) * (2 * m + 1))
        + u(n - 2, m, parity) * RHO2 * ((2 * n + 3) * (n + m) * (n + m - 1))
    )
    a = (
        u(n, m - 1, parity) * edge
        + u(n - 2, m - 1, parity) * RHO2 * lower_low
        + u(n, m + 1, parity) * (2 * m + 1)
        - u(n - 2, m + 1, parity) * RHO2 * lower_high
    )
    b = (
        u(n, m - 1, other) * edge
        + u(n - 2, m - 1, other) * RHO2 * lower_low
        - u(n, m + 1, other) * (2 * m + 1)
        - u(n - 2, m + 1, other) * RHO2 * (lower_high * s)
    )
    return scalar + a * E1 - b * E2 * s


_FORMULAS = {Family.X: _type0, Family.Y: _type1, Family.ZU: _type2}


def components_expansion(
    bid: BasisId, phase: Optional[LegendrePhase | str] = None
) -> QPolynomial:
    """Lado derecho de la expansión en armónicos sólidos para X, Y o Zu.

    Raises:
        ValueError: Si la familia no es X, Y ni Zu, o si n < 2 para Y/Zu.
    """
    if bid.family not in _FORMULAS:
        raise ValueError(f"Sin expansión en armónicos para la familia {bid.family.value}")
    if bid.family is not Family.X and bid.n < 2:
        raise ValueError(f"La expansión de {bid.family.value} requiere n ≥ 2 (n={bid.n})")
    return _FORMULAS[bid.family](bid.n, bid.m, bid.parity, resolve_phase(phase))


def describe_relation(expansion: QPolynomial, element: QPolynomial) -> Optional[str]:
    """Relación encontrada entre la expansión y el elemento, si la hay.

    Prueba expansion = r·element y expansion = r·conj(element) con r racional.
    """
    for label, target in (("", element), ("conj", element.conjugate())):
        ratio = proportionality(expansion, target)
        if ratio is not None:
            text = format_rational(ratio)
            return f"{text}·{label}(elemento)" if label else f"{text}·elemento"
    return None


def proportionality(f: QPolynomial, g: QPolynomial):
    """r con f = r·g, o None; ambos no nulos."""
    if f.is_zero or g.is_zero:
        return None
    for monom, coeffs in g.terms():
        for k, value in enumerate(coeffs):
            if value:
                ratio = f.components[k].get(monom, QQ.zero) / value
                return ratio if f == g * ratio else None
    return None
