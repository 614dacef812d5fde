"""Armónicos esféricos sólidos cartesianos exactos y productos internos en la bola.

U±ₙ,ₘ = [ρ^(n−m) · Pₙ^(m)(x0/ρ)] · {Re, Im}((x1 + i x2)^m), donde Pₙ^(m) es la
m-ésima derivada del polinomio de Legendre. El corchete es un polinomio en
x0 y ρ² porque Pₙ^(m) tiene la paridad de n − m, así que no aparecen radicales.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import factorial
from typing import Tuple

from sympy import Symbol, factorial2
from sympy.polys.domains import QQ
from sympy.polys.orthopolys import legendre_poly
from sympy.polys.rings import PolyElement

from .ids import HarmonicId, InvalidIndexError, LegendrePhase, Parity
from .linalg import coefficient_rows, exact_rank
from .pi_rational import PiRational
from .qpoly import POLY_RING, RHO2, X0, X1, X2, Monomial, QPolynomial

logger = logging.getLogger(__name__)

_T = Symbol("t")


@lru_cache(maxsize=None)
def legendre_derivative(n: int, m: int) -> Tuple[Tuple[int, object], ...]:
    """Coeficientes (potencia, c) de dᵐPₙ/dtᵐ."""
    poly = legendre_poly(n, _T, polys=True)
    for _ in range(m):
        poly = poly.diff(_T)
    return tuple(
        (monom[0], QQ.convert(coeff)) for monom, coeff in poly.terms() if coeff != 0
    )


def _radial(n: int, m: int, rho2: PolyElement) -> PolyElement:
    """ρ^(n−m) Pₙ^(m)(x0/ρ) como polinomio en x0 y ρ²."""
    result = POLY_RING.zero
    for power, coeff in legendre_derivative(n, m):
        result += X0**power * rho2 ** ((n - m - power) // 2) * coeff
    return result


@lru_cache(maxsize=None)
def _azimuthal(m: int) -> Tuple[PolyElement, PolyElement]:
    """(Re, Im) de (x1 + i x2)^m."""
    re, im = POLY_RING.one, POLY_RING.zero
    for _ in range(m):
        re, im = re * X1 - im * X2, re * X2 + im * X1
    return re, im


def plane_harmonic(m: int) -> Tuple[PolyElement, PolyElement]:
    """Armónicos de grado m en (x1, x2): Re e Im de (x1 + i x2)^m."""
    return _azimuthal(m)


@lru_cache(maxsize=None)
def _solid_harmonic_poly(n: int, m: int, parity: Parity, phase: LegendrePhase) -> PolyElement:
    if m == -1:
        base = _solid_harmonic_poly(n, 1, parity, phase)
        return base * (QQ(-parity.sign, n * (n + 1)))
    if parity is Parity.MINUS and m == 0:
        return POLY_RING.zero
    re, im = _azimuthal(m)
    angular = re if parity is Parity.PLUS else im
    return _radial(n, m, RHO2) * angular * phase.factor(m)


def solid_harmonic(hid: HarmonicId, phase: LegendrePhase = LegendrePhase.HOBSON) -> QPolynomial:
    """U±ₙ,ₘ como polinomio escalar homogéneo de grado n."""
    return QPolynomial.scalar(_solid_harmonic_poly(hid.n, hid.m, hid.parity, phase))


def harmonic_or_zero(
    n: int, m: int, parity: Parity, phase: LegendrePhase = LegendrePhase.HOBSON
) -> QPolynomial:
    """U±ₙ,ₘ con las convenciones de borde: cero si n < 0, m > n o m < −1."""
    if n < 0 or m > n or m < -1 or (m == -1 and n == 0):
        return QPolynomial.zero()
    return QPolynomial.scalar(_solid_harmonic_poly(n, m, parity, phase))


def meridian_legendre(n: int, m: int, phase: LegendrePhase = LegendrePhase.HOBSON) -> PolyElement:
    """ρⁿPₙᵐ(x0/ρ) sobre el semiplano x2 = 0, x1 > 0 (cero fuera de rango)."""
    if n < 0 or m < 0 or m > n:
        return POLY_RING.zero
    return _radial(n, m, X0**2 + X1**2) * X1**m * phase.factor(m)


# --- Integración en la bola unidad -------------------------------------------


@lru_cache(maxsize=None)
def _moment(a: int, b: int, c: int):
    if a % 2 or b % 2 or c % 2:
        return QQ.zero
    numerator = 4 * int(factorial2(a - 1)) * int(factorial2(b - 1)) * int(factorial2(c - 1))
    total = a + b + c
    return QQ(numerator, (total + 3) * int(factorial2(total + 1)))


def ball_monomial_integral(exponents: Monomial) -> PiRational:
    """∫ x0^a x1^b x2^c sobre la bola unidad, como múltiplo de π."""
    a, b, c = exponents
    if min(a, b, c) < 0:
        raise ValueError(f"Exponentes negativos no permitidos: {exponents}")
    return PiRational(_moment(a, b, c))


def _scalar_inner(p: PolyElement, q: PolyElement):
    total = QQ.zero
    for (a, b, c), cp in p.items():
        for (d, e, f), cq in q.items():
            total += cp * cq * _moment(a + d, b + e, c + f)
    return total


def inner_product(f: QPolynomial, g: QPolynomial) -> PiRational:
    """⟨f, g⟩ = Σₖ ∫ fₖ gₖ sobre la bola unidad (las cuatro componentes)."""
    total = QQ.zero
    for p, q in zip(f.components, g.components):
        if p and q:
            total += _scalar_inner(p, q)
    return PiRational(total)


def norm2(f: QPolynomial) -> PiRational:
    return inner_product(f, f)


def harmonic_inner_closed_form(k: int, k2: int, hid: HarmonicId, hid2: HarmonicId) -> PiRational:
    """⟨ρ²ᵏU, ρ²ᵏ'U'⟩ por la fórmula cerrada de las normas de armónicos sólidos."""
    if hid.m == -1 or hid2.m == -1:
        raise InvalidIndexError("Sustituya U_{n,-1} por la regla de U_{n,1} antes de usar la fórmula")
    if (hid.n, hid.m, hid.parity) != (hid2.n, hid2.m, hid2.parity):
        return PiRational.zero()
    n, m = hid.n, hid.m
    if hid.parity is Parity.MINUS and m == 0:
        return PiRational.zero()
    doubling = 2 if m == 0 else 1
    value = QQ(2 * doubling * factorial(n + m), (2 * (k + k2) + 2 * n + 3) * (2 * n + 1) * factorial(n - m))
    return PiRational(value)


# --- Dimensiones -------------------------------------------------------------


def harmonic_family(n: int, phase: LegendrePhase = LegendrePhase.HOBSON) -> list[QPolynomial]:
    """{U⁺ₙ,ₘ}₀≤ₘ≤ₙ ∪ {U⁻ₙ,ₘ}₁≤ₘ≤ₙ."""
    plus = [solid_harmonic(HarmonicId(n=n, m=m, parity=Parity.PLUS), phase) for m in range(n + 1)]
    minus = [solid_harmonic(HarmonicId(n=n, m=m, parity=Parity.MINUS), phase) for m in range(1, n + 1)]
    return plus + minus


def biharmonic_family(n: int, phase: LegendrePhase = LegendrePhase.HOBSON) -> list[QPolynomial]:
    lower = [u * RHO2 for u in harmonic_family(n - 2, phase)] if n >= 2 else []
    return harmonic_family(n, phase) + lower


def harmonic_dimension(n: int) -> int:
    return exact_rank(coefficient_rows(harmonic_family(n), n, units=(0,)))


def biharmonic_dimension(n: int) -> int:
    rank = exact_rank(coefficient_rows(biharmonic_family(n), n, units=(0,)))
    logger.debug("dim Bih_%d = %d", n, rank)
    return rank
